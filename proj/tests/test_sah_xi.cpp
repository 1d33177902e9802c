#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "minrank/errors.hpp"
#include "minrank/graph.hpp"
#include "minrank/linalg.hpp"
#include "minrank/sah.hpp"
#include "oracles.hpp"

using namespace minrank;

namespace {

// max |(AX)_ij|, max |x_ij| on edges and diagonal, and the Frobenius norm of X.
struct WitnessResiduals {
  double ax = 0.0;
  double hadamard = 0.0;
  double norm = 0.0;
};

WitnessResiduals witness_residuals(const SymMatrix& a, const SymMatrix& x) {
  WitnessResiduals r;
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a(i, k) * x(k, j);
      r.ax = std::max(r.ax, std::abs(s));
      if (i == j || a(i, j) != 0.0) r.hadamard = std::max(r.hadamard, std::abs(x(i, j)));
      r.norm += x(i, j) * x(i, j);
    }
  r.norm = std::sqrt(r.norm);
  return r;
}

}  // namespace

TEST_CASE("check_sah examples") {
  auto v = check_sah(SymMatrix::ones(3));
  CHECK(v.holds);
  CHECK(v.solution_space_dim == 0);
  CHECK(v.unknowns == 0);

  v = check_sah(SymMatrix::identity(4));
  CHECK(v.holds);
  CHECK(v.unknowns == 6);

  const auto p3 = SymMatrix::from_rows({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}});
  CHECK(numeric_rank_nullity(p3).nullity == 1);
  v = check_sah(p3);
  CHECK(v.holds);
  CHECK(v.unknowns == 1);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("check_sah failure comes with a valid witness") {
  // The zero matrix on 3 vertices: every symmetric zero-diagonal X works.
  auto v = check_sah(SymMatrix(3));
  CHECK_FALSE(v.holds);
  CHECK(v.solution_space_dim == 3);
  REQUIRE(v.witness.has_value());
  auto r = witness_residuals(SymMatrix(3), *v.witness);
  CHECK(r.norm == doctest::Approx(1.0));

  // Two disjoint rank-1 blocks J_2 (+) J_2: pattern 2K_2, nullity 2.
  const auto a = SymMatrix::from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
  v = check_sah(a);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  r = witness_residuals(a, *v.witness);
  CHECK(r.ax < 1e-10);
  CHECK(r.hadamard == 0.0);
  CHECK(r.norm == doctest::Approx(1.0));
}

TEST_CASE("check_sah agrees with the exact rational oracle on integer matrices") {
  std::mt19937_64 gen(41);
  std::uniform_int_distribution<int> order(1, 6);
  int fails = 0, total = 0;
  for (int k = 0; k < 1500; ++k) {
    const int n = order(gen);
    oracle::IntMatrix m;
    if (k % 3 == 0) {
      m = oracle::random_symmetric_int(n, 2, 0.5, gen);
    } else {
      std::uniform_int_distribution<int> rk(1, std::max(1, n - 1));
      m = oracle::random_low_rank_int(n, rk(gen), 2, gen);
    }
    const auto exact = oracle::exact_sah(m);
    const auto a = oracle::to_sym(m);
    const auto numeric = check_sah(a);
    REQUIRE(numeric.holds == exact.holds);
    REQUIRE(numeric.solution_space_dim == exact.solution_space_dim);
    if (!numeric.holds) {
      ++fails;
      const auto r = witness_residuals(a, *numeric.witness);
      CHECK(r.ax < 1e-8);
      CHECK(r.hadamard == 0.0);
    }
    ++total;
  }
  CHECK(fails > 100);
  CHECK(total - fails > 100);
}

TEST_CASE("tangent and normal dimensions") {
  SymMatrix a = SymMatrix::diagonal({1.0, 2.0, 0.0});
  auto d = tangent_normal_dims(a);
  CHECK(d.rank == 2);
  CHECK(d.tangent_rank == 5);
  CHECK(d.normal_rank == 1);

  d = tangent_normal_dims(SymMatrix::ones(5));
  CHECK(d.normal_rank == 10);
  CHECK(d.tangent_rank == 5);

  const auto p4 = random_matrix_with_pattern(named::path(4), 3, DiagonalMode::free);
  d = tangent_normal_dims(p4);
  CHECK(d.tangent_pattern == 7);
  CHECK(d.normal_pattern == 3);

  std::mt19937_64 gen(6);
  std::uniform_int_distribution<int> order(1, 10);
  for (int k = 0; k < 300; ++k) {
    const int n = order(gen);
    std::uniform_int_distribution<int> rk(1, n);
    const auto m = oracle::to_sym(oracle::random_low_rank_int(n, rk(gen), 3, gen));
    d = tangent_normal_dims(m);
    CHECK(d.tangent_rank + d.normal_rank == n * (n + 1) / 2);
    CHECK(d.tangent_pattern + d.normal_pattern == n * (n + 1) / 2);
    CHECK(d.rank + d.nullity == n);
  }
}

TEST_CASE("xi certificates on named graphs") {
  for (int n = 2; n <= 7; ++n) {
    const auto cert = xi_certificate_search(named::complete(n));
    CHECK(cert.nullity == n - 1);
    CHECK(cert.sah.holds);
  }
  auto cert = xi_certificate_search(named::path(3));
  CHECK(cert.nullity == 1);

  cert = xi_certificate_search(named::complete_bipartite(3, 3));
  CHECK(cert.nullity == 4);
  CHECK(cert.sah.holds);
  CHECK(pattern_of_matrix(cert.matrix) == named::complete_bipartite(3, 3));
  auto check = verify_xi_edge_inequality(cert);
  CHECK(check.lhs == 10);
  CHECK(check.edges == 9);
  CHECK(check.holds);
  CHECK(check.bipartite);
  CHECK(check.zero_diagonal);
  CHECK_FALSE(check.strict_applies);
  CHECK_FALSE(check.strict_holds);

  cert = xi_certificate_search(named::complete(5));
  check = verify_xi_edge_inequality(cert);
  CHECK(cert.nullity == 4);
  CHECK(check.lhs == 10);
  CHECK(check.edges == 10);
  CHECK(check.strict_applies);
  CHECK(check.strict_holds);

  // Edgeless graph: any diagonal matrix; the best nullity is 1.
  cert = xi_certificate_search(named::empty(4));
  CHECK(cert.nullity == 1);
  check = verify_xi_edge_inequality(cert);
  CHECK(check.lhs == 1);
  CHECK(check.holds);
}

TEST_CASE("kappa never exceeds the certified nullity where xi is known") {
  struct Known {
    LabeledGraph g;
    int xi;
  };
  std::vector<Known> corpus{{named::complete_bipartite(3, 3), 4}, {named::petersen(), -1}};
  for (int n = 3; n <= 8; ++n) {
    corpus.push_back({named::path(n), 1});
    corpus.push_back({named::cycle(n), 2});
    corpus.push_back({named::complete(n), n - 1});
  }
  for (const auto& [g, xi] : corpus) {
    const auto cert = xi_certificate_search(g);
    CHECK(cert.sah.holds);
    CHECK(vertex_connectivity(g) <= cert.nullity);
    if (xi >= 0) CHECK(cert.nullity == xi);
  }
}

TEST_CASE("xi of a disjoint union is the max over components") {
  const std::vector<std::pair<LabeledGraph, LabeledGraph>> pairs{
      {named::complete(4), named::path(5)},
      {named::cycle(6), named::complete_bipartite(3, 3)},
      {named::path(2), named::empty(1)},
      {named::complete(3), named::complete(5)}};
  for (const auto& [a, b] : pairs) {
    const int left = xi_certificate_search(a).nullity;
    const int right = xi_certificate_search(b).nullity;
    const auto cert = xi_certificate_search(named::disjoint_union(a, b));
    CHECK(cert.nullity == std::max(left, right));
    CHECK(cert.sah.holds);
    CHECK(pattern_of_matrix(cert.matrix) == named::disjoint_union(a, b));
  }
}

TEST_CASE("every certificate satisfies the nullity/edge inequality on random graphs") {
  std::mt19937_64 gen(13);
  std::uniform_int_distribution<int> order(2, 10);
  std::uniform_real_distribution<double> prob(0.1, 0.9);
  for (int k = 0; k < 150; ++k) {
    const auto g = oracle::random_graph(order(gen), prob(gen), gen);
    XiSearchOptions opts;
    opts.seed = static_cast<std::uint64_t>(k);
    opts.trials = 4;
    const auto cert = xi_certificate_search(g, opts);
    REQUIRE(cert.sah.holds);
    REQUIRE(pattern_of_matrix(cert.matrix) == g);
    const auto check = verify_xi_edge_inequality(cert);
    CHECK(check.holds);
    if (check.strict_applies) CHECK(check.strict_holds);
  }
}

TEST_CASE("serial and parallel certificate searches agree") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = sample_gnp({8, 0.5, s});
    XiSearchOptions opts;
    opts.seed = s;
    const auto a = xi_certificate_search(g, opts);
    opts.policy = ExecPolicy::parallel;
    const auto b = xi_certificate_search(g, opts);
    CHECK(a.nullity == b.nullity);
    CHECK(a.matrix == b.matrix);
  }
}

TEST_CASE("certificate text form") {
  const auto cert = xi_certificate_search(named::complete_bipartite(3, 3));
  std::stringstream ss;
  write_certificate(ss, cert);
  const std::string text = ss.str();
  CHECK(text.find("# nullity=4") != std::string::npos);
  CHECK(text.find("# sah=holds") != std::string::npos);
  CHECK(read_matrix(ss) == cert.matrix);
  CHECK_THROWS_AS(xi_certificate_search(named::path(3), XiSearchOptions{0}), ParameterError);
}
