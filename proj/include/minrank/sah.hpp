#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "minrank/graph.hpp"
#include "minrank/linalg.hpp"
#include "minrank/parallel.hpp"

namespace minrank {

// Strong Arnold Hypothesis: no nonzero symmetric X with AX = 0, A o X = 0 and
// I o X = 0.
struct SahVerdict {
  bool holds = true;
  std::optional<SymMatrix> witness;  // unit-norm X, present iff !holds
  int solution_space_dim = 0;
  int unknowns = 0;  // non-adjacent pairs of G(A)
};

// Solutions of AX = 0 are X = N C N^T over a kernel basis N of A (kernel at
// the numeric-rank threshold). The diagonal and edge conditions on C form a
// (v + e) x q(q+1)/2 system whose singular values lie in [0, 1]; its null
// space dimension is counted at threshold rel_tol.
SahVerdict check_sah(const SymMatrix& a, double rel_tol = kDefaultRelTol);

// Dimensions of the tangent/normal spaces at A of the constant-rank manifold R
// and the constant-pattern manifold S inside the v(v+1)/2-dimensional space of
// symmetric matrices.
struct ManifoldDims {
  long long tangent_rank = 0;      // v r - r(r-1)/2
  long long normal_rank = 0;       // q(q+1)/2
  long long tangent_pattern = 0;   // e(G(A)) + v
  long long normal_pattern = 0;    // v(v+1)/2 - tangent_pattern
  int rank = 0;
  int nullity = 0;
};
ManifoldDims tangent_normal_dims(const SymMatrix& a, double rel_tol = kDefaultRelTol);

// A matrix with pattern `graph` satisfying SAH; certifies xi(graph) >= nullity.
struct XiCertificate {
  LabeledGraph graph;
  SymMatrix matrix;
  int nullity = 0;
  SahVerdict sah;
  std::string construction;
};

struct XiSearchOptions {
  int trials = 8;
  std::uint64_t seed = 0;
  double rel_tol = kDefaultRelTol;
  // Seeds from orthogonal representations and alternating projection.
  bool structured = true;
  int projection_restarts = 2;
  ExecPolicy policy = ExecPolicy::serial;
};

// Best SAH-passing matrix found, searched per connected component (xi of a
// disjoint union is the max over components) and assembled block-diagonally
// with nonsingular blocks elsewhere. Always a lower bound on xi.
XiCertificate xi_certificate_search(const LabeledGraph& g, const XiSearchOptions& opts = {});

struct XiEdgeCheck {
  long long lhs = 0;    // q(q+1)/2
  long long edges = 0;  // e(G)
  bool holds = false;   // lhs <= e + 1, valid for every graph
  bool connected = false;
  bool bipartite = false;
  bool zero_diagonal = false;
  // For connected G that is non-bipartite or whose matrix has a nonzero
  // diagonal entry, the sharper lhs <= e applies.
  bool strict_applies = false;
  bool strict_holds = false;
};
XiEdgeCheck verify_xi_edge_inequality(const XiCertificate& cert);

// Audit format: "# key=value" metadata lines, then the matrix in dense text.
void write_certificate(std::ostream& out, const XiCertificate& cert);

}  // namespace minrank
