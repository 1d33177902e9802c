#include "minrank/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "minrank/errors.hpp"
#include "minrank/rng.hpp"

namespace minrank {

std::vector<double> DenseMatrix::column(int c) const {
  std::vector<double> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::ones(int n) {
  SymMatrix m(n);
  std::fill(m.a_.begin(), m.a_.end(), 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw ParameterError("matrix rows must form a square array");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ParameterError("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool SymMatrix::all_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](double x) { return std::isfinite(x); });
}

SymMatrix SymMatrix::shifted(double shift) const {
  SymMatrix m = *this;
  for (int i = 0; i < n_; ++i) m.set(i, i, (*this)(i, i) - shift);
  return m;
}

EigenDecomposition sym_eigen(const SymMatrix& input) {
  if (!input.all_finite()) throw NumericError("sym_eigen: non-finite matrix entry");
  const int n = input.order();
  EigenDecomposition out;
  if (n == 0) return out;
  std::vector<double> v = input.data();
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };
  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n), 0.0);

  // Householder reduction to tridiagonal form, accumulating the transform in V.
  for (int j = 0; j < n; ++j) d[j] = V(n - 1, j);
  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;
      for (int j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }
  for (int i = 0; i < n - 1; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (int k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;

  // Implicit QL on the tridiagonal matrix.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxIterations = 60;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  double f = 0.0;
  double tst1 = 0.0;
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxIterations) throw NumericError("sym_eigen: QL iteration did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;
        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = V(k, i + 1);
            V(k, i + 1) = s * V(k, i) + c * h;
            V(k, i) = c * V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = DenseMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (int i = 0; i < n; ++i) out.vectors(i, k) = V(i, order[k]);
  }
  return out;
}

RankProfile numeric_rank_nullity(const SymMatrix& a, double rel_tol) {
  if (!(rel_tol > 0.0)) throw ParameterError("rank tolerance must be positive");
  RankProfile prof;
  prof.eigenvalues = sym_eigen(a).values;
  double largest = 0.0;
  for (double x : prof.eigenvalues) largest = std::max(largest, std::abs(x));
  prof.tolerance = rel_tol * std::max(1.0, largest);
  prof.rank = static_cast<int>(std::count_if(prof.eigenvalues.begin(), prof.eigenvalues.end(),
                                             [&](double x) { return std::abs(x) > prof.tolerance; }));
  prof.nullity = a.order() - prof.rank;
  return prof;
}

LabeledGraph pattern_of_matrix(const SymMatrix& a, double rel_tol) {
  if (!(rel_tol > 0.0)) throw ParameterError("pattern tolerance must be positive");
  const double threshold = rel_tol * std::max(1.0, a.max_abs());
  LabeledGraph g(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (std::abs(a(i, j)) > threshold) g.add_edge(i, j);
  return g;
}

SymMatrix random_matrix_with_pattern(const LabeledGraph& g, std::uint64_t seed, DiagonalMode mode) {
  Rng rng(seed);
  const int n = g.order();
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (mode == DiagonalMode::free) m.set(i, i, rng.signed_magnitude(0.1, 1.0));
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) m.set(i, j, rng.signed_magnitude(0.1, 1.0));
    }
  }
  return m;
}

Svd singular_value_decomposition(const DenseMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      if (!std::isfinite(a(r, c))) throw NumericError("svd: non-finite matrix entry");

  // Work column-major so rotations touch contiguous memory.
  std::vector<std::vector<double>> u(static_cast<std::size_t>(n), std::vector<double>(m));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < m; ++r) u[c][r] = a(r, c);
  std::vector<std::vector<double>> v(static_cast<std::size_t>(n), std::vector<double>(n, 0.0));
  for (int c = 0; c < n; ++c) v[c][c] = 1.0;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 80;
  // Columns below eps * ||A||_F are roundoff; rotating them against each other
  // never settles, and they cannot move a singular value above that level.
  double fro2 = 0.0;
  for (const auto& col : u)
    for (double x : col) fro2 += x * x;
  const double negligible = eps * eps * fro2;
  bool converged = n <= 1;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        double gamma = 0.0;
        for (int r = 0; r < m; ++r) {
          alpha += u[p][r] * u[p][r];
          beta += u[q][r] * u[q][r];
          gamma += u[p][r] * u[q][r];
        }
        if (alpha <= negligible || beta <= negligible) continue;
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int r = 0; r < m; ++r) {
          const double up = u[p][r];
          const double uq = u[q][r];
          u[p][r] = c * up - s * uq;
          u[q][r] = s * up + c * uq;
        }
        for (int r = 0; r < n; ++r) {
          const double vp = v[p][r];
          const double vq = v[q][r];
          v[p][r] = c * vp - s * vq;
          v[q][r] = s * vp + c * vq;
        }
      }
    }
  }
  if (!converged) throw NumericError("svd: one-sided Jacobi did not converge");

  std::vector<double> sigma(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    double s = 0.0;
    for (double x : u[c]) s += x * x;
    sigma[c] = std::sqrt(s);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sigma[x] > sigma[y]; });
  Svd out;
  out.singular_values.resize(static_cast<std::size_t>(n));
  out.right_vectors = DenseMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.singular_values[k] = sigma[order[k]];
    for (int r = 0; r < n; ++r) out.right_vectors(r, k) = v[order[k]][r];
  }
  return out;
}

SymMatrix multiply_sym(const DenseMatrix& q, const std::vector<double>& diag) {
  const int n = q.rows();
  const int k = q.cols();
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < k; ++c) s += q(i, c) * diag[c] * q(j, c);
      out.set(i, j, s);
    }
  }
  return out;
}

SymMatrix read_matrix(std::istream& raw) {
  // '#' lines carry certificate metadata; skip them.
  std::stringstream in;
  for (std::string line; std::getline(raw, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    in << line << '\n';
  }
  long long n = 0;
  if (!(in >> n) || n < 1) throw DataError("matrix file: expected positive dimension on first line");
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n), std::vector<double>(n));
  for (auto& row : rows) {
    for (auto& x : row) {
      std::string tok;
      if (!(in >> tok)) throw DataError("matrix file: expected " + std::to_string(n * n) + " entries");
      try {
        std::size_t used = 0;
        x = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw DataError("matrix file: bad entry \"" + tok + "\"");
      }
    }
  }
  try {
    return SymMatrix::from_rows(rows);
  } catch (const ParameterError& e) {
    throw DataError(std::string("matrix file: ") + e.what());
  }
}

void write_matrix(std::ostream& out, const SymMatrix& a) {
  out << a.order() << '\n';
  std::ostringstream line;
  line << std::setprecision(17);
  for (int i = 0; i < a.order(); ++i) {
    line.str("");
    for (int j = 0; j < a.order(); ++j) {
      if (j) line << ' ';
      line << a(i, j);
    }
    out << line.str() << '\n';
  }
}

}  // namespace minrank
