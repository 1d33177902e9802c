#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

inline constexpr double kDefaultRelTol = 1e-8;

// Dense rectangular matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::vector<double> column(int c) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

// Real symmetric matrix. Storage is full; every write goes to (i,j) and (j,i),
// so the two triangles are bitwise equal.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  static SymMatrix identity(int n);
  static SymMatrix ones(int n);
  static SymMatrix diagonal(const std::vector<double>& d);
  // Throws ParameterError unless rows form an exactly symmetric square array.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double x) {
    a_[static_cast<std::size_t>(i) * n_ + j] = x;
    a_[static_cast<std::size_t>(j) * n_ + i] = x;
  }
  double max_abs() const;
  bool all_finite() const;
  const std::vector<double>& data() const { return a_; }

  // A - shift * I.
  SymMatrix shifted(double shift) const;

  bool operator==(const SymMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k pairs with values[k]
};

// Householder tridiagonalization then implicit QL. Throws NumericError on
// non-finite input or non-convergence.
EigenDecomposition sym_eigen(const SymMatrix& a);

struct RankProfile {
  int rank = 0;
  int nullity = 0;
  std::vector<double> eigenvalues;  // ascending
  double tolerance = 0.0;           // absolute threshold actually applied
};

// threshold = rel_tol * max(1, max |eigenvalue|); rank counts |lambda| > threshold.
RankProfile numeric_rank_nullity(const SymMatrix& a, double rel_tol = kDefaultRelTol);

// Edge {i,j} iff |a_ij| > rel_tol * max(1, max|a|); the diagonal is ignored.
LabeledGraph pattern_of_matrix(const SymMatrix& a, double rel_tol = kDefaultRelTol);

enum class DiagonalMode { free, zero };

// Off-diagonal entries on edges drawn from [-1,-0.1] U [0.1,1], zero elsewhere;
// diagonal drawn the same way (free) or left at zero.
SymMatrix random_matrix_with_pattern(const LabeledGraph& g, std::uint64_t seed, DiagonalMode mode);

struct Svd {
  std::vector<double> singular_values;  // descending
  DenseMatrix right_vectors;            // column k pairs with singular_values[k]
};

// One-sided (Hestenes) Jacobi SVD; accurate small singular values without
// forming A^T A.
Svd singular_value_decomposition(const DenseMatrix& a);

SymMatrix multiply_sym(const DenseMatrix& q, const std::vector<double>& diag);  // Q diag Q^T

// Dense text: first line "v", then v whitespace-separated rows. Lines starting
// with # are skipped on input.
SymMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const SymMatrix& a);

}  // namespace minrank
