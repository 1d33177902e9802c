#pragma once

#include <string>
#include <utility>

namespace minrank::analytic {

// A closed-form bound evaluated at concrete parameters. log_value is always
// populated (natural log); value is NaN when exp(log_value) would overflow.
struct AnalyticBound {
  double value = 0.0;
  double log_value = 0.0;
  std::string validity;
  std::string provenance;
};

// Root of
//   (c+p)^(2c+2p) / (c^(2c) p^(2p)) * p^p (1-p)^(1-p) = 1
// in c. residual = |LHS - 1|.
struct CpSolution {
  double p = 0.0;
  double c = 0.0;
  double residual = 0.0;
};

inline constexpr double kDefaultCpTol = 1e-10;

// Log of the left-hand side above; c = 0 uses the limit c^(2c) -> 1.
double cp_equation_log_lhs(double c, double p);

// Bisection on cp_equation_log_lhs over c in (1e-12, 1).
CpSolution solve_cp(double p, double tol = kDefaultCpTol);

struct ExpectationBounds {
  AnalyticBound lower;  // c(p) v
  AnalyticBound upper;  // (1-p) v + sqrt(7 v ln v)
};
ExpectationBounds mr_expectation_bounds(long long v, double p);

// ln of the binomial coefficient for real arguments via log-gamma.
double log_binomial(double n, double k);

// Number of zero-patterns with support <= s of n-variable polynomials of degree
// <= d is at most C(n + s d, n).
AnalyticBound zero_pattern_bound(long long n, long long d, long long s);

// Upper bound on Pr[mr(G(v,p)) <= r | edge count within its Chernoff window]:
//   (max{p,1-p}/min{p,1-p})^(v sqrt(2 ln v)) (p^p (1-p)^(1-p))^C(v,2)
//     * (r+1) * C(r v + 2p C(v,2) + 2 v sqrt(2 ln v), r v)
AnalyticBound mr_probability_bound(long long v, double p, long long r);

// Stirling-based upper bound on C((alpha+beta+gamma) N, alpha N):
//   E * ((alpha+beta)^(alpha+beta) / (alpha^alpha beta^beta))^N,
//   E = sqrt((alpha+beta) / (2 pi alpha beta N))
//       * exp{1/(12 (alpha+beta) N) + gamma (1 + alpha/beta) N}.
AnalyticBound stirling_binom_upper(double alpha, double beta, double gamma, double n);

// ln E(alpha, beta, gamma, N) alone.
double stirling_error_log(double alpha, double beta, double gamma, double n);

struct Interval {
  double center = 0.0;
  double half_width = 0.0;
  double lo() const { return center - half_width; }
  double hi() const { return center + half_width; }
  bool contains(double x) const { return x >= lo() && x <= hi(); }
};

struct DeviationIntervals {
  Interval edges;             // p C(v,2) +- v sqrt(2 ln v)
  Interval degrees;           // p v +- sqrt(6 v ln v)
  double edge_failure = 0.0;  // 2 v^-2, both tails
  double degree_failure = 0.0;
};
DeviationIntervals deviation_intervals(long long v, double p);

// 2 exp(-beta^2 / 2).
double azuma_tail(double beta);

struct XiBounds {
  long long edge_upper = 0;                 // floor((-1 + sqrt(9 + 8e)) / 2)
  std::pair<double, double> asymptotic{};   // (p, sqrt p)
};
XiBounds xi_bounds(long long e, double p);

// Largest q with q(q+1)/2 <= e + 1, computed in integers.
long long xi_edge_upper(long long e);

struct ConnectivityFailure {
  AnalyticBound bound;              // 3 v^-2
  double min_degree_cap = 0.0;      // p v + 2 sqrt(2 ln v)
  double small_side_threshold = 0.0;  // t = (2p - p^2) v - 3 sqrt(v ln v) - cap
  bool conditions_hold = false;
};
ConnectivityFailure connectivity_failure_bound(long long v, double p);

}  // namespace minrank::analytic
