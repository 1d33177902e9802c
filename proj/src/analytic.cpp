#include "minrank/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "minrank/errors.hpp"

namespace minrank::analytic {
namespace {

const double kLogValueCap = std::log(1e300);

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("p must lie in the open interval (0,1)");
}

double x_log_x(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

// p ln p + (1-p) ln(1-p), the log of p^p (1-p)^(1-p).
double bernoulli_neg_entropy(double p) { return x_log_x(p) + x_log_x(1.0 - p); }

AnalyticBound from_log(double log_value, std::string validity, std::string provenance) {
  AnalyticBound b;
  b.log_value = log_value;
  b.value = log_value < kLogValueCap ? std::exp(log_value) : std::numeric_limits<double>::quiet_NaN();
  b.validity = std::move(validity);
  b.provenance = std::move(provenance);
  return b;
}

AnalyticBound from_value(double value, std::string validity, std::string provenance) {
  AnalyticBound b;
  b.value = value;
  b.log_value = value > 0.0 ? std::log(value) : -std::numeric_limits<double>::infinity();
  b.validity = std::move(validity);
  b.provenance = std::move(provenance);
  return b;
}

}  // namespace

double cp_equation_log_lhs(double c, double p) {
  return 2.0 * x_log_x(c + p) - 2.0 * x_log_x(c) - 2.0 * x_log_x(p) + bernoulli_neg_entropy(p);
}

CpSolution solve_cp(double p, double tol) {
  require_probability(p);
  if (!(tol > 0.0)) throw ParameterError("solver tolerance must be positive");
  // The left side is strictly increasing in c, so its log changes sign once.
  double lo = 1e-12;
  double hi = 1.0;
  if (!(cp_equation_log_lhs(lo, p) < 0.0 && cp_equation_log_lhs(hi, p) > 0.0)) {
    throw NumericError("solve_cp: root not bracketed in (1e-12, 1)");
  }
  for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cp_equation_log_lhs(mid, p) < 0.0 ? lo : hi) = mid;
  }
  CpSolution sol;
  sol.p = p;
  const double f_lo = std::abs(cp_equation_log_lhs(lo, p));
  const double f_hi = std::abs(cp_equation_log_lhs(hi, p));
  sol.c = f_lo <= f_hi ? lo : hi;
  sol.residual = std::abs(std::expm1(cp_equation_log_lhs(sol.c, p)));
  if (sol.residual > tol) {
    throw NumericError("solve_cp: residual " + std::to_string(sol.residual) + " above tolerance");
  }
  return sol;
}

ExpectationBounds mr_expectation_bounds(long long v, double p) {
  require_probability(p);
  if (v < 2) throw ParameterError("expectation bounds need v >= 2");
  const double vd = static_cast<double>(v);
  ExpectationBounds out;
  out.lower = from_value(solve_cp(p).c * vd, "v sufficiently large", "zero-pattern counting lower bound c(p) v");
  out.upper = from_value((1.0 - p) * vd + std::sqrt(7.0 * vd * std::log(vd)), "v sufficiently large",
                         "connectivity upper bound (1-p) v + sqrt(7 v ln v)");
  return out;
}

double log_binomial(double n, double k) {
  if (k < 0.0 || k > n) throw ParameterError("log_binomial needs 0 <= k <= n");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

AnalyticBound zero_pattern_bound(long long n, long long d, long long s) {
  if (n < 1 || d < 1 || s < 0) throw ParameterError("zero_pattern_bound needs n, d >= 1 and s >= 0");
  const double top = static_cast<double>(n) + static_cast<double>(s) * static_cast<double>(d);
  auto b = from_log(log_binomial(top, static_cast<double>(n)), "m >= n polynomials of degree <= d",
                    "zero-pattern counting bound C(n + s d, n)");
  // The count is an integer; snap when it is exactly representable.
  if (std::isfinite(b.value) && b.value < 0x1.0p52) b.value = std::round(b.value);
  return b;
}

AnalyticBound mr_probability_bound(long long v, double p, long long r) {
  require_probability(p);
  if (v < 2 || r < 1 || r >= v) throw ParameterError("mr_probability_bound needs 1 <= r < v");
  const double vd = static_cast<double>(v);
  const double rd = static_cast<double>(r);
  const double pairs = vd * (vd - 1.0) / 2.0;
  const double window = vd * std::sqrt(2.0 * std::log(vd));
  const double skew = std::log(std::max(p, 1.0 - p) / std::min(p, 1.0 - p));
  const double log_value = window * skew + pairs * bernoulli_neg_entropy(p) + std::log(rd + 1.0) +
                           log_binomial(rd * vd + 2.0 * p * pairs + 2.0 * window, rd * vd);
  return from_log(log_value, "conditioned on |e(G) - p C(v,2)| <= v sqrt(2 ln v)",
                  "zero-pattern count of rank <= r symmetric patterns");
}

double stirling_error_log(double alpha, double beta, double gamma, double n) {
  const double ab = alpha + beta;
  return 0.5 * std::log(ab / (2.0 * std::numbers::pi * alpha * beta * n)) + 1.0 / (12.0 * ab * n) +
         gamma * (1.0 + alpha / beta) * n;
}

AnalyticBound stirling_binom_upper(double alpha, double beta, double gamma, double n) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
    throw ParameterError("stirling_binom_upper needs alpha, beta in (0,1)");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParameterError("stirling_binom_upper needs gamma in [0,1]");
  if (!(n >= 1.0)) throw ParameterError("stirling_binom_upper needs N >= 1");
  const double ab = alpha + beta;
  const double rate = x_log_x(ab) - x_log_x(alpha) - x_log_x(beta);
  return from_log(stirling_error_log(alpha, beta, gamma, n) + n * rate,
                  "upper bound on C((alpha+beta+gamma) N, alpha N)", "Stirling estimate with error factor E");
}

DeviationIntervals deviation_intervals(long long v, double p) {
  require_probability(p);
  if (v < 2) throw ParameterError("deviation intervals need v >= 2");
  const double vd = static_cast<double>(v);
  const double lnv = std::log(vd);
  DeviationIntervals out;
  out.edges = {p * vd * (vd - 1.0) / 2.0, vd * std::sqrt(2.0 * lnv)};
  out.degrees = {p * vd, std::sqrt(6.0 * vd * lnv)};
  out.edge_failure = 2.0 / (vd * vd);
  out.degree_failure = 2.0 / (vd * vd);
  return out;
}

double azuma_tail(double beta) {
  if (!(beta >= 0.0)) throw ParameterError("azuma_tail needs beta >= 0");
  return 2.0 * std::exp(-beta * beta / 2.0);
}

long long xi_edge_upper(long long e) {
  if (e < 0) throw ParameterError("edge count must be nonnegative");
  auto q = static_cast<long long>(std::floor((-1.0 + std::sqrt(9.0 + 8.0 * static_cast<double>(e))) / 2.0));
  while (q * (q + 1) / 2 > e + 1) --q;
  while ((q + 1) * (q + 2) / 2 <= e + 1) ++q;
  return q;
}

XiBounds xi_bounds(long long e, double p) {
  require_probability(p);
  return {xi_edge_upper(e), {p, std::sqrt(p)}};
}

ConnectivityFailure connectivity_failure_bound(long long v, double p) {
  require_probability(p);
  if (v < 2) throw ParameterError("connectivity_failure_bound needs v >= 2");
  const double vd = static_cast<double>(v);
  const double lnv = std::log(vd);
  ConnectivityFailure out;
  out.bound = from_value(3.0 / (vd * vd), "v sufficiently large, p fixed",
                         "Pr[kappa < delta] separator counting bound");
  out.min_degree_cap = p * vd + 2.0 * std::sqrt(2.0 * lnv);
  out.small_side_threshold = (2.0 * p - p * p) * vd - 3.0 * std::sqrt(vd * lnv) - out.min_degree_cap;
  const double floor_t = p * (1.0 - p) * vd - 5.0 * std::sqrt(vd * lnv);
  // e v (1-p)^((v - cap)/2) < 1, in logs.
  const double log_geometric = 1.0 + lnv + 0.5 * (vd - out.min_degree_cap) * std::log1p(-p);
  out.conditions_hold = out.small_side_threshold >= floor_t && floor_t > 0.0 && log_geometric < 0.0;
  return out;
}

}  // namespace minrank::analytic
