#pragma once

// Double-precision analysis of g(x) = log Gamma(n+ax+1) - log Gamma(k+bx+1)
// - log Gamma(n-k+(a-b)x+1) for a > b: its second derivative by two
// independent routes, the kernel h(t, u), and sign-change diagnostics.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "raypf/exact_core.hpp"

namespace raypf {

using Rational = boost::rational<std::int64_t>;

/// A numerical result that contradicts the expected sign structure, or a
/// quadrature that did not converge.
class AnalyticFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public AnalyticFault {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : AnalyticFault(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

/// u = k - (n+1) b/a, p = a/b, q = a/(a-b); kept exact so 1/p + 1/q = 1.
class AnalyticParams {
 public:
  /// q is derived as p / (p - 1); requires p > 1.
  AnalyticParams(Rational u, Rational p);
  static AnalyticParams from_ray(const RayParams& params);

  const Rational& u() const noexcept { return u_; }
  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }

 private:
  Rational u_, p_, q_;
};

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// psi_1(x); upward recurrence to x >= 10, then the asymptotic series through
/// the x^-11 Bernoulli term. Throws std::domain_error for x <= 0.
double trigamma(double x);

/// a^2 psi_1(n+ax+1) - b^2 psi_1(k+bx+1) - (a-b)^2 psi_1(n-k+(a-b)x+1).
double g_second(const RayParams& params, double x);

/// g''(x) * 2 (ax+n+1)^2 / a^2, which tends to 1.
double watson_ratio(const RayParams& params, double x);

/// h(t, u) = 1/(1-e^-t) - e^{-(u+1)pt}/(1-e^{-pt}) - e^{uqt}/(1-e^{-qt}).
double h_eval(const AnalyticParams& ap, double t);

/// Closed form of d^2 h / dt du.
double h_mixed_partial(const AnalyticParams& ap, double t);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double cutoff = 0.0;      // upper limit T of the integration
  double tail_bound = 0.0;  // bound on the discarded integral over (T, inf)
};

/// g''(x) = integral over (0, inf) of a^2 t e^{-(ax+n+1)t} h(t, u) dt, by
/// adaptive Gauss-Kronrod on (0, T]. Throws QuadratureError when the error
/// estimate misses 1e-9 relative.
QuadratureResult g_second_quadrature_detailed(const RayParams& params, double x);
double g_second_quadrature(const RayParams& params, double x);

/// Sign changes of f sampled at lo + (hi-lo) i / points, i = 0..points;
/// exact zeros are skipped.
int count_sign_changes(const std::function<double(double)>& f, double lo, double hi, int points);

/// Sign changes of h(., u) on (0, t_max], sampled like count_sign_changes
/// with the limit 1/2 standing in at t = 0.
int h_sign_changes(const AnalyticParams& ap, double t_max, int points);

/// Unique root of h(., u) on (0, t_max] or none. Throws AnalyticFault if the
/// scan grid shows more than one sign change.
std::optional<double> h_root(const AnalyticParams& ap, double t_max);

/// Unique point x* in (0, x_max] where g'' goes from negative to positive, or
/// none. Throws AnalyticFault on several sign changes or a + to - change.
std::optional<double> predict_transition(const RayParams& params, double x_max);

/// f(s) = s e^-s / (1 - e^-s).
double aux_f(double s);
/// l(s) = s^2 e^-s / (1 - e^-s)^2.
double aux_l(double s);
/// -log l(s), accurate where l(s) is within rounding of 1.
double aux_neg_log_l(double s);

struct AuxCheckReport {
  bool f_decreasing = true;
  double f_min_drop = 0.0;  // smallest f(s_i) - f(s_{i+1})
  bool l_decreasing = true;
  double l_min_rise = 0.0;  // smallest rise of -log l between grid points
  bool mixed_negative = true;
  double mixed_max = 0.0;   // largest finite-difference mixed partial seen
  std::vector<std::string> faults;

  bool passed() const noexcept { return f_decreasing && l_decreasing && mixed_negative; }
};

/// f and l on 1000 log-spaced points of [1e-6, 50]; the mixed partial of h by
/// central differences on a (t, u >= 0) grid for every p = a/b, a <= 5.
AuxCheckReport aux_monotone_checks();

}  // namespace raypf
