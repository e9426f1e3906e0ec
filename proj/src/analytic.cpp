#include "raypf/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace raypf {
namespace {

struct HTerms {
  // h = T(0, 1) - T(alpha2, p) - T(alpha3, q), T(alpha, c) = e^{-alpha t} / (1 - e^{-ct})
  double p, q, alpha2, alpha3, scale;
};

HTerms h_terms(const AnalyticParams& ap) {
  const double u = to_double(ap.u());
  const double p = to_double(ap.p());
  const double q = to_double(ap.q());
  HTerms h{p, q, (u + 1.0) * p, -u * q, 0.0};
  h.scale = std::max({1.0, p, q, std::abs(h.alpha2), std::abs(h.alpha3)});
  return h;
}

// Below this value of t * scale every term is replaced by its expansion.
constexpr double kSeriesSwitch = 1e-3;

// T(alpha, c) - 1/(ct), through the t^2 term.
double regular_series(double alpha, double c, double t) {
  const double c0 = 0.5 - alpha / c;
  const double c1 = c / 12.0 - alpha / 2.0 + alpha * alpha / (2.0 * c);
  const double c2 = -alpha * c / 12.0 + alpha * alpha / 4.0 - alpha * alpha * alpha / (6.0 * c);
  return c0 + t * (c1 + t * c2);
}

double h_value(const HTerms& h, double t) {
  if (t * h.scale < kSeriesSwitch) {
    // The 1/t poles cancel exactly since 1 - 1/p - 1/q = 0.
    return regular_series(0.0, 1.0, t) - regular_series(h.alpha2, h.p, t) -
           regular_series(h.alpha3, h.q, t);
  }
  // T(alpha, c) = e^{-alpha t} + e^{-(alpha+c)t} / (1 - e^{-ct}); the three
  // leading exponentials are combined with expm1 to keep h accurate where it
  // is exponentially small.
  const double x = -h.alpha2 * t;
  const double y = -h.alpha3 * t;
  const double head = std::abs(x) <= std::abs(y) ? -std::expm1(x) - std::exp(y)
                                                  : -std::expm1(y) - std::exp(x);
  const double tail = std::exp(-t) / -std::expm1(-t) -
                      std::exp(-(h.alpha2 + h.p) * t) / -std::expm1(-h.p * t) -
                      std::exp(-(h.alpha3 + h.q) * t) / -std::expm1(-h.q * t);
  return head + tail;
}

template <typename F>
double bisect(F&& f, double lo, double hi, double width) {
  double flo = f(lo);
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

AnalyticParams::AnalyticParams(Rational u, Rational p) : u_(u), p_(p), q_(1) {
  if (p <= Rational(1)) throw std::invalid_argument("analytic parameters require p > 1");
  q_ = p / (p - Rational(1));
}

AnalyticParams AnalyticParams::from_ray(const RayParams& params) {
  if (params.regime() != Regime::Transition)
    throw std::invalid_argument("analytic parameters require the Transition regime");
  const Rational u = Rational(params.k()) - Rational(params.n() + 1) * Rational(params.b(), params.a());
  return AnalyticParams(u, Rational(params.a(), params.b()));
}

double trigamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("trigamma requires x > 0");
  double shifted = 0.0;
  while (x < 10.0) {
    shifted += 1.0 / (x * x);
    x += 1.0;
  }
  const double z = 1.0 / x;
  const double z2 = z * z;
  // 1/x + 1/(2x^2) + sum_k B_2k / x^(2k+1), through B_10 = 5/66
  const double bernoulli =
      1.0 / 6.0 - z2 * (1.0 / 30.0 - z2 * (1.0 / 42.0 - z2 * (1.0 / 30.0 - z2 * (5.0 / 66.0))));
  return shifted + z + 0.5 * z2 + z * z2 * bernoulli;
}

double g_second(const RayParams& params, double x) {
  const double n = static_cast<double>(params.n()), k = static_cast<double>(params.k());
  const double a = static_cast<double>(params.a()), b = static_cast<double>(params.b());
  const double c = a - b;
  return a * a * trigamma(n + a * x + 1.0) - b * b * trigamma(k + b * x + 1.0) -
         c * c * trigamma(n - k + c * x + 1.0);
}

double watson_ratio(const RayParams& params, double x) {
  const double a = static_cast<double>(params.a());
  const double shift = a * x + static_cast<double>(params.n()) + 1.0;
  return g_second(params, x) * 2.0 * shift * shift / (a * a);
}

double h_eval(const AnalyticParams& ap, double t) {
  if (!(t > 0.0)) throw std::domain_error("h(t, u) requires t > 0");
  return h_value(h_terms(ap), t);
}

double h_mixed_partial(const AnalyticParams& ap, double t) {
  const double u = to_double(ap.u()), p = to_double(ap.p()), q = to_double(ap.q());
  const double ep = -std::expm1(-p * t);  // 1 - e^{-pt}
  const double eq = -std::expm1(-q * t);
  const double first = p * (-std::expm1(-p * t) - p * t - p * t * u * ep) *
                       std::exp(-(u + 1.0) * p * t) / (ep * ep);
  const double second = q * ((q * t + 1.0) * std::exp(-q * t) - 1.0 - u * q * t * eq) *
                        std::exp(u * q * t) / (eq * eq);
  return first + second;
}

QuadratureResult g_second_quadrature_detailed(const RayParams& params, double x) {
  if (!(x >= 0.0)) throw std::domain_error("g'' quadrature requires x >= 0");
  const AnalyticParams ap = AnalyticParams::from_ray(params);
  const HTerms h = h_terms(ap);
  const double a = static_cast<double>(params.a());
  const double n = static_cast<double>(params.n()), k = static_cast<double>(params.k());
  const double p = h.p, q = h.q;
  const double r1 = a * x + n + 1.0;
  const double r2 = a * x + (k + 1.0) * p;
  const double r3 = a * x + (n + 1.0 - k) * q;
  const double a2 = a * a;

  auto integrand = [&](double t) {
    if (t * h.scale < kSeriesSwitch) return a2 * t * std::exp(-r1 * t) * h_value(h, t);
    return a2 * t *
           (std::exp(-r1 * t) / -std::expm1(-t) - std::exp(-r2 * t) / -std::expm1(-p * t) -
            std::exp(-r3 * t) / -std::expm1(-q * t));
  };

  // For t >= T: |integrand| <= 3 a^2 t e^{-r t} / (1 - e^{-T}), r the smallest rate.
  const double r = std::min({r1, r2, r3});
  auto tail = [&](double cutoff) {
    return 3.0 * a2 / -std::expm1(-cutoff) * std::exp(-r * cutoff) * (cutoff / r + 1.0 / (r * r));
  };
  double cutoff = 1.0;
  while (tail(cutoff) > 1e-15) cutoff *= 1.25;

  QuadratureResult result;
  result.cutoff = cutoff;
  result.tail_bound = tail(cutoff);
  double l1 = 0.0;
  result.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, cutoff, 15, 1e-12, &result.error_estimate, &l1);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1;
  if (!std::isfinite(result.value) ||
      (result.error_estimate > 1e-9 * std::abs(result.value) && result.error_estimate > floor)) {
    std::ostringstream msg;
    msg << "g'' quadrature did not converge: estimate " << result.value << ", error "
        << result.error_estimate;
    throw QuadratureError(msg.str(), result.error_estimate);
  }
  return result;
}

double g_second_quadrature(const RayParams& params, double x) {
  return g_second_quadrature_detailed(params, x).value;
}

int count_sign_changes(const std::function<double(double)>& f, double lo, double hi, int points) {
  int changes = 0;
  int last = 0;
  for (int i = 0; i <= points; ++i) {
    const double v = f(lo + (hi - lo) * i / points);
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int h_sign_changes(const AnalyticParams& ap, double t_max, int points) {
  return count_sign_changes([&](double t) { return t == 0.0 ? 0.5 : h_eval(ap, t); }, 0.0, t_max,
                            points);
}

std::optional<double> h_root(const AnalyticParams& ap, double t_max) {
  if (!(t_max > 0.0)) throw std::domain_error("h_root requires t_max > 0");
  const HTerms h = h_terms(ap);
  constexpr int kPoints = 4000;
  // h -> 1/2 as t -> 0+, so the scan starts from a positive sign.
  int last = 1;
  double last_t = 0.0;
  std::optional<std::pair<double, double>> bracket;
  int changes = 0;
  for (int i = 1; i <= kPoints; ++i) {
    const double t = t_max * i / kPoints;
    const double v = h_value(h, t);
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (s != last) {
      ++changes;
      if (!bracket) bracket = std::pair{last_t, t};
    }
    last = s;
    last_t = t;
  }
  if (changes > 1) throw AnalyticFault("h(t, u) changes sign more than once on the scan grid");
  if (!bracket) return std::nullopt;
  const double lo = std::max(bracket->first, t_max * 1e-12);
  return bisect([&](double t) { return h_value(h, t); }, lo, bracket->second, 1e-10);
}

std::optional<double> predict_transition(const RayParams& params, double x_max) {
  if (params.regime() != Regime::Transition)
    throw std::invalid_argument("predict_transition requires the Transition regime");
  if (!(x_max > 0.0)) throw std::domain_error("predict_transition requires x_max > 0");
  const int points = std::max(400, static_cast<int>(std::ceil(x_max / 0.02)));
  int last = 0;
  double last_x = 0.0;
  int changes = 0;
  std::optional<std::pair<double, double>> bracket;
  bool rising = true;
  for (int i = 0; i <= points; ++i) {
    const double x = x_max * i / points;
    const double v = g_second(params, x);
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (last != 0 && s != last) {
      ++changes;
      if (!bracket) {
        bracket = std::pair{last_x, x};
        rising = s > 0;
      }
    }
    last = s;
    last_x = x;
  }
  if (changes > 1) throw AnalyticFault("g'' changes sign more than once on the scan grid");
  if (!bracket) return std::nullopt;
  if (!rising) throw AnalyticFault("g'' changes sign from positive to negative");
  return bisect([&](double x) { return g_second(params, x); }, bracket->first, bracket->second,
                1e-12);
}

double aux_f(double s) { return s / std::expm1(s); }

double aux_l(double s) {
  const double half = 0.5 * s;
  const double r = half / std::sinh(half);
  return r * r;
}

double aux_neg_log_l(double s) {
  const double x = 0.5 * s;
  // sinh(x)/x - 1 = x^2/6 + x^4/120 + x^6/5040 + ...
  const double excess = x < 1e-2 ? x * x * (1.0 / 6.0 + x * x * (1.0 / 120.0 + x * x / 5040.0))
                                 : std::sinh(x) / x - 1.0;
  return 2.0 * std::log1p(excess);
}

AuxCheckReport aux_monotone_checks() {
  AuxCheckReport report;
  constexpr int kPoints = 1000;
  constexpr double kLo = 1e-6, kHi = 50.0;
  auto grid = [](int i) { return kLo * std::pow(kHi / kLo, static_cast<double>(i) / (kPoints - 1)); };

  report.f_min_drop = std::numeric_limits<double>::infinity();
  report.l_min_rise = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < kPoints; ++i) {
    const double s0 = grid(i), s1 = grid(i + 1);
    const double drop = aux_f(s0) - aux_f(s1);
    report.f_min_drop = std::min(report.f_min_drop, drop);
    if (!(drop > 0.0)) {
      report.f_decreasing = false;
      report.faults.push_back("f not decreasing at s=" + std::to_string(s0));
    }
    const double rise = aux_neg_log_l(s1) - aux_neg_log_l(s0);
    report.l_min_rise = std::min(report.l_min_rise, rise);
    if (!(rise > 0.0)) {
      report.l_decreasing = false;
      report.faults.push_back("l not decreasing at s=" + std::to_string(s0));
    }
  }

  report.mixed_max = -std::numeric_limits<double>::infinity();
  const Rational du(1, 10000);
  for (std::int64_t a = 2; a <= 5; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      const Rational p(a, b);
      for (int ui = 0; ui <= 16; ++ui) {
        const Rational u(ui, 4);
        const AnalyticParams up(u + du, p), um(u - du, p);
        for (double t = 0.05; t <= 20.0; t *= 1.2) {
          const double dt = 1e-4 * t;
          const double mixed = (h_eval(up, t + dt) - h_eval(um, t + dt) - h_eval(up, t - dt) +
                                h_eval(um, t - dt)) /
                               (4.0 * dt * to_double(du));
          report.mixed_max = std::max(report.mixed_max, mixed);
          if (!(mixed < 0.0)) {
            report.mixed_negative = false;
            std::ostringstream msg;
            msg << "mixed partial not negative at t=" << t << ", u=" << to_double(u)
                << ", p=" << to_double(p);
            report.faults.push_back(msg.str());
          }
        }
      }
    }
  }
  return report;
}

}  // namespace raypf
