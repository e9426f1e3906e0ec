#include "raypf/exact_core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace raypf {
namespace {

// Keeps n + j*a and friends far from int64 overflow for any sane length.
constexpr std::int64_t kParamLimit = std::int64_t{1} << 31;

}  // namespace

std::string_view to_string(Regime r) {
  return r == Regime::PolyaFrequency ? "pf" : "transition";
}

std::string_view to_string(SequenceKind k) {
  return k == SequenceKind::Binomial ? "binomial" : "delannoy";
}

RayParams::RayParams(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b)
    : n_(n), k_(k), a_(a), b_(b), regime_(Regime::Transition) {
  if (k < 0 || n < k)
    throw std::invalid_argument("ray parameters require n >= k >= 0");
  if (a <= 0 || b <= 0)
    throw std::invalid_argument("ray parameters require a > 0 and b > 0");
  if (n >= kParamLimit || a >= kParamLimit || b >= kParamLimit)
    throw std::invalid_argument("ray parameters out of supported range");
  if (a == b)
    throw std::invalid_argument("ray parameters require a != b");
  if (b > a) {
    if (k >= b)
      throw std::invalid_argument("PF regime (b > a) requires k < b");
    regime_ = Regime::PolyaFrequency;
  }
}

std::optional<std::int64_t> RayParams::support_bound() const noexcept {
  if (regime_ != Regime::PolyaFrequency) return std::nullopt;
  return (n_ - k_) / (b_ - a_);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (k < 0 || k > n) return BigInt(0);
  const std::int64_t r = std::min(k, n - k);
  BigInt acc(1);
  // acc holds C(n-r+i, i) after step i, so each division is exact.
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

BigInt DelannoyTable::operator()(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("delannoy requires n, k >= 0");
  const auto key = std::minmax(n, k);
  if (key.first == 0) return BigInt(1);
  if (auto it = memo_.find({key.first, key.second}); it != memo_.end()) return it->second;

  // Fill row by row in the smaller coordinate so the recursion depth stays 1.
  const std::int64_t lo = key.first;
  const std::int64_t hi = key.second;
  for (std::int64_t s = 1; s <= lo; ++s) {
    for (std::int64_t l = s; l <= hi; ++l) {
      if (memo_.contains({s, l})) continue;
      auto get = [this](std::int64_t x, std::int64_t y) -> BigInt {
        const auto [u, v] = std::minmax(x, y);
        if (u == 0) return BigInt(1);
        return memo_.at({u, v});
      };
      memo_.emplace(std::pair{s, l}, get(s - 1, l) + get(s, l - 1) + get(s - 1, l - 1));
    }
  }
  return memo_.at({lo, hi});
}

BigInt delannoy(std::int64_t n, std::int64_t k) {
  DelannoyTable table;
  return table(n, k);
}

std::size_t pf_support_length(const RayParams& params) {
  const auto bound = params.support_bound();
  if (!bound) throw std::invalid_argument("finite support exists only in the PF regime");
  return static_cast<std::size_t>(*bound) + 1;
}

RaySequence ray_sequence(const RayParams& params, std::size_t length, SequenceKind kind) {
  if (length == 0) throw std::invalid_argument("ray_sequence requires length >= 1");
  if (length > static_cast<std::size_t>(kParamLimit))
    throw std::invalid_argument("ray_sequence length out of supported range");
  if (kind == SequenceKind::Delannoy && params.regime() != Regime::PolyaFrequency)
    throw std::invalid_argument("Delannoy rays are defined for the PF regime only");

  RaySequence seq{params, kind, {}, std::nullopt};
  seq.values.reserve(length);
  const std::int64_t n = params.n(), k = params.k(), a = params.a(), b = params.b();

  if (params.regime() == Regime::PolyaFrequency) {
    const std::int64_t bound = *params.support_bound();
    seq.last_nonzero = static_cast<std::size_t>(bound);
    DelannoyTable table;
    for (std::size_t idx = 0; idx < length; ++idx) {
      const auto j = static_cast<std::int64_t>(idx);
      if (j > bound) {
        seq.values.emplace_back(0);
      } else if (kind == SequenceKind::Binomial) {
        seq.values.push_back(binomial(n + j * a, k + j * b));
      } else {
        seq.values.push_back(table(n - k + (a - b) * j, k + b * j));
      }
    }
    return seq;
  }

  // Transition regime: C_{j+1} = C_j * (N+1)...(N+a) / [(K+1)...(K+b) (N-K+1)...(N-K+a-b)]
  // with N = n + ja, K = k + jb; the quotient is an integer so one exact
  // division per step suffices.
  seq.values.push_back(binomial(n, k));
  for (std::size_t idx = 1; idx < length; ++idx) {
    const auto j = static_cast<std::int64_t>(idx) - 1;
    const std::int64_t N = n + j * a, K = k + j * b, R = N - K;
    BigInt num = seq.values.back();
    for (std::int64_t i = 1; i <= a; ++i) num *= N + i;
    BigInt den(1);
    for (std::int64_t i = 1; i <= b; ++i) den *= K + i;
    for (std::int64_t i = 1; i <= a - b; ++i) den *= R + i;
    seq.values.push_back(num / den);
  }
  return seq;
}

}  // namespace raypf
