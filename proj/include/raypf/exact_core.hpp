#pragma once

// Exact integer arithmetic for rays of Pascal's triangle and the Delannoy
// analogue.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "raypf/bigint.hpp"

namespace raypf {

enum class Regime {
  PolyaFrequency,  // b > a > 0, k < b
  Transition,      // a > b > 0
};

enum class SequenceKind { Binomial, Delannoy };

std::string_view to_string(Regime r);
std::string_view to_string(SequenceKind k);

/// The quadruple (n, k, a, b) of a ray together with its regime. The regime
/// is deduced from a and b; construction throws std::invalid_argument for
/// quadruples that fit neither regime.
class RayParams {
 public:
  RayParams(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return k_; }
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  Regime regime() const noexcept { return regime_; }

  /// floor((n-k)/(b-a)) in the PF regime; the terms past it vanish.
  std::optional<std::int64_t> support_bound() const noexcept;

  friend bool operator==(const RayParams&, const RayParams&) = default;
  friend auto operator<=>(const RayParams& l, const RayParams& r) {
    return std::tie(l.n_, l.k_, l.a_, l.b_) <=> std::tie(r.n_, r.k_, r.a_, r.b_);
  }

 private:
  std::int64_t n_, k_, a_, b_;
  Regime regime_;
};

struct RaySequence {
  RayParams params;
  SequenceKind kind;
  std::vector<BigInt> values;
  // Last index of the finite support (PF regime only).
  std::optional<std::size_t> last_nonzero;
};

/// C(n, k) by the multiplicative running product; 0 outside 0 <= k <= n.
/// Throws std::invalid_argument for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Memoized Delannoy numbers D(n, k), keyed by (min, max). One table per call
/// chain; not shared between threads.
class DelannoyTable {
 public:
  BigInt operator()(std::int64_t n, std::int64_t k);
  std::size_t size() const noexcept { return memo_.size(); }

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> memo_;
};

/// D(n, k) with D(n, 0) = D(0, k) = 1.
BigInt delannoy(std::int64_t n, std::int64_t k);

/// First `length` terms of C_j = C(n+ja, k+jb), or D_j = D(n-k+(a-b)j, k+bj)
/// for the Delannoy kind (PF regime only).
RaySequence ray_sequence(const RayParams& params, std::size_t length,
                         SequenceKind kind = SequenceKind::Binomial);

/// Length covering the whole support in the PF regime (support_bound + 1).
std::size_t pf_support_length(const RayParams& params);

}  // namespace raypf
