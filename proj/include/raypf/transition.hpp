#pragma once

// Exact log-concave / log-convex classification of rays with a > b.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "raypf/bigint.hpp"
#include "raypf/exact_core.hpp"

namespace raypf {

/// Signs of C_{j+1}^2 - C_j C_{j+2} for j = 0..jmax, and the transition index
/// m: the first j whose sign is <= 0 (jmax + 1 when every sign is positive).
struct TransitionProfile {
  RayParams params;
  int jmax = 0;
  std::vector<int> signs;
  int m = 0;
  bool monotone_ok = false;  // signs match +* 0* -*
};

/// sign(u_{j+1}^2 - u_j u_{j+2}) for every full triple of the input.
std::vector<int> log_concavity_signs(std::span<const BigInt> values);

/// First index with sign <= 0, or signs.size() when there is none.
int transition_index(std::span<const int> signs);

/// True iff the signs never increase.
bool single_transition(std::span<const int> signs);

/// Run-length encoding as (sign, count) pairs.
std::vector<std::pair<int, int>> run_length(std::span<const int> signs);

/// Throws std::invalid_argument outside the Transition regime or for jmax < 3.
TransitionProfile classify(const RayParams& params, int jmax);

/// k - (n+1) b / a compared against [-1, 0] with integer arithmetic.
bool log_convex_regime(const RayParams& params);

enum class Theorem1Verdict { Pass, Fail, NotApplicable };

/// Pass iff every sign of classify(params, jmax) is <= 0. NotApplicable when
/// k - (n+1) b / a lies outside [-1, 0].
Theorem1Verdict theorem1_check(const RayParams& params, int jmax);

}  // namespace raypf
