#include "raypf/transition.hpp"

#include <algorithm>
#include <stdexcept>

namespace raypf {

std::vector<int> log_concavity_signs(std::span<const BigInt> values) {
  std::vector<int> signs;
  if (values.size() < 3) return signs;
  signs.reserve(values.size() - 2);
  for (std::size_t j = 0; j + 2 < values.size(); ++j) {
    const BigInt q = values[j + 1] * values[j + 1] - values[j] * values[j + 2];
    signs.push_back(q.sign());
  }
  return signs;
}

int transition_index(std::span<const int> signs) {
  const auto it = std::find_if(signs.begin(), signs.end(), [](int s) { return s <= 0; });
  return static_cast<int>(it - signs.begin());
}

bool single_transition(std::span<const int> signs) {
  return std::is_sorted(signs.begin(), signs.end(), std::greater<>());
}

std::vector<std::pair<int, int>> run_length(std::span<const int> signs) {
  std::vector<std::pair<int, int>> runs;
  for (int s : signs) {
    if (!runs.empty() && runs.back().first == s)
      ++runs.back().second;
    else
      runs.emplace_back(s, 1);
  }
  return runs;
}

TransitionProfile classify(const RayParams& params, int jmax) {
  if (params.regime() != Regime::Transition)
    throw std::invalid_argument("classify requires the Transition regime (a > b)");
  if (jmax < 3) throw std::invalid_argument("classify requires jmax >= 3");
  const auto seq = ray_sequence(params, static_cast<std::size_t>(jmax) + 3);
  TransitionProfile profile{params, jmax, log_concavity_signs(seq.values), 0, false};
  profile.m = transition_index(profile.signs);
  profile.monotone_ok = single_transition(profile.signs);
  return profile;
}

bool log_convex_regime(const RayParams& params) {
  // -1 <= k - (n+1)b/a <= 0  <=>  -a <= ka - (n+1)b <= 0
  const std::int64_t scaled = params.k() * params.a() - (params.n() + 1) * params.b();
  return -params.a() <= scaled && scaled <= 0;
}

Theorem1Verdict theorem1_check(const RayParams& params, int jmax) {
  if (params.regime() != Regime::Transition || !log_convex_regime(params))
    return Theorem1Verdict::NotApplicable;
  const auto profile = classify(params, jmax);
  const bool convex = std::all_of(profile.signs.begin(), profile.signs.end(),
                                  [](int s) { return s <= 0; });
  return convex ? Theorem1Verdict::Pass : Theorem1Verdict::Fail;
}

}  // namespace raypf
