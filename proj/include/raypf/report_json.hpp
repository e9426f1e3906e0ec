#pragma once

// JSON renderings of the verification results. Exact integers are emitted as
// decimal strings so no digits are lost.

#include <optional>

#include "json.hpp"

#include "raypf/analytic.hpp"
#include "raypf/exact_core.hpp"
#include "raypf/lgv_network.hpp"
#include "raypf/real_roots.hpp"
#include "raypf/total_positivity.hpp"
#include "raypf/transition.hpp"

namespace raypf {

using Json = nlohmann::json;

Json to_json(const RayParams& params);
Json to_json(const RaySequence& seq);
Json to_json(const MinorSpec& spec);
Json to_json(const PfVerdict& verdict);
Json to_json(const IntPolynomial& p);
Json path_matrix_json(const BigMatrix& m);
Json to_json(const LgvReport& report);

/// TransitionProfile plus the analytic summary: x* on (0, x_max] and the
/// Watson ratio at x = 1000.
Json to_json(const TransitionProfile& profile, std::optional<double> x_star, double watson);

Json rational_json(const Rational& r);

}  // namespace raypf
