#include "raypf/budget.hpp"

#include <cstdlib>
#include <optional>

namespace raypf {
namespace {

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("RAYPF_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t default_minor_budget() { return env_budget().value_or(kDefaultMinorBudget); }

std::uint64_t default_enumeration_budget() {
  return env_budget().value_or(kDefaultEnumerationBudget);
}

}  // namespace raypf
