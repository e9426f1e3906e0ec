#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace raypf {

/// Raised when an enumeration would exceed its configured cap. Distinct from
/// a failed mathematical check.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultMinorBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Defaults above, unless RAYPF_BUDGET holds a positive integer.
std::uint64_t default_minor_budget();
std::uint64_t default_enumeration_budget();

}  // namespace raypf
