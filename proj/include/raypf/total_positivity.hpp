#pragma once

// Windowed total-positivity checks on Toeplitz matrices (u_{j-i}).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "raypf/bigint.hpp"
#include "raypf/budget.hpp"
#include "raypf/determinant.hpp"
#include "raypf/exact_core.hpp"

namespace raypf {

/// Square window of the infinite Toeplitz matrix with entry(i, j) = u_{j-i},
/// zero when j - i is negative or past the end of the source.
class ToeplitzWindow {
 public:
  ToeplitzWindow(std::vector<BigInt> source, int size);

  int size() const noexcept { return size_; }
  std::span<const BigInt> source() const noexcept { return source_; }
  BigInt entry(int i, int j) const;
  BigMatrix matrix() const;

 private:
  std::vector<BigInt> source_;
  int size_;
};

/// Row and column selections of a minor; 0-based and strictly increasing.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  std::size_t order() const noexcept { return rows.size(); }
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

/// Throws std::invalid_argument unless the spec addresses a square submatrix
/// of an extent x extent matrix.
void validate_minor_spec(const MinorSpec& spec, Eigen::Index extent);

template <typename Derived>
typename Derived::Scalar minor_of(const Eigen::MatrixBase<Derived>& m, const MinorSpec& spec) {
  validate_minor_spec(spec, std::min(m.rows(), m.cols()));
  const auto r = static_cast<Eigen::Index>(spec.order());
  DenseMatrix<typename Derived::Scalar> sub(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) sub(i, j) = m(spec.rows[i], spec.cols[j]);
  return bareiss_determinant(sub);
}

BigInt minor(const ToeplitzWindow& window, const MinorSpec& spec);

/// Every k-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

/// Number of minors of order 1..max_order in a window x window matrix.
std::uint64_t minor_count(int window, int max_order);

struct MinorWitness {
  MinorSpec spec;
  BigInt value;
};

/// Verdict of a windowed check, valid only "up to (max_order, window)".
struct PfVerdict {
  bool passed = true;
  int max_order = 0;
  int window = 0;
  std::uint64_t minors_checked = 0;
  std::optional<MinorWitness> witness;  // first negative minor, on failure
};

/// Checks every minor of order <= max_order in the leading window x window
/// block, by order, then rows, then columns (lexicographic). Throws
/// BudgetExceeded before any work when the minor count exceeds the budget.
PfVerdict is_pf_upto(std::span<const BigInt> sequence, int max_order, int window,
                     std::uint64_t budget = default_minor_budget());

inline PfVerdict is_pf_upto(const RaySequence& seq, int max_order, int window,
                            std::uint64_t budget = default_minor_budget()) {
  return is_pf_upto(std::span<const BigInt>(seq.values), max_order, window, budget);
}

}  // namespace raypf
