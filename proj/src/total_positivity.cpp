#include "raypf/total_positivity.hpp"

#include <stdexcept>
#include <string>

namespace raypf {

ToeplitzWindow::ToeplitzWindow(std::vector<BigInt> source, int size)
    : source_(std::move(source)), size_(size) {
  if (size < 0) throw std::invalid_argument("Toeplitz window size must be nonnegative");
  for (const auto& v : source_)
    if (v < 0) throw std::invalid_argument("Toeplitz source entries must be nonnegative");
}

BigInt ToeplitzWindow::entry(int i, int j) const {
  const long d = static_cast<long>(j) - i;
  if (d < 0 || d >= static_cast<long>(source_.size())) return BigInt(0);
  return source_[static_cast<std::size_t>(d)];
}

BigMatrix ToeplitzWindow::matrix() const {
  BigMatrix m(size_, size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) m(i, j) = entry(i, j);
  return m;
}

void validate_minor_spec(const MinorSpec& spec, Eigen::Index extent) {
  if (spec.rows.empty() || spec.rows.size() != spec.cols.size())
    throw std::invalid_argument("minor spec needs |I| = |J| >= 1");
  auto check = [extent](const std::vector<int>& idx, const char* what) {
    for (std::size_t r = 0; r < idx.size(); ++r) {
      if (idx[r] < 0 || idx[r] >= extent)
        throw std::invalid_argument(std::string("minor ") + what + " index out of range");
      if (r > 0 && idx[r] <= idx[r - 1])
        throw std::invalid_argument(std::string("minor ") + what +
                                    " indices must be strictly increasing");
    }
  };
  check(spec.rows, "row");
  check(spec.cols, "column");
}

BigInt minor(const ToeplitzWindow& window, const MinorSpec& spec) {
  validate_minor_spec(spec, window.size());
  const auto r = static_cast<Eigen::Index>(spec.order());
  BigMatrix sub(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) sub(i, j) = window.entry(spec.rows[i], spec.cols[j]);
  return bareiss_determinant(sub);
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

std::uint64_t minor_count(int window, int max_order) {
  std::uint64_t total = 0;
  for (int r = 1; r <= max_order; ++r) {
    // C(window, r) computed incrementally; saturate rather than overflow.
    unsigned __int128 c = 1;
    for (int i = 1; i <= r; ++i) c = c * static_cast<unsigned>(window - r + i) / i;
    const unsigned __int128 sq = c * c;
    const unsigned __int128 sum = total + sq;
    if (sum > UINT64_MAX) return UINT64_MAX;
    total = static_cast<std::uint64_t>(sum);
  }
  return total;
}

PfVerdict is_pf_upto(std::span<const BigInt> sequence, int max_order, int window,
                     std::uint64_t budget) {
  if (window < 1 || max_order < 1)
    throw std::invalid_argument("is_pf_upto requires window >= 1 and max_order >= 1");
  if (max_order > window) throw std::invalid_argument("is_pf_upto requires max_order <= window");

  const std::uint64_t needed = minor_count(window, max_order);
  if (needed > budget)
    throw BudgetExceeded("minor enumeration needs " + std::to_string(needed) +
                             " minors, budget is " + std::to_string(budget),
                         budget);

  PfVerdict verdict;
  verdict.max_order = max_order;
  verdict.window = window;

  const BigMatrix m = [&] {
    BigMatrix t(window, window);
    for (int i = 0; i < window; ++i)
      for (int j = 0; j < window; ++j) {
        const long d = static_cast<long>(j) - i;
        t(i, j) = (d >= 0 && d < static_cast<long>(sequence.size()))
                      ? sequence[static_cast<std::size_t>(d)]
                      : BigInt(0);
      }
    return t;
  }();

  for (int r = 1; r <= max_order; ++r) {
    const auto subsets = combinations(window, r);
    for (const auto& rows : subsets) {
      for (const auto& cols : subsets) {
        MinorSpec spec{rows, cols};
        BigInt value = minor_of(m, spec);
        ++verdict.minors_checked;
        if (value < 0) {
          verdict.passed = false;
          verdict.witness = MinorWitness{std::move(spec), std::move(value)};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace raypf
