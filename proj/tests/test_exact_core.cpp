#include "doctest.h"
#include "oracles.hpp"
#include "raypf/exact_core.hpp"

using namespace raypf;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("binomial matches the factorial ratio and the range conventions") {
  CHECK(binomial(4, 1) == oracle::binomial_by_factorials(4, 1));
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(7, 7) == 1);
  CHECK(binomial(8, 9) == 0);
  CHECK(binomial(8, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  CHECK(binomial(100, 50) == oracle::binomial_by_factorials(100, 50));
}

TEST_CASE("binomial symmetry and Pascal recurrence up to n = 60") {
  const auto rows = oracle::pascal_rows(60);
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == rows[n][k]);
      CHECK(binomial(n, k) == binomial(n, n - k));
      if (k >= 1 && n >= 1) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("Delannoy numbers") {
  CHECK(delannoy(0, 5) == 1);
  CHECK(delannoy(5, 0) == 1);
  CHECK(delannoy(1, 1) == oracle::delannoy_naive(1, 1));
  CHECK(delannoy(1, 1) == 3);
  CHECK(delannoy(3, 3) == 63);
  CHECK(delannoy(3, 3) == oracle::delannoy_naive(3, 3));
  for (std::int64_t n = 0; n <= 20; ++n)
    for (std::int64_t k = 0; k <= 20; ++k) {
      CHECK(delannoy(n, k) == delannoy(k, n));
      CHECK(delannoy(n, k) == oracle::delannoy_closed_form(n, k));
    }
  DelannoyTable table;
  CHECK(table(4, 6) == oracle::delannoy_naive(4, 6));
  CHECK(table(6, 4) == table(4, 6));
  CHECK_THROWS_AS(table(-1, 2), std::invalid_argument);
}

TEST_CASE("RayParams validation and regimes") {
  CHECK(RayParams(4, 1, 1, 2).regime() == Regime::PolyaFrequency);
  CHECK(RayParams(0, 0, 2, 1).regime() == Regime::Transition);
  CHECK(RayParams(4, 1, 1, 2).support_bound() == 3);
  CHECK_FALSE(RayParams(0, 0, 2, 1).support_bound().has_value());
  CHECK_THROWS_AS(RayParams(1, 2, 1, 2), std::invalid_argument);   // n < k
  CHECK_THROWS_AS(RayParams(3, -1, 1, 2), std::invalid_argument);  // k < 0
  CHECK_THROWS_AS(RayParams(3, 2, 1, 2), std::invalid_argument);   // k >= b in PF
  CHECK_THROWS_AS(RayParams(3, 1, 2, 2), std::invalid_argument);   // a == b
  CHECK_THROWS_AS(RayParams(3, 1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(RayParams(3, 1, 2, 0), std::invalid_argument);
  CHECK_NOTHROW(RayParams(12, 12, 5, 1));  // Transition allows any k <= n
}

TEST_CASE("ray_sequence reproduces the worked rays") {
  {
    const auto seq = ray_sequence(RayParams(4, 1, 1, 2), 5);
    std::vector<BigInt> expected;
    for (std::int64_t j = 0; j < 5; ++j)
      expected.push_back(oracle::binomial_by_factorials(4 + j, 1 + 2 * j));
    CHECK(seq.values == expected);
    CHECK(seq.values == ints({4, 10, 6, 1, 0}));
    CHECK(seq.last_nonzero == 3u);
    CHECK(seq.kind == SequenceKind::Binomial);
  }
  {
    const auto seq = ray_sequence(RayParams(0, 0, 2, 1), 5);
    std::vector<BigInt> central;
    for (std::int64_t j = 0; j < 5; ++j) central.push_back(oracle::binomial_by_factorials(2 * j, j));
    CHECK(seq.values == central);
    CHECK(seq.values == ints({1, 2, 6, 20, 70}));
    CHECK_FALSE(seq.last_nonzero.has_value());
  }
  CHECK(ray_sequence(RayParams(3, 0, 1, 2), 1).values == ints({1}));
  CHECK_THROWS_AS(ray_sequence(RayParams(3, 0, 1, 2), 0), std::invalid_argument);
}

TEST_CASE("Transition rays agree with per-term binomials") {
  for (std::int64_t n = 0; n <= 7; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      for (std::int64_t a = 2; a <= 5; ++a)
        for (std::int64_t b = 1; b < a; ++b) {
          const auto seq = ray_sequence(RayParams(n, k, a, b), 25);
          for (std::int64_t j = 0; j < 25; ++j)
            REQUIRE(seq.values[j] == oracle::binomial_by_factorials(n + j * a, k + j * b));
        }
}

TEST_CASE("PF rays vanish exactly past their support, with no internal zeros") {
  for (std::int64_t n = 0; n <= 10; ++n)
    for (std::int64_t b = 2; b <= 5; ++b)
      for (std::int64_t a = 1; a < b; ++a)
        for (std::int64_t k = 0; k <= n && k < b; ++k) {
          const RayParams p(n, k, a, b);
          const auto seq = ray_sequence(p, pf_support_length(p) + 4);
          const std::size_t last = *seq.last_nonzero;
          CHECK(last == static_cast<std::size_t>((n - k) / (b - a)));
          for (std::size_t j = 0; j < seq.values.size(); ++j) {
            if (j <= last) CHECK(seq.values[j] > 0);
            else CHECK(seq.values[j] == 0);
          }
        }
}

TEST_CASE("Delannoy rays") {
  const auto seq = ray_sequence(RayParams(4, 1, 1, 2), 5, SequenceKind::Delannoy);
  // D_j = D(3 - j, 1 + 2j)
  for (std::int64_t j = 0; j < 4; ++j) CHECK(seq.values[j] == oracle::delannoy_naive(3 - j, 1 + 2 * j));
  CHECK(seq.values == ints({7, 25, 11, 1, 0}));
  CHECK_THROWS_AS(ray_sequence(RayParams(0, 0, 2, 1), 3, SequenceKind::Delannoy),
                  std::invalid_argument);
}
