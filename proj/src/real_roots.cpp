#include "raypf/real_roots.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace raypf {
namespace {

void trim(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.coefficients().size() + q.coefficients().size() - 1, BigInt(0));
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    for (std::size_t j = 0; j < q.coefficients().size(); ++j)
      out[i + j] += p.coefficients()[i] * q.coefficients()[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p) {
  std::vector<BigInt> c = p.coefficients();
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = p.coefficients()[i] * i;
  return IntPolynomial(std::move(c));
}

BigInt content(const IntPolynomial& p) {
  BigInt g(0);
  for (const auto& c : p.coefficients()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt g = content(p);
  if (g == 1) return p;
  std::vector<BigInt> c = p.coefficients();
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b, int* scale_sign) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by the zero polynomial");
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const BigInt& lb = b.leading();
  const int db = b.degree();
  int sign = 1;
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const BigInt lr = r.back();
    const int shift = dr - db;
    for (auto& v : r) v *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * bc[i];
    trim(r);
    if (lb < 0) sign = -sign;
  }
  if (scale_sign) *scale_sign = sign;
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial a = primitive_part(p);
  IntPolynomial b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() < 0) a = -a;
  return a;
}

IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.degree() < d.degree()) {
    if (p.is_zero()) return {};
    throw std::domain_error("polynomial division is not exact");
  }
  std::vector<BigInt> r = p.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(p.degree() - d.degree() + 1), BigInt(0));
  const auto& dc = d.coefficients();
  for (int shift = p.degree() - d.degree(); shift >= 0; --shift) {
    BigInt& top = r[static_cast<std::size_t>(shift + d.degree())];
    if (top == 0) continue;
    if (top % d.leading() != 0) throw std::domain_error("polynomial division is not exact");
    const BigInt factor = top / d.leading();
    for (int i = 0; i <= d.degree(); ++i) r[static_cast<std::size_t>(shift + i)] -= factor * dc[i];
    q[static_cast<std::size_t>(shift)] = factor;
  }
  trim(r);
  if (!r.empty()) throw std::domain_error("polynomial division is not exact");
  return IntPolynomial(std::move(q));
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p;
  const IntPolynomial g = gcd(p, derivative(p));
  if (g.degree() == 0) return p;
  return exact_quotient(p, g);
}

IntPolynomial from_sequence(const RaySequence& seq) {
  if (seq.params.regime() != Regime::PolyaFrequency || !seq.last_nonzero)
    throw std::invalid_argument("generating polynomial requires a finite PF-regime sequence");
  const std::size_t end = *seq.last_nonzero + 1;
  if (seq.values.size() < end)
    throw std::invalid_argument("sequence is shorter than its support");
  return IntPolynomial(std::vector<BigInt>(seq.values.begin(), seq.values.begin() + end));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<IntPolynomial> chain{p};
  IntPolynomial next = derivative(p);
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& prev = chain[chain.size() - 2];
    int s = 1;
    IntPolynomial r = pseudo_remainder(prev, chain.back(), &s);
    // r = s * |scale| * rem, so -s * r is a positive multiple of -rem.
    if (s > 0) r = -r;
    next = primitive_part(r);
  }
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const BigInt& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

BigInt cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Cauchy bound of the zero polynomial");
  const BigInt lead = boost::multiprecision::abs(p.leading());
  BigInt max_abs(0);
  for (int i = 0; i < p.degree(); ++i)
    max_abs = std::max(max_abs, BigInt(boost::multiprecision::abs(p.coefficients()[i])));
  const BigInt ceil_ratio = (max_abs + lead - 1) / lead;
  return 1 + ceil_ratio;
}

int count_distinct_real_roots(const IntPolynomial& p) {
  const IntPolynomial q = square_free_part(p);
  if (q.degree() < 1) return 0;
  const auto chain = sturm_chain(q);
  const BigInt bound = cauchy_bound(q);
  return sign_variations(chain, -bound) - sign_variations(chain, bound);
}

bool all_roots_real(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("all_roots_real of the zero polynomial");
  const IntPolynomial q = square_free_part(p);
  if (q.degree() < 1) return true;
  const auto chain = sturm_chain(q);
  const BigInt bound = cauchy_bound(q);
  const int count = sign_variations(chain, -bound) - sign_variations(chain, bound);
  return count == q.degree();
}

}  // namespace raypf
