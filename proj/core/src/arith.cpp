#include "petristruct/arith.hpp"

#include <algorithm>

#include "petristruct/errors.hpp"

namespace petristruct {

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw domain_error("dot: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + ")");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = boost::multiprecision::gcd(g, abs(x));
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(IntVector v) {
  const Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

bool all_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.sign() >= 0; });
}

bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector scale(const IntVector& v, const Integer& k) {
  IntVector r(v);
  for (auto& x : r) x *= k;
  return r;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

Integer floor(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num.sign() < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace petristruct
