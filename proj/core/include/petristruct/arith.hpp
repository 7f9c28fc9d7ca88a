#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace petristruct {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer vector in place (or transition) coordinate order.
using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major: rows[i][j].
using IntMatrix = std::vector<IntVector>;

Integer dot(const IntVector& a, const IntVector& b);

/// gcd of the absolute values of all entries; 0 for the zero vector.
Integer content(const IntVector& v);

/// Divides by the content. Zero vectors are returned unchanged.
IntVector primitive(IntVector v);

bool is_zero(const IntVector& v);
bool all_nonnegative(const IntVector& v);

/// Componentwise a <= b.
bool leq(const IntVector& a, const IntVector& b);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& v, const Integer& k);

/// "num/den" with den omitted when it is 1, e.g. "5/2", "3", "-1/3".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// "(a,b,c)".
std::string to_string(const IntVector& v);

Integer floor(const Rational& r);

}  // namespace petristruct
