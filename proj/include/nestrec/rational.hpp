#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace nestrec {

using Rational = boost::rational<std::int64_t>;

/// Largest integer <= r.
std::int64_t floor(const Rational& r);
/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

double to_double(const Rational& r);

/// Parses "p/q" or "p". Decimal text ("0.23") is rejected with a hint so
/// that floors of rational parameters stay exact.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// floor(sqrt(x)) for x >= 0.
std::int64_t isqrt(std::int64_t x);

/// Exact floor(a*n + b*sqrt(n)) for n >= 0.
std::int64_t floor_affine_sqrt(const Rational& a, const Rational& b, std::int64_t n);

/// Exact floor(sqrt(c*n)) for c >= 0, n >= 0.
std::int64_t floor_sqrt_scaled(const Rational& c, std::int64_t n);

/// Exact test of value >= a*n + b*sqrt(n) (and the <= counterpart).
bool at_least_affine_sqrt(const Rational& value, const Rational& a, const Rational& b,
                          std::int64_t n);
bool at_most_affine_sqrt(const Rational& value, const Rational& a, const Rational& b,
                         std::int64_t n);

}  // namespace nestrec
