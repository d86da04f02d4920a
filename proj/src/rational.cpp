#include "nestrec/rational.hpp"

#include <charconv>
#include <cmath>

#include "nestrec/errors.hpp"

namespace nestrec {
namespace {

__extension__ using i128 = __int128;

i128 checked_mul(i128 x, i128 y) {
  i128 out;
  if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("128-bit product overflow");
  return out;
}

// Sign of (x^2 - b^2 n) where x = xn/xd and b = bn/bd, all exact.
int compare_square(const Rational& x, const Rational& b, std::int64_t n) {
  const i128 lhs = checked_mul(checked_mul(x.numerator(), x.numerator()),
                               checked_mul(b.denominator(), b.denominator()));
  const i128 rhs = checked_mul(checked_mul(checked_mul(b.numerator(), b.numerator()), n),
                               checked_mul(x.denominator(), x.denominator()));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw InputError("not an exact rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::int64_t floor(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();  // always > 0 after normalisation
  auto q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational parse_rational(std::string_view text) {
  if (text.find_first_of(".eE") != std::string_view::npos)
    throw InputError("decimal input '" + std::string(text) +
                     "' rejected: write an exact fraction, e.g. 23/100 instead of 0.23");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw InputError("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<i128>(r) * r > x) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool at_least_affine_sqrt(const Rational& value, const Rational& a, const Rational& b,
                          std::int64_t n) {
  const Rational x = value - a * n;
  if (b >= 0) return x >= 0 && compare_square(x, b, n) >= 0;
  return x >= 0 || compare_square(x, b, n) <= 0;
}

bool at_most_affine_sqrt(const Rational& value, const Rational& a, const Rational& b,
                         std::int64_t n) {
  // value <= a n + b sqrt(n)  <=>  -value >= -a n - b sqrt(n)
  return at_least_affine_sqrt(-value, -a, -b, n);
}

std::int64_t floor_affine_sqrt(const Rational& a, const Rational& b, std::int64_t n) {
  if (n < 0) throw InputError("floor_affine_sqrt needs n >= 0");
  const double approx = to_double(a) * static_cast<double>(n) +
                        to_double(b) * std::sqrt(static_cast<double>(n));
  auto k = static_cast<std::int64_t>(std::floor(approx));
  while (!at_most_affine_sqrt(Rational(k), a, b, n)) --k;
  while (at_most_affine_sqrt(Rational(k + 1), a, b, n)) ++k;
  return k;
}

std::int64_t floor_sqrt_scaled(const Rational& c, std::int64_t n) {
  if (c < 0 || n < 0) throw InputError("floor_sqrt_scaled needs c >= 0 and n >= 0");
  return isqrt(floor(c * n));
}

}  // namespace nestrec
