#pragma once

// Bounds on every q generated by an f in a cone l(n) <= f(n) <= u(n).
//
// bound_interval is the fast interval algorithm (L, U); bound_sets is the
// set-valued original; actual_sets is the brute-force ground truth A(n).

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nestrec/rational.hpp"
#include "nestrec/seqcore.hpp"

namespace nestrec {

struct ConeSpec {
  std::string name;
  std::function<Value(Index)> lower;
  std::function<Value(Index)> upper;
  Index horizon = std::numeric_limits<Index>::max();  // last index where l, u are defined
};

/// Cone from explicit lists l(1..m), u(1..m).
ConeSpec table_cone(std::string name, std::vector<Value> lower, std::vector<Value> upper);
/// floor(a n) <= f(n) <= floor(b n).
ConeSpec linear_cone(const Rational& a, const Rational& b);
/// floor(sqrt(a n)) <= f(n) <= floor(sqrt(b n)).
ConeSpec sqrt_inside_cone(const Rational& a, const Rational& b);
/// floor(a sqrt(n)) <= f(n) <= floor(b sqrt(n)).
ConeSpec sqrt_outside_cone(const Rational& a, const Rational& b);
/// floor(a n - b sqrt(n)) <= f(n) <= floor(a n + b sqrt(n)).
ConeSpec affine_sqrt_cone(const Rational& a, const Rational& b);

/// Throws InputError unless l(1) = u(1) = 0 and l(n) <= u(n) on 1..n_max.
void validate_cone(const ConeSpec& cone, Index n_max);

/// Parses "linear:a,b", "sqrt-in:a,b", "sqrt-out:a,b", "affine-sqrt:a,b"
/// or "table:l1,l2,...;u1,u2,..." with exact rational parameters.
ConeSpec parse_cone(const std::string& text);

/// Reads {"name", "kind", "params": ["p/q", ...]} or, for kind "table",
/// {"lower": [...], "upper": [...]}.
ConeSpec parse_cone_json(const std::string& json_text);

struct BoundsDeath {
  Index index = 0;
  DeathKind kind = DeathKind::AboveIndex;  // AboveIndex wins when both happen
  bool both = false;
};

struct BoundsTrace {
  std::vector<Value> L;  // L[0] = L(1); includes the values at the death index
  std::vector<Value> U;
  std::optional<BoundsDeath> death;

  Index size() const { return static_cast<Index>(L.size()); }
  Value lower(Index n) const { return L.at(static_cast<std::size_t>(n - 1)); }
  Value upper(Index n) const { return U.at(static_cast<std::size_t>(n - 1)); }
  /// Last index at which the bounds are alive.
  Index last_alive() const { return death ? death->index - 1 : size(); }
};

/// Append-only range minimum and maximum, O(log n) append and O(1) query.
class RangeExtrema {
 public:
  void push(Value v);
  /// Extrema over positions lo..hi, 1-based and inclusive.
  Value min(Index lo, Index hi) const;
  Value max(Index lo, Index hi) const;
  Index size() const { return levels_min_.empty() ? 0 : static_cast<Index>(levels_min_[0].size()); }

 private:
  std::vector<std::vector<std::int32_t>> levels_min_;
  std::vector<std::vector<std::int32_t>> levels_max_;
};

/// L(k+1) = l(k+1) + min L(j), U(k+1) = u(k+1) + max U(j) over
/// j in k+1-U(k) .. k+1-L(k), stopping at the first death.
BoundsTrace bound_interval(const ConeSpec& cone, Index n_max);

using IntSet = std::vector<Value>;  // sorted, no duplicates

struct SetTrace {
  std::vector<IntSet> sets;  // sets[0] = B_o(1); includes the dying set
  std::optional<BoundsDeath> death;
};

constexpr Index kDefaultSetCap = 64;

/// B_o(k+1) = {l(k+1):u(k+1)} + union of B_o(j) over j in {k+1} - B_o(k).
SetTrace bound_sets(const ConeSpec& cone, Index n_max, Index cap = kDefaultSetCap);

constexpr Index kActualSetsMaxN = 14;
constexpr std::uint64_t kActualSetsNodeGuard = 50'000'000;

/// A(n): values q(n) over all f in the cone with q alive at n.
/// Sets past the point where every q has died are empty.
std::vector<IntSet> actual_sets(const ConeSpec& cone, Index n_max,
                                std::uint64_t node_guard = kActualSetsNodeGuard);

/// "n,L,U" rows over the computed trace.
std::string bounds_csv(const BoundsTrace& trace, bool header = true);

struct FitResult {
  double coefficient = 0;
  double exponent = 0;
  double rms_residual = 0;  // in log space
  Index lo = 0;
  Index hi = 0;
};

/// Least squares of ln v(n) on ln n over n in lo..hi; values[0] is v(1).
FitResult fit_power_law(std::span<const Value> values, Index lo, Index hi);

std::string fit_to_json(const FitResult& fit);

struct WindowReport {
  bool ok = true;
  Index first_failure = 0;  // 0 when ok
  std::string side;         // "lower", "upper" or "dead"
  Value observed = 0;
  double bound = 0;
};

/// Checks lo_fn(n) <= L(n) and U(n) <= hi_fn(n) for n in lo..hi.
WindowReport verify_window(const BoundsTrace& trace, const std::function<double(Index)>& lo_fn,
                           const std::function<double(Index)>& hi_fn, Index lo, Index hi);

/// Exact variant with lo(n) = la n + lb sqrt(n), hi(n) = ha n + hb sqrt(n).
WindowReport verify_window_exact(const BoundsTrace& trace, const Rational& la, const Rational& lb,
                                 const Rational& ha, const Rational& hb, Index lo, Index hi);

}  // namespace nestrec
