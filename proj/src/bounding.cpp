#include "nestrec/bounding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace nestrec {

ConeSpec table_cone(std::string name, std::vector<Value> lower, std::vector<Value> upper) {
  if (lower.empty() || lower.size() != upper.size())
    throw InputError("table cone needs two non-empty lists of equal length");
  const auto horizon = static_cast<Index>(lower.size());
  auto at = [](std::vector<Value> v) {
    return [v = std::move(v)](Index n) { return v.at(static_cast<std::size_t>(n - 1)); };
  };
  return {std::move(name), at(std::move(lower)), at(std::move(upper)), horizon};
}

ConeSpec linear_cone(const Rational& a, const Rational& b) {
  return {"linear:" + to_string(a) + "," + to_string(b),
          [a](Index n) { return floor(a * n); }, [b](Index n) { return floor(b * n); }};
}

ConeSpec sqrt_inside_cone(const Rational& a, const Rational& b) {
  if (a < 0 || b < 0) throw InputError("sqrt-in parameters must be nonnegative");
  return {"sqrt-in:" + to_string(a) + "," + to_string(b),
          [a](Index n) { return floor_sqrt_scaled(a, n); },
          [b](Index n) { return floor_sqrt_scaled(b, n); }};
}

ConeSpec sqrt_outside_cone(const Rational& a, const Rational& b) {
  return {"sqrt-out:" + to_string(a) + "," + to_string(b),
          [a](Index n) { return floor_affine_sqrt(Rational(0), a, n); },
          [b](Index n) { return floor_affine_sqrt(Rational(0), b, n); }};
}

ConeSpec affine_sqrt_cone(const Rational& a, const Rational& b) {
  return {"affine-sqrt:" + to_string(a) + "," + to_string(b),
          [a, b](Index n) { return floor_affine_sqrt(a, -b, n); },
          [a, b](Index n) { return floor_affine_sqrt(a, b, n); }};
}

namespace {

void check_horizon(const ConeSpec& cone, Index n_max) {
  if (n_max < 1) throw InputError("n_max must be positive");
  if (n_max > cone.horizon)
    throw InputError("cone '" + cone.name + "' is only defined up to n = " +
                     std::to_string(cone.horizon));
}

std::pair<Value, Value> cone_at(const ConeSpec& cone, Index n) {
  const Value l = cone.lower(n);
  const Value u = cone.upper(n);
  if (l > u) throw InputError("cone '" + cone.name + "' has l(n) > u(n) at n = " + std::to_string(n));
  if (n == 1 && (l != 0 || u != 0)) throw InputError("cone must have l(1) = u(1) = 0");
  return {l, u};
}

std::optional<BoundsDeath> judge(Index n, Value low, Value high) {
  const bool above = high > n;
  const bool below = low < 1;
  if (!above && !below) return std::nullopt;
  return BoundsDeath{n, above ? DeathKind::AboveIndex : DeathKind::BelowOne, above && below};
}

std::int32_t narrow(Value v) {
  if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
    throw OverflowError("bound value does not fit the range table");
  return static_cast<std::int32_t>(v);
}

}  // namespace

void validate_cone(const ConeSpec& cone, Index n_max) {
  check_horizon(cone, n_max);
  for (Index n = 1; n <= n_max; ++n) cone_at(cone, n);
}

void RangeExtrema::push(Value v) {
  const std::int32_t x = narrow(v);
  if (levels_min_.empty()) {
    levels_min_.emplace_back();
    levels_max_.emplace_back();
  }
  levels_min_[0].push_back(x);
  levels_max_[0].push_back(x);
  const std::size_t n = levels_min_[0].size();
  // Level k holds blocks of length 2^k; the new element completes the
  // block that starts at n - 2^k.
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    if (levels_min_.size() <= k) {
      levels_min_.emplace_back();
      levels_max_.emplace_back();
    }
    const std::size_t start = n - (std::size_t{1} << k);
    const std::size_t mid = start + (std::size_t{1} << (k - 1));
    levels_min_[k].push_back(std::min(levels_min_[k - 1][start], levels_min_[k - 1][mid]));
    levels_max_[k].push_back(std::max(levels_max_[k - 1][start], levels_max_[k - 1][mid]));
  }
}

Value RangeExtrema::min(Index lo, Index hi) const {
  if (lo < 1 || hi < lo || hi > size()) throw std::out_of_range("range query out of bounds");
  const auto len = static_cast<std::size_t>(hi - lo + 1);
  const int k = std::bit_width(len) - 1;
  const auto a = static_cast<std::size_t>(lo - 1);
  const auto b = static_cast<std::size_t>(hi) - (std::size_t{1} << k);
  return std::min(levels_min_[static_cast<std::size_t>(k)][a], levels_min_[static_cast<std::size_t>(k)][b]);
}

Value RangeExtrema::max(Index lo, Index hi) const {
  if (lo < 1 || hi < lo || hi > size()) throw std::out_of_range("range query out of bounds");
  const auto len = static_cast<std::size_t>(hi - lo + 1);
  const int k = std::bit_width(len) - 1;
  const auto a = static_cast<std::size_t>(lo - 1);
  const auto b = static_cast<std::size_t>(hi) - (std::size_t{1} << k);
  return std::max(levels_max_[static_cast<std::size_t>(k)][a], levels_max_[static_cast<std::size_t>(k)][b]);
}

BoundsTrace bound_interval(const ConeSpec& cone, Index n_max) {
  check_horizon(cone, n_max);
  cone_at(cone, 1);
  BoundsTrace trace;
  trace.L.reserve(static_cast<std::size_t>(n_max));
  trace.U.reserve(static_cast<std::size_t>(n_max));
  trace.L.push_back(1);
  trace.U.push_back(1);
  RangeExtrema lows, highs;
  lows.push(1);
  highs.push(1);
  for (Index k = 1; k < n_max; ++k) {
    const Index lo = k + 1 - trace.U.back();
    const Index hi = k + 1 - trace.L.back();
    const auto [l, u] = cone_at(cone, k + 1);
    const Value L = l + lows.min(lo, hi);
    const Value U = u + highs.max(lo, hi);
    trace.L.push_back(L);
    trace.U.push_back(U);
    if ((trace.death = judge(k + 1, L, U))) break;
    lows.push(L);
    highs.push(U);
  }
  return trace;
}

SetTrace bound_sets(const ConeSpec& cone, Index n_max, Index cap) {
  check_horizon(cone, n_max);
  if (n_max > cap)
    throw InputError("bound_sets is capped at n = " + std::to_string(cap) + "; raise the cap explicitly");
  cone_at(cone, 1);
  SetTrace trace;
  trace.sets.push_back({1});
  for (Index k = 1; k < n_max; ++k) {
    std::vector<char> nested(static_cast<std::size_t>(k) + 1, 0);
    for (Value b : trace.sets.back()) {
      const Index j = k + 1 - b;
      for (Value v : trace.sets[static_cast<std::size_t>(j - 1)]) nested[static_cast<std::size_t>(v)] = 1;
    }
    const auto [l, u] = cone_at(cone, k + 1);
    IntSet next;
    for (Value v = 1; v <= k; ++v) {
      if (!nested[static_cast<std::size_t>(v)]) continue;
      for (Value f = l; f <= u; ++f) next.push_back(v + f);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    trace.sets.push_back(next);
    if ((trace.death = judge(k + 1, next.front(), next.back()))) break;
  }
  return trace;
}

std::vector<IntSet> actual_sets(const ConeSpec& cone, Index n_max, std::uint64_t node_guard) {
  check_horizon(cone, n_max);
  if (n_max > kActualSetsMaxN)
    throw InputError("actual_sets supports n <= " + std::to_string(kActualSetsMaxN));
  std::vector<std::pair<Value, Value>> range(static_cast<std::size_t>(n_max) + 1);
  for (Index n = 1; n <= n_max; ++n) range[static_cast<std::size_t>(n)] = cone_at(cone, n);

  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n_max) + 1);
  for (Index n = 1; n <= n_max; ++n) seen[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
  seen[1][1] = 1;
  std::vector<Value> q{0, 1};
  std::uint64_t nodes = 0;
  std::function<void(Index)> dfs = [&](Index n) {
    if (n > n_max) return;
    const Value nested = q[static_cast<std::size_t>(n - q.back())];
    const auto [l, u] = range[static_cast<std::size_t>(n)];
    for (Value f = l; f <= u; ++f) {
      const Value v = nested + f;
      if (v < 1 || v > n) continue;
      if (++nodes > node_guard) throw InputError("actual_sets exceeded its node guard");
      seen[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)] = 1;
      q.push_back(v);
      dfs(n + 1);
      q.pop_back();
    }
  };
  dfs(2);

  std::vector<IntSet> out;
  for (Index n = 1; n <= n_max; ++n) {
    IntSet s;
    for (Value v = 1; v <= n; ++v)
      if (seen[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)]) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

std::string bounds_csv(const BoundsTrace& trace, bool header) {
  std::ostringstream out;
  if (header) out << "n,L,U\n";
  for (Index n = 1; n <= trace.size(); ++n) out << n << ',' << trace.lower(n) << ',' << trace.upper(n) << '\n';
  return out.str();
}

namespace {

WindowReport window_check(const BoundsTrace& trace, Index lo, Index hi,
                          const std::function<bool(Index, Value)>& lower_ok,
                          const std::function<bool(Index, Value)>& upper_ok,
                          const std::function<double(Index)>& lo_val,
                          const std::function<double(Index)>& hi_val) {
  if (lo < 1 || hi < lo) throw InputError("window range must satisfy 1 <= lo <= hi");
  for (Index n = lo; n <= hi; ++n) {
    if (n > trace.last_alive()) return {false, n, "dead", 0, 0};
    if (!lower_ok(n, trace.lower(n))) return {false, n, "lower", trace.lower(n), lo_val(n)};
    if (!upper_ok(n, trace.upper(n))) return {false, n, "upper", trace.upper(n), hi_val(n)};
  }
  return {};
}

}  // namespace

WindowReport verify_window(const BoundsTrace& trace, const std::function<double(Index)>& lo_fn,
                           const std::function<double(Index)>& hi_fn, Index lo, Index hi) {
  return window_check(
      trace, lo, hi, [&](Index n, Value L) { return lo_fn(n) <= static_cast<double>(L); },
      [&](Index n, Value U) { return static_cast<double>(U) <= hi_fn(n); }, lo_fn, hi_fn);
}

WindowReport verify_window_exact(const BoundsTrace& trace, const Rational& la, const Rational& lb,
                                 const Rational& ha, const Rational& hb, Index lo, Index hi) {
  auto eval = [](const Rational& a, const Rational& b) {
    return [=](Index n) { return to_double(a) * n + to_double(b) * std::sqrt(static_cast<double>(n)); };
  };
  return window_check(
      trace, lo, hi, [&](Index n, Value L) { return at_least_affine_sqrt(Rational(L), la, lb, n); },
      [&](Index n, Value U) { return at_most_affine_sqrt(Rational(U), ha, hb, n); }, eval(la, lb),
      eval(ha, hb));
}

}  // namespace nestrec
