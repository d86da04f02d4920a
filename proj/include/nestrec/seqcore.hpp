#pragma once

// Core of the nested recurrence q(n) = q(n - q(n-1)) + f(n), q(1) = 1.
//
// Every sequence is 1-based in the public API: f(1), q(1) are the first
// terms. Storage is a 0-based std::vector, exposed read-only through
// terms() for algorithms that want to iterate.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "nestrec/errors.hpp"

namespace nestrec {

using Index = std::int64_t;
using Value = std::int64_t;

/// Finite prefix of a driving sequence, f(1) = 0.
class FSeq {
 public:
  explicit FSeq(std::vector<Value> terms);

  Value operator()(Index i) const { return terms_.at(static_cast<std::size_t>(i - 1)); }
  Index size() const { return static_cast<Index>(terms_.size()); }
  std::span<const Value> terms() const { return terms_; }

  void append(Value v) { terms_.push_back(v); }
  FSeq prefix(Index n) const;

  friend bool operator==(const FSeq&, const FSeq&) = default;

 private:
  std::vector<Value> terms_;
};

/// Finite prefix of a generated sequence: q(1) = 1 and 1 <= q(i) <= i.
class QSeq {
 public:
  explicit QSeq(std::vector<Value> terms);

  Value operator()(Index i) const { return terms_.at(static_cast<std::size_t>(i - 1)); }
  Index size() const { return static_cast<Index>(terms_.size()); }
  std::span<const Value> terms() const { return terms_; }
  Value max() const;

  friend bool operator==(const QSeq&, const QSeq&) = default;

 private:
  std::vector<Value> terms_;
};

enum class DeathKind { BelowOne, AboveIndex };

std::string to_string(DeathKind kind);

/// First index where the candidate value left [1, index].
struct Death {
  Index index = 0;
  DeathKind kind = DeathKind::BelowOne;
  Value candidate = 0;

  friend bool operator==(const Death&, const Death&) = default;
};

struct GenOutcome {
  QSeq prefix;
  std::optional<Death> death;

  bool survived() const { return !death.has_value(); }
};

using FFunction = std::function<Value(Index)>;

namespace detail {

Value checked_add(Value a, Value b);

template <class Fn>
GenOutcome generate(Fn&& f, Index n_max) {
  if (n_max < 1) throw InputError("n_max must be positive");
  if (f(Index{1}) != 0) throw InputError("f(1) must be 0");
  std::vector<Value> q;
  q.reserve(static_cast<std::size_t>(n_max));
  q.push_back(1);
  for (Index n = 2; n <= n_max; ++n) {
    const Value prev = q.back();
    const Value nested = q[static_cast<std::size_t>(n - prev - 1)];
    const Value candidate = checked_add(nested, f(n));
    if (candidate < 1)
      return {QSeq(std::move(q)), Death{n, DeathKind::BelowOne, candidate}};
    if (candidate > n)
      return {QSeq(std::move(q)), Death{n, DeathKind::AboveIndex, candidate}};
    q.push_back(candidate);
  }
  return {QSeq(std::move(q)), std::nullopt};
}

}  // namespace detail

/// Runs the recurrence up to n_max, stopping at the first death.
/// Throws InputError if f(1) != 0 or f has fewer than n_max terms.
GenOutcome q_from_f(const FSeq& f, Index n_max);
GenOutcome q_from_f(const FSeq& f);

/// Same, with f given as an index -> value callback defined on 1..n_max.
template <class Fn>
  requires std::is_invocable_r_v<Value, Fn, Index>
GenOutcome q_from_f_fn(Fn&& f, Index n_max) {
  return detail::generate(std::forward<Fn>(f), n_max);
}

/// f(1) = 0, f(n) = q(n) - q(n - q(n-1)).
FSeq f_from_q(const QSeq& q);

/// q'(1) = 1, q'(n) = q(n - q(n-1)). Returned 0-based: element i is q'(i+1).
std::vector<Value> qprime(const QSeq& q);

struct ValueRange {
  Value low = 0;
  Value high = 0;

  Value width() const { return high - low + 1; }
  bool contains(Value v) const { return low <= v && v <= high; }
  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

/// Bounds every f in F obeys at index n: (0,0), (0,1), then (3-n, n-1).
ValueRange f_bounds(Index n);

/// The n+1 admissible values of f(n+1) for f in F_n:
/// {1 - q'(n+1), ..., n+1 - q'(n+1)}. Throws PreconditionError if f is not in F_n.
ValueRange next_f_range(const FSeq& f);

/// True iff every consecutive difference is 0 or 1.
bool is_slow(std::span<const Value> s);

}  // namespace nestrec
