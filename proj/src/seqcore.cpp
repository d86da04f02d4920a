#include "nestrec/seqcore.hpp"

#include <algorithm>

namespace nestrec {

FSeq::FSeq(std::vector<Value> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("FSeq needs at least one term");
  if (terms_.front() != 0) throw InputError("FSeq requires f(1) = 0");
}

FSeq FSeq::prefix(Index n) const {
  if (n < 1 || n > size()) throw InputError("prefix length out of range");
  return FSeq(std::vector<Value>(terms_.begin(), terms_.begin() + n));
}

QSeq::QSeq(std::vector<Value> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("QSeq needs at least one term");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto idx = static_cast<Value>(i + 1);
    if (terms_[i] < 1 || terms_[i] > idx)
      throw InputError("QSeq term q(" + std::to_string(idx) + ") = " +
                       std::to_string(terms_[i]) + " outside [1, index]");
  }
}

Value QSeq::max() const { return *std::max_element(terms_.begin(), terms_.end()); }

std::string to_string(DeathKind kind) {
  return kind == DeathKind::BelowOne ? "BelowOne" : "AboveIndex";
}

namespace detail {

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("q-value overflow");
  return out;
}

}  // namespace detail

GenOutcome q_from_f(const FSeq& f, Index n_max) {
  if (n_max > f.size())
    throw InputError("f has " + std::to_string(f.size()) + " terms, need " +
                     std::to_string(n_max));
  const auto t = f.terms();
  return detail::generate([t](Index i) { return t[static_cast<std::size_t>(i - 1)]; }, n_max);
}

GenOutcome q_from_f(const FSeq& f) { return q_from_f(f, f.size()); }

FSeq f_from_q(const QSeq& q) {
  const auto t = q.terms();
  std::vector<Value> f(t.size());
  f[0] = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const auto n = static_cast<Value>(i + 1);
    f[i] = t[i] - t[static_cast<std::size_t>(n - t[i - 1] - 1)];
  }
  return FSeq(std::move(f));
}

std::vector<Value> qprime(const QSeq& q) {
  const auto t = q.terms();
  std::vector<Value> out(t.size());
  out[0] = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const auto n = static_cast<Value>(i + 1);
    out[i] = t[static_cast<std::size_t>(n - t[i - 1] - 1)];
  }
  return out;
}

ValueRange f_bounds(Index n) {
  if (n < 1) throw InputError("f_bounds needs n >= 1");
  if (n == 1) return {0, 0};
  if (n == 2) return {0, 1};
  return {3 - n, n - 1};
}

ValueRange next_f_range(const FSeq& f) {
  const auto outcome = q_from_f(f);
  if (!outcome.survived())
    throw PreconditionError("f is not in F_n: q dies at " +
                            std::to_string(outcome.death->index));
  const auto& q = outcome.prefix;
  const Index n = q.size();
  const Value nested = q(n + 1 - q(n));
  return {1 - nested, n + 1 - nested};
}

bool is_slow(std::span<const Value> s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    const Value d = s[i] - s[i - 1];
    if (d != 0 && d != 1) return false;
  }
  return true;
}

}  // namespace nestrec
