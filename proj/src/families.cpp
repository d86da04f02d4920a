#include "nestrec/families.hpp"

#include <algorithm>

#include "nestrec/random.hpp"

namespace nestrec {
namespace {

void require_length(Index n) {
  if (n < 1) throw InputError("sequence length must be positive");
}

}  // namespace

YSeq::YSeq(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty() || bits_.front() != 1) throw InputError("YSeq requires y(1) = 1");
  for (int b : bits_)
    if (b != 0 && b != 1) throw InputError("YSeq entries must be 0 or 1");
}

YSeq YSeq::periodic(Index m, Index n) {
  if (m < 1 || n < 1) throw InputError("periodic YSeq needs m >= 1, n >= 1");
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (Index k = 1; k <= n; ++k) bits[static_cast<std::size_t>(k - 1)] = (k % m == 1 % m) ? 1 : 0;
  return YSeq(std::move(bits));
}

FSeq slow_alpha_f(const Rational& alpha, Index n) {
  if (alpha < Rational(1, 2) || alpha >= 1) throw InputError("alpha must lie in [1/2, 1)");
  require_length(n);
  std::vector<Value> f(static_cast<std::size_t>(n));
  for (Index k = 1; k <= n; ++k) {
    const Rational prev = alpha * (k - 1);
    const Rational inner = prev - alpha * floor(prev);
    f[static_cast<std::size_t>(k - 1)] = floor(alpha * k) - floor(inner);
  }
  return FSeq(std::move(f));
}

FSeq delta_step_f(Value delta, Index n) {
  if (delta < 1) throw InputError("delta must be positive");
  require_length(n);
  std::vector<Value> f(static_cast<std::size_t>(n));
  for (Index k = 1; k <= n; ++k) f[static_cast<std::size_t>(k - 1)] = delta * ((k - 1) / delta);
  return FSeq(std::move(f));
}

FSeq witness_lower_f(Index n) {
  if (n < 4) throw InputError("lower witness needs n >= 4");
  std::vector<Value> f(static_cast<std::size_t>(n - 3), 0);
  f.push_back(n - 3);
  f.push_back(1);
  f.push_back(3 - n);
  return FSeq(std::move(f));
}

FSeq witness_upper_f(Index n) {
  require_length(n);
  std::vector<Value> f(static_cast<std::size_t>(n));
  for (Index k = 1; k <= n; ++k) f[static_cast<std::size_t>(k - 1)] = k - 1;
  return FSeq(std::move(f));
}

FSeq sample_powtwo_f(const std::vector<bool>& choices, Index n) {
  require_length(n);
  if (static_cast<Index>(choices.size()) != n - 1)
    throw InputError("powtwo needs one choice per index 2..n");
  std::vector<Value> f(static_cast<std::size_t>(n), 0);
  for (Index k = 2; k <= n; ++k)
    if (choices[static_cast<std::size_t>(k - 2)]) f[static_cast<std::size_t>(k - 1)] = k - 1;
  return FSeq(std::move(f));
}

FSeq sample_strip012_f(const FSeq& prefix, std::span<const Value> tail) {
  if (prefix.size() < 3) throw InputError("strip012 prefix needs at least 3 terms");
  for (Value v : tail)
    if (v < 0 || v > 2) throw InputError("strip012 tail entries must be in {0,1,2}");
  const auto head = q_from_f(prefix);
  if (!head.survived()) throw PreconditionError("strip012 prefix is not in F_n0");
  std::vector<Value> f(prefix.terms().begin(), prefix.terms().end());
  f.insert(f.end(), tail.begin(), tail.end());
  return FSeq(std::move(f));
}

ValueRange ladder_choice_range(Index ell, Index index) {
  if (ell < 3) throw InputError("ladder needs ell >= 3");
  const Index k = index - ell;
  if (k < 2) throw InputError("ladder choices start at index ell + 2");
  // q(ell+2) = 2 would just be the ladder with ell+1, so it is excluded.
  if (k == 2) return {1, ell - 1};
  return {k - 2, ell + k - 3};
}

FSeq sample_ladder_f(Index ell, std::span<const Value> choices, Index n) {
  if (ell < 3) throw InputError("ladder needs ell >= 3");
  require_length(n);
  const Index free = std::max<Index>(0, n - ell - 1);
  if (static_cast<Index>(choices.size()) != free)
    throw InputError("ladder needs one choice per index ell+2..n");
  std::vector<Value> f(static_cast<std::size_t>(n), 0);
  if (n >= 2) f[1] = 1;
  if (n >= 3) f[2] = 1;
  for (Index idx = ell + 2; idx <= n; ++idx) {
    const Value v = choices[static_cast<std::size_t>(idx - ell - 2)];
    if (!ladder_choice_range(ell, idx).contains(v))
      throw InputError("ladder choice at index " + std::to_string(idx) + " out of range");
    f[static_cast<std::size_t>(idx - 1)] = v;
  }
  return FSeq(std::move(f));
}

std::vector<std::vector<Value>> ydriven_sets(const YSeq& y, Index n) {
  if (n > y.size()) throw InputError("y shorter than n");
  std::vector<std::vector<Value>> sets;
  sets.reserve(static_cast<std::size_t>(n));
  std::vector<Index> ones;
  for (Index k = 1; k <= n; ++k) {
    if (y(k) == 1) ones.push_back(k);
    std::vector<Value> s{1};
    if (y(k) == 0) {
      for (Index j : ones) s.push_back(k + 1 - j);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

FSeq ydriven_f(const YSeq& y, std::span<const Value> q_picks) {
  const auto n = static_cast<Index>(q_picks.size());
  require_length(n);
  if (n > y.size()) throw InputError("y shorter than n");
  std::vector<Value> f(static_cast<std::size_t>(n));
  for (Index k = 1; k <= n; ++k) {
    // p is in s(k) iff p = 1, or y(k) = 0 and p = k+1-j for some j <= k with y(j) = 1.
    const Value p = q_picks[static_cast<std::size_t>(k - 1)];
    const bool ok = p == 1 || (y(k) == 0 && p >= 1 && p <= k && y(k + 1 - p) == 1);
    if (!ok) throw InputError("q pick at index " + std::to_string(k) + " not in s(k)");
    f[static_cast<std::size_t>(k - 1)] = p - 1;
  }
  return FSeq(std::move(f));
}

BigInt ydriven_count(const YSeq& y, Index n) {
  if (n > y.size()) throw InputError("y shorter than n");
  BigInt count = 1;
  Value ones = 0;
  for (Index i = 1; i <= n; ++i) {
    ones += y(i);
    count *= 1 + (1 - y(i)) * ones;
  }
  return count;
}

namespace {

struct Sampler {
  Index n;
  SeededSource& rng;

  FSeq operator()(const family::SlowAlpha& s) const { return slow_alpha_f(s.alpha, n); }
  FSeq operator()(const family::DeltaStep& s) const { return delta_step_f(s.delta, n); }
  FSeq operator()(const family::LowerWitness& s) const { return witness_lower_f(s.n); }
  FSeq operator()(const family::UpperWitness& s) const { return witness_upper_f(s.n); }

  FSeq operator()(const family::PowTwo&) const {
    std::vector<bool> choices(static_cast<std::size_t>(std::max<Index>(0, n - 1)));
    for (std::size_t i = 0; i < choices.size(); ++i) choices[i] = rng.coin();
    return sample_powtwo_f(choices, n);
  }

  FSeq operator()(const family::Strip012&) const {
    std::vector<Value> f(static_cast<std::size_t>(n), 0);
    if (n >= 2) f[1] = rng.uniform(0, 1);
    for (Index k = 3; k <= n; ++k) f[static_cast<std::size_t>(k - 1)] = rng.uniform(0, 2);
    return FSeq(std::move(f));
  }

  FSeq operator()(const family::Ladder& s) const {
    std::vector<Value> choices;
    for (Index idx = s.ell + 2; idx <= n; ++idx) {
      const auto r = ladder_choice_range(s.ell, idx);
      choices.push_back(rng.uniform(r.low, r.high));
    }
    return sample_ladder_f(s.ell, choices, n);
  }

  FSeq operator()(const family::YDriven& s) const {
    if (n > s.y.size()) throw InputError("y shorter than n");
    std::vector<Index> ones;
    std::vector<Value> picks;
    picks.reserve(static_cast<std::size_t>(n));
    for (Index k = 1; k <= n; ++k) {
      if (s.y(k) == 1) {
        ones.push_back(k);
        picks.push_back(1);
        continue;
      }
      const auto i = rng.uniform(0, static_cast<std::int64_t>(ones.size()));
      picks.push_back(i == 0 ? 1 : k + 1 - ones[static_cast<std::size_t>(i - 1)]);
    }
    return ydriven_f(s.y, picks);
  }
};

}  // namespace

FSeq sample_family(const FamilySpec& spec, Index n, std::uint64_t seed) {
  require_length(n);
  SeededSource rng(seed);
  return std::visit(Sampler{n, rng}, spec);
}

}  // namespace nestrec
