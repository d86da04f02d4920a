#pragma once

// Constructive subsets of F: parametric generators, choice-driven samplers
// and exact member counts.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "nestrec/bigint.hpp"
#include "nestrec/rational.hpp"
#include "nestrec/seqcore.hpp"

namespace nestrec {

/// 0/1 sequence with y(1) = 1 driving the q'(n) = 1 construction.
class YSeq {
 public:
  explicit YSeq(std::vector<int> bits);

  /// y(k) = 1 iff k = 1 (mod m).
  static YSeq periodic(Index m, Index n);

  int operator()(Index i) const { return bits_.at(static_cast<std::size_t>(i - 1)); }
  Index size() const { return static_cast<Index>(bits_.size()); }

 private:
  std::vector<int> bits_;
};

namespace family {
struct SlowAlpha { Rational alpha; };
struct DeltaStep { Value delta; };
struct PowTwo {};
struct Strip012 {};
struct Ladder { Index ell; };
struct YDriven { YSeq y; };
struct LowerWitness { Index n; };
struct UpperWitness { Index n; };
}  // namespace family

using FamilySpec =
    std::variant<family::SlowAlpha, family::DeltaStep, family::PowTwo, family::Strip012,
                 family::Ladder, family::YDriven, family::LowerWitness, family::UpperWitness>;

/// f(k) = floor(a k) - floor(a(k-1) - a floor(a(k-1))); Q(f)(k) = 1 + floor(a k).
/// Requires 1/2 <= alpha < 1.
FSeq slow_alpha_f(const Rational& alpha, Index n);

/// f(k) = delta * floor((k-1)/delta); Q(f)(k) = 1 + f(k).
FSeq delta_step_f(Value delta, Index n);

/// (0,...,0, n-3, 1, 3-n): attains the lower bound 3-n at index n. n >= 4.
FSeq witness_lower_f(Index n);

/// f(k) = k - 1: attains the upper bound at every index.
FSeq witness_upper_f(Index n);

/// One choice per index 2..n: true picks k-1, false picks 0.
FSeq sample_powtwo_f(const std::vector<bool>& choices, Index n);

/// Prefix in F_{n0} (n0 >= 3) followed by a tail with entries in {0,1,2}.
FSeq sample_strip012_f(const FSeq& prefix, std::span<const Value> tail);

/// Admissible f(index) for the ladder family, index >= ell + 2.
ValueRange ladder_choice_range(Index ell, Index index);

/// Ladder family: fixed (0,1,1,0,...,0) through index ell+1, then one
/// choice per index ell+2..n from ladder_choice_range.
FSeq sample_ladder_f(Index ell, std::span<const Value> choices, Index n);

/// s(k) = {1} if y(k) = 1, else {1} u {k+1-j : y(j) = 1, j <= k}; each set sorted.
std::vector<std::vector<Value>> ydriven_sets(const YSeq& y, Index n);

/// f(k) = q(k) - 1 with q(k) picked from s(k). Throws if a pick is not in s(k).
FSeq ydriven_f(const YSeq& y, std::span<const Value> q_picks);

/// prod_{i<=n} (1 + (1 - y(i)) * sum_{j<=i} y(j)).
BigInt ydriven_count(const YSeq& y, Index n);

/// Draws one member of the family with choices taken from a seeded source.
/// Deterministic families ignore the seed.
FSeq sample_family(const FamilySpec& spec, Index n, std::uint64_t seed);

}  // namespace nestrec
