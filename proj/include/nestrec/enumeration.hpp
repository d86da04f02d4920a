#pragma once

// Exhaustive enumeration of F_n through the q-side bijection, the tree
// of F_n, membership and the count of potential members.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nestrec/bigint.hpp"
#include "nestrec/seqcore.hpp"

namespace nestrec {

constexpr Index kDefaultEnumerationLimit = 10;

/// Lazy walk over Q_n in lexicographic order, yielding F(q) for each q.
class FEnumerator {
 public:
  /// Throws InputError if n > limit; pass a larger limit explicitly.
  explicit FEnumerator(Index n, Index limit = kDefaultEnumerationLimit);

  /// Next member of F_n, or nullopt once all n! have been produced.
  std::optional<FSeq> next();

  /// The q behind the member most recently returned by next().
  const std::vector<Value>& current_q() const { return q_; }

 private:
  Index n_;
  std::vector<Value> q_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls fn on every member of F_n; same order and limit as FEnumerator.
void for_each_F(Index n, const std::function<void(const FSeq&)>& fn,
                Index limit = kDefaultEnumerationLimit);

/// Calls fn on every sequence within f_bounds at each index (phi(n) of them).
void for_each_potential(Index n, const std::function<void(std::span<const Value>)>& fn);

/// True iff f(1) = 0 and q_from_f survives all of f.
bool is_member_F(std::span<const Value> f);
bool is_member_F(const FSeq& f);

/// phi(n) = (2n-3)! / (2^(n-3) (n-2)!) for n >= 3.
BigInt potential_count(Index n);

/// Product of the f_bounds widths over 1..n; equals phi(n) for n >= 3.
BigInt potential_count_by_widths(Index n);

struct FTreeNode {
  Value value = 0;
  Index depth = 1;
  std::vector<FTreeNode> children;
};

/// Tree of F_n: root f(1)=0 at depth 1, children ordered by q. n <= 8.
FTreeNode build_tree(Index n);

/// Graphviz rendering of build_tree(n). n <= 6.
std::string export_tree_dot(Index n);

/// "n,n_factorial,phi" rows for n = 3..n_max.
std::string counts_csv(Index n_max, bool header = true);

}  // namespace nestrec
