#pragma once

// Two-nested-term recursions: Hofstadter's q_h and its mod-M dilution
//   q(n) = q(n - q(n-1)) + [q(n - q(n-2)) mod M],  q(1) = q(2) = 1.
// A run dies when either nested index leaves [1, n-1].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nestrec/seqcore.hpp"

namespace nestrec {

struct ModMRun {
  std::optional<Value> M;  // nullopt: no reduction (classic q_h)
  Index horizon = 0;
  bool survived = false;
  std::optional<Death> death;  // candidate holds the offending nested index
  std::vector<std::uint32_t> terms;  // q(1..), empty when not kept

  Value operator()(Index n) const { return terms.at(static_cast<std::size_t>(n - 1)); }
};

ModMRun hofstadter_q(Index n_max, bool keep_terms = true);

/// M must be >= 3.
ModMRun mod_m_run(Value M, Index n_max, bool keep_terms = true);

/// Runs M = m_lo..m_hi to the same horizon over `jobs` workers; results in M order.
std::vector<ModMRun> mod_m_scan(Value m_lo, Value m_hi, Index n_max, unsigned jobs = 1);

/// "M,horizon,survived,death_index" rows; death_index empty on survival.
std::string mod_m_csv(const std::vector<ModMRun>& runs, bool header = false);

}  // namespace nestrec
