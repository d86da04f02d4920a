#pragma once

// Negative extensions: a prefix q0 in Q_{n0} continued with f(n) <= -1
// must die, and no later than D(n0, B) with B = max q0.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nestrec/bigint.hpp"
#include "nestrec/seqcore.hpp"

namespace nestrec {

/// D(n0, B) = n0 + B(B+1)/2. Requires n0 >= 3 and 1 <= B <= n0.
Index death_bound(Index n0, Value B);

/// n_1..n_B with n_k = n_{k-1} + B - (k-1); the last one is death_bound.
std::vector<Index> nk_ladder(Index n0, Value B);

/// Runs q0 forward with f(n) = tail(n) for n > |q0| until death.
/// Throws std::logic_error if the run survives past `guard`.
Death extend_with_tail(const QSeq& q0, const std::function<Value(Index)>& tail,
                       Index guard = 1 << 20);

struct NegExtReport {
  Index n0 = 0;
  Value B_comp = 0;   // largest B among the maximizers
  Index D_comp = 0;   // latest death index
  BigInt N_D = 0;     // number of prefixes reaching D_comp
  Index D_formula = 0;
  std::map<Value, BigInt> maximizer_B;  // B -> number of maximizers
  BigInt sequences = 0;
  BigInt above_index_deaths = 0;  // expected 0
  BigInt bound_violations = 0;    // deaths later than D(n0, max q0); expected 0
};

struct NegExtOptions {
  unsigned jobs = 1;
  bool allow_long = false;  // required for n0 >= 11
};

/// Every q0 in Q_{n0} extended with f = -1. n0 must be in 4..12.
NegExtReport exhaustive_negext(Index n0, const NegExtOptions& options = {});

std::string negext_csv_header();
std::string negext_csv_row(const NegExtReport& report);

}  // namespace nestrec
