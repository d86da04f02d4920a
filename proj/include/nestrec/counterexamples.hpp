#pragma once

// Executable negative results: the steered f_d cone killer, its closed
// forms, the near-diagonal cone witness and the strip jump counterexample.

#include <functional>
#include <optional>
#include <vector>

#include "nestrec/rational.hpp"
#include "nestrec/seqcore.hpp"

namespace nestrec {

/// Chooses a star term of f_d. `nested` is q(index - q(index-1)), or
/// nullopt once q has already died. Must return 0 or 1.
using StarPolicy = std::function<int(Index index, std::optional<Value> nested)>;

/// Picks star = 2 - q(p) clamped to {0,1}, keeping odd-indexed q at 2.
int default_star(Index index, std::optional<Value> nested);

/// True for the odd indices >= 3d+1 carrying a free star term.
bool is_star_position(Index d, Index index);

/// First n terms of f_d: even k -> floor(k/d), odd k -> 0 or a star.
/// d must be even and >= 2.
FSeq build_fd(Index d, Index n, const StarPolicy& steer = default_star);

/// A steered f_d run up to the index K where q(K) > K.
struct SteeredRun {
  Index d = 0;
  FSeq f{std::vector<Value>{0}};
  QSeq q_prefix{std::vector<Value>{1}};  // q(1..K-1)
  Index kill_index = 0;                  // K
  Value kill_value = 0;                  // candidate q(K) > K
  std::vector<int> star_choices;         // in order of star positions
};

SteeredRun steered_run(Index d, const StarPolicy& steer = default_star);

/// K(d) for the default steering.
Index kill_index(Index d);

/// r(l d): 2 for l=1, 3 for l=2, (l+1)(1 + (l-2)d/4) for l >= 3.
/// Evaluated exactly; throws std::logic_error if the result is not an integer.
Value r_closed_form(Index ell, Index d);

/// x(d) = (5d - 4 + sqrt((11d-4)(3d-4))) / (2d), the estimate K(d) ~ d x(d).
double x_estimate(Index d);

/// ceil(d x(d)), computed exactly.
Value ceil_d_times_x(Index d);

/// f(i) = i-1 for i <= N, f(N+1) = N-1, f(N+2) = N+1.
FSeq cone1_witness(Index N);

/// cone1_witness(N) lies in C(1-eps, 1) for every eps above this value, 1/(N+1).
Rational cone1_epsilon_threshold(Index N);

/// floor(a n) <= f(n) <= floor(b n) for all n (upper bound n-1 when b = 1).
bool in_linear_cone(const FSeq& f, const Rational& a, const Rational& b);

struct JumpCounterexample {
  FSeq f;
  Death death;
};

/// n0 = 4m-1, f(n) = floor((n+2)/4) for n <= n0, f(n0+1) = floor(3(n0+1)/4).
/// q dies at n0+1 with candidate n0+2.
JumpCounterexample thm1_jump_counterexample(Index m);

}  // namespace nestrec
