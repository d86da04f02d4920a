#include "nestrec/counterexamples.hpp"

#include <cmath>

namespace nestrec {
namespace {

void require_even_d(Index d) {
  if (d < 2 || d % 2 != 0) throw InputError("d must be an even integer >= 2");
}

int checked_star(const StarPolicy& steer, Index index, std::optional<Value> nested) {
  const int star = steer(index, nested);
  if (star != 0 && star != 1) throw InputError("star policy must return 0 or 1");
  return star;
}

// Walks f_d and q = Q(f_d) together. Stops after n terms, or at death when
// n is unbounded (n < 0).
struct FdWalk {
  Index d;
  const StarPolicy& steer;
  std::vector<Value> f;
  std::vector<Value> q;
  std::vector<int> stars;
  std::optional<Death> death;

  Value next_f(Index k) {
    if (k % 2 == 0) return k / d;
    if (!is_star_position(d, k)) return 0;
    std::optional<Value> nested;
    if (!death) nested = q[static_cast<std::size_t>(k - q.back() - 1)];
    const int star = checked_star(steer, k, nested);
    stars.push_back(star);
    return star;
  }

  void step(Index k) {
    const Value fk = next_f(k);
    f.push_back(fk);
    if (death) return;
    if (k == 1) {
      q.push_back(1);
      return;
    }
    const Value candidate = q[static_cast<std::size_t>(k - q.back() - 1)] + fk;
    if (candidate < 1)
      death = Death{k, DeathKind::BelowOne, candidate};
    else if (candidate > k)
      death = Death{k, DeathKind::AboveIndex, candidate};
    else
      q.push_back(candidate);
  }
};

}  // namespace

int default_star(Index /*index*/, std::optional<Value> nested) {
  if (!nested) return 0;
  const Value want = 2 - *nested;
  return want < 0 ? 0 : (want > 1 ? 1 : static_cast<int>(want));
}

bool is_star_position(Index d, Index index) { return index % 2 == 1 && index > 3 * d; }

FSeq build_fd(Index d, Index n, const StarPolicy& steer) {
  require_even_d(d);
  if (n < 1) throw InputError("n must be positive");
  FdWalk walk{d, steer, {}, {}, {}, std::nullopt};
  for (Index k = 1; k <= n; ++k) walk.step(k);
  return FSeq(std::move(walk.f));
}

SteeredRun steered_run(Index d, const StarPolicy& steer) {
  require_even_d(d);
  FdWalk walk{d, steer, {}, {}, {}, std::nullopt};
  // r(l d) grows like l^2 d / 4, so death comes well before this guard.
  const Index guard = 64 * d * d + 1024;
  for (Index k = 1; !walk.death; ++k) {
    if (k > guard) throw std::logic_error("steered f_d run did not die");
    walk.step(k);
  }
  if (walk.death->kind != DeathKind::AboveIndex)
    throw std::logic_error("steered f_d run died below one");
  SteeredRun run;
  run.d = d;
  run.f = FSeq(std::move(walk.f));
  run.q_prefix = QSeq(std::move(walk.q));
  run.kill_index = walk.death->index;
  run.kill_value = walk.death->candidate;
  run.star_choices = std::move(walk.stars);
  return run;
}

Index kill_index(Index d) { return steered_run(d).kill_index; }

Value r_closed_form(Index ell, Index d) {
  require_even_d(d);
  if (ell < 1) throw InputError("ell must be positive");
  if (ell == 1) return 2;
  if (ell == 2) return 3;
  const Rational r = Rational(ell + 1) * (Rational(1) + Rational((ell - 2) * d, 4));
  if (r.denominator() != 1) throw std::logic_error("r(l d) is not an integer");
  return r.numerator();
}

double x_estimate(Index d) {
  require_even_d(d);
  const double dd = static_cast<double>(d);
  return (5 * dd - 4 + std::sqrt((11 * dd - 4) * (3 * dd - 4))) / (2 * dd);
}

Value ceil_d_times_x(Index d) {
  require_even_d(d);
  // d x(d) = (c + sqrt(p)) / 2; smallest k with 2k - c >= sqrt(p).
  const Value c = 5 * d - 4;
  const Value p = (11 * d - 4) * (3 * d - 4);
  Value k = (c + isqrt(p)) / 2;
  auto covers = [&](Value k2) {
    const Value t = 2 * k2 - c;
    return t >= 0 && t * t >= p;
  };
  while (covers(k - 1)) --k;
  while (!covers(k)) ++k;
  return k;
}

FSeq cone1_witness(Index N) {
  if (N < 1) throw InputError("N must be positive");
  std::vector<Value> f;
  for (Index i = 1; i <= N; ++i) f.push_back(i - 1);
  f.push_back(N - 1);
  f.push_back(N + 1);
  return FSeq(std::move(f));
}

Rational cone1_epsilon_threshold(Index N) {
  if (N < 1) throw InputError("N must be positive");
  return Rational(1, N + 1);
}

bool in_linear_cone(const FSeq& f, const Rational& a, const Rational& b) {
  for (Index n = 1; n <= f.size(); ++n) {
    const Value upper = (b == Rational(1)) ? n - 1 : floor(b * n);
    if (f(n) < floor(a * n) || f(n) > upper) return false;
  }
  return true;
}

JumpCounterexample thm1_jump_counterexample(Index m) {
  if (m < 1) throw InputError("m must be positive");
  const Index n0 = 4 * m - 1;
  std::vector<Value> f;
  for (Index n = 1; n <= n0; ++n) f.push_back((n + 2) / 4);
  f.push_back(3 * (n0 + 1) / 4);
  FSeq seq(std::move(f));
  const auto outcome = q_from_f(seq);
  if (outcome.survived()) throw std::logic_error("jump counterexample survived");
  return {std::move(seq), *outcome.death};
}

}  // namespace nestrec
