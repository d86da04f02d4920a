#pragma once

// Constant calculators and hypothesis checkers for the strip theorem
// (linear strip around n/4) and the cone theorem (envelope a(n)), plus
// the computer-assisted certification of the square-root cone example.

#include <optional>
#include <string>
#include <vector>

#include "nestrec/bounding.hpp"
#include "nestrec/rational.hpp"
#include "nestrec/seqcore.hpp"

namespace nestrec {

// ---- strip theorem ----

struct Thm1Constants {
  Rational c;  // (1 + 4b) / 3
  Rational d;  // (12a - 3) / 4
};

/// Requires a > 1/4 and b > 0.
Thm1Constants thm1_constants(const Rational& a, const Rational& b);

struct Thm1Params {
  Rational a, b, c, d, eps;
  Index n0 = 0;
  std::string binding_eps_cap;  // "d/(4b)" or "5/24", whichever is smaller
};

/// Validates every hypothesis on (a, b, eps, n0) and fills in c, d.
/// Throws InputError naming the first violated one.
Thm1Params make_thm1_params(const Rational& a, const Rational& b, const Rational& eps, Index n0);

struct BoundFailure {
  Index index = 0;
  std::string side;  // "lower" or "upper"
};

struct PrefixReport {
  bool ok = true;
  std::vector<BoundFailure> failures;
};

/// (1/3 + eps) k <= q0(k) <= (3/4 - eps) k for n0/4 <= k <= n0.
PrefixReport check_thm1_prefix(const QSeq& q0, const Thm1Params& p);

/// n/3 + c <= q(n) <= 3n/4 - d for n0 <= n <= |q|.
PrefixReport check_thm1_conclusion(const QSeq& q, const Thm1Params& p);

/// f(n) = floor((n+2)/4) up to n0, then uniform integers in [n/4 - a, n/4 + b].
FSeq sample_thm1_strip_f(const Thm1Params& p, Index n, std::uint64_t seed);

// ---- cone theorem ----

struct Thm2Constants {
  Rational A, B;
};

/// Double-equality solution A = (40 + 63 C0) / (54 (2 - 3 C0^2)),
/// B = (21 + 20 C0) / (9 (2 - 3 C0^2)). Requires 0 < C0 < sqrt(2/3).
Thm2Constants thm2_constants(const Rational& C0);

struct Thm2ConstantsReal {
  double A = 0, B = 0;
};
Thm2ConstantsReal thm2_constants(double C0);

/// alpha0 = -log(1 - sqrt(3/2)/2) / log 4.
double alpha0();

struct C0Result {
  double C0 = 0;
  bool valid = true;       // C0 < sqrt(2/3)
  bool near_limit = false;  // within 2% of sqrt(2/3)
};

/// C0 = (4/3)(1 - 4^-alpha) for alpha in (0, 1).
C0Result c0_for_alpha(double alpha);

/// 4 (12 (4A + 3B) / 5)^(1/(1-alpha)) mu^(1/(1-alpha)).
double thm2_n0_threshold(double mu, double alpha, double A, double B);

struct Envelope {
  enum class Kind { Log, Power } kind = Kind::Power;
  double mu = 1;
  double alpha = 0.5;  // Power only

  static Envelope log(double mu) { return {Kind::Log, mu, 0}; }
  static Envelope power(double mu, double alpha) { return {Kind::Power, mu, alpha}; }

  double operator()(double x) const;
  bool diverges() const;
  bool ratio_vanishes() const;  // a(n)/n -> 0
  std::string describe() const;
};

struct ConditionResult {
  std::string name;
  bool pass = true;
  bool sampled = false;
  std::string detail;
  std::optional<std::vector<double>> counterexample;
};

struct Thm2Report {
  bool ok = true;
  std::vector<ConditionResult> conditions;
  std::string to_json() const;
  /// First failing condition name, or empty.
  std::string first_failure() const;
};

struct Thm2CheckOptions {
  double horizon_factor = 1e4;  // conditions (2)-(4) sampled on [n0/4, n0 * factor]
  int n_grid = 200;             // geometric n samples for condition (4)
  int nprime_samples = 64;
  double rel_tol = 1e-9;
};

/// Checks the constant constraints, (1) the three n0 inequalities,
/// (2) a increasing, (3) a(n)/n decreasing, (4) the Hoelder-type bound.
Thm2Report check_thm2_hypotheses(const Envelope& a, double C0, double A, double B, double n0,
                                 const Thm2CheckOptions& options = {});

// ---- square-root cone certification ----

struct Lemma52Report {
  Rational b0;                 // b + 1/sqrt(n0) with n0 = 289
  Rational four_A_b0;          // lower coefficient of sqrt(n)
  Rational three_B_b0;         // upper coefficient of sqrt(n)
  BoundsTrace trace;           // interval bounds up to n0
  WindowReport window;         // check over 72 <= n < 289
  bool certified = false;
};

/// Cone floor(n/4 -+ sqrt(n)/15), C0 = 2/3, window n/3 + 4A b0 sqrt n <= L,
/// U <= 3n/4 - 3B b0 sqrt n on 72..288, all comparisons exact.
Lemma52Report certify_lemma52();

/// Smallest n0 with n0 > (24(4A+3B)/5)^2 (b + 1/sqrt(n0))^2.
double sqrt_cone_n0_threshold(double A, double B, double b);

}  // namespace nestrec
