#include "nestrec/theoremlab.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "nestrec/random.hpp"

namespace nestrec {

Thm1Constants thm1_constants(const Rational& a, const Rational& b) {
  if (a <= Rational(1, 4)) throw InputError("a must exceed 1/4 (otherwise d <= 0)");
  if (b <= 0) throw InputError("b must be positive");
  return {(1 + 4 * b) / 3, (12 * a - 3) / 4};
}

Thm1Params make_thm1_params(const Rational& a, const Rational& b, const Rational& eps, Index n0) {
  const auto [c, d] = thm1_constants(a, b);
  const Rational cap = d / (4 * b);
  const Rational footnote(5, 24);
  if (eps <= 0) throw InputError("eps must be positive");
  if (eps > cap) throw InputError("eps exceeds d/(4b) = " + to_string(cap));
  if (eps >= footnote) throw InputError("eps must be below 5/24");
  if (n0 < 4) throw InputError("n0 must be >= 4");
  const Rational need = std::max(4 * c, 2 * d);
  if (eps * n0 < need)
    throw InputError("eps * n0 = " + to_string(eps * n0) + " is below max{4c, 2d} = " + to_string(need));
  return {a, b, c, d, eps, n0, cap < footnote ? "d/(4b)" : "5/24"};
}

PrefixReport check_thm1_prefix(const QSeq& q0, const Thm1Params& p) {
  if (q0.size() < p.n0) throw PreconditionError("q0 must have n0 terms");
  PrefixReport report;
  const Rational lo = Rational(1, 3) + p.eps;
  const Rational hi = Rational(3, 4) - p.eps;
  for (Index k = ceil(Rational(p.n0, 4)); k <= p.n0; ++k) {
    if (lo * k > q0(k)) report.failures.push_back({k, "lower"});
    if (q0(k) > hi * k) report.failures.push_back({k, "upper"});
  }
  report.ok = report.failures.empty();
  return report;
}

PrefixReport check_thm1_conclusion(const QSeq& q, const Thm1Params& p) {
  PrefixReport report;
  for (Index n = p.n0; n <= q.size(); ++n) {
    if (Rational(n, 3) + p.c > q(n)) report.failures.push_back({n, "lower"});
    if (q(n) > Rational(3 * n, 4) - p.d) report.failures.push_back({n, "upper"});
  }
  report.ok = report.failures.empty();
  return report;
}

FSeq sample_thm1_strip_f(const Thm1Params& p, Index n, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be positive");
  SeededSource rng(seed);
  std::vector<Value> f;
  for (Index k = 1; k <= n; ++k) {
    if (k <= p.n0) {
      f.push_back((k + 2) / 4);
      continue;
    }
    const Value lo = ceil(Rational(k, 4) - p.a);
    const Value hi = floor(Rational(k, 4) + p.b);
    if (lo > hi) throw InputError("strip is empty at n = " + std::to_string(k));
    f.push_back(rng.uniform(lo, hi));
  }
  return FSeq(std::move(f));
}

Thm2Constants thm2_constants(const Rational& C0) {
  if (C0 <= 0 || 3 * C0 * C0 >= 2) throw InputError("C0 must lie in (0, sqrt(2/3))");
  const Rational den = 2 - 3 * C0 * C0;
  return {(40 + 63 * C0) / (54 * den), (21 + 20 * C0) / (9 * den)};
}

Thm2ConstantsReal thm2_constants(double C0) {
  if (!(C0 > 0) || 3 * C0 * C0 >= 2) throw InputError("C0 must lie in (0, sqrt(2/3))");
  const double den = 2 - 3 * C0 * C0;
  return {(40 + 63 * C0) / (54 * den), (21 + 20 * C0) / (9 * den)};
}

double alpha0() { return -std::log(1 - 0.5 * std::sqrt(1.5)) / std::log(4.0); }

C0Result c0_for_alpha(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw InputError("alpha must lie in (0, 1)");
  C0Result r;
  r.C0 = 4.0 / 3.0 * (1 - std::pow(0.25, alpha));
  const double limit = std::sqrt(2.0 / 3.0);
  r.valid = r.C0 < limit;
  r.near_limit = r.C0 >= 0.98 * limit;
  return r;
}

double thm2_n0_threshold(double mu, double alpha, double A, double B) {
  if (!(alpha > 0 && alpha < 1) || mu <= 0) throw InputError("need mu > 0 and alpha in (0, 1)");
  const double e = 1 / (1 - alpha);
  return 4 * std::pow(12 * (4 * A + 3 * B) / 5, e) * std::pow(mu, e);
}

double Envelope::operator()(double x) const {
  return kind == Kind::Log ? mu * std::log(x) : mu * std::pow(x, alpha);
}

bool Envelope::diverges() const { return kind == Kind::Log || alpha > 0; }

bool Envelope::ratio_vanishes() const { return kind == Kind::Log || alpha < 1; }

std::string Envelope::describe() const {
  std::ostringstream out;
  if (kind == Kind::Log)
    out << mu << "*log(n)";
  else
    out << mu << "*n^" << alpha;
  return out.str();
}

namespace {

std::vector<double> geometric_grid(double lo, double hi, int count) {
  std::vector<double> grid;
  const double ratio = std::pow(hi / lo, 1.0 / (count - 1));
  double x = lo;
  for (int i = 0; i < count; ++i, x *= ratio) grid.push_back(std::round(x));
  return grid;
}

}  // namespace

Thm2Report check_thm2_hypotheses(const Envelope& a, double C0, double A, double B, double n0,
                                 const Thm2CheckOptions& opt) {
  if (n0 < 4) throw InputError("n0 must be >= 4");
  const double tol = opt.rel_tol;
  Thm2Report report;
  auto add = [&](ConditionResult c) {
    report.ok = report.ok && c.pass;
    report.conditions.push_back(std::move(c));
  };

  {
    ConditionResult c{"constants", true, false, "", std::nullopt};
    const double lo = 7.0 / 6.0 + 3 * A * C0;
    const double hi = 2 / C0 * (A - 10.0 / 27.0);
    const double scale = std::max({1.0, std::abs(B), std::abs(lo), std::abs(hi)});
    if (!(C0 > 0 && C0 * C0 < 2.0 / 3.0)) {
      c.pass = false;
      c.detail = "C0 outside (0, sqrt(2/3))";
    } else if (B < lo - tol * scale || B > hi + tol * scale) {
      c.pass = false;
      c.detail = "need 7/6 + 3AC0 <= B <= (2/C0)(A - 10/27)";
      c.counterexample = std::vector<double>{lo, B, hi};
    }
    add(c);
  }

  {
    ConditionResult c{"n0", true, false, "", std::nullopt};
    const double r = a(n0 / 4) / (n0 / 4);
    const double cap = 5 / (12 * (4 * A + 3 * B));
    const double third = 1 / (3 * n0) + 4 * A * a(n0) / n0;
    if (!(r < cap)) {
      c.pass = false;
      c.detail = "a(n0/4)/(n0/4) < 5/(12(4A+3B)) fails";
      c.counterexample = std::vector<double>{r, cap};
    } else if (!(a(n0) >= 0.5)) {
      c.pass = false;
      c.detail = "a(n0) >= 1/2 fails";
      c.counterexample = std::vector<double>{a(n0)};
    } else if (!(third <= 1.0 / 6.0)) {
      c.pass = false;
      c.detail = "1/(3 n0) + 4A a(n0)/n0 <= 1/6 fails";
      c.counterexample = std::vector<double>{third};
    }
    add(c);
  }

  const double start = std::max(1.0, std::ceil(n0 / 4));
  const double horizon = n0 * opt.horizon_factor;
  const auto grid = geometric_grid(start, horizon, 2000);

  {
    ConditionResult c{"increasing", true, true, "", std::nullopt};
    if (!a.diverges()) {
      c.pass = false;
      c.detail = "a does not diverge";
    }
    for (double n : grid) {
      if (!c.pass) break;
      if (!(a(n + 1) > a(n))) {
        c.pass = false;
        c.detail = "a(n+1) <= a(n)";
        c.counterexample = std::vector<double>{n};
      }
    }
    add(c);
  }

  {
    ConditionResult c{"ratio_decreasing", true, true, "", std::nullopt};
    if (!a.ratio_vanishes()) {
      c.pass = false;
      c.detail = "a(n)/n does not tend to 0";
    }
    for (double n : grid) {
      if (!c.pass) break;
      if (!(a(n + 1) / (n + 1) < a(n) / n)) {
        c.pass = false;
        c.detail = "a(n+1)/(n+1) >= a(n)/n";
        c.counterexample = std::vector<double>{n};
      }
    }
    add(c);
  }

  {
    ConditionResult c{"hoelder", true, true, "", std::nullopt};
    for (double n : geometric_grid(n0, horizon, opt.n_grid)) {
      const double an = a(n);
      for (int i = 0; i < opt.nprime_samples && c.pass; ++i) {
        const double np = n / 4 + (3 * n / 4) * i / (opt.nprime_samples - 1);
        const double lhs = an - a(np);
        const double rhs = C0 * (1 - np / n) * an;
        if (lhs > rhs + tol * std::max(1.0, std::abs(an))) {
          c.pass = false;
          c.detail = "a(n) - a(n') > C0 (1 - n'/n) a(n)";
          c.counterexample = std::vector<double>{n, np, lhs, rhs};
        }
      }
      if (!c.pass) break;
    }
    add(c);
  }
  return report;
}

std::string Thm2Report::first_failure() const {
  for (const auto& c : conditions)
    if (!c.pass) return c.name;
  return {};
}

std::string Thm2Report::to_json() const {
  nlohmann::json j;
  j["ok"] = ok;
  j["conditions"] = nlohmann::json::array();
  for (const auto& c : conditions) {
    nlohmann::json item = {{"condition", c.name}, {"pass", c.pass}, {"sampled", c.sampled}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    item["counterexample"] = c.counterexample ? nlohmann::json(*c.counterexample) : nlohmann::json();
    j["conditions"].push_back(item);
  }
  return j.dump(2);
}

Lemma52Report certify_lemma52() {
  constexpr Index n0 = 289;
  const Rational a(1, 4), b(1, 15);
  const auto [A, B] = thm2_constants(Rational(2, 3));
  Lemma52Report r;
  r.b0 = b + Rational(1, isqrt(n0));
  r.four_A_b0 = 4 * A * r.b0;
  r.three_B_b0 = 3 * B * r.b0;
  r.trace = bound_interval(affine_sqrt_cone(a, b), n0);
  r.window = verify_window_exact(r.trace, Rational(1, 3), r.four_A_b0, Rational(3, 4), -r.three_B_b0,
                                 n0 / 4, n0 - 1);
  r.certified = r.window.ok;
  return r;
}

double sqrt_cone_n0_threshold(double A, double B, double b) {
  // n0 = s^2 with s^2 - K b s - K = 0, K = 24(4A+3B)/5.
  const double K = 24 * (4 * A + 3 * B) / 5;
  const double s = (K * b + std::sqrt(K * K * b * b + 4 * K)) / 2;
  return s * s;
}

}  // namespace nestrec
