#include "nestrec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nestrec/bounding.hpp"
#include "nestrec/counterexamples.hpp"
#include "nestrec/enumeration.hpp"
#include "nestrec/families.hpp"
#include "nestrec/hofstadter.hpp"
#include "nestrec/negext.hpp"
#include "nestrec/theoremlab.hpp"

namespace nestrec::cli {
namespace {

constexpr const char* kJsonSchema = "nestrec/1";

std::vector<Value> parse_list(const std::string& text) {
  std::vector<Value> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const Rational r = parse_rational(item);
    if (r.denominator() != 1) throw InputError("expected integers, got '" + item + "'");
    out.push_back(r.numerator());
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

template <class T>
std::string join(std::span<const T> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

std::string join(std::span<const Value> values) { return join<Value>(values); }

std::string describe(const Death& d) {
  return "dies at " + std::to_string(d.index) + " (" + to_string(d.kind) + ", candidate " +
         std::to_string(d.candidate) + ")";
}

Index enumeration_limit() {
  if (const char* env = std::getenv("NESTREC_LIMIT_OVERRIDE")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw InputError("NESTREC_LIMIT_OVERRIDE must be an integer");
    }
  }
  return kDefaultEnumerationLimit;
}

struct Globals {
  std::string out_path;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool header = false;
};

// A subcommand writes to `out` and returns an exit code.
using Handler = std::function<int(std::ostream& out, std::ostream& err)>;

struct Registry {
  CLI::App& app;
  const Globals& g;
  std::map<CLI::App*, Handler> handlers;

  CLI::App* add(const std::string& name, const std::string& help) {
    return app.add_subcommand(name, help);
  }
};

void add_generate(Registry& r) {
  auto* sub = r.add("generate", "Run q(n) = q(n - q(n-1)) + f(n) on a given f");
  auto f = std::make_shared<std::string>();
  auto n = std::make_shared<Index>(0);
  auto expect = std::make_shared<bool>(false);
  sub->add_option("f", *f, "f as a comma-separated list, f(1) = 0")->required();
  sub->add_option("--n", *n, "stop after n terms (default: length of f)");
  sub->add_flag("--expect-survival", *expect, "exit 1 if q dies");
  r.handlers[sub] = [=](std::ostream& out, std::ostream& err) {
    const FSeq seq(parse_list(*f));
    const auto res = q_from_f(seq, *n > 0 ? *n : seq.size());
    out << join(res.prefix.terms()) << '\n';
    if (res.death) {
      err << describe(*res.death) << '\n';
      if (*expect) return kDomainFailure;
    }
    return kOk;
  };
}

void add_invert(Registry& r) {
  auto* sub = r.add("invert", "Recover f from q via f(n) = q(n) - q(n - q(n-1))");
  auto q = std::make_shared<std::string>();
  sub->add_option("q", *q, "q as a comma-separated list")->required();
  r.handlers[sub] = [=](std::ostream& out, std::ostream&) {
    out << join(f_from_q(QSeq(parse_list(*q))).terms()) << '\n';
    return kOk;
  };
}

void add_member(Registry& r) {
  auto* sub = r.add("member", "Test whether a finite f lies in F_n");
  auto f = std::make_shared<std::string>();
  sub->add_option("f", *f, "f as a comma-separated list")->required();
  r.handlers[sub] = [=](std::ostream& out, std::ostream&) {
    const auto terms = parse_list(*f);
    if (terms.front() != 0) {
      out << "not a member: f(1) != 0\n";
      return kDomainFailure;
    }
    const auto res = q_from_f(FSeq(terms));
    if (res.death) {
      out << describe(*res.death) << '\n';
      return kDomainFailure;
    }
    out << "member\n";
    return kOk;
  };
}

void add_enumerate(Registry& r) {
  auto* sub = r.add("enumerate", "List F_n (one f per line) or print member counts");
  auto n = std::make_shared<Index>(0);
  auto counts = std::make_shared<bool>(false);
  sub->add_option("--n", *n, "sequence length")->required();
  sub->add_flag("--counts", *counts, "print n, n!, phi(n) for 3..n instead");
  r.handlers[sub] = [=, &g = r.g](std::ostream& out, std::ostream&) {
    if (*counts) {
      out << counts_csv(*n, g.header);
      return kOk;
    }
    for_each_F(*n, [&](const FSeq& f) { out << join(f.terms()) << '\n'; }, enumeration_limit());
    return kOk;
  };
}

void add_tree(Registry& r) {
  auto* sub = r.add("tree", "Graphviz DOT of the tree of F_n");
  auto n = std::make_shared<Index>(0);
  sub->add_option("--n", *n, "depth, 1..6")->required();
  r.handlers[sub] = [=](std::ostream& out, std::ostream&) {
    out << export_tree_dot(*n);
    return kOk;
  };
}

void add_family(Registry& r) {
  auto* sub = r.add("family", "Sample members of a constructive family");
  auto kind = std::make_shared<std::string>();
  auto n = std::make_shared<Index>(0);
  auto samples = std::make_shared<int>(1);
  auto alpha = std::make_shared<std::string>("1/2");
  auto delta = std::make_shared<Value>(1);
  auto ell = std::make_shared<Index>(3);
  auto period = std::make_shared<Index>(2);
  auto count = std::make_shared<bool>(false);
  sub->add_option("--kind", *kind,
                  "slow-alpha, delta-step, powtwo, strip012, ladder, y-driven, lower-witness, upper-witness")
      ->required();
  sub->add_option("--n", *n, "length")->required();
  sub->add_option("--samples", *samples, "number of draws (seeds seed, seed+1, ...)");
  sub->add_option("--alpha", *alpha, "slow-alpha parameter p/q in [1/2, 1)");
  sub->add_option("--delta", *delta, "delta-step parameter");
  sub->add_option("--ell", *ell, "ladder parameter >= 3");
  sub->add_option("--period", *period, "y-driven: y(k) = 1 iff k = 1 mod period");
  sub->add_flag("--count", *count, "y-driven: print the exact member count instead");
  r.handlers[sub] = [=, &g = r.g](std::ostream& out, std::ostream& err) {
    FamilySpec spec;
    if (*kind == "slow-alpha") spec = family::SlowAlpha{parse_rational(*alpha)};
    else if (*kind == "delta-step") spec = family::DeltaStep{*delta};
    else if (*kind == "powtwo") spec = family::PowTwo{};
    else if (*kind == "strip012") spec = family::Strip012{};
    else if (*kind == "ladder") spec = family::Ladder{*ell};
    else if (*kind == "y-driven") spec = family::YDriven{YSeq::periodic(*period, *n)};
    else if (*kind == "lower-witness") spec = family::LowerWitness{*n};
    else if (*kind == "upper-witness") spec = family::UpperWitness{*n};
    else throw InputError("unknown family '" + *kind + "'");
    if (*count) {
      if (*kind != "y-driven") throw InputError("--count applies to y-driven only");
      out << ydriven_count(YSeq::periodic(*period, *n), *n) << '\n';
      return kOk;
    }
    int status = kOk;
    for (int s = 0; s < *samples; ++s) {
      const FSeq f = sample_family(spec, *n, g.seed + static_cast<std::uint64_t>(s));
      out << join(f.terms()) << '\n';
      if (const auto res = q_from_f(f); res.death) {
        err << "sample " << s << ' ' << describe(*res.death) << '\n';
        status = kDomainFailure;
      }
    }
    return status;
  };
}

void add_counterexample(Registry& r) {
  auto* sub = r.add("counterexample", "Cone killers and jump counterexamples");
  auto kind = std::make_shared<std::string>();
  auto d = std::make_shared<Index>(6);
  auto n = std::make_shared<Index>(0);
  auto N = std::make_shared<Index>(3);
  auto m = std::make_shared<Index>(1);
  sub->add_option("--kind", *kind, "fd, kill, ktable, cone1, jump")->required();
  sub->add_option("--d", *d, "even d >= 2 (fd, kill)");
  sub->add_option("--n", *n, "number of f_d terms (fd; default: up to the kill index)");
  sub->add_option("--N", *N, "cone1 parameter");
  sub->add_option("--m", *m, "jump parameter, n0 = 4m - 1");
  r.handlers[sub] = [=, &g = r.g](std::ostream& out, std::ostream&) {
    if (*kind == "fd") {
      const Index len = *n > 0 ? *n : kill_index(*d);
      out << join(build_fd(*d, len).terms()) << '\n';
    } else if (*kind == "kill") {
      const auto run = steered_run(*d);
      if (g.header) out << "d,K,q_K\n";
      out << *d << ',' << run.kill_index << ',' << run.kill_value << '\n';
    } else if (*kind == "ktable") {
      if (g.header) out << "d,K,ceil_dx\n";
      for (Index dd = 2; dd <= 20; dd += 2) out << dd << ',' << kill_index(dd) << ',' << ceil_d_times_x(dd) << '\n';
    } else if (*kind == "cone1") {
      const FSeq f = cone1_witness(*N);
      out << join(f.terms()) << '\n';
      const auto res = q_from_f(f);
      out << (res.death ? describe(*res.death) : std::string("survives")) << '\n';
    } else if (*kind == "jump") {
      const auto j = thm1_jump_counterexample(*m);
      out << join(j.f.terms()) << '\n' << describe(j.death) << '\n';
    } else {
      throw InputError("unknown counterexample kind '" + *kind + "'");
    }
    return kOk;
  };
}

void add_negext(Registry& r) {
  auto* sub = r.add("negext", "Exhaustive negative extensions of Q_n0");
  auto n0 = std::make_shared<Index>(0);
  auto to = std::make_shared<Index>(0);
  auto allow_long = std::make_shared<bool>(false);
  sub->add_option("--n0", *n0, "prefix length, 4..12")->required();
  sub->add_option("--to", *to, "also run n0+1..to");
  sub->add_flag("--long", *allow_long, "allow n0 >= 11");
  r.handlers[sub] = [=, &g = r.g](std::ostream& out, std::ostream&) {
    if (g.header) out << negext_csv_header() << '\n';
    for (Index k = *n0; k <= std::max(*n0, *to); ++k)
      out << negext_csv_row(exhaustive_negext(k, {g.jobs, *allow_long})) << '\n';
    return kOk;
  };
}

ConeSpec load_cone(const std::string& spec, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot read cone file '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_cone_json(buf.str());
  }
  if (spec.empty()) throw InputError("give --cone or --cone-file");
  return parse_cone(spec);
}

void add_bound(Registry& r) {
  auto* sub = r.add("bound", "Interval bounds L(n), U(n) over a cone");
  auto cone = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  auto n = std::make_shared<Index>(0);
  auto sets = std::make_shared<bool>(false);
  auto expect = std::make_shared<bool>(false);
  sub->add_option("--cone", *cone, "linear:a,b | sqrt-in:a,b | sqrt-out:a,b | affine-sqrt:a,b | table:l..;u..");
  sub->add_option("--cone-file", *file, "JSON cone description");
  sub->add_option("--n", *n, "horizon")->required();
  sub->add_flag("--sets", *sets, "print the set-valued bounds instead");
  sub->add_flag("--expect-survival", *expect, "exit 1 on death");
  r.handlers[sub] = [=, &g = r.g](std::ostream& out, std::ostream& err) {
    const ConeSpec c = load_cone(*cone, *file);
    std::optional<BoundsDeath> death;
    if (*sets) {
      const auto t = bound_sets(c, *n);
      if (g.header) out << "n,set\n";
      for (std::size_t i = 0; i < t.sets.size(); ++i)
        out << i + 1 << ",\"" << join(std::span<const Value>(t.sets[i])) << "\"\n";
      death = t.death;
    } else {
      const auto t = bound_interval(c, *n);
      out << bounds_csv(t, g.header);
      death = t.death;
    }
    if (death) {
      err << "death at " << death->index << " (" << to_string(death->kind) << (death->both ? ", both sides" : "")
          << ")\n";
      if (*expect) return kDomainFailure;
    }
    return kOk;
  };
}

void add_fit(Registry& r) {
  auto* sub = r.add("fit", "Power-law fit of L or U over a cone");
  auto cone = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  auto n = std::make_shared<Index>(0);
  auto lo = std::make_shared<Index>(1);
  auto hi = std::make_shared<Index>(0);
  auto side = std::make_shared<std::string>("U");
  sub->add_option("--cone", *cone, "cone spec");
  sub->add_option("--cone-file", *file, "JSON cone description");
  sub->add_option("--n", *n, "horizon")->required();
  sub->add_option("--lo", *lo, "first index of the fit");
  sub->add_option("--hi", *hi, "last index (default: last live index)");
  sub->add_option("--side", *side, "L or U")->check(CLI::IsMember({"L", "U"}));
  r.handlers[sub] = [=](std::ostream& out, std::ostream&) {
    const auto t = bound_interval(load_cone(*cone, *file), *n);
    const Index last = *hi > 0 ? *hi : t.last_alive();
    const auto& values = *side == "L" ? t.L : t.U;
    auto j = nlohmann::json::parse(fit_to_json(fit_power_law(values, *lo, last)));
    j["schema"] = kJsonSchema;
    j["side"] = *side;
    out << j.dump(2) << '\n';
    return kOk;
  };
}

void add_certify(Registry& r) {
  auto* sub = r.add("certify", "Bounding-algorithm certification of the square-root cone");
  r.handlers[sub] = [](std::ostream& out, std::ostream&) {
    const auto rep = certify_lemma52();
    nlohmann::json j = {{"schema", kJsonSchema},
                        {"b0", to_string(rep.b0)},
                        {"four_A_b0", to_double(rep.four_A_b0)},
                        {"three_B_b0", to_double(rep.three_B_b0)},
                        {"certified", rep.certified}};
    if (!rep.window.ok)
      j["first_failure"] = {{"n", rep.window.first_failure},
                            {"side", rep.window.side},
                            {"observed", rep.window.observed},
                            {"bound", rep.window.bound}};
    out << j.dump(2) << '\n';
    return rep.certified ? kOk : kDomainFailure;
  };
}

void add_thm1(Registry& r) {
  auto* sub = r.add("thm1", "Check the strip theorem's hypotheses on a prefix");
  auto a = std::make_shared<std::string>("1/2");
  auto b = std::make_shared<std::string>("1/2");
  auto eps = std::make_shared<std::string>("1/8");
  auto n0 = std::make_shared<Index>(32);
  auto q0 = std::make_shared<std::string>();
  sub->add_option("--a", *a, "rational > 1/4");
  sub->add_option("--b", *b, "rational > 0");
  sub->add_option("--eps", *eps, "rational");
  sub->add_option("--n0", *n0, "prefix length");
  sub->add_option("--q0", *q0, "prefix q0 (default: floor((k+2)/2))");
  r.handlers[sub] = [=](std::ostream& out, std::ostream&) {
    const auto p = make_thm1_params(parse_rational(*a), parse_rational(*b), parse_rational(*eps), *n0);
    std::vector<Value> terms;
    if (q0->empty())
      for (Index k = 1; k <= *n0; ++k) terms.push_back((k + 2) / 2);
    else
      terms = parse_list(*q0);
    const auto rep = check_thm1_prefix(QSeq(terms), p);
    nlohmann::json j = {{"schema", kJsonSchema},   {"c", to_string(p.c)}, {"d", to_string(p.d)},
                        {"binding_eps_cap", p.binding_eps_cap}, {"prefix_ok", rep.ok}};
    j["failures"] = nlohmann::json::array();
    for (const auto& f : rep.failures) j["failures"].push_back({{"k", f.index}, {"side", f.side}});
    out << j.dump(2) << '\n';
    return rep.ok ? kOk : kDomainFailure;
  };
}

void add_thm2(Registry& r) {
  auto* sub = r.add("thm2", "Check the cone theorem's hypotheses for an envelope a(n)");
  auto envelope = std::make_shared<std::string>("power");
  auto mu = std::make_shared<double>(1.0);
  auto alpha = std::make_shared<double>(0.5);
  auto c0 = std::make_shared<double>(0.0);
  auto n0 = std::make_shared<double>(0.0);
  sub->add_option("--envelope", *envelope, "power or log")->check(CLI::IsMember({"power", "log"}));
  sub->add_option("--mu", *mu, "envelope scale");
  sub->add_option("--alpha", *alpha, "power exponent");
  sub->add_option("--C0", *c0, "constant C0 (default: from alpha, or 2/3 for log)");
  sub->add_option("--n0", *n0, "start index")->required();
  r.handlers[sub] = [=](std::ostream& out, std::ostream&) {
    const Envelope env = *envelope == "log" ? Envelope::log(*mu) : Envelope::power(*mu, *alpha);
    double C0 = *c0;
    if (C0 <= 0) C0 = *envelope == "log" ? 2.0 / 3.0 : c0_for_alpha(*alpha).C0;
    const auto [A, B] = thm2_constants(C0);
    const auto rep = check_thm2_hypotheses(env, C0, A, B, *n0);
    auto j = nlohmann::json::parse(rep.to_json());
    j["schema"] = kJsonSchema;
    j["envelope"] = env.describe();
    j["C0"] = C0;
    j["A"] = A;
    j["B"] = B;
    out << j.dump(2) << '\n';
    return rep.ok ? kOk : kDomainFailure;
  };
}

void add_hofstadter(Registry& r) {
  auto* sub = r.add("hofstadter", "Hofstadter's sequence and its mod-M dilution");
  auto n = std::make_shared<Index>(0);
  auto M = std::make_shared<Value>(0);
  auto m_hi = std::make_shared<Value>(0);
  auto terms = std::make_shared<bool>(false);
  sub->add_option("--n", *n, "horizon")->required();
  sub->add_option("--M", *M, "modulus >= 3 (omit for the classic sequence)");
  sub->add_option("--M-to", *m_hi, "scan M..M-to");
  sub->add_flag("--terms", *terms, "print the terms of a single run");
  r.handlers[sub] = [=, &g = r.g](std::ostream& out, std::ostream&) {
    std::vector<ModMRun> runs;
    if (*M == 0) runs.push_back(hofstadter_q(*n, *terms));
    else if (*m_hi > *M) runs = mod_m_scan(*M, *m_hi, *n, g.jobs);
    else runs.push_back(mod_m_run(*M, *n, *terms));
    if (*terms && runs.size() == 1) {
      out << join<std::uint32_t>(runs.front().terms) << '\n';
    } else {
      out << mod_m_csv(runs, g.header);
    }
    return kOk;
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested recurrence q(n) = q(n - q(n-1)) + f(n): generators, searches and bounds"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out_path, "write primary output to FILE");
  app.add_option("--seed", g.seed, "seed for sampled output (default 0)");
  app.add_option("--jobs", g.jobs, "worker threads (default 1)")->check(CLI::PositiveNumber);
  app.add_flag("--header", g.header, "add a CSV header row");

  Registry reg{app, g, {}};
  add_generate(reg);
  add_invert(reg);
  add_member(reg);
  add_enumerate(reg);
  add_tree(reg);
  add_family(reg);
  add_counterexample(reg);
  add_negext(reg);
  add_bound(reg);
  add_fit(reg);
  add_certify(reg);
  add_thm1(reg);
  add_thm2(reg);
  add_hofstadter(reg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands())
      err << "usage: " << app.get_name() << ' ' << sub->get_name() << " [OPTIONS]\n";
    if (app.get_subcommands().empty()) err << "usage: nestrec [--out FILE] [--seed N] [--jobs N] [--header] SUBCOMMAND\n";
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  std::ostringstream buffer;
  int status = kOk;
  try {
    status = reg.handlers.at(chosen)(buffer, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n' << chosen->help();
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    status = kDomainFailure;
  }

  if (g.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << g.out_path << "'\n";
      return kUsageError;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace nestrec::cli
