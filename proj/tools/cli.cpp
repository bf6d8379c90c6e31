#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "morsespec/bounds.hpp"
#include "morsespec/continuation.hpp"
#include "morsespec/error.hpp"
#include "morsespec/fields.hpp"
#include "morsespec/io.hpp"
#include "morsespec/oracle.hpp"
#include "morsespec/serialize.hpp"
#include "morsespec/spectral.hpp"

namespace morsespec::cli {

namespace {

using json = nlohmann::ordered_json;

struct Counts {
  long passed = 0;
  long failed = 0;
  void add(bool ok) { ok ? ++passed : ++failed; }
};

// Flags are kept as the strings the user typed so they can be echoed
// verbatim; conversion happens once the command runs.
struct Flags {
  std::string complex = "torus:8:8";
  std::string field = "expr:bump";
  std::string field_b;
  std::string cls = "all";
  std::string trials;
  std::string seed = "0";
  std::string family = "translate";
  std::string steps;
  std::string json_path;
  bool oracle = false;
  bool convergence = false;
  bool statement = false;
  std::map<std::string, std::string> numbers;
};

double to_double(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || !std::isfinite(v))
    throw Error(ErrorKind::Parse, "--" + name + " expects a number, got '" + text + "'");
  return v;
}

long long to_integer(const std::string& name, const std::string& text, long long lo) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || v < lo)
    throw Error(ErrorKind::Parse, "--" + name + " expects an integer >= " + std::to_string(lo) +
                                      ", got '" + text + "'");
  return v;
}

struct Selection {
  int grade = -1;
  int index = -1;  // -1: every class of the grade
  bool all = false;
};

Selection parse_class(const std::string& s, int top_dim) {
  if (s == "all") return {-1, -1, true};
  if (s == "point") return {0, 0, false};
  if (s == "fundamental") return {top_dim, 0, false};
  // grade:K:index:I
  const std::string prefix = "grade:";
  const auto mid = s.find(":index:");
  if (s.rfind(prefix, 0) == 0 && mid != std::string::npos) {
    const auto k = to_integer("class", s.substr(prefix.size(), mid - prefix.size()), 0);
    const auto i = to_integer("class", s.substr(mid + 7), 0);
    return {static_cast<int>(k), static_cast<int>(i), false};
  }
  throw Error(ErrorKind::Parse, "--class must be point, fundamental, grade:K:index:I or all");
}

std::vector<HomologyClass> select(const std::vector<std::vector<HomologyClass>>& basis,
                                  const Selection& sel) {
  std::vector<HomologyClass> out;
  if (sel.all) {
    for (const auto& g : basis) out.insert(out.end(), g.begin(), g.end());
    return out;
  }
  if (sel.grade < 0 || sel.grade >= static_cast<int>(basis.size()) ||
      sel.index >= static_cast<int>(basis[sel.grade].size()))
    throw Error(ErrorKind::Domain, "no homology class " + std::to_string(sel.index) + " in grade " +
                                       std::to_string(sel.grade));
  out.push_back(basis[sel.grade][sel.index]);
  return out;
}

json betti_json(const std::vector<int>& b) { return json(b); }

class Runner {
 public:
  Runner(const Flags& flags, json& inputs) : flags_(flags), inputs_(inputs) {}

  std::uint64_t seed() const { return static_cast<std::uint64_t>(to_integer("seed", flags_.seed, 0)); }

  const std::string& echo(const std::string& key, const std::string& value) {
    inputs_[key] = value;
    return value;
  }

  std::string number(const std::string& key) const {
    const auto it = flags_.numbers.find(key);
    if (it == flags_.numbers.end() || it->second.empty())
      throw Error(ErrorKind::Parse, "missing --" + key);
    return it->second;
  }

  double real(const std::string& key) {
    return to_double(key, echo(key, number(key)));
  }

  double real_or(const std::string& key, double fallback) {
    const auto it = flags_.numbers.find(key);
    if (it == flags_.numbers.end() || it->second.empty()) return fallback;
    return real(key);
  }

  json homology(Counts& counts) {
    const auto complex = load_complex(echo("complex", flags_.complex));
    const ScalarField field(complex, load_field(echo("field", flags_.field), complex));
    const auto model = analyze(complex, field);
    const auto morse_betti = betti_numbers(model.complex);
    const auto full_betti = betti_numbers(full_complex(complex, field));
    const bool d2 = verify_d_squared(model.complex);
    json census = json::array();
    for (int k = 0; k < model.complex.grades(); ++k) census.push_back(model.complex.count(k));
    counts.add(d2);
    counts.add(morse_betti == full_betti);
    return {{"betti", betti_json(morse_betti)},
            {"full_betti", betti_json(full_betti)},
            {"critical_cells", census},
            {"cell_counts", [&] {
               json c = json::array();
               for (int k = 0; k <= complex.top_dim(); ++k) c.push_back(complex.count(k));
               return c;
             }()},
            {"euler_characteristic", complex.euler_characteristic()},
            {"d_squared_zero", d2},
            {"morse_complex", to_json(model.complex)}};
  }

  json spectral(Counts& counts) {
    const auto complex = load_complex(echo("complex", flags_.complex));
    const ScalarField field(complex, load_field(echo("field", flags_.field), complex));
    const auto sel = parse_class(echo("class", flags_.cls), complex.top_dim());
    if (flags_.oracle) inputs_["oracle"] = true;
    const auto model = analyze(complex, field);
    json reports = json::array();
    for (const auto& x : select(homology_basis(model.complex), sel)) {
      const auto r = spectral_value(model.complex, x);
      json j = to_json(r);
      counts.add(r.spectrum_member);
      if (flags_.oracle) {
        if (boundary_generators(model.complex, x.grade) <= 20) {
          const auto brute = coset_minimum(model.complex, x);
          j["oracle_sigma"] = brute.value;
          j["oracle_match"] = brute.value == r.sigma;
          counts.add(brute.value == r.sigma);
        } else {
          j["oracle_sigma"] = nullptr;
          j["oracle_skipped"] = "more than 20 boundary generators";
        }
      }
      reports.push_back(std::move(j));
    }
    return {{"classes", reports},
            {"spectrum", spectrum(model.complex)},
            {"min", field.min_value()},
            {"max", field.max_value()}};
  }

  json compare(Counts& counts) {
    const auto complex = load_complex(echo("complex", flags_.complex));
    const auto sel = parse_class(echo("class", flags_.cls), complex.top_dim());
    std::vector<std::pair<ScalarField, ScalarField>> pairs;
    if (!flags_.trials.empty()) {
      const auto trials = to_integer("trials", echo("trials", flags_.trials), 1);
      std::mt19937_64 rng(seed());
      for (long long t = 0; t < trials; ++t) {
        const auto a = random_values(complex, rng());
        const auto b = random_values(complex, rng());
        pairs.emplace_back(ScalarField(complex, a), ScalarField(complex, b));
      }
    } else {
      if (flags_.field_b.empty()) throw Error(ErrorKind::Parse, "compare needs --field-b or --trials");
      const ScalarField a(complex, load_field(echo("field", flags_.field), complex));
      const ScalarField b(complex, load_field(echo("field_b", flags_.field_b), complex));
      pairs.emplace_back(a, b);
    }
    json reports = json::array();
    for (const auto& [a, b] : pairs) {
      const auto minus = analyze(complex, a);
      const auto plus = analyze(complex, b);
      for (const auto& x : select(homology_basis(minus.complex), sel)) {
        const auto r = sandwich_check(minus, plus, x);
        counts.add(r.pass);
        reports.push_back(json(to_json(r)));
      }
    }
    return {{"reports", reports}};
  }

  json sweep(Counts& counts) {
    const auto complex = load_complex(echo("complex", flags_.complex));
    const auto base = load_field(echo("field", flags_.field), complex);
    const auto sel = parse_class(echo("class", flags_.cls), complex.top_dim());
    const std::string& family = echo("family", flags_.family);
    const long long steps =
        flags_.steps.empty() ? 8 : to_integer("steps", echo("steps", flags_.steps), 1);

    std::vector<ScalarField> members;
    if (family == "translate") {
      const auto* t = std::get_if<TorusGrid>(&complex.descriptor());
      if (!t) throw Error(ErrorKind::Domain, "translate family needs a torus grid");
      for (long long s = 0; s < steps; ++s)
        members.emplace_back(complex, translate_values(complex, base, static_cast<int>(s), static_cast<int>(s)));
    } else if (family == "perturb") {
      std::mt19937_64 rng(seed());
      std::vector<double> g(base.size());
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (double& x : g) x = u(rng);
      for (long long s = 0; s <= steps; ++s) {
        const double eps = 0.1 * static_cast<double>(s) / static_cast<double>(steps);
        auto v = base;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += eps * g[k];
        members.emplace_back(complex, v);
      }
    } else if (family == "constant") {
      for (long long s = 0; s < steps; ++s) members.emplace_back(complex, base);
    } else {
      throw Error(ErrorKind::Parse, "--family must be translate, perturb or constant");
    }

    json out = json::array();
    for (const auto& y : select(reference_homology(complex), sel)) {
      json entry{{"grade", y.grade}, {"class_support", y.cells}};
      json values = json::array(), margins = json::array();
      for (const auto& f : members) {
        const auto l = lipschitz_check(complex, members.front(), f, y);
        values.push_back(rho(complex, f, y).sigma);
        margins.push_back(l.rhs - l.lhs);
        counts.add(l.pass);
      }
      entry["values"] = values;
      entry["lipschitz_margins"] = margins;
      if (family != "perturb") {
        const auto s = invariance_sweep(complex, members, y);
        entry["constant"] = s.constant;
        entry["gap_condition"] = s.gap_condition;
        counts.add(s.constant);
      }
      out.push_back(std::move(entry));
    }
    return {{"family", family}, {"members", members.size()}, {"classes", out}};
  }

  bounds::BoundParams params(bool need_d2 = true) {
    bounds::BoundParams p;
    p.delta = real("delta");
    p.delta0 = real("d0");
    p.delta1 = real("d1");
    p.delta2 = need_d2 ? real_or("d2", 0.0) : 0.0;
    p.sigma_minus = real("sigma");
    return p;
  }

  json bounds_cmd(const std::string& which, Counts& counts) {
    json r;
    if (which == "iterate") {
      const double x0 = real("x0"), a = real("alpha"), b = real("beta");
      const auto n = to_integer("n", echo("n", number("n")), 0);
      const double bound = bounds::iteration_bound(x0, a, b, n);
      const double oracle = bounds::iteration_oracle(x0, a, b, n);
      counts.add(oracle <= bound * (1 + 1e-12));
      return {{"value", bound}, {"oracle", oracle}, {"precondition_ok", true}};
    }
    if (which == "eta") {
      const double v = bounds::eta_bound(real("action"), real("delta"), real("kappa"));
      return {{"value", v}, {"precondition_ok", true}};
    }
    if (which == "step") {
      const auto p = params();
      const double threshold = bounds::step_threshold(p.delta);
      try {
        return {{"value", bounds::per_step_bound(p)}, {"precondition_ok", true}, {"threshold", threshold}};
      } catch (const PreconditionError& e) {
        counts.add(false);
        return {{"value", nullptr}, {"precondition_ok", false}, {"threshold", e.threshold()}};
      }
    }
    if (which == "chain") {
      const auto p = params();
      const long long required = bounds::min_steps(p);
      const double limit = bounds::adiabatic_limit_bound(p);
      if (flags_.convergence) {
        inputs_["convergence"] = true;
        json table = json::array();
        const long long stop = flags_.steps.empty() ? 1000000 : to_integer("steps", echo("steps", flags_.steps), 1);
        double prev = HUGE_VAL;
        for (long long n = required; n <= stop; n *= 2) {
          const double v = bounds::chained_bound(p, n);
          const double gap = std::fabs(v - limit);
          counts.add(gap <= prev);
          prev = gap;
          table.push_back({{"steps", n}, {"value", v}, {"gap", gap}, {"relative_gap", gap / std::fabs(limit)}});
        }
        return {{"limit", limit}, {"min_steps", required}, {"table", table}, {"precondition_ok", true}};
      }
      const auto n = to_integer("steps", echo("steps", flags_.steps.empty() ? std::to_string(required) : flags_.steps), 0);
      try {
        return {{"value", bounds::chained_bound(p, n)}, {"min_steps", required}, {"limit", limit},
                {"precondition_ok", true}};
      } catch (const StepCountError& e) {
        counts.add(false);
        return {{"value", nullptr}, {"min_steps", e.required()}, {"precondition_ok", false}};
      }
    }
    if (which == "limit") {
      const auto p = params();
      if (flags_.statement) inputs_["statement"] = true;
      const auto form = flags_.statement ? bounds::LimitForm::Statement : bounds::LimitForm::Proof;
      return {{"value", bounds::adiabatic_limit_bound(p, form)}, {"precondition_ok", true}};
    }
    if (which == "corollary") {
      const double v = bounds::corollary_bound(real("sigma"), real("norm-plus"), real("norm-minus"),
                                               real("norm-diff"), real("delta"));
      return {{"value", v}, {"precondition_ok", true}};
    }
    throw Error(ErrorKind::Parse, "unknown bounds command " + which);
  }

 private:
  const Flags& flags_;
  json& inputs_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Discrete Morse homology, spectral values and continuation bounds"};
  app.require_subcommand(1);

  const auto common = [&](CLI::App* c) {
    c->add_option("--complex", flags.complex, "torus:NX:NY or file:PATH");
    c->add_option("--json", flags.json_path, "also write the report to this path");
    c->add_option("--seed", flags.seed, "seed for randomized runs");
  };
  const auto field = [&](CLI::App* c) {
    c->add_option("--field", flags.field, "field file or expr:NAME (bump, twobump, random:SEED, constant:C)");
  };
  const auto cls = [&](CLI::App* c) {
    c->add_option("--class", flags.cls, "point | fundamental | grade:K:index:I | all");
  };

  auto* homology = app.add_subcommand("homology", "Betti numbers, critical cells, boundary check");
  common(homology);
  field(homology);

  auto* spectral = app.add_subcommand("spectral", "spectral values of homology classes");
  common(spectral);
  field(spectral);
  cls(spectral);
  spectral->add_flag("--oracle", flags.oracle, "cross-check against exhaustive coset enumeration");

  auto* compare = app.add_subcommand("compare", "continuation sandwich between two fields");
  common(compare);
  field(compare);
  cls(compare);
  compare->add_option("--field-b", flags.field_b, "target field");
  compare->add_option("--trials", flags.trials, "random field pairs instead of --field/--field-b");

  auto* sweep = app.add_subcommand("sweep", "spectral invariant along a family of fields");
  common(sweep);
  field(sweep);
  cls(sweep);
  sweep->add_option("--family", flags.family, "translate | perturb | constant");
  sweep->add_option("--steps", flags.steps, "family size");

  auto* bounds = app.add_subcommand("bounds", "quantitative continuation estimates");
  bounds->require_subcommand(1);
  const auto number = [&](CLI::App* c, const std::string& name) {
    c->add_option("--" + name, flags.numbers[name]);
  };
  std::map<std::string, CLI::App*> bound_cmds;
  const auto bound_cmd = [&](const std::string& name, const std::string& help,
                             std::initializer_list<const char*> names) {
    auto* c = bounds->add_subcommand(name, help);
    c->add_option("--json", flags.json_path, "also write the report to this path");
    for (const char* n : names) number(c, n);
    bound_cmds[name] = c;
    return c;
  };
  bound_cmd("iterate", "closed-form iteration bound", {"x0", "alpha", "beta", "n"});
  bound_cmd("eta", "Lagrange multiplier bound", {"action", "delta", "kappa"});
  bound_cmd("step", "one continuation step", {"delta", "d0", "d1", "d2", "sigma"});
  auto* chain = bound_cmd("chain", "chained estimate after N steps", {"delta", "d0", "d1", "d2", "sigma"});
  chain->add_option("--steps", flags.steps, "number of steps (upper end of the table with --convergence)");
  chain->add_flag("--convergence", flags.convergence, "N-doubling table against the limit");
  auto* limit = bound_cmd("limit", "adiabatic limit", {"delta", "d0", "d1", "d2", "sigma"});
  limit->add_flag("--statement", flags.statement, "omit the 1/8 factor on the second term");
  bound_cmd("corollary", "norm-based bound", {"sigma", "norm-plus", "norm-minus", "norm-diff", "delta"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kInputError;
  }

  json inputs = json::object();
  Counts counts;
  json report;
  try {
    Runner runner(flags, inputs);
    json results;
    std::string command;
    if (homology->parsed()) {
      command = "homology";
      results = runner.homology(counts);
    } else if (spectral->parsed()) {
      command = "spectral";
      results = runner.spectral(counts);
    } else if (compare->parsed()) {
      command = "compare";
      results = runner.compare(counts);
    } else if (sweep->parsed()) {
      command = "sweep";
      results = runner.sweep(counts);
    } else {
      for (const auto& [name, c] : bound_cmds)
        if (c->parsed()) {
          command = "bounds " + name;
          results = runner.bounds_cmd(name, counts);
        }
    }
    report = {{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"pass_counts", {{"passed", counts.passed}, {"failed", counts.failed}}},
              {"seed", runner.seed()}};
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInputError;
  }

  const std::string text = report.dump(2);
  out << text << "\n";
  if (!flags.json_path.empty()) {
    std::ofstream f(flags.json_path);
    if (!f) {
      err << "error: cannot write " << flags.json_path << "\n";
      return kInputError;
    }
    f << text << "\n";
  }
  return counts.failed == 0 ? kOk : kPropertyFailure;
}

}  // namespace morsespec::cli
