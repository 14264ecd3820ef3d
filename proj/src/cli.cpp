// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zrec/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zrec/automaton.hpp"
#include "zrec/errors.hpp"
#include "zrec/io.hpp"
#include "zrec/random_systems.hpp"
#include "zrec/recurrence.hpp"
#include "zrec/semiring.hpp"
#include "zrec/ztransform.hpp"

namespace zrec::cli {

namespace {

struct Globals {
  std::string semiring;
  std::string out = "table";
  std::uint64_t seed = 1;
};

struct SolveOptions {
  std::string file;
  std::size_t upto = 12;
  std::string method = "closed";
};

struct TransformOptions {
  std::string file;
  std::size_t order = 12;
};

struct VerifyOptions {
  std::string file;
  int theorem = 0;
  std::size_t order = 12;
  std::size_t trials = 100;
  bool random = false;
  std::size_t dim = 0;
};

struct PathsOptions {
  std::string file;
  std::string from;
  std::size_t length = 0;
  std::size_t max_length = 10;
};

struct ConvertOptions {
  std::string file;
  std::string to;
};

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(v.semiring().render(x));
  return out;
}

// Any document as a single system (automata are converted).
RecurrenceSystem as_system(const Document& doc) {
  if (doc.system) return *doc.system;
  if (doc.automaton) return automaton_to_system(*doc.automaton);
  throw KindMismatchError("expected a single system, got a composition");
}

int cmd_solve(const SolveOptions& opt, const Globals& g, std::ostream& out, std::ostream& err) {
  Document doc = load_document(opt.file, g.semiring);
  const bool composed = doc.kind == DocumentKind::composition;

  std::vector<Vec> iterated = composed ? iterate(*doc.composition, opt.upto)
                                       : iterate(as_system(doc), opt.upto);
  std::vector<Vec> rows = iterated;
  if (opt.method == "closed") {
    rows = composed ? closed_form_solution(*doc.composition, opt.upto)
                    : closed_form_solution(as_system(doc), opt.upto);
    for (std::size_t n = 0; n < rows.size(); ++n) {
      if (rows[n] == iterated[n]) continue;
      err << "error: closed form and direct iteration disagree at n=" << n << ": "
          << to_string(rows[n]) << " vs " << to_string(iterated[n]) << "\n";
      return kVerificationFailure;
    }
  }

  if (g.out == "json") {
    Json j;
    j["semiring"] = doc.semiring->name();
    j["method"] = opt.method;
    Json jr = Json::array();
    for (std::size_t n = 0; n < rows.size(); ++n) {
      Json row;
      row["n"] = n;
      row["f"] = vec_json(rows[n]);
      jr.push_back(std::move(row));
    }
    j["rows"] = std::move(jr);
    out << dump(j);
  } else {
    out << "n\tf(n)\n";
    for (std::size_t n = 0; n < rows.size(); ++n) out << n << "\t" << to_string(rows[n]) << "\n";
  }
  return kSuccess;
}

int cmd_transform(const TransformOptions& opt, const Globals& g, std::ostream& out) {
  Document doc = load_document(opt.file, g.semiring);
  Theorem which;
  std::optional<TruncatedSeries<Vec>> direct;
  std::optional<TruncatedSeries<Vec>> theorem;
  if (doc.kind == DocumentKind::composition) {
    which = default_theorem(*doc.composition);
    direct = z_direct(*doc.composition, which, opt.order);
    theorem = z_theorem(*doc.composition, which, opt.order);
  } else {
    RecurrenceSystem sys = as_system(doc);
    which = default_theorem(sys);
    direct = z_direct(sys, which, opt.order);
    theorem = z_theorem(sys, which, opt.order);
  }
  const std::size_t k = (*direct)[0].dim();

  if (g.out == "json") {
    Json j;
    j["semiring"] = doc.semiring->name();
    j["theorem"] = static_cast<int>(which);
    j["order"] = opt.order;
    auto coefficients = [](const TruncatedSeries<Vec>& x) {
      Json c = Json::array();
      for (const auto& v : x.coefficients()) c.push_back(vec_json(v));
      return c;
    };
    j["direct"] = coefficients(*direct);
    j["theorem_form"] = coefficients(*theorem);
    j["equal"] = *direct == *theorem;
    out << dump(j);
  } else {
    out << "theorem " << static_cast<int>(which) << "\n";
    out << "z(f) direct:  " << render_series(*direct) << "\n";
    out << "z(f) theorem: " << render_series(*theorem) << "\n";
    for (std::size_t i = 0; i < k; ++i) {
      const std::string name = "f_" + std::to_string(i + 1);
      out << name << " direct:  " << render_series(component_series(*direct, i)) << "\n";
      out << name << " theorem: " << render_series(component_series(*theorem, i)) << "\n";
    }
  }
  return *direct == *theorem ? kSuccess : kVerificationFailure;
}

std::string describe(const VerificationReport& r) {
  if (r.passed) return "PASS";
  return "FAIL at order " + std::to_string(*r.mismatch_order) + ": direct " + r.direct_value +
         ", theorem " + r.theorem_value;
}

Json report_json(std::size_t trial, std::size_t k, const VerificationReport& r) {
  Json j;
  j["trial"] = trial;
  j["k"] = k;
  j["passed"] = r.passed;
  if (!r.passed) {
    j["mismatch_order"] = *r.mismatch_order;
    j["direct"] = r.direct_value;
    j["theorem"] = r.theorem_value;
  }
  return j;
}

int cmd_verify(const VerifyOptions& opt, const Globals& g, std::ostream& out) {
  std::vector<Json> results;
  std::size_t failures = 0;
  std::size_t trials = 0;
  Theorem which{};

  auto emit = [&](std::size_t trial, std::size_t k, const VerificationReport& r,
                  const std::optional<Json>& system) {
    ++trials;
    if (!r.passed) ++failures;
    Json j = report_json(trial, k, r);
    if (!r.passed && system) j["system"] = *system;
    if (g.out != "json") {
      out << "trial " << trial << " (k=" << k << "): " << describe(r) << "\n";
      if (!r.passed && system) out << "  system: " << system->dump() << "\n";
    }
    results.push_back(std::move(j));
  };

  if (opt.random) {
    if (!opt.file.empty()) throw Error("--random generates its own systems; drop the file argument");
    const int t = opt.theorem == 0 ? 1 : opt.theorem;
    which = static_cast<Theorem>(t);
    const Semiring& s = builtin_semiring(g.semiring.empty() ? "natural" : g.semiring);
    Rng rng(g.seed);
    const bool variable = which == Theorem::variable_single || which == Theorem::variable_composed;
    const bool composed =
        which == Theorem::constant_composed || which == Theorem::variable_composed;
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
      const std::size_t k = opt.dim != 0 ? opt.dim : 1 + rng.below(3);
      if (composed) {
        ComposedSystem sys = random_composed_system(s, rng, k, variable);
        emit(trial, k, verify_theorem(sys, which, opt.order), to_json(sys));
      } else {
        RecurrenceSystem sys = random_system(s, rng, k, variable);
        emit(trial, k, verify_theorem(sys, which, opt.order), to_json(sys));
      }
    }
  } else {
    if (opt.file.empty()) throw Error("verify needs a file, or --random");
    Document doc = load_document(opt.file, g.semiring);
    if (doc.kind == DocumentKind::composition) {
      which = opt.theorem == 0 ? default_theorem(*doc.composition) : static_cast<Theorem>(opt.theorem);
      emit(0, doc.composition->dim(), verify_theorem(*doc.composition, which, opt.order),
           std::nullopt);
    } else {
      RecurrenceSystem sys = as_system(doc);
      which = opt.theorem == 0 ? default_theorem(sys) : static_cast<Theorem>(opt.theorem);
      emit(0, sys.dim(), verify_theorem(sys, which, opt.order), std::nullopt);
    }
  }

  if (g.out == "json") {
    Json j;
    j["theorem"] = static_cast<int>(which);
    j["order"] = opt.order;
    j["trials"] = trials;
    j["failures"] = failures;
    j["results"] = results;
    out << dump(j);
  } else {
    out << (trials - failures) << "/" << trials << " passed (theorem " << static_cast<int>(which)
        << ", order " << opt.order << ")\n";
  }
  return failures == 0 ? kSuccess : kVerificationFailure;
}

int cmd_paths(const PathsOptions& opt, const Globals& g, std::ostream& out) {
  Document doc = load_document(opt.file, g.semiring);
  if (doc.kind == DocumentKind::composition) {
    throw KindMismatchError("paths needs an automaton or a single system");
  }
  WeightedAutomaton aut = doc.automaton ? *doc.automaton : system_to_automaton(*doc.system);
  const std::size_t from = opt.from.empty() ? 0 : aut.index(opt.from);
  PathLimits limits;
  limits.max_length = opt.max_length;

  const Semiring& s = aut.semiring();
  const auto paths = enumerate_paths(aut, from, opt.length, limits);
  const Value total = path_weight_sum(aut, from, opt.length, limits);

  if (g.out == "json") {
    Json j;
    j["from"] = aut.name(from);
    j["length"] = opt.length;
    Json jp = Json::array();
    for (const auto& p : paths) {
      Json states = Json::array({aut.name(p.start)});
      for (std::size_t e : p.edges) states.push_back(aut.name(aut.edges()[e].to));
      Json entry;
      entry["states"] = std::move(states);
      entry["weight"] = s.render(path_weight(aut, p));
      jp.push_back(std::move(entry));
    }
    j["paths"] = std::move(jp);
    j["total"] = s.render(total);
    out << dump(j);
  } else {
    for (const auto& p : paths) out << render(aut, p) << "\t" << s.render(path_weight(aut, p)) << "\n";
    out << "paths\t" << paths.size() << "\n";
    out << "total\t" << s.render(total) << "\n";
  }
  return kSuccess;
}

int cmd_convert(const ConvertOptions& opt, const Globals& g, std::ostream& out) {
  Document doc = load_document(opt.file, g.semiring);
  if (doc.kind == DocumentKind::composition) {
    throw KindMismatchError("convert works on single systems and automata, not compositions");
  }
  if (opt.to == "automaton") {
    out << dump(to_json(doc.automaton ? *doc.automaton : system_to_automaton(*doc.system)));
  } else {
    out << dump(to_json(as_system(doc)));
  }
  return kSuccess;
}

int cmd_laws(const Globals& g, std::ostream& out) {
  const Semiring& s = builtin_semiring(g.semiring.empty() ? "natural" : g.semiring);
  LawReport report = check_semiring_laws(s, default_law_samples(s));
  if (g.out == "json") {
    Json j;
    j["semiring"] = report.semiring;
    Json laws = Json::array();
    for (const auto& law : report.laws) {
      Json jl;
      jl["law"] = law.law;
      jl["passed"] = law.passed;
      jl["failures"] = law.failures;
      Json ce = Json::array();
      for (const auto& v : law.counterexample) ce.push_back(s.render(v));
      jl["counterexample"] = std::move(ce);
      laws.push_back(std::move(jl));
    }
    j["laws"] = std::move(laws);
    j["all_passed"] = report.all_passed();
    out << dump(j);
  } else {
    out << render(report);
  }
  return report.all_passed() ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiring recurrence systems, their z-transforms and automata", "zrec"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--semiring", g.semiring, "Semiring override (see `zrec semirings`)");
  app.add_option("--out", g.out, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", g.seed, "Seed for --random runs");

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Print f(0..N) for a system or composition");
  solve->fallthrough();
  solve->add_option("file", solve_opt.file)->required();
  solve->add_option("--upto", solve_opt.upto, "Last n to print");
  solve->add_option("--method", solve_opt.method, "closed (cross-checked) or iterate")
      ->check(CLI::IsMember({"closed", "iterate"}));

  TransformOptions transform_opt;
  auto* transform = app.add_subcommand("transform", "Print both forms of the z-transform");
  transform->fallthrough();
  transform->add_option("file", transform_opt.file)->required();
  transform->add_option("--order", transform_opt.order, "Truncation order");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check a series theorem coefficientwise");
  verify->fallthrough();
  verify->add_option("file", verify_opt.file);
  verify->add_option("--theorem", verify_opt.theorem, "1, 2, 3 or 4")
      ->check(CLI::Range(1, 4));
  verify->add_option("--order", verify_opt.order, "Truncation order");
  verify->add_option("--trials", verify_opt.trials, "Random systems to check");
  verify->add_flag("--random", verify_opt.random, "Check seeded random systems");
  verify->add_option("--dim", verify_opt.dim, "Dimension of random systems (0: 1..3)");

  PathsOptions paths_opt;
  auto* paths = app.add_subcommand("paths", "Enumerate length-n paths and their weights");
  paths->fallthrough();
  paths->add_option("file", paths_opt.file)->required();
  paths->add_option("--from", paths_opt.from, "Start state (default: first state)");
  paths->add_option("--length", paths_opt.length, "Path length")->required();
  paths->add_option("--max-length", paths_opt.max_length, "Enumeration bound");

  ConvertOptions convert_opt;
  auto* convert = app.add_subcommand("convert", "Convert between system and automaton files");
  convert->fallthrough();
  convert->add_option("file", convert_opt.file)->required();
  convert->add_option("--to", convert_opt.to)
      ->required()
      ->check(CLI::IsMember({"automaton", "system"}));

  auto* laws = app.add_subcommand("laws", "Check the semiring laws on sample values");
  laws->fallthrough();
  auto* semirings = app.add_subcommand("semirings", "List builtin semirings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (semirings->parsed()) {
      for (const auto& name : builtin_semiring_names()) out << name << "\n";
      return kSuccess;
    }
    if (solve->parsed()) return cmd_solve(solve_opt, g, out, err);
    if (transform->parsed()) return cmd_transform(transform_opt, g, out);
    if (verify->parsed()) return cmd_verify(verify_opt, g, out);
    if (paths->parsed()) return cmd_paths(paths_opt, g, out);
    if (convert->parsed()) return cmd_convert(convert_opt, g, out);
    if (laws->parsed()) return cmd_laws(g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace zrec::cli
