#include "jus/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jus/explore.hpp"
#include "jus/io.hpp"
#include "jus/parse.hpp"
#include "jus/proof.hpp"
#include "jus/semantics.hpp"

namespace jus {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

ConstantSpec load_cs(const std::string& spec) {
  if (spec == "empty") return ConstantSpec::empty();
  if (spec == "full") return ConstantSpec::full();
  return cs_from_json(load_json_file(spec));
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* text = std::getenv("JUS_SEED");
  if (text == nullptr || *text == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != std::string(text).size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw FormatError(std::string("JUS_SEED must be a non-negative integer, got \"") + text + "\"");
  }
}

struct Options {
  bool human = false;

  std::string model_path;
  std::string world;
  std::string formula;
  std::string out_path;
  std::string proof_path;
  std::string cs = "empty";
  std::string cs_positional;
  std::size_t max_worlds = 2;
  std::size_t max_nonnormal = 1;

  std::vector<std::string> schemas;
  std::size_t instances = 200;
  std::size_t models = 1000;
  std::size_t depth = 3;
  std::size_t sweep_worlds = 4;
  std::size_t sweep_nonnormal = 2;
  std::optional<std::uint64_t> seed;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int eval() {
    EvalContext ctx(model_from_json(load_json_file(o_.model_path)));
    const World w = world(ctx.model());
    const Formula f = parse_formula(o_.formula);
    const bool value = holds(ctx, w, f);
    if (o_.human)
      out_ << (value ? "true" : "false") << '\n';
    else
      emit({{"world", o_.world}, {"formula", print_formula(f)}, {"value", value}});
    return value ? kExitYes : kExitNo;
  }

  int update() {
    SubsetModel m = model_from_json(load_json_file(o_.model_path));
    const Formula c = parse_formula(o_.formula);
    const Term up = Term::up(c);
    {
      const EvalContext updated = EvalContext(m).push_update(c);
      std::vector<WorldSet> fresh;
      for (World w = 0; w < m.world_count(); ++w)
        fresh.push_back(m.is_normal(w) ? evidence_effective(updated, w, up) : WorldSet());
      for (World w = 0; w < m.world_count(); ++w)
        if (m.is_normal(w)) m.set_evidence(w, up, fresh[w]);
    }
    const json written = model_to_json(m);
    if (o_.out_path.empty()) {
      out_ << written.dump(o_.human ? 2 : -1) << '\n';
      return kExitYes;
    }
    save_json_file(o_.out_path, written);
    if (o_.human)
      out_ << "wrote " << o_.out_path << '\n';
    else
      emit({{"written", o_.out_path}, {"announcement", print_formula(c)}});
    return kExitYes;
  }

  int check_proof() {
    const Proof p = proof_from_json(load_json_file(o_.proof_path));
    const ConstantSpec cs = load_cs(o_.cs_positional.empty() ? o_.cs : o_.cs_positional);
    const auto failure = jus::check_proof(p, cs);
    if (o_.human) {
      if (failure)
        out_ << "step " << failure->step << ": " << failure->reason << '\n';
      else
        out_ << "ok\n";
    } else if (failure) {
      emit({{"ok", false}, {"step", failure->step}, {"reason", failure->reason}});
    } else {
      emit({{"ok", true}, {"conclusion", print_formula(p.conclusion())}});
    }
    return failure ? kExitNo : kExitYes;
  }

  int search() {
    if (o_.max_worlds < 1) throw FormatError("--max-worlds must be at least 1");
    const Formula f = parse_formula(o_.formula);
    const ConstantSpec cs = load_cs(o_.cs);
    const Formula single[] = {f};
    const std::vector<CsPair> universe = relevant_cs_universe(single, cs);
    std::vector<Formula> scope = {f};
    if (cs.mode == ConstantSpec::Mode::Explicit)
      for (const CsPair& p : universe) scope.push_back(p.formula);
    const ModelSignature sig = signature_for(scope, o_.max_worlds, o_.max_nonnormal);
    const SearchReport r = find_countermodel(f, sig, universe);
    if (o_.human) {
      if (r.found) {
        out_ << "countermodel at world " << r.model->worlds[r.world] << " after "
             << r.models_scanned << " models:\n"
             << model_to_json(*r.model).dump(2) << '\n';
      } else {
        out_ << "no countermodel within bounds (" << o_.max_worlds << " worlds, at most "
             << o_.max_nonnormal << " non-normal, " << r.models_scanned
             << " models); this is not a validity claim\n";
      }
    } else {
      json j = report_to_json(r);
      if (!r.found) j["note"] = "no countermodel within bounds; not a validity claim";
      emit(j);
    }
    return r.found ? kExitNo : kExitYes;
  }

  int validate() {
    const SubsetModel m = model_from_json(load_json_file(o_.model_path));
    std::vector<std::string> problems = validate_model(m);
    if (problems.empty() && o_.cs != "empty") {
      const ConstantSpec cs = load_cs(o_.cs);
      if (cs.mode != ConstantSpec::Mode::Empty) {
        for (const CsViolation& v : cs_violations(EvalContext(m), cs.pairs)) {
          problems.push_back("CS violation: E(" + m.worlds[v.world] + ", " +
                             print_term(v.pair.constant) + ") is not inside [[" +
                             print_formula(v.pair.formula) + "]]");
        }
      }
    }
    if (o_.human) {
      if (problems.empty()) out_ << "ok\n";
      for (const auto& p : problems) out_ << p << '\n';
    } else {
      emit({{"valid", problems.empty()}, {"violations", problems}});
    }
    return problems.empty() ? kExitYes : kExitNo;
  }

  int taut() {
    const Formula f = parse_formula(o_.formula);
    const bool value = taut_check(f);
    if (o_.human)
      out_ << (value ? "tautology" : "not a tautology") << '\n';
    else
      emit({{"formula", print_formula(f)}, {"tautology", value}});
    return value ? kExitYes : kExitNo;
  }

  int sweep() {
    const std::uint64_t seed = o_.seed ? *o_.seed : seed_from_env(kDefaultSeed);
    std::vector<Schema> schemas;
    for (const std::string& name : o_.schemas) {
      auto s = schema_from_string(name);
      if (!s) throw FormatError("unknown schema " + name);
      schemas.push_back(*s);
    }
    if (schemas.empty()) schemas.assign(std::begin(kAllSchemas), std::end(kAllSchemas));

    const ConstantSpec cs = ConstantSpec::full();
    json report = json::object();
    bool clean = true;
    for (Schema schema : schemas) {
      GeneratorOptions gen;
      gen.max_depth = o_.depth;
      SyntaxGenerator g(seed ^ (static_cast<std::uint64_t>(schema) + 1) * 0x9e3779b97f4a7c15ULL, gen);
      std::vector<Proof> theorems;
      std::vector<Formula> conclusions;
      for (std::size_t i = 0; i < o_.instances; ++i) {
        conclusions.push_back(g.axiom_instance(schema));
        theorems.push_back(Proof{{ProofStep::axiom(conclusions.back(), schema)}});
      }
      const ModelSignature sig = signature_for(conclusions, o_.sweep_worlds, o_.sweep_nonnormal);
      const SweepReport r = soundness_sweep(theorems, cs, sig, o_.models, seed);
      clean = clean && r.violation_count == 0;
      json entry = {{"instances", o_.instances},
                    {"models", r.models},
                    {"evaluations", r.evaluations},
                    {"violations", r.violation_count}};
      if (!r.violations.empty()) {
        const SweepViolation& v = r.violations.front();
        entry["example"] = {{"formula", print_formula(v.formula)},
                            {"world", v.model.worlds[v.world]},
                            {"model", model_to_json(v.model)}};
      }
      if (o_.human) {
        out_ << to_string(schema) << ": " << r.violation_count << " violations in "
             << r.evaluations << " evaluations\n";
        if (!r.violations.empty())
          out_ << "  e.g. " << print_formula(r.violations.front().formula) << " fails at "
               << r.violations.front().model.worlds[r.violations.front().world] << '\n';
      }
      report[std::string(to_string(schema))] = entry;
    }
    if (!o_.human) emit({{"seed", seed}, {"schemas", report}});
    return clean ? kExitYes : kExitNo;
  }

 private:
  World world(const SubsetModel& m) const {
    if (auto w = m.find_world(o_.world)) return *w;
    throw FormatError("unknown world \"" + o_.world + "\"");
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Justification logic with belief expansion: evaluation, proof checking and search",
               "jus"};
  app.require_subcommand(1);
  app.add_flag("--human", o.human, "Print prose instead of JSON");

  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world of a model");
  eval->add_option("model", o.model_path, "Model file")->required();
  eval->add_option("world", o.world, "World name")->required();
  eval->add_option("formula", o.formula, "Formula")->required();

  auto* update = app.add_subcommand("update", "Write the model updated by an announcement");
  update->add_option("model", o.model_path, "Model file")->required();
  update->add_option("formula", o.formula, "Announced formula")->required();
  update->add_option("--out", o.out_path, "Output model file (default: stdout)");

  auto* check = app.add_subcommand("check-proof", "Check a proof file");
  check->add_option("proof", o.proof_path, "Proof file")->required();
  check->add_option("cs-file", o.cs_positional, "CS file, or empty/full");
  check->add_option("--cs", o.cs, "CS file, or empty/full");

  auto* search = app.add_subcommand("search", "Bounded countermodel search");
  search->add_option("formula", o.formula, "Formula")->required();
  search->add_option("--max-worlds", o.max_worlds, "Largest number of worlds");
  search->add_option("--max-nonnormal", o.max_nonnormal, "Largest number of non-normal worlds");
  search->add_option("--cs", o.cs, "CS file, or empty/full");

  auto* validate = app.add_subcommand("validate", "Check model invariants and CS conformance");
  validate->add_option("model", o.model_path, "Model file")->required();
  validate->add_option("--cs", o.cs, "CS file checked against its listed pairs");

  auto* taut = app.add_subcommand("taut", "Decide whether a formula is a propositional tautology");
  taut->add_option("formula", o.formula, "Formula")->required();

  auto* sweep = app.add_subcommand("sweep", "Evaluate random axiom instances on random CS-models");
  sweep->add_option("--schema", o.schemas, "Schema to sweep (repeatable; default all)");
  sweep->add_option("--instances", o.instances, "Instances per schema");
  sweep->add_option("--models", o.models, "Random models per schema");
  sweep->add_option("--depth", o.depth, "Depth of instantiated metavariables");
  sweep->add_option("--max-worlds", o.sweep_worlds, "Largest number of worlds");
  sweep->add_option("--max-nonnormal", o.sweep_nonnormal, "Largest number of non-normal worlds");
  sweep->add_option("--seed", o.seed, "Seed (default: JUS_SEED, else 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitInput;
  }

  Runner run(o, out);
  try {
    if (eval->parsed()) return run.eval();
    if (update->parsed()) return run.update();
    if (check->parsed()) return run.check_proof();
    if (search->parsed()) return run.search();
    if (validate->parsed()) return run.validate();
    if (taut->parsed()) return run.taut();
    if (sweep->parsed()) return run.sweep();
  } catch (const InvalidModel& e) {
    err << "invalid model:\n";
    for (const auto& v : e.violations()) err << "  " << v << '\n';
    return kExitInput;
  } catch (const SourceError& e) {
    err << "parse error " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace jus
