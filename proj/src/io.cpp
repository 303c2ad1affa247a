#include "jus/io.hpp"

#include <fstream>
#include <initializer_list>
#include <string_view>

#include "jus/parse.hpp"

namespace jus {

using nlohmann::json;

namespace {

void only_keys(const json& j, std::string_view what, std::initializer_list<std::string_view> keys) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (std::string_view k : keys) known = known || key == k;
    if (!known) throw FormatError("unknown key \"" + key + "\" in " + std::string(what));
  }
}

Formula formula_field(const std::string& text, std::string_view where) {
  try {
    return parse_formula(text);
  } catch (const SourceError& e) {
    throw FormatError(std::string(where) + ": " + e.what());
  }
}

Term term_field(const std::string& text, std::string_view where) {
  try {
    return parse_term(text);
  } catch (const SourceError& e) {
    throw FormatError(std::string(where) + ": " + e.what());
  }
}

World world_field(const SubsetModel& m, const std::string& name, std::string_view where) {
  if (auto w = m.find_world(name)) return *w;
  throw FormatError(std::string(where) + ": undeclared world \"" + name + "\"");
}

const json& object_field(const json& j, std::string_view where) {
  if (!j.is_object()) throw FormatError(std::string(where) + " must be a JSON object");
  return j;
}

bool bool_field(const json& j, std::string_view where) {
  if (!j.is_boolean()) throw FormatError(std::string(where) + " must be true or false");
  return j.get<bool>();
}

std::string string_field(const json& j, std::string_view where) {
  if (!j.is_string()) throw FormatError(std::string(where) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Models

SubsetModel model_from_json(const json& j) {
  only_keys(j, "model", {"worlds", "normal", "v0", "v1", "evidence", "evidence_default"});
  if (!j.contains("worlds") || !j["worlds"].is_array())
    throw FormatError("model needs a \"worlds\" array");
  std::vector<std::string> names;
  for (const json& w : j["worlds"]) names.push_back(string_field(w, "world name"));
  SubsetModel m(std::move(names), 0);

  if (j.contains("normal")) {
    if (!j["normal"].is_array()) throw FormatError("\"normal\" must be an array");
    for (const json& w : j["normal"]) m.normal.set(world_field(m, string_field(w, "normal"), "normal"));
  }
  if (j.contains("v0")) {
    for (const auto& [name, row] : object_field(j["v0"], "v0").items()) {
      const World w = world_field(m, name, "v0");
      for (const auto& [prop, value] : object_field(row, "v0 row").items()) {
        const Formula p = formula_field(prop, "v0");
        if (p.kind() != Formula::Kind::Prop)
          throw FormatError("v0 keys must be propositions, got \"" + prop + "\"");
        m.set_v0(w, p.index(), bool_field(value, "v0 value"));
      }
    }
  }
  if (j.contains("v1")) {
    for (const auto& [name, row] : object_field(j["v1"], "v1").items()) {
      const World w = world_field(m, name, "v1");
      for (const auto& [text, value] : object_field(row, "v1 row").items())
        m.set_v1(w, formula_field(text, "v1"), bool_field(value, "v1 value"));
    }
  }
  if (j.contains("evidence")) {
    for (const auto& [name, row] : object_field(j["evidence"], "evidence").items()) {
      const World w = world_field(m, name, "evidence");
      for (const auto& [text, members] : object_field(row, "evidence row").items()) {
        if (!members.is_array()) throw FormatError("evidence sets must be arrays of world names");
        WorldSet s = m.empty_set();
        for (const json& u : members) s.set(world_field(m, string_field(u, "evidence member"), "evidence"));
        m.set_evidence(w, term_field(text, "evidence"), std::move(s));
      }
    }
  }
  if (j.contains("evidence_default")) {
    const std::string d = string_field(j["evidence_default"], "evidence_default");
    if (d == "all")
      m.evidence_default = EvidenceDefault::All;
    else if (d == "empty")
      m.evidence_default = EvidenceDefault::Empty;
    else
      throw FormatError("evidence_default must be \"all\" or \"empty\"");
  }
  return m;
}

namespace {

json world_list(const SubsetModel& m, const WorldSet& s) {
  json out = json::array();
  for (World u = s.find_first(); u != WorldSet::npos; u = s.find_next(u)) out.push_back(m.worlds[u]);
  return out;
}

}  // namespace

json model_to_json(const SubsetModel& m) {
  json j;
  j["worlds"] = m.worlds;
  j["normal"] = world_list(m, m.normal);
  json v0 = json::object();
  json v1 = json::object();
  json evidence = json::object();
  for (World w = 0; w < m.world_count(); ++w) {
    const std::string& name = m.worlds[w];
    if (!m.v0[w].empty()) {
      json row = json::object();
      for (const auto& [prop, value] : m.v0[w]) row["P" + std::to_string(prop)] = value;
      v0[name] = row;
    }
    if (!m.v1[w].empty()) {
      // Sorted by printed form so output is reproducible.
      std::map<std::string, bool> sorted;
      for (const auto& [f, value] : m.v1[w]) sorted[print_formula(f)] = value;
      v1[name] = sorted;
    }
    if (!m.evidence[w].empty()) {
      json row = json::object();
      for (const auto& [t, members] : m.evidence[w]) row[print_term(t)] = world_list(m, members);
      evidence[name] = row;
    }
  }
  j["v0"] = v0;
  j["v1"] = v1;
  j["evidence"] = evidence;
  j["evidence_default"] = m.evidence_default == EvidenceDefault::All ? "all" : "empty";
  return j;
}

// ---------------------------------------------------------------------------
// Constant specifications

ConstantSpec cs_from_json(const json& j) {
  only_keys(j, "CS file", {"mode", "pairs"});
  if (!j.contains("mode")) throw FormatError("CS file needs a \"mode\"");
  const std::string mode = string_field(j["mode"], "mode");
  ConstantSpec cs;
  if (mode == "empty")
    cs.mode = ConstantSpec::Mode::Empty;
  else if (mode == "explicit")
    cs.mode = ConstantSpec::Mode::Explicit;
  else if (mode == "full")
    cs.mode = ConstantSpec::Mode::Full;
  else
    throw FormatError("CS mode must be empty, explicit or full");
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) throw FormatError("\"pairs\" must be an array");
    for (const json& pair : j["pairs"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw FormatError("each CS pair must be [\"<constant>\", \"<formula>\"]");
      const Term c = term_field(string_field(pair[0], "CS constant"), "CS constant");
      if (c.kind() != Term::Kind::Constant)
        throw FormatError("CS pairs must start with a constant, got " + print_term(c));
      cs.pairs.push_back({c, formula_field(string_field(pair[1], "CS formula"), "CS formula")});
    }
  }
  if (cs.mode == ConstantSpec::Mode::Empty && !cs.pairs.empty())
    throw FormatError("empty CS cannot list pairs");
  return cs;
}

json cs_to_json(const ConstantSpec& cs) {
  json pairs = json::array();
  for (const CsPair& p : cs.pairs) pairs.push_back({print_term(p.constant), print_formula(p.formula)});
  return {{"mode", std::string(to_string(cs.mode))}, {"pairs", pairs}};
}

// ---------------------------------------------------------------------------
// Proofs

Proof proof_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("proof file must be a JSON array of steps");
  Proof p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "step " + std::to_string(i + 1);
    const json& s = j[i];
    only_keys(s, where, {"formula", "rule", "schema", "constant", "premises"});
    if (!s.contains("formula") || !s.contains("rule"))
      throw FormatError(where + " needs \"formula\" and \"rule\"");
    const Formula f = formula_field(string_field(s["formula"], where), where);
    const std::string rule = string_field(s["rule"], where);
    if (rule == "axiom") {
      if (!s.contains("schema")) throw FormatError(where + ": axiom step needs a schema");
      auto schema = schema_from_string(string_field(s["schema"], where));
      if (!schema) throw FormatError(where + ": unknown schema " + s["schema"].dump());
      p.steps.push_back(ProofStep::axiom(f, *schema));
    } else if (rule == "an") {
      if (!s.contains("constant")) throw FormatError(where + ": an step needs a constant");
      p.steps.push_back(ProofStep::an(f, term_field(string_field(s["constant"], where), where)));
    } else if (rule == "mp") {
      if (!s.contains("premises") || !s["premises"].is_array() || s["premises"].size() != 2)
        throw FormatError(where + ": mp step needs two premises [minor, major]");
      std::size_t idx[2];
      for (int k = 0; k < 2; ++k) {
        const json& v = s["premises"][k];
        if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
          throw FormatError(where + ": premises are positive step numbers");
        idx[k] = v.get<std::size_t>() - 1;
      }
      p.steps.push_back(ProofStep::mp(f, idx[0], idx[1]));
    } else {
      throw FormatError(where + ": rule must be axiom, an or mp");
    }
  }
  return p;
}

json proof_to_json(const Proof& p) {
  json out = json::array();
  for (const ProofStep& s : p.steps) {
    json step = {{"formula", print_formula(s.formula)}};
    switch (s.rule) {
      case ProofStep::Rule::Axiom:
        step["rule"] = "axiom";
        step["schema"] = std::string(to_string(s.schema));
        break;
      case ProofStep::Rule::AN:
        step["rule"] = "an";
        step["constant"] = print_term(*s.constant);
        break;
      case ProofStep::Rule::MP:
        step["rule"] = "mp";
        step["premises"] = {s.minor + 1, s.major + 1};
        break;
    }
    out.push_back(std::move(step));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

json signature_to_json(const ModelSignature& sig) {
  json props = json::array();
  for (auto p : sig.propositions) props.push_back("P" + std::to_string(p));
  json atoms = json::array();
  for (const Term& t : sig.atoms) atoms.push_back(print_term(t));
  json support = json::array();
  for (const Formula& f : sig.v1_support) support.push_back(print_formula(f));
  return {{"max_worlds", sig.max_worlds},
          {"max_nonnormal", sig.max_nonnormal},
          {"propositions", props},
          {"atoms", atoms},
          {"v1_support", support}};
}

json report_to_json(const SearchReport& r) {
  if (r.found && r.model)
    return {{"outcome", "countermodel"},
            {"world", r.model->worlds[r.world]},
            {"model", model_to_json(*r.model)},
            {"models_scanned", r.models_scanned}};
  return {{"outcome", "exhausted"},
          {"bounds", signature_to_json(r.bounds)},
          {"models_scanned", r.models_scanned}};
}

}  // namespace jus
