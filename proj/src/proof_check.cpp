#include "jus/parse.hpp"
#include "jus/proof.hpp"

namespace jus {

namespace {

std::optional<std::string> check_step(const Proof& p, std::size_t i, const ConstantSpec& cs) {
  const ProofStep& step = p.steps[i];
  switch (step.rule) {
    case ProofStep::Rule::Axiom: {
      const auto matches = match_axiom(step.formula);
      if (matches.empty()) return "not an axiom";
      for (const auto& m : matches)
        if (m.schema == step.schema) return std::nullopt;
      return "not an instance of " + std::string(to_string(step.schema));
    }
    case ProofStep::Rule::AN: {
      if (!step.constant || step.constant->kind() != Term::Kind::Constant)
        return "AN needs a constant";
      auto [tau, rest] = strip_updates(step.formula);
      if (rest.kind() != Formula::Kind::Justifies || rest.term() != *step.constant)
        return "AN conclusion must have the form [tau]" + print_term(*step.constant) + " : A";
      if (!cs_contains(cs, *step.constant, rest.body())) return "not in CS";
      return std::nullopt;
    }
    case ProofStep::Rule::MP: {
      if (step.minor >= i || step.major >= i) return "MP premises must precede the step";
      const Formula expected =
          Formula::implies(p.steps[step.minor].formula, step.formula);
      if (p.steps[step.major].formula != expected)
        return "MP premises do not match: step " + std::to_string(step.major + 1) +
               " is not (step " + std::to_string(step.minor + 1) + " -> conclusion)";
      return std::nullopt;
    }
  }
  return "unknown rule";
}

}  // namespace

std::optional<CheckFailure> check_proof(const Proof& p, const ConstantSpec& cs) {
  if (p.steps.empty()) return CheckFailure{0, "empty proof"};
  for (std::size_t i = 0; i < p.steps.size(); ++i)
    if (auto reason = check_step(p, i, cs)) return CheckFailure{i + 1, *reason};
  return std::nullopt;
}

std::vector<CsPair> an_pairs(const Proof& p) {
  std::vector<CsPair> out;
  for (const ProofStep& step : p.steps) {
    if (step.rule != ProofStep::Rule::AN || !step.constant) continue;
    auto [tau, rest] = strip_updates(step.formula);
    if (rest.kind() != Formula::Kind::Justifies) continue;
    CsPair pair{*step.constant, rest.body()};
    bool seen = false;
    for (const CsPair& q : out) seen = seen || (q.constant == pair.constant && q.formula == pair.formula);
    if (!seen) out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace jus
