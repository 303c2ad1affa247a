#ifndef JUS_PROOF_HPP
#define JUS_PROOF_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jus/model.hpp"
#include "jus/syntax.hpp"

namespace jus {

enum class Schema { Taut, App, Indep, Funct, Norm, Up, Pers };

inline constexpr Schema kAllSchemas[] = {Schema::Taut,  Schema::App, Schema::Indep, Schema::Funct,
                                         Schema::Norm,  Schema::Up,  Schema::Pers};

std::string_view to_string(Schema s);
std::optional<Schema> schema_from_string(std::string_view name);

// Propositional tautology check. Atoms are the maximal subformulas not
// headed by ~ or ->: propositions, justifications and updates.
bool taut_check(const Formula& f);

// One way of reading a formula as [prefix] body with body an instance of
// schema. The metavariables of the match are recorded so the instance can be
// rebuilt independently.
struct AxiomInstance {
  Schema schema;
  UpdateSequence prefix;
  Formula body;
  std::vector<Formula> formulas;  // A, B, C as used by the schema
  std::vector<Term> terms;        // t, s for App
};

// Every (schema, prefix split) under which f is an axiom. Empty if none.
std::vector<AxiomInstance> match_axiom(const Formula& f);

bool is_axiom(const Formula& f);

// Shape [t1]c1 : ... : [tn]cn : A with n >= 0 and A an axiom.
bool has_cs_shape(const Formula& f);

bool cs_contains(const ConstantSpec& cs, const Term& constant, const Formula& f);

// ---------------------------------------------------------------------------
// Proofs

struct ProofStep {
  enum class Rule { Axiom, AN, MP };

  Formula formula;
  Rule rule;
  Schema schema = Schema::Taut;    // Axiom
  std::optional<Term> constant;    // AN
  std::size_t minor = 0;           // MP: index of A (0-based)
  std::size_t major = 0;           // MP: index of A -> B (0-based)

  static ProofStep axiom(Formula f, Schema s) { return {std::move(f), Rule::Axiom, s, {}, 0, 0}; }
  static ProofStep an(Formula f, Term c) { return {std::move(f), Rule::AN, Schema::Taut, std::move(c), 0, 0}; }
  static ProofStep mp(Formula f, std::size_t minor, std::size_t major) {
    return {std::move(f), Rule::MP, Schema::Taut, {}, minor, major};
  }
};

struct Proof {
  std::vector<ProofStep> steps;

  const Formula& conclusion() const { return steps.back().formula; }
};

struct CheckFailure {
  std::size_t step;  // 1-based
  std::string reason;
};

// std::nullopt when every step is justified.
std::optional<CheckFailure> check_proof(const Proof& p, const ConstantSpec& cs);

// Pairs (c, A) used by the AN steps of p, where the step concludes [tau]c:A.
std::vector<CsPair> an_pairs(const Proof& p);

class ProofError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jus

#endif  // JUS_PROOF_HPP
