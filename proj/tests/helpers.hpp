#ifndef JUS_TESTS_HELPERS_HPP
#define JUS_TESTS_HELPERS_HPP

#include <string_view>
#include <vector>

#include "jus/builders.hpp"
#include "jus/explore.hpp"
#include "jus/model.hpp"
#include "jus/parse.hpp"
#include "jus/syntax.hpp"

namespace jus::test {

inline Formula F(std::string_view text) { return parse_formula(text); }
inline Term T(std::string_view text) { return parse_term(text); }

// W = {w, v}, W0 = {w}, P1 true at w and false at v, E(w, x1) = {w},
// E(w, up(P1)) = {w, v}.
inline SubsetModel belief_loss_model() {
  SubsetModel m({"w", "v"}, 1);
  m.set_v0(0, 1, true);
  m.set_v1(1, F("P1"), false);
  m.set_evidence(0, T("x1"), m.make_set({0}));
  m.set_evidence(0, T("up(P1)"), m.make_set({0, 1}));
  return m;
}

// Exhaustive search over small models of f's signature, restricted to
// CS-models for the relevant slice of cs.
inline SearchReport bounded_search(const Formula& f, const ConstantSpec& cs, std::size_t max_worlds = 2,
                                   std::size_t max_nonnormal = 1) {
  const Formula scope[] = {f};
  return find_countermodel(f, signature_for(scope, max_worlds, max_nonnormal),
                           relevant_cs_universe(scope, cs));
}

// A theorem: a few axiom instances glued by Boolean reasoning.
inline Proof random_base_theorem(SyntaxGenerator& gen, const std::vector<Schema>& schemas) {
  ProofBuilder b;
  std::vector<std::size_t> steps;
  std::vector<Formula> parts;
  const std::size_t n = 1 + gen.rng()() % 3;
  for (std::size_t i = 0; i < n; ++i) {
    const Schema s = schemas[gen.rng()() % schemas.size()];
    steps.push_back(b.axiom(gen.axiom_instance(s, 1), s));
    parts.push_back(b.formula(steps.back()));
  }
  Formula goal = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    goal = gen.rng()() % 2 ? and_(goal, parts[i]) : or_(gen.formula(2), parts[i]);
  return b.finish(taut_consequence(b, steps, goal));
}

// The same, optionally pushed through an update or a justification.
inline Proof random_theorem(SyntaxGenerator& gen, const std::vector<Schema>& schemas,
                            const ConstantSpec& cs) {
  Proof p = random_base_theorem(gen, schemas);
  switch (gen.rng()() % 3) {
    case 0:
      return prove_box(p, gen.formula(2), cs);
    case 1:
      return prove_necessitation(p, cs).proof;
    default:
      return p;
  }
}

}  // namespace jus::test

#endif  // JUS_TESTS_HELPERS_HPP
