#include "jus/builders.hpp"

#include <string>

#include "jus/parse.hpp"

namespace jus {

namespace {

Formula just(const Term& t, const Formula& f) { return Formula::justifies(t, f); }
Formula box(const Formula& c, const Formula& f) { return Formula::update(c, f); }

// (t:(a -> b) & s:a) <-> (t *[a] s):b
Formula app_instance(const Term& t, const Term& s, const Formula& a, const Formula& b) {
  return iff(and_(just(t, Formula::implies(a, b)), just(s, a)), just(Term::app(t, a, s), b));
}

void require_checked(const Proof& p, const ConstantSpec& cs) {
  if (auto failure = check_proof(p, cs))
    throw ProofError("input proof fails at step " + std::to_string(failure->step) + ": " +
                     failure->reason);
}

Term witness_constant(const ConstantSpec& cs, const Formula& f) {
  switch (cs.mode) {
    case ConstantSpec::Mode::Empty:
      throw ProofError("empty CS has no constant for " + print_formula(f));
    case ConstantSpec::Mode::Explicit:
      for (const CsPair& pair : cs.pairs)
        if (pair.formula == f) return pair.constant;
      throw ProofError("explicit CS lacks a witness constant for " + print_formula(f));
    case ConstantSpec::Mode::Full: {
      // Smallest index not already used by a constant inside f.
      std::uint64_t index = 1;
      for (std::uint64_t used : constants_in(f)) {
        if (used != index) break;
        ++index;
      }
      return Term::constant(index);
    }
  }
  throw ProofError("unknown CS mode");
}

}  // namespace

// ---------------------------------------------------------------------------
// ProofBuilder

std::size_t ProofBuilder::push(ProofStep step) {
  if (auto it = index_.find(step.formula); it != index_.end()) return it->second;
  index_.emplace(step.formula, steps_.size());
  steps_.push_back(std::move(step));
  return steps_.size() - 1;
}

std::size_t ProofBuilder::axiom(const Formula& f, Schema schema) {
  return push(ProofStep::axiom(f, schema));
}

std::size_t ProofBuilder::an(const Formula& f, const Term& constant) {
  return push(ProofStep::an(f, constant));
}

std::size_t ProofBuilder::mp(std::size_t minor, std::size_t major) {
  const Formula& imp = formula(major);
  if (imp.kind() != Formula::Kind::Implies || imp.left() != formula(minor))
    throw ProofError("modus ponens premises do not fit: " + print_formula(imp));
  return push(ProofStep::mp(imp.right(), minor, major));
}

std::vector<std::size_t> ProofBuilder::append(const Proof& p) {
  std::vector<std::size_t> map;
  map.reserve(p.steps.size());
  for (const ProofStep& step : p.steps) {
    switch (step.rule) {
      case ProofStep::Rule::Axiom:
        map.push_back(axiom(step.formula, step.schema));
        break;
      case ProofStep::Rule::AN:
        map.push_back(an(step.formula, *step.constant));
        break;
      case ProofStep::Rule::MP:
        map.push_back(mp(map.at(step.minor), map.at(step.major)));
        break;
    }
  }
  return map;
}

Proof ProofBuilder::finish(std::optional<std::size_t> conclusion) const {
  Proof p{steps_};
  if (conclusion && *conclusion + 1 != steps_.size()) p.steps.push_back(steps_.at(*conclusion));
  return p;
}

// ---------------------------------------------------------------------------
// Boolean glue

std::size_t taut_consequence(ProofBuilder& b, std::span<const std::size_t> premises,
                             const Formula& goal) {
  Formula chain = goal;
  for (auto it = premises.rbegin(); it != premises.rend(); ++it)
    chain = Formula::implies(b.formula(*it), chain);
  if (!taut_check(chain))
    throw ProofError("not a tautological consequence: " + print_formula(chain));
  std::size_t current = b.axiom(chain, Schema::Taut);
  for (std::size_t premise : premises) current = b.mp(premise, current);
  return current;
}

std::size_t derive_update_distribution(ProofBuilder& b, const Formula& c, const Formula& f,
                                       Formula& distributed) {
  switch (f.kind()) {
    case Formula::Kind::Not: {
      const std::size_t funct =
          b.axiom(iff(box(c, f), Formula::negation(box(c, f.body()))), Schema::Funct);
      Formula inner = f;
      const std::size_t ih = derive_update_distribution(b, c, f.body(), inner);
      distributed = Formula::negation(inner);
      const std::size_t premises[] = {funct, ih};
      return taut_consequence(b, premises, iff(box(c, f), distributed));
    }
    case Formula::Kind::Implies: {
      const std::size_t norm = b.axiom(
          iff(box(c, f), Formula::implies(box(c, f.left()), box(c, f.right()))), Schema::Norm);
      Formula l = f;
      Formula r = f;
      const std::size_t ih_l = derive_update_distribution(b, c, f.left(), l);
      const std::size_t ih_r = derive_update_distribution(b, c, f.right(), r);
      distributed = Formula::implies(l, r);
      const std::size_t premises[] = {norm, ih_l, ih_r};
      return taut_consequence(b, premises, iff(box(c, f), distributed));
    }
    default:
      distributed = box(c, f);
      return b.axiom(iff(distributed, distributed), Schema::Taut);
  }
}

std::size_t derive_aux(ProofBuilder& b, const Term& t, const Term& s, const Formula& a,
                       const Formula& b_formula, const std::optional<Formula>& c) {
  const Formula body = app_instance(t, s, a, b_formula);
  if (!c) return b.axiom(body, Schema::App);
  const std::size_t boxed = b.axiom(box(*c, body), Schema::App);
  Formula distributed = body;
  const std::size_t dist = derive_update_distribution(b, *c, body, distributed);
  const Formula goal = iff(and_(box(*c, just(t, Formula::implies(a, b_formula))), box(*c, just(s, a))),
                           box(*c, just(Term::app(t, a, s), b_formula)));
  const std::size_t premises[] = {boxed, dist};
  return taut_consequence(b, premises, goal);
}

// ---------------------------------------------------------------------------
// Transformers

Proof prove_box(const Proof& p, const Formula& c, const ConstantSpec& cs) {
  require_checked(p, cs);
  ProofBuilder b;
  std::vector<std::size_t> map;
  map.reserve(p.steps.size());
  for (const ProofStep& step : p.steps) {
    const Formula boxed = box(c, step.formula);
    switch (step.rule) {
      case ProofStep::Rule::Axiom:
        map.push_back(b.axiom(boxed, step.schema));
        break;
      case ProofStep::Rule::AN:
        map.push_back(b.an(boxed, *step.constant));
        break;
      case ProofStep::Rule::MP: {
        const Formula& a = p.steps[step.minor].formula;
        const Formula& imp = p.steps[step.major].formula;
        const std::size_t norm = b.axiom(
            iff(box(c, imp), Formula::implies(box(c, a), boxed)), Schema::Norm);
        const std::size_t premises[] = {norm, map[step.major], map[step.minor]};
        map.push_back(taut_consequence(b, premises, boxed));
        break;
      }
    }
  }
  return b.finish(map.back());
}

NecessitationResult prove_necessitation(const Proof& p, const ConstantSpec& cs) {
  require_checked(p, cs);
  ProofBuilder b;
  std::vector<std::size_t> map;
  std::vector<Term> terms;
  map.reserve(p.steps.size());
  terms.reserve(p.steps.size());
  for (const ProofStep& step : p.steps) {
    switch (step.rule) {
      case ProofStep::Rule::Axiom:
      case ProofStep::Rule::AN: {
        Term c = witness_constant(cs, step.formula);
        map.push_back(b.an(just(c, step.formula), c));
        terms.push_back(std::move(c));
        break;
      }
      case ProofStep::Rule::MP: {
        const Formula& a = p.steps[step.minor].formula;
        const Term& u = terms[step.major];
        const Term& v = terms[step.minor];
        const std::size_t app = b.axiom(app_instance(u, v, a, step.formula), Schema::App);
        Term combined = Term::app(u, a, v);
        const std::size_t premises[] = {app, map[step.major], map[step.minor]};
        map.push_back(taut_consequence(b, premises, just(combined, step.formula)));
        terms.push_back(std::move(combined));
        break;
      }
    }
  }
  return {terms.back(), b.finish(map.back())};
}

Proof prove_aux(const Term& t, const Term& s, const Formula& a, const Formula& b_formula,
                const std::optional<Formula>& c, const ConstantSpec& cs) {
  (void)cs;
  ProofBuilder b;
  const std::size_t last = derive_aux(b, t, s, a, b_formula, c);
  return b.finish(last);
}

Proof prove_ramsey(const Term& s, const Formula& c, const Formula& a, const ConstantSpec& cs) {
  (void)cs;
  const Formula belief = just(s, Formula::implies(c, a));
  if (!up_independent(box(c, belief)))
    throw ProofError("side condition fails: " + print_formula(box(c, belief)) +
                     " is not up-independent");
  const Term up = Term::up(c);
  ProofBuilder b;
  const std::size_t up_step = b.axiom(box(c, just(up, c)), Schema::Up);
  const std::size_t indep = b.axiom(iff(box(c, belief), belief), Schema::Indep);
  const std::size_t aux = derive_aux(b, s, up, c, a, c);
  const std::size_t premises[] = {up_step, indep, aux};
  const Formula goal = iff(belief, box(c, just(Term::app(s, c, up), a)));
  return b.finish(taut_consequence(b, premises, goal));
}

namespace {

std::size_t derive_persistence(ProofBuilder& b, const Term& t, const Formula& a, const Formula& c) {
  const Formula belief = just(t, a);
  const Formula goal = Formula::implies(belief, box(c, belief));
  if (t.kind() == Term::Kind::Up && t.formula() == c) return b.axiom(goal, Schema::Pers);
  if (t.is_atomic()) {
    if (!up_independent(box(c, belief)))
      throw ProofError("side condition fails: " + print_formula(box(c, belief)) +
                       " is not up-independent");
    const std::size_t premises[] = {b.axiom(iff(box(c, belief), belief), Schema::Indep)};
    return taut_consequence(b, premises, goal);
  }
  const Formula& annotation = t.formula();
  if (!justification_free(annotation))
    throw ProofError("annotation " + print_formula(annotation) +
                     " contains a justification subformula");
  const std::size_t right = derive_persistence(b, t.right(), annotation, c);
  const std::size_t left = derive_persistence(b, t.left(), Formula::implies(annotation, a), c);
  const std::size_t app = b.axiom(app_instance(t.left(), t.right(), annotation, a), Schema::App);
  const std::size_t aux = derive_aux(b, t.left(), t.right(), annotation, a, c);
  const std::size_t premises[] = {app, right, left, aux};
  return taut_consequence(b, premises, goal);
}

}  // namespace

Proof prove_persistence_fo(const Term& t, const Formula& a, const Formula& c,
                           const ConstantSpec& cs) {
  (void)cs;
  if (!justification_free(a))
    throw ProofError(print_formula(a) + " contains a justification subformula");
  ProofBuilder b;
  return b.finish(derive_persistence(b, t, a, c));
}

}  // namespace jus
