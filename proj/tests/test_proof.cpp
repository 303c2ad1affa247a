#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "jus/builders.hpp"
#include "jus/explore.hpp"
#include "jus/proof.hpp"

namespace jus {
namespace {

using test::F;
using test::T;

// ---------------------------------------------------------------------------
// Independent oracles

// Truth-table check over the maximal non-Boolean subformulas.
class TruthTable {
 public:
  static bool tautology(const Formula& f) {
    std::vector<Formula> atoms;
    collect(f, atoms);
    const std::size_t n = atoms.size();
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row)
      if (!value(f, atoms, row)) return false;
    return true;
  }

 private:
  static void collect(const Formula& f, std::vector<Formula>& atoms) {
    if (f.kind() == Formula::Kind::Not) return collect(f.body(), atoms);
    if (f.kind() == Formula::Kind::Implies) {
      collect(f.left(), atoms);
      collect(f.right(), atoms);
      return;
    }
    for (const Formula& a : atoms)
      if (a == f) return;
    atoms.push_back(f);
  }

  static bool value(const Formula& f, const std::vector<Formula>& atoms, std::uint64_t row) {
    if (f.kind() == Formula::Kind::Not) return !value(f.body(), atoms, row);
    if (f.kind() == Formula::Kind::Implies)
      return !value(f.left(), atoms, row) || value(f.right(), atoms, row);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == f) return (row >> i & 1U) != 0;
    return false;
  }
};

Formula app_body(const Term& t, const Term& s, const Formula& a, const Formula& b) {
  return iff(and_(Formula::justifies(t, Formula::implies(a, b)), Formula::justifies(s, a)),
             Formula::justifies(Term::app(t, a, s), b));
}
Formula indep_body(const Formula& c, const Formula& a) { return iff(Formula::update(c, a), a); }
Formula funct_body(const Formula& c, const Formula& a) {
  return iff(Formula::update(c, Formula::negation(a)), Formula::negation(Formula::update(c, a)));
}
Formula norm_body(const Formula& c, const Formula& a, const Formula& b) {
  return iff(Formula::update(c, Formula::implies(a, b)),
             Formula::implies(Formula::update(c, a), Formula::update(c, b)));
}
Formula up_body(const Formula& a) {
  return Formula::update(a, Formula::justifies(Term::up(a), a));
}
Formula pers_body(const Formula& a, const Formula& b) {
  const Formula belief = Formula::justifies(Term::up(a), b);
  return Formula::implies(belief, Formula::update(a, belief));
}

// Rebuilds the formula a match describes from its metavariables alone.
Formula rebuild(const AxiomInstance& m) {
  const auto& f = m.formulas;
  Formula body = m.body;
  switch (m.schema) {
    case Schema::Taut:
      body = f.at(0);
      break;
    case Schema::App:
      body = app_body(m.terms.at(0), m.terms.at(1), f.at(0), f.at(1));
      break;
    case Schema::Indep:
      body = indep_body(f.at(0), f.at(1));
      break;
    case Schema::Funct:
      body = funct_body(f.at(0), f.at(1));
      break;
    case Schema::Norm:
      body = norm_body(f.at(0), f.at(1), f.at(2));
      break;
    case Schema::Up:
      body = up_body(f.at(0));
      break;
    case Schema::Pers:
      body = pers_body(f.at(0), f.at(1));
      break;
  }
  return prefix(m.prefix, body);
}

// All formulas and terms of each node-count size over P1, c1, x1.
struct SizedSyntax {
  std::vector<std::vector<Formula>> formulas;
  std::vector<std::vector<Term>> terms;

  explicit SizedSyntax(std::size_t max) : formulas(max + 1), terms(max + 1) {
    for (std::size_t n = 1; n <= max; ++n) {
      if (n == 1) {
        formulas[1].push_back(Formula::prop(1));
        terms[1] = {Term::constant(1), Term::variable(1)};
        continue;
      }
      for (const Formula& a : formulas[n - 1]) {
        formulas[n].push_back(Formula::negation(a));
        terms[n].push_back(Term::up(a));
      }
      for (std::size_t i = 1; i + 1 < n; ++i) {
        for (const Formula& a : formulas[i])
          for (const Formula& b : formulas[n - 1 - i]) {
            formulas[n].push_back(Formula::implies(a, b));
            formulas[n].push_back(Formula::update(a, b));
          }
        for (const Term& t : terms[i])
          for (const Formula& b : formulas[n - 1 - i]) formulas[n].push_back(Formula::justifies(t, b));
      }
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; i + j + 1 < n; ++j)
          for (const Term& l : terms[i])
            for (const Formula& a : formulas[j])
              for (const Term& r : terms[n - 1 - i - j]) terms[n].push_back(Term::app(l, a, r));
    }
  }

  std::vector<Formula> formulas_upto(std::size_t n) const {
    std::vector<Formula> out;
    for (std::size_t k = 1; k <= n && k < formulas.size(); ++k)
      out.insert(out.end(), formulas[k].begin(), formulas[k].end());
    return out;
  }
  std::vector<Term> terms_upto(std::size_t n) const {
    std::vector<Term> out;
    for (std::size_t k = 1; k <= n && k < terms.size(); ++k)
      out.insert(out.end(), terms[k].begin(), terms[k].end());
    return out;
  }
};

using MatchSet = std::set<std::pair<int, std::size_t>>;  // (schema, prefix length)

MatchSet matches_without_taut(const Formula& f) {
  MatchSet out;
  for (const AxiomInstance& m : match_axiom(f))
    if (m.schema != Schema::Taut) out.insert({static_cast<int>(m.schema), m.prefix.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Tautologies

TEST(TautCheck, Examples) {
  EXPECT_TRUE(taut_check(F("P1 -> P1")));
  EXPECT_TRUE(taut_check(F("[P1]P2 | ~[P1]P2")));
  EXPECT_FALSE(taut_check(F("up(P1) : P1")));
  EXPECT_FALSE(taut_check(F("P1")));
  EXPECT_TRUE(taut_check(F("(x1 : P1 -> [P2]P1) -> (~[P2]P1 -> ~x1 : P1)")));
}

TEST(TautCheck, AgreesWithTruthTables) {
  GeneratorOptions options;
  options.propositions = 3;
  options.max_depth = 5;
  SyntaxGenerator gen(31, options);
  int tautologies = 0;
  for (int i = 0; i < 4000; ++i) {
    Formula f = gen.formula();
    if (i % 2 == 0) f = Formula::implies(f, Formula::implies(gen.formula(2), f));
    const bool expected = TruthTable::tautology(f);
    tautologies += expected;
    ASSERT_EQ(taut_check(f), expected) << print_formula(f);
  }
  EXPECT_GT(tautologies, 1000);
}

// ---------------------------------------------------------------------------
// Axiom matching

TEST(MatchAxiom, UpWithPrefix) {
  const auto ms = match_axiom(F("[P2][P1] up(P1) : P1"));
  ASSERT_EQ(ms.size(), 1U);
  EXPECT_EQ(ms[0].schema, Schema::Up);
  EXPECT_EQ(ms[0].prefix, (UpdateSequence{F("P2")}));
}

TEST(MatchAxiom, IndepInstance) {
  const auto ms = match_axiom(F("[P1](x1:P1) <-> (x1:P1)"));
  ASSERT_EQ(ms.size(), 1U);
  EXPECT_EQ(ms[0].schema, Schema::Indep);
  EXPECT_TRUE(ms[0].prefix.empty());
}

TEST(MatchAxiom, IndepSideCondition) {
  EXPECT_TRUE(match_axiom(F("[P1](up(P1):P1) <-> (up(P1):P1)")).empty());
}

TEST(MatchAxiom, OtherSchemas) {
  auto has = [](const char* text, Schema s) {
    for (const auto& m : match_axiom(F(text)))
      if (m.schema == s) return true;
    return false;
  };
  EXPECT_TRUE(has("(c1 : (P1 -> P2) & x1 : P1) <-> (c1 *[P1] x1) : P2", Schema::App));
  EXPECT_TRUE(has("[P3]([P1]~P2 <-> ~[P1]P2)", Schema::Funct));
  EXPECT_TRUE(has("[P1](P2 -> P3) <-> ([P1]P2 -> [P1]P3)", Schema::Norm));
  EXPECT_TRUE(has("up(P1) : x1 : P2 -> [P1] up(P1) : x1 : P2", Schema::Pers));
  EXPECT_TRUE(has("[P2](P1 -> P1)", Schema::Taut));
  EXPECT_FALSE(has("up(P1) : P2 -> [P2] up(P1) : P2", Schema::Pers));
  EXPECT_FALSE(has("(c1 : (P1 -> P2) & x1 : P1) <-> (c1 *[P2] x1) : P2", Schema::App));
}

TEST(MatchAxiom, MatchesRebuildExactly) {
  SyntaxGenerator gen(5);
  for (int i = 0; i < 300; ++i) {
    for (Schema s : kAllSchemas) {
      const Formula f = gen.axiom_instance(s);
      const auto ms = match_axiom(f);
      bool found = false;
      for (const auto& m : ms) {
        ASSERT_EQ(rebuild(m), f) << print_formula(f);
        found = found || m.schema == s;
      }
      ASSERT_TRUE(found) << to_string(s) << ": " << print_formula(f);
    }
  }
}

// Every formula up to size 11 over P1, c1, x1. At this size only Up, Pers and
// Taut can occur; the brute-force side builds all their instances.
TEST(MatchAxiom, ExhaustiveAgainstInstantiation) {
  constexpr std::size_t kMax = 11;
  const SizedSyntax syntax(kMax);
  std::unordered_map<Formula, MatchSet, FormulaHash> expected;

  std::vector<std::vector<Formula>> upto(kMax + 1);
  for (std::size_t k = 0; k <= kMax; ++k) upto[k] = syntax.formulas_upto(k);

  std::function<void(const Formula&, Schema, std::size_t)> wrap = [&](const Formula& f, Schema s,
                                                                       std::size_t k) {
    if (size(f) > kMax) return;
    expected[f].insert({static_cast<int>(s), k});
    if (size(f) + 2 > kMax) return;
    for (const Formula& c : upto[kMax - size(f) - 1]) wrap(Formula::update(c, f), s, k + 1);
  };
  for (const Formula& a : upto[kMax]) {
    if (size(a) + 3 > kMax) break;
    wrap(up_body(a), Schema::Up, 0);
    for (const Formula& b : upto[kMax]) {
      if (6 + 3 * size(a) + 2 * size(b) > kMax) break;
      wrap(pers_body(a, b), Schema::Pers, 0);
    }
  }

  std::size_t checked = 0;
  for (const Formula& f : upto[kMax]) {
    ++checked;
    const auto it = expected.find(f);
    ASSERT_EQ(matches_without_taut(f), it == expected.end() ? MatchSet{} : it->second)
        << print_formula(f);
    // Taut under each prefix split.
    std::set<std::size_t> taut_splits;
    for (const auto& m : match_axiom(f))
      if (m.schema == Schema::Taut) taut_splits.insert(m.prefix.size());
    Formula rest = f;
    for (std::size_t k = 0;; ++k) {
      ASSERT_EQ(taut_splits.count(k) == 1, TruthTable::tautology(rest)) << print_formula(f);
      if (rest.kind() != Formula::Kind::Update) break;
      rest = rest.body();
    }
  }
  EXPECT_EQ(checked, 165679U);
}

// The biconditional schemas are too large for the exhaustive run. Here both
// sides work over small metavariable pools: instances, plus templates whose
// repeated metavariables are filled independently (mostly near misses).
TEST(MatchAxiom, BiconditionalSchemasAgainstInstantiationPool) {
  const SizedSyntax syntax(4);
  const std::vector<Formula> fs = syntax.formulas_upto(3);
  const std::vector<Formula> fs4 = syntax.formulas_upto(4);
  const std::vector<Term> ts = syntax.terms_upto(4);
  const std::vector<UpdateSequence> prefixes = {{}, {F("P1")}, {F("~P1")}};

  std::map<int, FormulaSet> instances;
  for (const auto& tau : prefixes) {
    for (const Term& t : ts)
      for (const Term& s : ts)
        for (const Formula& a : fs)
          for (const Formula& b : fs) instances[1].insert(prefix(tau, app_body(t, s, a, b)));
    for (const Formula& c : fs4)
      for (const Formula& a : fs4) {
        if (up_independent(Formula::update(c, a))) instances[2].insert(prefix(tau, indep_body(c, a)));
        instances[3].insert(prefix(tau, funct_body(c, a)));
        for (const Formula& b : fs) instances[4].insert(prefix(tau, norm_body(c, a, b)));
      }
  }

  std::mt19937_64 rng(8);
  auto pick_f = [&](const std::vector<Formula>& pool) { return pool[rng() % pool.size()]; };
  auto pick_t = [&] { return ts[rng() % ts.size()]; };
  std::map<int, int> positives;
  for (int i = 0; i < 40000; ++i) {
    const int schema = 1 + static_cast<int>(rng() % 4);
    const auto& tau = prefixes[rng() % prefixes.size()];
    const bool exact = rng() % 2 == 0;
    Formula f = F("P1");
    switch (schema) {
      case 1: {
        const Term t = pick_t(), s = pick_t();
        const Formula a = pick_f(fs), b = pick_f(fs);
        const Term t2 = exact ? t : pick_t(), s2 = exact ? s : pick_t();
        const Formula a2 = exact ? a : pick_f(fs), a3 = exact ? a : pick_f(fs);
        const Formula b2 = exact ? b : pick_f(fs);
        f = iff(and_(Formula::justifies(t, Formula::implies(a, b)), Formula::justifies(s, a2)),
                Formula::justifies(Term::app(t2, a3, s2), b2));
        break;
      }
      case 2: {
        const Formula c = pick_f(fs4);
        const Formula a = rng() % 3 == 0 ? Formula::justifies(Term::up(c), pick_f(fs)) : pick_f(fs4);
        f = iff(Formula::update(c, a), exact ? a : pick_f(fs4));
        break;
      }
      case 3: {
        const Formula c = pick_f(fs4), a = pick_f(fs4);
        f = iff(Formula::update(c, Formula::negation(a)),
                Formula::negation(Formula::update(exact ? c : pick_f(fs4), exact ? a : pick_f(fs4))));
        break;
      }
      default: {
        const Formula c = pick_f(fs4), a = pick_f(fs4), b = pick_f(fs);
        f = iff(Formula::update(c, Formula::implies(a, b)),
                Formula::implies(Formula::update(exact ? c : pick_f(fs4), a),
                                 Formula::update(c, exact ? b : pick_f(fs))));
        break;
      }
    }
    f = prefix(tau, f);
    const Schema s = static_cast<Schema>(schema);
    bool matched = false;
    for (const auto& m : match_axiom(f)) matched = matched || (m.schema == s && m.prefix == tau);
    const bool expected = instances[schema].count(f) == 1;
    positives[schema] += expected;
    ASSERT_EQ(matched, expected) << to_string(s) << ": " << print_formula(f);
  }
  for (int schema = 1; schema <= 4; ++schema) EXPECT_GT(positives[schema], 1000);
}

// ---------------------------------------------------------------------------
// Constant specifications

TEST(CsContains, Examples) {
  const ConstantSpec full = ConstantSpec::full();
  EXPECT_TRUE(cs_contains(full, T("c1"), F("P1 -> (P2 -> P1)")));
  EXPECT_TRUE(cs_contains(full, T("c2"), F("[P1] c1 : [P2] up(P2) : P2")));
  EXPECT_FALSE(cs_contains(full, T("c1"), F("P1")));
  EXPECT_FALSE(cs_contains(full, T("x1"), F("P1 -> P1")));
  EXPECT_FALSE(cs_contains(full, T("c2"), F("x1 : (P1 -> P1)")));
  EXPECT_FALSE(cs_contains(ConstantSpec::explicit_pairs({}), T("c1"), F("P1 -> P1")));
  EXPECT_FALSE(cs_contains(ConstantSpec::empty(), T("c1"), F("P1 -> P1")));
  const ConstantSpec ex = ConstantSpec::explicit_pairs({{T("c1"), F("P1 -> P1")}});
  EXPECT_TRUE(cs_contains(ex, T("c1"), F("P1 -> P1")));
  EXPECT_FALSE(cs_contains(ex, T("c2"), F("P1 -> P1")));
}

// ---------------------------------------------------------------------------
// Proof checking

TEST(CheckProof, SingleAxiomStep) {
  const Proof p{{ProofStep::axiom(F("[P1] up(P1) : P1"), Schema::Up)}};
  EXPECT_FALSE(check_proof(p, ConstantSpec::empty()));
}

TEST(CheckProof, ModusPonensOverTautologies) {
  const Formula a = F("P1 -> P1");
  const Formula ab = F("(P1 -> P1) -> (P2 -> P2)");
  const Proof p{{ProofStep::axiom(a, Schema::Taut), ProofStep::axiom(ab, Schema::Taut),
                 ProofStep::mp(F("P2 -> P2"), 0, 1)}};
  EXPECT_FALSE(check_proof(p, ConstantSpec::empty()));
}

TEST(CheckProof, AnOutsideCs) {
  const Proof p{{ProofStep::an(F("c1 : P1"), T("c1"))}};
  const auto failure = check_proof(p, ConstantSpec::empty());
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->step, 1U);
  EXPECT_EQ(failure->reason, "not in CS");
}

TEST(CheckProof, AnWithPrefixUnderFullCs) {
  const Proof p{{ProofStep::an(F("[P2] c1 : [P1] up(P1) : P1"), T("c1"))}};
  EXPECT_FALSE(check_proof(p, ConstantSpec::full()));
}

TEST(CheckProof, ReportsFirstBadStep) {
  const Proof p{{ProofStep::axiom(F("P1 -> P1"), Schema::Taut),
                 ProofStep::axiom(F("P1"), Schema::Taut),
                 ProofStep::axiom(F("P2"), Schema::Taut)}};
  const auto failure = check_proof(p, ConstantSpec::empty());
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->step, 2U);
  EXPECT_EQ(failure->reason, "not an axiom");
}

TEST(CheckProof, WrongSchemaTag) {
  const Proof p{{ProofStep::axiom(F("[P1] up(P1) : P1"), Schema::Pers)}};
  const auto failure = check_proof(p, ConstantSpec::empty());
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->reason, "not an instance of pers");
}

TEST(CheckProof, MpPremisesMustPrecede) {
  const Proof p{{ProofStep::axiom(F("P1 -> P1"), Schema::Taut), ProofStep::mp(F("P1"), 0, 1)}};
  const auto failure = check_proof(p, ConstantSpec::empty());
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->step, 2U);
}

TEST(CheckProof, MpMismatch) {
  const Proof p{{ProofStep::axiom(F("P1 -> P1"), Schema::Taut),
                 ProofStep::axiom(F("P2 -> P2"), Schema::Taut), ProofStep::mp(F("P2"), 0, 1)}};
  const auto failure = check_proof(p, ConstantSpec::empty());
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->step, 3U);
}

TEST(CheckProof, EmptyProofRejected) { EXPECT_TRUE(check_proof(Proof{}, ConstantSpec::full())); }

TEST(AnPairs, CollectsDistinctPairs) {
  const Proof p{{ProofStep::an(F("c1 : (P1 -> P1)"), T("c1")),
                 ProofStep::an(F("[P2] c1 : (P1 -> P1)"), T("c1"))}};
  const auto pairs = an_pairs(p);
  ASSERT_EQ(pairs.size(), 1U);
  EXPECT_EQ(pairs[0].formula, F("P1 -> P1"));
}

// ---------------------------------------------------------------------------
// Boolean glue

TEST(TautConsequence, ModusPonensShape) {
  ProofBuilder b;
  const std::size_t a = b.axiom(F("P1 -> P1"), Schema::Taut);
  const std::size_t ab = b.axiom(F("(P1 -> P1) -> [P2]P1 -> [P2]P1"), Schema::Taut);
  const std::size_t premises[] = {a, ab};
  const std::size_t goal = taut_consequence(b, premises, F("[P2]P1 -> [P2]P1"));
  const Proof p = b.finish(goal);
  EXPECT_FALSE(check_proof(p, ConstantSpec::empty()));
  EXPECT_EQ(p.conclusion(), F("[P2]P1 -> [P2]P1"));
  EXPECT_EQ(p.steps.size(), 5U);
  EXPECT_EQ(p.steps[2].formula,
            Formula::implies(b.formula(a), Formula::implies(b.formula(ab), F("[P2]P1 -> [P2]P1"))));
}

TEST(TautConsequence, ConjunctionElimination) {
  ProofBuilder b;
  const std::size_t conj = b.axiom(F("(P1 -> P1) & (P2 -> P2)"), Schema::Taut);
  const std::size_t premises[] = {conj};
  const Proof p = b.finish(taut_consequence(b, premises, F("P1 -> P1")));
  EXPECT_FALSE(check_proof(p, ConstantSpec::empty()));
}

TEST(TautConsequence, RejectsNonConsequence) {
  ProofBuilder b;
  EXPECT_THROW(taut_consequence(b, {}, F("P1")), ProofError);
}

}  // namespace
}  // namespace jus
