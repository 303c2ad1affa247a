#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "jus/explore.hpp"
#include "jus/semantics.hpp"

namespace jus {
namespace {

using test::F;
using test::T;

bool mentions(const std::vector<std::string>& violations, std::string_view needle) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

TEST(Wmp, NormalWorldsAlwaysIncluded) {
  const SubsetModel m = test::belief_loss_model();
  EXPECT_TRUE(wmp(m).test(0));
}

TEST(Wmp, ClosureViolationExcludesWorld) {
  SubsetModel m({"w", "u"}, 1);
  m.set_v1(1, F("P1"), true);
  m.set_v1(1, F("P1 -> P2"), true);
  EXPECT_FALSE(wmp(m).test(1));
  m.set_v1(1, F("P2"), true);
  EXPECT_TRUE(wmp(m).test(1));
}

TEST(Wmp, EmptySupportIsClosed) {
  SubsetModel m({"w", "u"}, 1);
  EXPECT_TRUE(wmp(m).test(1));
}

TEST(Wmp, FalseEntriesDoNotBreakClosure) {
  SubsetModel m({"w", "u"}, 1);
  m.set_v1(1, F("P1"), true);
  m.set_v1(1, F("P1 -> P2"), false);
  EXPECT_TRUE(wmp(m).test(1));
}

TEST(EvidenceAtomic, BeliefLossEntries) {
  const SubsetModel m = test::belief_loss_model();
  EXPECT_EQ(evidence_atomic(m, 0, T("up(P1)")), m.make_set({0, 1}));
  EXPECT_EQ(evidence_atomic(m, 0, T("x1")), m.make_set({0}));
}

TEST(EvidenceAtomic, Defaults) {
  SubsetModel m = test::belief_loss_model();
  EXPECT_EQ(evidence_atomic(m, 0, T("c9")), m.all_worlds());
  m.evidence_default = EvidenceDefault::Empty;
  EXPECT_EQ(evidence_atomic(m, 0, T("c9")), m.empty_set());
}

TEST(ValidateModel, BeliefLossIsValid) { EXPECT_TRUE(validate_model(test::belief_loss_model()).empty()); }

TEST(ValidateModel, NoNormalWorld) {
  SubsetModel m({"w"}, 0);
  EXPECT_TRUE(mentions(validate_model(m), "W0 nonempty"));
}

TEST(ValidateModel, V0OnNonNormalWorld) {
  SubsetModel m = test::belief_loss_model();
  m.set_v0(1, 1, true);
  EXPECT_TRUE(mentions(validate_model(m), "V0 is defined on normal worlds only"));
}

TEST(ValidateModel, V1OnNormalWorld) {
  SubsetModel m = test::belief_loss_model();
  m.set_v1(0, F("P2"), true);
  EXPECT_TRUE(mentions(validate_model(m), "V1 is defined on non-normal worlds only"));
}

TEST(ValidateModel, EvidenceProblems) {
  SubsetModel m = test::belief_loss_model();
  m.set_evidence(1, T("x1"), m.all_worlds());
  m.set_evidence(0, T("(c1 *[P1] x1)"), m.all_worlds());
  m.set_evidence(0, T("c1"), WorldSet(5));
  const auto v = validate_model(m);
  EXPECT_TRUE(mentions(v, "non-normal world v"));
  EXPECT_TRUE(mentions(v, "atomic"));
  EXPECT_TRUE(mentions(v, "subset of W"));
}

TEST(ValidateModel, DuplicateNames) {
  SubsetModel m({"w", "w"}, 1);
  EXPECT_TRUE(mentions(validate_model(m), "distinct"));
}

TEST(IsCsModel, EmptyModeIsVacuous) {
  EXPECT_TRUE(is_cs_model(test::belief_loss_model(), ConstantSpec::empty(), {}));
}

TEST(IsCsModel, ExplicitPairFailsAtNonNormalWorld) {
  // Axiom-shaped formula false at the non-normal world, whose v1 defaults to 0.
  SubsetModel m = test::belief_loss_model();
  const ConstantSpec cs = ConstantSpec::explicit_pairs({{T("c1"), F("P1 -> (P2 -> P1)")}});
  EXPECT_FALSE(is_cs_model(m, cs, cs.pairs));
  m.set_evidence(0, T("c1"), m.make_set({0}));
  EXPECT_TRUE(is_cs_model(m, cs, cs.pairs));
}

TEST(IsCsModel, FullModeUsesUniverse) {
  const SubsetModel m = test::belief_loss_model();
  const std::vector<CsPair> universe = {{T("c1"), F("P1 -> P1")}};
  EXPECT_TRUE(is_cs_model(m, ConstantSpec::full(), {}));
  EXPECT_FALSE(is_cs_model(m, ConstantSpec::full(), universe));
}

TEST(IsCsModel, RandomCsModelsQualify) {
  const std::vector<CsPair> universe = {{T("c1"), F("P1 -> (P2 -> P1)")},
                                        {T("c2"), F("[P1] up(P1) : P1")},
                                        {T("c1"), F("c2 : [P1] up(P1) : P1")}};
  std::vector<Formula> scope;
  for (const auto& p : universe) scope.push_back(p.formula);
  const ModelSignature sig = signature_for(scope, 4, 2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SubsetModel m = random_cs_model(sig, universe, seed);
    ASSERT_TRUE(validate_model(m).empty());
    ASSERT_TRUE(is_cs_model(m, ConstantSpec::full(), universe)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace jus
