#ifndef JUS_EXPLORE_HPP
#define JUS_EXPLORE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jus/model.hpp"
#include "jus/proof.hpp"
#include "jus/semantics.hpp"
#include "jus/syntax.hpp"

namespace jus {

// Bounds for enumeration and random generation. Generated models have
// 1..max_worlds worlds, at most max_nonnormal of them non-normal, v0 over
// `propositions`, v1 over `v1_support` and explicit evidence for every term
// in `atoms` (anything else falls back to EvidenceDefault::All).
struct ModelSignature {
  std::vector<std::uint64_t> propositions;
  std::vector<Term> atoms;
  std::size_t max_worlds = 1;
  std::size_t max_nonnormal = 0;
  std::vector<Formula> v1_support;
};

// Formulas whose v1 value can influence the truth of f at a normal world,
// in any update context: the bodies of atomic justifications, the
// antecedent/consequent pieces produced by application terms, and the
// announcements behind up-terms.
std::vector<Formula> evaluation_closure(const Formula& f);

// Signature covering f: its propositions, atm(f) plus up(C) for every
// announcement C, and v1 support evaluation_closure(f). The extra formulas
// (typically a CS universe) contribute their propositions and closures too.
ModelSignature signature_for(std::span<const Formula> formulas, std::size_t max_worlds,
                             std::size_t max_nonnormal);

// Finite slice of cs that can constrain models over the given formulas.
// Explicit mode keeps the pairs whose constant occurs in the formulas. Full
// mode pairs each such constant with every axiom-shaped A for which c:A
// occurs, plus one tautology whose propositions are fresh, which keeps the
// constant's evidence inside W0 as it would be under the whole of full CS.
std::vector<CsPair> relevant_cs_universe(std::span<const Formula> formulas, const ConstantSpec& cs);

// Calls visit on one representative of every isomorphism class (renaming
// worlds within the normal and within the non-normal class) of models over
// sig, until visit returns false. Returns the number of models visited.
std::uint64_t enumerate_models(const ModelSignature& sig,
                               const std::function<bool(const SubsetModel&)>& visit);

// Same space without symmetry reduction: every labelled model.
std::uint64_t enumerate_labelled_models(const ModelSignature& sig,
                                        const std::function<bool(const SubsetModel&)>& visit);

// Key that is equal for two models over the same signature iff they differ
// only by renaming worlds within their class.
std::vector<std::uint64_t> canonical_key(const SubsetModel& m, const ModelSignature& sig);

// Random model over sig whose evidence for the constants of cs_universe is
// cut down until every pair (c, A) has E(w, c) inside [[A]] at every normal
// world. Deterministic in seed.
SubsetModel random_cs_model(const ModelSignature& sig, const std::vector<CsPair>& cs_universe,
                            std::uint64_t seed);

struct SearchReport {
  bool found = false;
  std::optional<SubsetModel> model;
  World world = 0;
  std::uint64_t models_scanned = 0;
  ModelSignature bounds;
};

// First model of enumerate_models(sig) that is a CS-model for cs_universe
// and falsifies f at a normal world. Any hit is re-checked with holds()
// before it is reported.
SearchReport find_countermodel(const Formula& f, const ModelSignature& sig,
                               const std::vector<CsPair>& cs_universe);

struct SweepViolation {
  Formula formula;
  SubsetModel model;
  World world;
};

struct SweepReport {
  std::uint64_t models = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t violation_count = 0;
  std::vector<SweepViolation> violations;  // first few only
};

// Evaluates every conclusion at every normal world of `trials` random
// CS-models over sig (universe from relevant_cs_universe). Throws
// ProofError if some proof does not check.
SweepReport soundness_sweep(const std::vector<Proof>& theorems, const ConstantSpec& cs,
                            const ModelSignature& sig, std::size_t trials, std::uint64_t seed);

// Random syntax for property tests and sweeps.
struct GeneratorOptions {
  std::uint64_t propositions = 2;
  std::uint64_t constants = 2;
  std::uint64_t variables = 2;
  std::size_t max_depth = 3;
  bool updates = true;
  bool justifications = true;
};

class SyntaxGenerator {
 public:
  explicit SyntaxGenerator(std::uint64_t seed, GeneratorOptions options = {})
      : rng_(seed), options_(options) {}

  Formula formula(std::size_t depth);
  Formula formula() { return formula(options_.max_depth); }
  Term term(std::size_t depth);

  // Atomic terms drawn alongside constants, variables and up-terms.
  void set_extra_atoms(std::vector<Term> atoms) { extra_atoms_ = std::move(atoms); }

  // Instance of schema whose metavariables have depth at most max_depth,
  // under a random update prefix of 0..max_prefix announcements.
  Formula axiom_instance(Schema schema, std::size_t max_prefix = 2);

  std::mt19937_64& rng() { return rng_; }
  const GeneratorOptions& options() const { return options_; }

 private:
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  Formula tautology();

  std::mt19937_64 rng_;
  GeneratorOptions options_;
  std::vector<Term> extra_atoms_;
};

}  // namespace jus

#endif  // JUS_EXPLORE_HPP
