#ifndef JUS_BUILDERS_HPP
#define JUS_BUILDERS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jus/proof.hpp"

namespace jus {

// Accumulates proof steps, reusing earlier steps that already conclude the
// same formula. Indices are 0-based positions in the proof under
// construction.
class ProofBuilder {
 public:
  std::size_t axiom(const Formula& f, Schema schema);
  std::size_t an(const Formula& f, const Term& constant);
  std::size_t mp(std::size_t minor, std::size_t major);

  // Copies p into the builder; returns the new index of each step of p.
  std::vector<std::size_t> append(const Proof& p);

  const Formula& formula(std::size_t i) const { return steps_.at(i).formula; }
  std::size_t size() const { return steps_.size(); }

  // Copy of the steps built so far, ending with `conclusion` if given.
  Proof finish(std::optional<std::size_t> conclusion = std::nullopt) const;

 private:
  std::size_t push(ProofStep step);

  std::vector<ProofStep> steps_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

// Derives goal from the premise steps with one Taut instance
// P1 -> (P2 -> ... -> goal) and one MP per premise. Throws ProofError if that
// implication is not a tautology.
std::size_t taut_consequence(ProofBuilder& b, std::span<const std::size_t> premises,
                             const Formula& goal);

// Proof of [c]A from a proof of A.
Proof prove_box(const Proof& p, const Formula& c, const ConstantSpec& cs);

struct NecessitationResult {
  Term term;
  Proof proof;
};

// Term t and proof of t:A from a proof of A. Requires an axiomatically
// appropriate CS: full mode, or explicit mode listing every witness pair
// needed (missing witnesses raise ProofError).
NecessitationResult prove_necessitation(const Proof& p, const ConstantSpec& cs);

// Proof of ([c]t:(a -> b) & [c]s:a) <-> [c](t *[a] s):b. Without c this is
// the App instance itself.
Proof prove_aux(const Term& t, const Term& s, const Formula& a, const Formula& b,
                const std::optional<Formula>& c, const ConstantSpec& cs);

// Proof of s:(c -> a) <-> [c](s *[c] up(c)):a. Requires [c]s:(c -> a) to be
// up-independent.
Proof prove_ramsey(const Term& s, const Formula& c, const Formula& a, const ConstantSpec& cs);

// Proof of t:a -> [c]t:a. Requires a, and every application annotation
// inside t, to be free of justification subformulas, and every atomic
// subterm s != up(c) of t to give an up-independent [c]s:B.
Proof prove_persistence_fo(const Term& t, const Formula& a, const Formula& c,
                           const ConstantSpec& cs);

// Builder-level pieces, exposed for composing larger derivations.
std::size_t derive_update_distribution(ProofBuilder& b, const Formula& c, const Formula& f,
                                       Formula& distributed);
std::size_t derive_aux(ProofBuilder& b, const Term& t, const Term& s, const Formula& a,
                       const Formula& b_formula, const std::optional<Formula>& c);

}  // namespace jus

#endif  // JUS_BUILDERS_HPP
