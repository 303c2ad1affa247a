#ifndef JUS_SEMANTICS_HPP
#define JUS_SEMANTICS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "jus/model.hpp"
#include "jus/syntax.hpp"

namespace jus {

class InvalidModel : public std::runtime_error {
 public:
  explicit InvalidModel(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A base model together with the announcements applied to it, oldest first.
// The empty chain is the base model itself. Worlds, W0, V0 and V1 are shared
// with the base; only the evidence of up-terms changes along the chain.
class EvalContext {
 public:
  // Throws InvalidModel if the model fails validate_model().
  explicit EvalContext(SubsetModel model);
  explicit EvalContext(std::shared_ptr<const SubsetModel> model);

  const SubsetModel& model() const { return *model_; }
  const UpdateSequence& chain() const { return chain_; }

  EvalContext push_update(const Formula& announcement) const;

 private:
  EvalContext(std::shared_ptr<const SubsetModel> model, UpdateSequence chain)
      : model_(std::move(model)), chain_(std::move(chain)) {}

  std::shared_ptr<const SubsetModel> model_;
  UpdateSequence chain_;
};

inline EvalContext push_update(const EvalContext& ctx, const Formula& announcement) {
  return ctx.push_update(announcement);
}

// V(w, f) in the model obtained by applying ctx.chain() to the base.
// Throws std::out_of_range for an unknown world.
bool eval(const EvalContext& ctx, World w, const Formula& f);
inline bool holds(const EvalContext& ctx, World w, const Formula& f) { return eval(ctx, w, f); }

// [[f]]: all worlds where f is true.
WorldSet truth_set(const EvalContext& ctx, const Formula& f);

// Evidence at a normal world. Atoms start from evidence_atomic() and
// up(C) is intersected with [[C]] (evaluated in the context just after that
// announcement) for every occurrence of C in the chain. Application terms get
// the largest admissible set E(s) & E(t) & W_MP, computed in the same
// context. Throws std::invalid_argument if w is not normal.
WorldSet evidence_effective(const EvalContext& ctx, World w, const Term& t);

struct CsViolation {
  CsPair pair;
  World world;
};

// Pairs (c, A) of universe and normal worlds w with E(w, c) not inside [[A]].
std::vector<CsViolation> cs_violations(const EvalContext& ctx, const std::vector<CsPair>& universe);

bool is_cs_model(const EvalContext& ctx, const std::vector<CsPair>& universe);

// Empty mode is vacuous; explicit mode checks cs.pairs; full mode checks the
// caller's finite universe.
bool is_cs_model(const SubsetModel& m, const ConstantSpec& cs, const std::vector<CsPair>& universe);

}  // namespace jus

#endif  // JUS_SEMANTICS_HPP
