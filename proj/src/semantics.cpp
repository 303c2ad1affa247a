#include "jus/semantics.hpp"

#include <stdexcept>

namespace jus {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid subset model";
  for (const auto& v : violations) out += "; " + v;
  return out;
}

// Evaluates formulas against a base model under a mutable announcement stack.
// Truth sets are computed world-parallel as bitsets: normal worlds follow the
// recursive clauses, non-normal worlds read V1.
class Evaluator {
 public:
  Evaluator(const SubsetModel& m, UpdateSequence chain)
      : m_(m), chain_(std::move(chain)), nonnormal_(~m.normal) {}

  WorldSet truth_set(const Formula& f) {
    WorldSet out = normal_truth(f);
    for (World w = nonnormal_.find_first(); w != WorldSet::npos; w = nonnormal_.find_next(w))
      if (m_.v1_value(w, f)) out.set(w);
    return out;
  }

  // Subset of W0 where f holds.
  WorldSet normal_truth(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Prop: {
        WorldSet out = m_.empty_set();
        for (World w = m_.normal.find_first(); w != WorldSet::npos; w = m_.normal.find_next(w))
          if (m_.v0_value(w, f.index())) out.set(w);
        return out;
      }
      case Formula::Kind::Not:
        return m_.normal - normal_truth(f.body());
      case Formula::Kind::Implies: {
        WorldSet out = m_.normal - normal_truth(f.left());
        out |= normal_truth(f.right());
        return out;
      }
      case Formula::Kind::Justifies:
        return justification_truth(f.term(), f.body());
      case Formula::Kind::Update: {
        chain_.push_back(f.announcement());
        WorldSet out = normal_truth(f.body());
        chain_.pop_back();
        return out;
      }
    }
    return m_.empty_set();
  }

  WorldSet evidence(World w, const Term& t) {
    if (t.is_atomic()) {
      WorldSet out = evidence_atomic(m_, w, t);
      if (t.kind() == Term::Kind::Up) out &= up_restriction(t.formula());
      return out;
    }
    WorldSet out = evidence(w, t.left());
    out &= evidence(w, t.right());
    out &= wmp(m_);
    return out;
  }

 private:
  WorldSet justification_truth(const Term& t, const Formula& body) {
    if (!t.is_atomic()) {
      WorldSet out = justification_truth(t.left(), Formula::implies(t.formula(), body));
      out &= justification_truth(t.right(), t.formula());
      return out;
    }
    const WorldSet target = truth_set(body);
    WorldSet restriction = t.kind() == Term::Kind::Up ? up_restriction(t.formula()) : m_.all_worlds();
    WorldSet out = m_.empty_set();
    for (World w = m_.normal.find_first(); w != WorldSet::npos; w = m_.normal.find_next(w)) {
      WorldSet e = evidence_atomic(m_, w, t);
      e &= restriction;
      if (e.is_subset_of(target)) out.set(w);
    }
    return out;
  }

  // Intersection of [[C]] over every occurrence of C in the current chain,
  // each evaluated in the context ending with that occurrence.
  WorldSet up_restriction(const Formula& announced) {
    WorldSet out = m_.all_worlds();
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      if (chain_[i] != announced) continue;
      UpdateSequence tail(chain_.begin() + static_cast<std::ptrdiff_t>(i) + 1, chain_.end());
      chain_.erase(chain_.begin() + static_cast<std::ptrdiff_t>(i) + 1, chain_.end());
      out &= truth_set(announced);
      chain_.insert(chain_.end(), tail.begin(), tail.end());
    }
    return out;
  }

  const SubsetModel& m_;
  UpdateSequence chain_;
  WorldSet nonnormal_;
};

}  // namespace

InvalidModel::InvalidModel(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

EvalContext::EvalContext(SubsetModel model)
    : EvalContext(std::make_shared<const SubsetModel>(std::move(model))) {}

EvalContext::EvalContext(std::shared_ptr<const SubsetModel> model) : model_(std::move(model)) {
  if (auto violations = validate_model(*model_); !violations.empty())
    throw InvalidModel(std::move(violations));
}

EvalContext EvalContext::push_update(const Formula& announcement) const {
  UpdateSequence next = chain_;
  next.push_back(announcement);
  return EvalContext(model_, std::move(next));
}

bool eval(const EvalContext& ctx, World w, const Formula& f) {
  const SubsetModel& m = ctx.model();
  if (w >= m.world_count()) throw std::out_of_range("unknown world index " + std::to_string(w));
  if (!m.is_normal(w)) return m.v1_value(w, f);
  return Evaluator(m, ctx.chain()).normal_truth(f).test(w);
}

WorldSet truth_set(const EvalContext& ctx, const Formula& f) {
  return Evaluator(ctx.model(), ctx.chain()).truth_set(f);
}

WorldSet evidence_effective(const EvalContext& ctx, World w, const Term& t) {
  const SubsetModel& m = ctx.model();
  if (w >= m.world_count()) throw std::out_of_range("unknown world index " + std::to_string(w));
  if (!m.is_normal(w)) throw std::invalid_argument("evidence is only defined at normal worlds");
  return Evaluator(m, ctx.chain()).evidence(w, t);
}

std::vector<CsViolation> cs_violations(const EvalContext& ctx,
                                       const std::vector<CsPair>& universe) {
  std::vector<CsViolation> out;
  const SubsetModel& m = ctx.model();
  Evaluator ev(m, ctx.chain());
  for (const CsPair& pair : universe) {
    const WorldSet target = ev.truth_set(pair.formula);
    for (World w = m.normal.find_first(); w != WorldSet::npos; w = m.normal.find_next(w))
      if (!ev.evidence(w, pair.constant).is_subset_of(target)) out.push_back({pair, w});
  }
  return out;
}

bool is_cs_model(const EvalContext& ctx, const std::vector<CsPair>& universe) {
  return cs_violations(ctx, universe).empty();
}

bool is_cs_model(const SubsetModel& m, const ConstantSpec& cs, const std::vector<CsPair>& universe) {
  EvalContext ctx(m);
  switch (cs.mode) {
    case ConstantSpec::Mode::Empty:
      return true;
    case ConstantSpec::Mode::Explicit:
      return is_cs_model(ctx, cs.pairs);
    case ConstantSpec::Mode::Full:
      return is_cs_model(ctx, universe);
  }
  return true;
}

}  // namespace jus
