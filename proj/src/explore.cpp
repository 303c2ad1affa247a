#include "jus/explore.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace jus {

// ---------------------------------------------------------------------------
// Signatures

namespace {

class ClosureBuilder {
 public:
  void truth(const Formula& f) {
    if (!seen_.insert(f).second) return;
    out_.push_back(f);
    normal(f);
  }

  void normal(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Prop:
        return;
      case Formula::Kind::Not:
        normal(f.body());
        return;
      case Formula::Kind::Implies:
        normal(f.left());
        normal(f.right());
        return;
      case Formula::Kind::Justifies:
        justification(f.term(), f.body());
        return;
      case Formula::Kind::Update:
        normal(f.body());
        return;
    }
  }

  void justification(const Term& t, const Formula& body) {
    if (!t.is_atomic()) {
      justification(t.left(), Formula::implies(t.formula(), body));
      justification(t.right(), t.formula());
      return;
    }
    truth(body);
    if (t.kind() == Term::Kind::Up) truth(t.formula());
  }

  std::vector<Formula> out_;

 private:
  FormulaSet seen_;
};

// Propositions, atomic terms and announcements in order of first occurrence.
struct SyntaxCollector {
  std::vector<std::uint64_t> props;
  std::vector<Term> atoms;
  std::unordered_set<std::uint64_t> prop_seen;
  TermSet atom_seen;

  void add_atom(const Term& t) {
    if (atom_seen.insert(t).second) atoms.push_back(t);
  }

  void term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Constant:
      case Term::Kind::Variable:
        add_atom(t);
        return;
      case Term::Kind::Up:
        add_atom(t);
        formula(t.formula());
        return;
      case Term::Kind::App:
        term(t.left());
        formula(t.formula());
        term(t.right());
        return;
    }
  }

  void formula(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Prop:
        if (prop_seen.insert(f.index()).second) props.push_back(f.index());
        return;
      case Formula::Kind::Not:
        formula(f.body());
        return;
      case Formula::Kind::Implies:
        formula(f.left());
        formula(f.right());
        return;
      case Formula::Kind::Justifies:
        term(f.term());
        formula(f.body());
        return;
      case Formula::Kind::Update:
        add_atom(Term::up(f.announcement()));
        formula(f.announcement());
        formula(f.body());
        return;
    }
  }
};

}  // namespace

std::vector<Formula> evaluation_closure(const Formula& f) {
  ClosureBuilder b;
  b.normal(f);
  return std::move(b.out_);
}

ModelSignature signature_for(std::span<const Formula> formulas, std::size_t max_worlds,
                             std::size_t max_nonnormal) {
  SyntaxCollector syntax;
  ClosureBuilder closure;
  for (const Formula& f : formulas) {
    syntax.formula(f);
    closure.normal(f);
  }
  ModelSignature sig;
  sig.propositions = std::move(syntax.props);
  std::sort(sig.propositions.begin(), sig.propositions.end());
  sig.atoms = std::move(syntax.atoms);
  sig.max_worlds = max_worlds;
  sig.max_nonnormal = max_nonnormal;
  sig.v1_support = std::move(closure.out_);
  return sig;
}

std::vector<CsPair> relevant_cs_universe(std::span<const Formula> formulas, const ConstantSpec& cs) {
  SyntaxCollector syntax;
  for (const Formula& f : formulas) syntax.formula(f);
  TermSet constants;
  for (const Term& t : syntax.atoms)
    if (t.kind() == Term::Kind::Constant) constants.insert(t);

  std::vector<CsPair> out;
  switch (cs.mode) {
    case ConstantSpec::Mode::Empty:
      return out;
    case ConstantSpec::Mode::Explicit:
      for (const CsPair& p : cs.pairs)
        if (constants.count(p.constant)) out.push_back(p);
      return out;
    case ConstantSpec::Mode::Full:
      break;
  }

  const std::uint64_t fresh_prop =
      (syntax.props.empty() ? 0 : *std::max_element(syntax.props.begin(), syntax.props.end())) + 1;
  const Formula fresh = Formula::prop(fresh_prop);
  const Formula fresh_taut = Formula::implies(fresh, fresh);

  // Pairs c:A occurring anywhere, found by walking the closure of justified
  // bodies together with the formulas themselves.
  std::vector<std::pair<Term, Formula>> occurring;
  std::function<void(const Formula&)> walk_formula;
  std::function<void(const Term&)> walk_term = [&](const Term& t) {
    if (t.kind() == Term::Kind::Up) walk_formula(t.formula());
    if (t.kind() == Term::Kind::App) {
      walk_term(t.left());
      walk_formula(t.formula());
      walk_term(t.right());
    }
  };
  walk_formula = [&](const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Prop:
        return;
      case Formula::Kind::Not:
        walk_formula(f.body());
        return;
      case Formula::Kind::Implies:
        walk_formula(f.left());
        walk_formula(f.right());
        return;
      case Formula::Kind::Justifies:
        if (f.term().kind() == Term::Kind::Constant) occurring.emplace_back(f.term(), f.body());
        walk_term(f.term());
        walk_formula(f.body());
        return;
      case Formula::Kind::Update:
        walk_formula(f.announcement());
        walk_formula(f.body());
        return;
    }
  };
  for (const Formula& f : formulas) walk_formula(f);

  for (const Term& c : syntax.atoms) {
    if (c.kind() != Term::Kind::Constant) continue;
    out.push_back({c, fresh_taut});
    for (const auto& [d, a] : occurring) {
      if (d != c || !has_cs_shape(a)) continue;
      bool duplicate = false;
      for (const CsPair& p : out) duplicate = duplicate || (p.constant == c && p.formula == a);
      if (!duplicate) out.push_back({c, a});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// A model over a signature with worlds 0..normal-1 normal and the rest
// non-normal. Bit j of a v0/v1 mask is the value of the j-th proposition or
// support formula; bit w of an evidence mask means world w is in the set.
struct RawModel {
  std::size_t worlds = 0;
  std::size_t normal = 0;
  std::vector<std::uint64_t> v0;        // per normal world
  std::vector<std::uint64_t> evidence;  // normal world i, atom j at i * atoms + j
  std::vector<std::uint64_t> v1;        // per non-normal world
};

void check_signature(const ModelSignature& sig) {
  if (sig.max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
  if (sig.max_worlds > 16) throw std::invalid_argument("max_worlds above 16 is not supported");
  if (sig.propositions.size() > 20)
    throw std::invalid_argument("more than 20 propositions in a signature");
  if (sig.v1_support.size() > 62)
    throw std::invalid_argument("v1 support of " + std::to_string(sig.v1_support.size()) +
                                " formulas is too large to enumerate");
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<std::size_t>& pos) {
  std::uint64_t out = 0;
  for (std::size_t w = 0; w < pos.size(); ++w)
    if (mask >> w & 1U) out |= std::uint64_t{1} << pos[w];
  return out;
}

// Encoding of raw with world w moved to position pos[w].
std::vector<std::uint64_t> encode(const RawModel& raw, std::size_t atoms,
                                  const std::vector<std::size_t>& pos) {
  std::vector<std::uint64_t> out(2 + raw.normal * (1 + atoms) + (raw.worlds - raw.normal));
  out[0] = raw.worlds;
  out[1] = raw.normal;
  for (std::size_t w = 0; w < raw.normal; ++w) {
    std::size_t base = 2 + pos[w] * (1 + atoms);
    out[base] = raw.v0[w];
    for (std::size_t j = 0; j < atoms; ++j)
      out[base + 1 + j] = permute_mask(raw.evidence[w * atoms + j], pos);
  }
  for (std::size_t w = raw.normal; w < raw.worlds; ++w)
    out[2 + raw.normal * (1 + atoms) + (pos[w] - raw.normal)] = raw.v1[w - raw.normal];
  return out;
}

// Calls f with every position map that permutes worlds within their class.
template <typename F>
void for_each_class_permutation(std::size_t worlds, std::size_t normal, F&& f) {
  std::vector<std::size_t> normal_perm(normal);
  std::iota(normal_perm.begin(), normal_perm.end(), 0);
  std::vector<std::size_t> pos(worlds);
  do {
    std::vector<std::size_t> other_perm(worlds - normal);
    std::iota(other_perm.begin(), other_perm.end(), normal);
    do {
      for (std::size_t i = 0; i < normal; ++i) pos[i] = normal_perm[i];
      for (std::size_t i = normal; i < worlds; ++i) pos[i] = other_perm[i - normal];
      if (!f(pos)) return;
    } while (std::next_permutation(other_perm.begin(), other_perm.end()));
  } while (std::next_permutation(normal_perm.begin(), normal_perm.end()));
}

std::vector<std::uint64_t> minimal_encoding(const RawModel& raw, std::size_t atoms) {
  std::vector<std::uint64_t> best;
  for_each_class_permutation(raw.worlds, raw.normal, [&](const std::vector<std::size_t>& pos) {
    auto e = encode(raw, atoms, pos);
    if (best.empty() || e < best) best = std::move(e);
    return true;
  });
  return best;
}

bool is_canonical(const RawModel& raw, std::size_t atoms) {
  std::vector<std::size_t> identity(raw.worlds);
  std::iota(identity.begin(), identity.end(), 0);
  const auto own = encode(raw, atoms, identity);
  bool minimal = true;
  for_each_class_permutation(raw.worlds, raw.normal, [&](const std::vector<std::size_t>& pos) {
    if (encode(raw, atoms, pos) < own) minimal = false;
    return minimal;
  });
  return minimal;
}

SubsetModel build_model(const RawModel& raw, const ModelSignature& sig) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < raw.normal; ++i) names.push_back("w" + std::to_string(i + 1));
  for (std::size_t i = raw.normal; i < raw.worlds; ++i)
    names.push_back("v" + std::to_string(i - raw.normal + 1));
  SubsetModel m(std::move(names), raw.normal);
  const std::size_t atoms = sig.atoms.size();
  for (World w = 0; w < raw.normal; ++w) {
    for (std::size_t j = 0; j < sig.propositions.size(); ++j)
      m.set_v0(w, sig.propositions[j], raw.v0[w] >> j & 1U);
    for (std::size_t j = 0; j < atoms; ++j)
      m.set_evidence(w, sig.atoms[j], WorldSet(raw.worlds, raw.evidence[w * atoms + j]));
  }
  for (World w = raw.normal; w < raw.worlds; ++w)
    for (std::size_t j = 0; j < sig.v1_support.size(); ++j)
      if (raw.v1[w - raw.normal] >> j & 1U) m.set_v1(w, sig.v1_support[j], true);
  return m;
}

RawModel raw_from_model(const SubsetModel& m, const ModelSignature& sig) {
  std::vector<World> order;
  for (World w = 0; w < m.world_count(); ++w)
    if (m.is_normal(w)) order.push_back(w);
  const std::size_t normal = order.size();
  for (World w = 0; w < m.world_count(); ++w)
    if (!m.is_normal(w)) order.push_back(w);
  std::vector<std::size_t> pos(m.world_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  RawModel raw;
  raw.worlds = m.world_count();
  raw.normal = normal;
  const std::size_t atoms = sig.atoms.size();
  raw.v0.assign(normal, 0);
  raw.evidence.assign(normal * atoms, 0);
  raw.v1.assign(raw.worlds - normal, 0);
  for (std::size_t i = 0; i < raw.worlds; ++i) {
    const World w = order[i];
    if (i < normal) {
      for (std::size_t j = 0; j < sig.propositions.size(); ++j)
        if (m.v0_value(w, sig.propositions[j])) raw.v0[i] |= std::uint64_t{1} << j;
      for (std::size_t j = 0; j < atoms; ++j) {
        const WorldSet e = evidence_atomic(m, w, sig.atoms[j]);
        std::uint64_t mask = 0;
        for (World u = e.find_first(); u != WorldSet::npos; u = e.find_next(u))
          mask |= std::uint64_t{1} << pos[u];
        raw.evidence[i * atoms + j] = mask;
      }
    } else {
      for (std::size_t j = 0; j < sig.v1_support.size(); ++j)
        if (m.v1_value(w, sig.v1_support[j])) raw.v1[i - normal] |= std::uint64_t{1} << j;
    }
  }
  return raw;
}

// Odometer over all labelled raw models with the given world counts.
template <typename F>
bool for_each_raw(const ModelSignature& sig, std::size_t worlds, std::size_t normal, F&& f) {
  const std::size_t atoms = sig.atoms.size();
  RawModel raw;
  raw.worlds = worlds;
  raw.normal = normal;
  raw.v0.assign(normal, 0);
  raw.evidence.assign(normal * atoms, 0);
  raw.v1.assign(worlds - normal, 0);

  std::vector<std::uint64_t*> digits;
  std::vector<std::uint64_t> limits;
  for (std::size_t w = 0; w < normal; ++w) {
    digits.push_back(&raw.v0[w]);
    limits.push_back(std::uint64_t{1} << sig.propositions.size());
    for (std::size_t j = 0; j < atoms; ++j) {
      digits.push_back(&raw.evidence[w * atoms + j]);
      limits.push_back(std::uint64_t{1} << worlds);
    }
  }
  for (std::size_t w = 0; w < worlds - normal; ++w) {
    digits.push_back(&raw.v1[w]);
    limits.push_back(std::uint64_t{1} << sig.v1_support.size());
  }

  while (true) {
    if (!f(static_cast<const RawModel&>(raw))) return false;
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++*digits[i] < limits[i]) break;
      *digits[i] = 0;
    }
    if (i == digits.size()) return true;
  }
}

template <typename F>
std::uint64_t enumerate_raw(const ModelSignature& sig, bool reduce, F&& visit) {
  check_signature(sig);
  std::uint64_t visited = 0;
  for (std::size_t worlds = 1; worlds <= sig.max_worlds; ++worlds) {
    const std::size_t max_other = std::min(sig.max_nonnormal, worlds - 1);
    for (std::size_t other = 0; other <= max_other; ++other) {
      const bool go_on = for_each_raw(sig, worlds, worlds - other, [&](const RawModel& raw) {
        if (reduce && !is_canonical(raw, sig.atoms.size())) return true;
        ++visited;
        return visit(build_model(raw, sig));
      });
      if (!go_on) return visited;
    }
  }
  return visited;
}

}  // namespace

std::uint64_t enumerate_models(const ModelSignature& sig,
                               const std::function<bool(const SubsetModel&)>& visit) {
  return enumerate_raw(sig, true, visit);
}

std::uint64_t enumerate_labelled_models(const ModelSignature& sig,
                                        const std::function<bool(const SubsetModel&)>& visit) {
  return enumerate_raw(sig, false, visit);
}

std::vector<std::uint64_t> canonical_key(const SubsetModel& m, const ModelSignature& sig) {
  check_signature(sig);
  return minimal_encoding(raw_from_model(m, sig), sig.atoms.size());
}

// ---------------------------------------------------------------------------
// Random models

SubsetModel random_cs_model(const ModelSignature& sig, const std::vector<CsPair>& cs_universe,
                            std::uint64_t seed) {
  if (sig.max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto coin = [&] { return (rng() & 1U) != 0; };

  const std::size_t worlds = pick(1, sig.max_worlds);
  const std::size_t other = pick(0, std::min(sig.max_nonnormal, worlds - 1));
  const std::size_t normal = worlds - other;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < normal; ++i) names.push_back("w" + std::to_string(i + 1));
  for (std::size_t i = 0; i < other; ++i) names.push_back("v" + std::to_string(i + 1));
  SubsetModel m(std::move(names), normal);

  std::vector<Term> atoms = sig.atoms;
  TermSet listed(atoms.begin(), atoms.end());
  for (const CsPair& p : cs_universe)
    if (listed.insert(p.constant).second) atoms.push_back(p.constant);

  auto random_set = [&] {
    WorldSet s(worlds);
    for (World u = 0; u < worlds; ++u) s[u] = coin();
    return s;
  };
  for (World w = 0; w < normal; ++w) {
    for (std::uint64_t p : sig.propositions) m.set_v0(w, p, coin());
    for (const Term& t : atoms) m.set_evidence(w, t, random_set());
  }
  for (World w = normal; w < worlds; ++w)
    for (const Formula& f : sig.v1_support)
      if (coin()) m.set_v1(w, f, true);

  // Evidence only shrinks, so this reaches a fixpoint.
  bool changed = !cs_universe.empty();
  while (changed) {
    changed = false;
    EvalContext ctx(m);
    for (const CsPair& p : cs_universe) {
      const WorldSet target = truth_set(ctx, p.formula);
      for (World w = 0; w < normal; ++w) {
        WorldSet e = evidence_atomic(m, w, p.constant);
        if (e.is_subset_of(target)) continue;
        e &= target;
        m.set_evidence(w, p.constant, std::move(e));
        changed = true;
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Search and sweeps

SearchReport find_countermodel(const Formula& f, const ModelSignature& sig,
                               const std::vector<CsPair>& cs_universe) {
  SearchReport report;
  report.bounds = sig;
  report.models_scanned = enumerate_models(sig, [&](const SubsetModel& m) {
    EvalContext ctx(m);
    if (!cs_universe.empty() && !is_cs_model(ctx, cs_universe)) return true;
    const WorldSet failing = m.normal - truth_set(ctx, f);
    const World w = failing.find_first();
    if (w == WorldSet::npos) return true;
    if (holds(ctx, w, f))
      throw std::logic_error("countermodel candidate does not re-verify");
    report.found = true;
    report.model = m;
    report.world = w;
    return false;
  });
  return report;
}

SweepReport soundness_sweep(const std::vector<Proof>& theorems, const ConstantSpec& cs,
                            const ModelSignature& sig, std::size_t trials, std::uint64_t seed) {
  constexpr std::size_t kSamples = 20;
  std::vector<Formula> conclusions;
  for (std::size_t i = 0; i < theorems.size(); ++i) {
    if (auto failure = check_proof(theorems[i], cs))
      throw ProofError("theorem " + std::to_string(i + 1) + " fails at step " +
                       std::to_string(failure->step) + ": " + failure->reason);
    conclusions.push_back(theorems[i].conclusion());
  }
  const std::vector<CsPair> universe = relevant_cs_universe(conclusions, cs);

  SweepReport report;
  std::mt19937_64 seeds(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const SubsetModel m = random_cs_model(sig, universe, seeds());
    EvalContext ctx(m);
    ++report.models;
    for (const Formula& f : conclusions) {
      const WorldSet failing = m.normal - truth_set(ctx, f);
      report.evaluations += m.normal.count();
      for (World w = failing.find_first(); w != WorldSet::npos; w = failing.find_next(w)) {
        ++report.violation_count;
        if (report.violations.size() < kSamples) report.violations.push_back({f, m, w});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Random syntax

Term SyntaxGenerator::term(std::size_t depth) {
  const std::size_t choices = depth == 0 ? 2 : 4;
  std::size_t pick = below(choices + (extra_atoms_.empty() ? 0 : 1));
  if (pick == choices) return extra_atoms_[below(extra_atoms_.size())];
  switch (pick) {
    case 0:
      return Term::constant(1 + below(std::max<std::uint64_t>(options_.constants, 1)));
    case 1:
      return Term::variable(1 + below(std::max<std::uint64_t>(options_.variables, 1)));
    case 2:
      return Term::up(formula(depth - 1));
    default: {
      Term left = term(depth - 1);
      Formula annotation = formula(depth - 1);
      return Term::app(left, annotation, term(depth - 1));
    }
  }
}

Formula SyntaxGenerator::formula(std::size_t depth) {
  const Formula atom = Formula::prop(1 + below(std::max<std::uint64_t>(options_.propositions, 1)));
  if (depth == 0) return atom;
  std::vector<int> kinds = {0, 1, 2, 2};
  if (options_.justifications) kinds.insert(kinds.end(), {3, 3});
  if (options_.updates) kinds.push_back(4);
  switch (kinds[below(kinds.size())]) {
    case 0:
      return atom;
    case 1:
      return Formula::negation(formula(depth - 1));
    case 2: {
      Formula left = formula(depth - 1);
      return Formula::implies(left, formula(depth - 1));
    }
    case 3: {
      Term t = term(depth - 1);
      return Formula::justifies(t, formula(depth - 1));
    }
    default: {
      Formula c = formula(depth - 1);
      return Formula::update(c, formula(depth - 1));
    }
  }
}

Formula SyntaxGenerator::tautology() {
  const std::size_t d = options_.max_depth;
  const Formula a = formula(d);
  const Formula b = formula(d);
  const Formula c = formula(d);
  using F = Formula;
  switch (below(8)) {
    case 0:
      return F::implies(a, a);
    case 1:
      return F::implies(a, F::implies(b, a));
    case 2:
      return F::implies(F::implies(a, F::implies(b, c)),
                        F::implies(F::implies(a, b), F::implies(a, c)));
    case 3:
      return F::implies(F::implies(F::negation(a), F::negation(b)), F::implies(b, a));
    case 4:
      return F::implies(F::negation(F::negation(a)), a);
    case 5:
      return F::implies(and_(a, b), b);
    case 6:
      return or_(a, F::negation(a));
    default: {
      // Random Boolean combination over a, b, c, kept if it is a tautology.
      const Formula pool[] = {a, b, c};
      for (int attempt = 0; attempt < 50; ++attempt) {
        std::function<Formula(std::size_t)> combine = [&](std::size_t k) -> Formula {
          if (k == 0 || below(3) == 0) return pool[below(3)];
          if (below(3) == 0) return F::negation(combine(k - 1));
          Formula l = combine(k - 1);
          return F::implies(l, combine(k - 1));
        };
        Formula g = combine(4);
        if (taut_check(g)) return g;
      }
      return F::implies(b, F::implies(a, a));
    }
  }
}

Formula SyntaxGenerator::axiom_instance(Schema schema, std::size_t max_prefix) {
  const std::size_t d = options_.max_depth;
  UpdateSequence tau(below(max_prefix + 1), Formula::prop(1));
  for (Formula& c : tau) c = formula(d);
  using F = Formula;
  auto just = [](const Term& t, const F& f) { return F::justifies(t, f); };

  Formula body = F::prop(1);
  switch (schema) {
    case Schema::Taut:
      body = tautology();
      break;
    case Schema::App: {
      const Term t = term(d);
      const Term s = term(d);
      const F a = formula(d);
      const F b = formula(d);
      body = iff(and_(just(t, F::implies(a, b)), just(s, a)), just(Term::app(t, a, s), b));
      break;
    }
    case Schema::Indep: {
      // Drawing up(C) as an atom makes the side condition fail now and then;
      // those draws are redrawn.
      while (true) {
        const F c = formula(d);
        const std::vector<Term> saved = extra_atoms_;
        extra_atoms_.push_back(Term::up(c));
        const F a = formula(d);
        extra_atoms_ = saved;
        const F boxed = F::update(c, a);
        if (!up_independent(boxed)) continue;
        body = iff(boxed, a);
        break;
      }
      break;
    }
    case Schema::Funct: {
      const F c = formula(d);
      const F a = formula(d);
      body = iff(F::update(c, F::negation(a)), F::negation(F::update(c, a)));
      break;
    }
    case Schema::Norm: {
      const F c = formula(d);
      const F a = formula(d);
      const F b = formula(d);
      body = iff(F::update(c, F::implies(a, b)), F::implies(F::update(c, a), F::update(c, b)));
      break;
    }
    case Schema::Up: {
      const F c = formula(d);
      body = F::update(c, just(Term::up(c), c));
      break;
    }
    case Schema::Pers: {
      const F a = formula(d);
      const std::vector<Term> saved = extra_atoms_;
      extra_atoms_.push_back(Term::up(a));
      const F b = formula(d);
      extra_atoms_ = saved;
      const F belief = just(Term::up(a), b);
      body = F::implies(belief, F::update(a, belief));
      break;
    }
  }
  return prefix(tau, body);
}

}  // namespace jus
