#include <optional>
#include <utility>

#include "jus/proof.hpp"

namespace jus {

namespace {

using F = Formula;
using K = Formula::Kind;

std::optional<std::pair<F, F>> as_implies(const F& f) {
  if (f.kind() != K::Implies) return std::nullopt;
  return std::pair{f.left(), f.right()};
}

// ~((a -> b) -> ~(b -> a))
std::optional<std::pair<F, F>> as_iff(const F& f) {
  if (f.kind() != K::Not) return std::nullopt;
  auto outer = as_implies(f.body());
  if (!outer) return std::nullopt;
  auto forward = as_implies(outer->first);
  if (!forward || outer->second.kind() != K::Not) return std::nullopt;
  auto backward = as_implies(outer->second.body());
  if (!backward) return std::nullopt;
  if (backward->first != forward->second || backward->second != forward->first) return std::nullopt;
  return forward;
}

// ~(a -> ~b)
std::optional<std::pair<F, F>> as_and(const F& f) {
  if (f.kind() != K::Not) return std::nullopt;
  auto inner = as_implies(f.body());
  if (!inner || inner->second.kind() != K::Not) return std::nullopt;
  return std::pair{inner->first, inner->second.body()};
}

std::optional<AxiomInstance> match_app(const F& g) {
  auto bi = as_iff(g);
  if (!bi) return std::nullopt;
  auto conj = as_and(bi->first);
  if (!conj) return std::nullopt;
  const F& major = conj->first;
  const F& minor = conj->second;
  const F& result = bi->second;
  if (major.kind() != K::Justifies || minor.kind() != K::Justifies ||
      result.kind() != K::Justifies)
    return std::nullopt;
  auto ab = as_implies(major.body());
  if (!ab) return std::nullopt;
  const auto& [a, b] = *ab;
  const Term& t = major.term();
  const Term& s = minor.term();
  if (minor.body() != a || result.body() != b) return std::nullopt;
  if (result.term() != Term::app(t, a, s)) return std::nullopt;
  return AxiomInstance{Schema::App, {}, g, {a, b}, {t, s}};
}

std::optional<AxiomInstance> match_indep(const F& g) {
  auto bi = as_iff(g);
  if (!bi || bi->first.kind() != K::Update) return std::nullopt;
  const F& boxed = bi->first;
  if (boxed.body() != bi->second || !up_independent(boxed)) return std::nullopt;
  return AxiomInstance{Schema::Indep, {}, g, {boxed.announcement(), boxed.body()}, {}};
}

std::optional<AxiomInstance> match_funct(const F& g) {
  auto bi = as_iff(g);
  if (!bi) return std::nullopt;
  const F& l = bi->first;
  const F& r = bi->second;
  if (l.kind() != K::Update || l.body().kind() != K::Not) return std::nullopt;
  if (r.kind() != K::Not || r.body().kind() != K::Update) return std::nullopt;
  const F& c = l.announcement();
  const F& a = l.body().body();
  if (r.body() != F::update(c, a)) return std::nullopt;
  return AxiomInstance{Schema::Funct, {}, g, {c, a}, {}};
}

std::optional<AxiomInstance> match_norm(const F& g) {
  auto bi = as_iff(g);
  if (!bi) return std::nullopt;
  const F& l = bi->first;
  if (l.kind() != K::Update) return std::nullopt;
  auto ab = as_implies(l.body());
  if (!ab) return std::nullopt;
  const F& c = l.announcement();
  if (bi->second != F::implies(F::update(c, ab->first), F::update(c, ab->second)))
    return std::nullopt;
  return AxiomInstance{Schema::Norm, {}, g, {c, ab->first, ab->second}, {}};
}

std::optional<AxiomInstance> match_up(const F& g) {
  if (g.kind() != K::Update) return std::nullopt;
  const F& a = g.announcement();
  if (g.body() != F::justifies(Term::up(a), a)) return std::nullopt;
  return AxiomInstance{Schema::Up, {}, g, {a}, {}};
}

std::optional<AxiomInstance> match_pers(const F& g) {
  auto imp = as_implies(g);
  if (!imp) return std::nullopt;
  const F& l = imp->first;
  if (l.kind() != K::Justifies || l.term().kind() != Term::Kind::Up) return std::nullopt;
  const F& a = l.term().formula();
  if (imp->second != F::update(a, l)) return std::nullopt;
  return AxiomInstance{Schema::Pers, {}, g, {a, l.body()}, {}};
}

std::optional<AxiomInstance> match_schema(Schema s, const F& g) {
  switch (s) {
    case Schema::Taut:
      if (taut_check(g)) return AxiomInstance{Schema::Taut, {}, g, {g}, {}};
      return std::nullopt;
    case Schema::App:
      return match_app(g);
    case Schema::Indep:
      return match_indep(g);
    case Schema::Funct:
      return match_funct(g);
    case Schema::Norm:
      return match_norm(g);
    case Schema::Up:
      return match_up(g);
    case Schema::Pers:
      return match_pers(g);
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Schema s) {
  switch (s) {
    case Schema::Taut:
      return "taut";
    case Schema::App:
      return "app";
    case Schema::Indep:
      return "indep";
    case Schema::Funct:
      return "funct";
    case Schema::Norm:
      return "norm";
    case Schema::Up:
      return "up";
    case Schema::Pers:
      return "pers";
  }
  return "taut";
}

std::optional<Schema> schema_from_string(std::string_view name) {
  for (Schema s : kAllSchemas)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::vector<AxiomInstance> match_axiom(const Formula& f) {
  std::vector<AxiomInstance> out;
  UpdateSequence prefix;
  Formula rest = f;
  while (true) {
    for (Schema s : kAllSchemas) {
      if (auto inst = match_schema(s, rest)) {
        inst->prefix = prefix;
        out.push_back(std::move(*inst));
      }
    }
    if (rest.kind() != K::Update) break;
    prefix.push_back(rest.announcement());
    rest = rest.body();
  }
  return out;
}

bool is_axiom(const Formula& f) {
  Formula rest = f;
  while (true) {
    for (Schema s : kAllSchemas)
      if (match_schema(s, rest)) return true;
    if (rest.kind() != K::Update) return false;
    rest = rest.body();
  }
}

bool has_cs_shape(const Formula& f) {
  if (is_axiom(f)) return true;
  auto [tau, rest] = strip_updates(f);
  if (rest.kind() != K::Justifies || rest.term().kind() != Term::Kind::Constant) return false;
  return has_cs_shape(rest.body());
}

bool cs_contains(const ConstantSpec& cs, const Term& constant, const Formula& f) {
  if (constant.kind() != Term::Kind::Constant) return false;
  switch (cs.mode) {
    case ConstantSpec::Mode::Empty:
      return false;
    case ConstantSpec::Mode::Explicit:
      for (const CsPair& p : cs.pairs)
        if (p.constant == constant && p.formula == f) return true;
      return false;
    case ConstantSpec::Mode::Full:
      return has_cs_shape(f);
  }
  return false;
}

}  // namespace jus
