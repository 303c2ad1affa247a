#include "jus/syntax.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace jus {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct Term::Node {
  Kind kind;
  std::uint64_t index = 0;
  std::optional<Formula> formula;  // Up body or App annotation
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t hash = 0;
};

struct Formula::Node {
  Kind kind;
  std::uint64_t index = 0;
  std::optional<Formula> first;  // Not/Justifies/Update body, Implies left
  std::optional<Formula> second;  // Implies right, Update announcement
  std::optional<Term> term;
  std::size_t hash = 0;
};

// ---------------------------------------------------------------------------
// Term

Term Term::constant(std::uint64_t index) {
  if (index == 0) throw std::invalid_argument("constant index must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->index = index;
  n->hash = mix(11, index);
  return Term(std::move(n));
}

Term Term::variable(std::uint64_t index) {
  if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->index = index;
  n->hash = mix(13, index);
  return Term(std::move(n));
}

Term Term::up(const Formula& body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Up;
  n->formula = body;
  n->hash = mix(17, body.hash());
  return Term(std::move(n));
}

Term Term::app(const Term& left, const Formula& annotation, const Term& right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->left = left;
  n->formula = annotation;
  n->right = right;
  n->hash = mix(mix(mix(19, left.hash()), annotation.hash()), right.hash());
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

std::uint64_t Term::index() const {
  if (kind() != Kind::Constant && kind() != Kind::Variable)
    throw std::logic_error("Term::index on non-indexed term");
  return node_->index;
}

const Formula& Term::formula() const {
  if (!node_->formula) throw std::logic_error("Term::formula on atom without formula");
  return *node_->formula;
}

const Term& Term::left() const {
  if (kind() != Kind::App) throw std::logic_error("Term::left on non-application");
  return *node_->left;
}

const Term& Term::right() const {
  if (kind() != Kind::App) throw std::logic_error("Term::right on non-application");
  return *node_->right;
}

std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Term::Kind::Constant:
    case Term::Kind::Variable:
      return a.node_->index == b.node_->index;
    case Term::Kind::Up:
      return *a.node_->formula == *b.node_->formula;
    case Term::Kind::App:
      return *a.node_->left == *b.node_->left && *a.node_->formula == *b.node_->formula &&
             *a.node_->right == *b.node_->right;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::prop(std::uint64_t index) {
  if (index == 0) throw std::invalid_argument("proposition index must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prop;
  n->index = index;
  n->hash = mix(23, index);
  return Formula(std::move(n));
}

Formula Formula::negation(const Formula& body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->first = body;
  n->hash = mix(29, body.hash());
  return Formula(std::move(n));
}

Formula Formula::implies(const Formula& left, const Formula& right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->first = left;
  n->second = right;
  n->hash = mix(mix(31, left.hash()), right.hash());
  return Formula(std::move(n));
}

Formula Formula::justifies(const Term& term, const Formula& body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Justifies;
  n->term = term;
  n->first = body;
  n->hash = mix(mix(37, term.hash()), body.hash());
  return Formula(std::move(n));
}

Formula Formula::update(const Formula& announcement, const Formula& body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Update;
  n->second = announcement;
  n->first = body;
  n->hash = mix(mix(41, announcement.hash()), body.hash());
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

std::uint64_t Formula::index() const {
  if (kind() != Kind::Prop) throw std::logic_error("Formula::index on non-proposition");
  return node_->index;
}

const Formula& Formula::body() const {
  if (kind() != Kind::Not && kind() != Kind::Justifies && kind() != Kind::Update)
    throw std::logic_error("Formula::body on formula without body");
  return *node_->first;
}

const Formula& Formula::left() const {
  if (kind() != Kind::Implies) throw std::logic_error("Formula::left on non-implication");
  return *node_->first;
}

const Formula& Formula::right() const {
  if (kind() != Kind::Implies) throw std::logic_error("Formula::right on non-implication");
  return *node_->second;
}

const Term& Formula::term() const {
  if (kind() != Kind::Justifies) throw std::logic_error("Formula::term on non-justification");
  return *node_->term;
}

const Formula& Formula::announcement() const {
  if (kind() != Kind::Update) throw std::logic_error("Formula::announcement on non-update");
  return *node_->second;
}

std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Formula::Kind::Prop:
      return a.node_->index == b.node_->index;
    case Formula::Kind::Not:
      return *a.node_->first == *b.node_->first;
    case Formula::Kind::Implies:
    case Formula::Kind::Update:
      return *a.node_->first == *b.node_->first && *a.node_->second == *b.node_->second;
    case Formula::Kind::Justifies:
      return *a.node_->term == *b.node_->term && *a.node_->first == *b.node_->first;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Derived connectives

Formula and_(const Formula& a, const Formula& b) {
  return Formula::negation(Formula::implies(a, Formula::negation(b)));
}

Formula or_(const Formula& a, const Formula& b) {
  return Formula::implies(Formula::negation(a), b);
}

Formula iff(const Formula& a, const Formula& b) {
  return Formula::negation(
      Formula::implies(Formula::implies(a, b), Formula::negation(Formula::implies(b, a))));
}

Formula falsum() {
  const Formula p1 = Formula::prop(1);
  return Formula::negation(Formula::implies(p1, p1));
}

// ---------------------------------------------------------------------------
// Measures

namespace {

void collect_atm(const Formula& f, TermSet& out);

void collect_atm(const Term& t, TermSet& out) {
  switch (t.kind()) {
    case Term::Kind::Constant:
    case Term::Kind::Variable:
      out.insert(t);
      return;
    case Term::Kind::Up:
      out.insert(t);
      collect_atm(t.formula(), out);
      return;
    case Term::Kind::App:
      collect_atm(t.left(), out);
      collect_atm(t.right(), out);
      collect_atm(t.formula(), out);
      return;
  }
}

void collect_atm(const Formula& f, TermSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return;
    case Formula::Kind::Not:
      collect_atm(f.body(), out);
      return;
    case Formula::Kind::Implies:
      collect_atm(f.left(), out);
      collect_atm(f.right(), out);
      return;
    case Formula::Kind::Justifies:
      collect_atm(f.term(), out);
      collect_atm(f.body(), out);
      return;
    case Formula::Kind::Update:
      collect_atm(f.body(), out);
      collect_atm(f.announcement(), out);
      return;
  }
}

}  // namespace

TermSet atm(const Term& t) {
  TermSet out;
  collect_atm(t, out);
  return out;
}

TermSet atm(const Formula& f) {
  TermSet out;
  collect_atm(f, out);
  return out;
}

// Subformulas are the reflexive-transitive closure of the immediate-child
// relation on formulas; formulas inside terms (annotations, up-bodies) are
// not subformulas.
bool up_independent(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return true;
    case Formula::Kind::Not:
    case Formula::Kind::Justifies:
      return up_independent(f.body());
    case Formula::Kind::Implies:
      return up_independent(f.left()) && up_independent(f.right());
    case Formula::Kind::Update: {
      if (atm(f.body()).count(Term::up(f.announcement()))) return false;
      return up_independent(f.announcement()) && up_independent(f.body());
    }
  }
  return true;
}

std::uint64_t length(const Term& t) {
  if (t.is_atomic()) return 1;
  return length(t.left()) + length(t.right()) + length(t.formula()) + 1;
}

std::uint64_t length(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return 1;
    case Formula::Kind::Not:
      return length(f.body()) + 1;
    case Formula::Kind::Implies:
      return length(f.left()) + length(f.right()) + 1;
    case Formula::Kind::Justifies:
      return length(f.term()) + length(f.body()) + 1;
    case Formula::Kind::Update:
      return length(f.announcement()) + length(f.body()) + 1;
  }
  return 1;
}

std::uint64_t size(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Constant:
    case Term::Kind::Variable:
      return 1;
    case Term::Kind::Up:
      return 1 + size(t.formula());
    case Term::Kind::App:
      return 1 + size(t.left()) + size(t.formula()) + size(t.right());
  }
  return 1;
}

std::uint64_t size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return 1;
    case Formula::Kind::Not:
      return 1 + size(f.body());
    case Formula::Kind::Implies:
      return 1 + size(f.left()) + size(f.right());
    case Formula::Kind::Justifies:
      return 1 + size(f.term()) + size(f.body());
    case Formula::Kind::Update:
      return 1 + size(f.announcement()) + size(f.body());
  }
  return 1;
}

namespace {

std::uint64_t term_depth(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Constant:
    case Term::Kind::Variable:
      return 0;
    case Term::Kind::Up:
      return 1 + depth(t.formula());
    case Term::Kind::App:
      return 1 + std::max({term_depth(t.left()), depth(t.formula()), term_depth(t.right())});
  }
  return 0;
}

}  // namespace

std::uint64_t depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return 0;
    case Formula::Kind::Not:
      return 1 + depth(f.body());
    case Formula::Kind::Implies:
      return 1 + std::max(depth(f.left()), depth(f.right()));
    case Formula::Kind::Justifies:
      return 1 + std::max(term_depth(f.term()), depth(f.body()));
    case Formula::Kind::Update:
      return 1 + std::max(depth(f.announcement()), depth(f.body()));
  }
  return 0;
}

Formula prefix(const UpdateSequence& tau, const Formula& f) {
  Formula out = f;
  for (auto it = tau.rbegin(); it != tau.rend(); ++it) out = Formula::update(*it, out);
  return out;
}

std::pair<UpdateSequence, Formula> strip_updates(const Formula& f) {
  UpdateSequence tau;
  Formula rest = f;
  while (rest.kind() == Formula::Kind::Update) {
    tau.push_back(rest.announcement());
    rest = rest.body();
  }
  return {std::move(tau), rest};
}

bool justification_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return true;
    case Formula::Kind::Not:
      return justification_free(f.body());
    case Formula::Kind::Implies:
      return justification_free(f.left()) && justification_free(f.right());
    case Formula::Kind::Justifies:
      return false;
    case Formula::Kind::Update:
      return justification_free(f.announcement()) && justification_free(f.body());
  }
  return true;
}

std::vector<std::uint64_t> constants_in(const Formula& f) {
  std::set<std::uint64_t> seen;
  for (const Term& t : atm(f))
    if (t.kind() == Term::Kind::Constant) seen.insert(t.index());
  return {seen.begin(), seen.end()};
}

}  // namespace jus
