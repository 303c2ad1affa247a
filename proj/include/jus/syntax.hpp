#ifndef JUS_SYNTAX_HPP
#define JUS_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

namespace jus {

class Formula;

// Evidence term. Immutable handle to a shared tree node; copies are cheap.
class Term {
 public:
  enum class Kind : std::uint8_t { Constant, Variable, Up, App };

  static Term constant(std::uint64_t index);
  static Term variable(std::uint64_t index);
  static Term up(const Formula& body);
  static Term app(const Term& left, const Formula& annotation, const Term& right);

  Kind kind() const;
  bool is_atomic() const { return kind() != Kind::App; }

  // Constant / Variable only.
  std::uint64_t index() const;
  // Up: the announced formula. App: the annotation.
  const Formula& formula() const;
  // App only.
  const Term& left() const;
  const Term& right() const;

  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Formula of the object language. Only core constructors are representable;
// derived connectives are expanded on construction (see and_/or_/iff/falsum).
class Formula {
 public:
  enum class Kind : std::uint8_t { Prop, Not, Implies, Justifies, Update };

  static Formula prop(std::uint64_t index);
  static Formula negation(const Formula& body);
  static Formula implies(const Formula& left, const Formula& right);
  static Formula justifies(const Term& term, const Formula& body);
  // [announcement] body
  static Formula update(const Formula& announcement, const Formula& body);

  Kind kind() const;

  std::uint64_t index() const;          // Prop
  const Formula& body() const;          // Not, Justifies, Update
  const Formula& left() const;          // Implies
  const Formula& right() const;         // Implies
  const Term& term() const;             // Justifies
  const Formula& announcement() const;  // Update

  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using TermSet = std::unordered_set<Term, TermHash>;
using FormulaSet = std::unordered_set<Formula, FormulaHash>;

// A finite sequence of announcements C1 ... Cn; empty is the empty sequence.
using UpdateSequence = std::vector<Formula>;

// Derived connectives, fixed once for the whole toolkit:
//   A & B   := ~(A -> ~B)
//   A | B   := ~A -> B
//   A <-> B := ~((A -> B) -> ~(B -> A))
//   _|_     := ~(P1 -> P1)
Formula and_(const Formula& a, const Formula& b);
Formula or_(const Formula& a, const Formula& b);
Formula iff(const Formula& a, const Formula& b);
Formula falsum();

// Atomic subterms: constants, variables and up-terms, collected through
// annotations, up-bodies and announcements.
TermSet atm(const Term& t);
TermSet atm(const Formula& f);

bool up_independent(const Formula& f);

// Length measure; up(A) counts as a single atom.
std::uint64_t length(const Term& t);
std::uint64_t length(const Formula& f);

// Node count; unlike length(), this also counts the body of up(A).
std::uint64_t size(const Term& t);
std::uint64_t size(const Formula& f);

std::uint64_t depth(const Formula& f);

// [C1]...[Cn]f
Formula prefix(const UpdateSequence& tau, const Formula& f);

// Splits f = [C1]...[Ck]g for the largest k; returns (C1..Ck, g).
std::pair<UpdateSequence, Formula> strip_updates(const Formula& f);

// True iff f contains no subformula of the form t:B.
bool justification_free(const Formula& f);

// Indices of the constants occurring anywhere in f.
std::vector<std::uint64_t> constants_in(const Formula& f);

}  // namespace jus

#endif  // JUS_SYNTAX_HPP
