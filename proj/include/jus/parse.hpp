#ifndef JUS_PARSE_HPP
#define JUS_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jus/syntax.hpp"

namespace jus {

// Malformed concrete syntax. position is 1-based; length + 1 denotes the end
// of input.
class SourceError : public std::runtime_error {
 public:
  SourceError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

// Grammar (lowest binding first):
//   formula := iff
//   iff     := impl ("<->" iff)?
//   impl    := disj ("->" impl)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "~" unary | "[" formula "]" unary | term ":" unary
//            | "(" formula ")" | "P"int | "_|_"
//   term    := "c"int | "x"int | "up(" formula ")" | "(" term "*[" formula "]" term ")"
// Sugar (&, |, <->, _|_) is expanded during parsing.
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

// Canonical rendering using core constructors only; parse_formula inverts it.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

}  // namespace jus

#endif  // JUS_PARSE_HPP
