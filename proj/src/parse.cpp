#include "jus/parse.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace jus {

SourceError::SourceError(std::size_t position, const std::string& message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message),
      position_(position),
      message_(message) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula formula() { return iff_level(); }

  Term term() {
    skip_ws();
    if (at_end()) fail("expected term");
    const char ch = text_[pos_];
    if (ch == 'c' && digit_at(pos_ + 1)) {
      ++pos_;
      return Term::constant(number());
    }
    if (ch == 'x' && digit_at(pos_ + 1)) {
      ++pos_;
      return Term::variable(number());
    }
    if (text_.substr(pos_, 2) == "up") {
      pos_ += 2;
      expect("(");
      Formula body = formula();
      expect(")");
      return Term::up(body);
    }
    if (ch == '(') {
      ++pos_;
      Term left = term();
      expect("*");
      expect("[");
      Formula annotation = formula();
      expect("]");
      Term right = term();
      expect(")");
      return Term::app(left, annotation, right);
    }
    fail("expected term");
  }

  void finish() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  Formula iff_level() {
    Formula left = impl_level();
    if (accept("<->")) return iff(left, iff_level());
    return left;
  }

  Formula impl_level() {
    Formula left = disj_level();
    if (accept("->")) return Formula::implies(left, impl_level());
    return left;
  }

  Formula disj_level() {
    Formula left = conj_level();
    while (accept("|")) left = or_(left, conj_level());
    return left;
  }

  Formula conj_level() {
    Formula left = unary();
    while (accept("&")) left = and_(left, unary());
    return left;
  }

  Formula unary() {
    skip_ws();
    if (at_end()) fail("expected formula");
    const char ch = text_[pos_];
    if (ch == '~') {
      ++pos_;
      return Formula::negation(unary());
    }
    if (ch == '[') {
      ++pos_;
      Formula announcement = formula();
      expect("]");
      return Formula::update(announcement, unary());
    }
    if (ch == 'P' && digit_at(pos_ + 1)) {
      ++pos_;
      return Formula::prop(number());
    }
    if (text_.substr(pos_, 3) == "_|_") {
      pos_ += 3;
      return falsum();
    }
    if (ch == '(') {
      // Either an application term heading "t : F" or a parenthesised formula.
      const std::size_t start = pos_;
      std::optional<Term> t;
      std::optional<SourceError> term_error;
      try {
        t = term();
      } catch (const SourceError& e) {
        term_error = e;
      }
      if (t && accept(":")) return Formula::justifies(*t, unary());
      pos_ = start + 1;
      try {
        Formula inner = formula();
        expect(")");
        return inner;
      } catch (const SourceError& e) {
        // Report whichever reading got further into the input.
        if (term_error && term_error->position() > e.position()) throw *term_error;
        throw;
      }
    }
    if (starts_term()) {
      Term t = term();
      expect(":");
      return Formula::justifies(t, unary());
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  bool starts_term() const {
    const char ch = text_[pos_];
    if ((ch == 'c' || ch == 'x') && digit_at(pos_ + 1)) return true;
    return text_.substr(pos_, 2) == "up";
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (digit_at(pos_)) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        fail_at(start, "index out of range");
      value = value * 10 + digit;
      ++pos_;
    }
    if (value == 0) fail_at(start, "index must be positive");
    return value;
  }

  bool digit_at(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw SourceError(pos + 1, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Formula& f, std::string& out);

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Constant:
      out += 'c';
      out += std::to_string(t.index());
      return;
    case Term::Kind::Variable:
      out += 'x';
      out += std::to_string(t.index());
      return;
    case Term::Kind::Up:
      out += "up(";
      print(t.formula(), out);
      out += ')';
      return;
    case Term::Kind::App:
      out += '(';
      print(t.left(), out);
      out += " *[";
      print(t.formula(), out);
      out += "] ";
      print(t.right(), out);
      out += ')';
      return;
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      out += 'P';
      out += std::to_string(f.index());
      return;
    case Formula::Kind::Not:
      out += '~';
      print(f.body(), out);
      return;
    case Formula::Kind::Implies:
      out += '(';
      print(f.left(), out);
      out += " -> ";
      print(f.right(), out);
      out += ')';
      return;
    case Formula::Kind::Justifies:
      print(f.term(), out);
      out += " : ";
      print(f.body(), out);
      return;
    case Formula::Kind::Update:
      out += '[';
      print(f.announcement(), out);
      out += "] ";
      print(f.body(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

}  // namespace jus
