#include <cstdint>
#include <unordered_map>
#include <vector>

#include "jus/proof.hpp"

namespace jus {

namespace {

// Formula compiled over opaque atoms: node i refers to children by index.
struct Circuit {
  enum class Op : std::uint8_t { Atom, Not, Implies };
  struct Node {
    Op op;
    std::size_t a = 0;
    std::size_t b = 0;
  };

  std::vector<Node> nodes;
  std::vector<Formula> atoms;
  std::unordered_map<Formula, std::size_t, FormulaHash> atom_ids;

  std::size_t compile(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Not: {
        const std::size_t child = compile(f.body());
        nodes.push_back({Op::Not, child, 0});
        return nodes.size() - 1;
      }
      case Formula::Kind::Implies: {
        const std::size_t l = compile(f.left());
        const std::size_t r = compile(f.right());
        nodes.push_back({Op::Implies, l, r});
        return nodes.size() - 1;
      }
      default: {
        auto [it, inserted] = atom_ids.try_emplace(f, atoms.size());
        if (inserted) atoms.push_back(f);
        nodes.push_back({Op::Atom, it->second, 0});
        return nodes.size() - 1;
      }
    }
  }
};

// Kleene three-valued evaluation: 0 false, 1 true, 2 unknown.
std::uint8_t evaluate(const Circuit& c, const std::vector<std::uint8_t>& assignment,
                      std::vector<std::uint8_t>& scratch) {
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const auto& n = c.nodes[i];
    switch (n.op) {
      case Circuit::Op::Atom:
        scratch[i] = assignment[n.a];
        break;
      case Circuit::Op::Not:
        scratch[i] = scratch[n.a] == 2 ? 2 : static_cast<std::uint8_t>(1 - scratch[n.a]);
        break;
      case Circuit::Op::Implies: {
        const auto l = scratch[n.a];
        const auto r = scratch[n.b];
        if (l == 0 || r == 1)
          scratch[i] = 1;
        else if (l == 1 && r == 0)
          scratch[i] = 0;
        else
          scratch[i] = 2;
        break;
      }
    }
  }
  return scratch.back();
}

bool falsifiable(const Circuit& c, std::vector<std::uint8_t>& assignment,
                 std::vector<std::uint8_t>& scratch, std::size_t next) {
  const auto value = evaluate(c, assignment, scratch);
  if (value == 1) return false;
  if (value == 0) return true;
  for (std::uint8_t v : {std::uint8_t{0}, std::uint8_t{1}}) {
    assignment[next] = v;
    if (falsifiable(c, assignment, scratch, next + 1)) return true;
  }
  assignment[next] = 2;
  return false;
}

}  // namespace

bool taut_check(const Formula& f) {
  Circuit c;
  c.compile(f);
  std::vector<std::uint8_t> assignment(c.atoms.size(), 2);
  std::vector<std::uint8_t> scratch(c.nodes.size());
  return !falsifiable(c, assignment, scratch, 0);
}

}  // namespace jus
