#ifndef JUS_MODEL_HPP
#define JUS_MODEL_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jus/syntax.hpp"

namespace jus {

using World = std::size_t;
using WorldSet = boost::dynamic_bitset<>;

enum class EvidenceDefault { All, Empty };

// Finite presentation of a subset model (W, W0, V1, V0, E).
//
//  * v0 is stored per world with default 0 for unlisted propositions.
//  * v1 is stored per world as a finite support with default 0.
//  * evidence holds E on atomic terms at normal worlds. Unlisted atoms get
//    all worlds or no worlds according to evidence_default. E on application
//    terms is not stored; see evidence_effective().
//
// Per-world containers are indexed by World and always have worlds.size()
// entries. Any data placed on the wrong kind of world is reported by
// validate_model() rather than prevented.
struct SubsetModel {
  std::vector<std::string> worlds;
  WorldSet normal;
  std::vector<std::map<std::uint64_t, bool>> v0;
  std::vector<std::unordered_map<Formula, bool, FormulaHash>> v1;
  std::vector<std::unordered_map<Term, WorldSet, TermHash>> evidence;
  EvidenceDefault evidence_default = EvidenceDefault::All;

  SubsetModel() = default;
  // Worlds named by names; the first normal_count of them are normal.
  SubsetModel(std::vector<std::string> names, std::size_t normal_count);

  std::size_t world_count() const { return worlds.size(); }
  bool is_normal(World w) const { return normal.test(w); }
  std::optional<World> find_world(std::string_view name) const;
  World world(std::string_view name) const;  // throws std::out_of_range

  WorldSet empty_set() const { return WorldSet(worlds.size()); }
  WorldSet all_worlds() const { return ~empty_set(); }
  WorldSet make_set(std::initializer_list<World> members) const;

  void set_v0(World w, std::uint64_t prop, bool value) { v0.at(w)[prop] = value; }
  void set_v1(World w, const Formula& f, bool value) { v1.at(w)[f] = value; }
  void set_evidence(World w, const Term& t, WorldSet members) {
    evidence.at(w).insert_or_assign(t, std::move(members));
  }

  bool v0_value(World w, std::uint64_t prop) const;
  bool v1_value(World w, const Formula& f) const;
};

// W0 together with every non-normal world whose v1 support is closed under
// modus ponens. Only pairs A, A -> B listed with value 1 can break closure.
WorldSet wmp(const SubsetModel& m);

// E(w, t) for an atomic term at a normal world, with defaulting.
WorldSet evidence_atomic(const SubsetModel& m, World w, const Term& t);

// Empty when m satisfies every structural invariant.
std::vector<std::string> validate_model(const SubsetModel& m);

struct CsPair {
  Term constant;
  Formula formula;
};

// Empty: no pairs. Explicit: exactly `pairs`. Full: every pair whose formula
// has the shape [t1]c1 : ... : [tn]cn : A with A an axiom (decided by
// cs_contains in proof.hpp). In full mode `pairs` may list a finite universe
// of pairs to check models against.
struct ConstantSpec {
  enum class Mode { Empty, Explicit, Full };

  Mode mode = Mode::Empty;
  std::vector<CsPair> pairs;

  static ConstantSpec empty() { return {}; }
  static ConstantSpec full() { return {Mode::Full, {}}; }
  static ConstantSpec explicit_pairs(std::vector<CsPair> pairs) {
    return {Mode::Explicit, std::move(pairs)};
  }
};

std::string_view to_string(ConstantSpec::Mode mode);

}  // namespace jus

#endif  // JUS_MODEL_HPP
