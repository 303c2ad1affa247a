#include "jus/model.hpp"

#include <set>
#include <stdexcept>

#include "jus/parse.hpp"

namespace jus {

SubsetModel::SubsetModel(std::vector<std::string> names, std::size_t normal_count)
    : worlds(std::move(names)),
      normal(worlds.size()),
      v0(worlds.size()),
      v1(worlds.size()),
      evidence(worlds.size()) {
  for (std::size_t i = 0; i < normal_count && i < worlds.size(); ++i) normal.set(i);
}

std::optional<World> SubsetModel::find_world(std::string_view name) const {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return i;
  return std::nullopt;
}

World SubsetModel::world(std::string_view name) const {
  if (auto w = find_world(name)) return *w;
  throw std::out_of_range("unknown world '" + std::string(name) + "'");
}

WorldSet SubsetModel::make_set(std::initializer_list<World> members) const {
  WorldSet out = empty_set();
  for (World w : members) out.set(w);
  return out;
}

bool SubsetModel::v0_value(World w, std::uint64_t prop) const {
  const auto& row = v0.at(w);
  auto it = row.find(prop);
  return it != row.end() && it->second;
}

bool SubsetModel::v1_value(World w, const Formula& f) const {
  const auto& row = v1.at(w);
  auto it = row.find(f);
  return it != row.end() && it->second;
}

WorldSet wmp(const SubsetModel& m) {
  WorldSet out = m.normal;
  for (World w = 0; w < m.world_count(); ++w) {
    if (m.is_normal(w)) continue;
    bool closed = true;
    for (const auto& [f, value] : m.v1[w]) {
      if (!value || f.kind() != Formula::Kind::Implies) continue;
      if (m.v1_value(w, f.left()) && !m.v1_value(w, f.right())) {
        closed = false;
        break;
      }
    }
    if (closed) out.set(w);
  }
  return out;
}

WorldSet evidence_atomic(const SubsetModel& m, World w, const Term& t) {
  const auto& row = m.evidence.at(w);
  if (auto it = row.find(t); it != row.end()) return it->second;
  return m.evidence_default == EvidenceDefault::All ? m.all_worlds() : m.empty_set();
}

std::vector<std::string> validate_model(const SubsetModel& m) {
  std::vector<std::string> out;
  const std::size_t n = m.world_count();
  if (n == 0) out.emplace_back("W nonempty: model has no worlds");
  {
    std::set<std::string> names(m.worlds.begin(), m.worlds.end());
    if (names.size() != n) out.emplace_back("world names must be distinct");
  }
  if (m.normal.size() != n) {
    out.emplace_back("W0 subset of W: normal set has wrong universe size");
    return out;
  }
  if (m.normal.none()) out.emplace_back("W0 nonempty: no normal world");
  if (m.v0.size() != n || m.v1.size() != n || m.evidence.size() != n) {
    out.emplace_back("per-world tables must have one entry per world");
    return out;
  }
  for (World w = 0; w < n; ++w) {
    const std::string& name = m.worlds[w];
    if (m.is_normal(w)) {
      if (!m.v1[w].empty())
        out.push_back("V1 is defined on non-normal worlds only: v1 entry at normal world " + name);
    } else {
      if (!m.v0[w].empty())
        out.push_back("V0 is defined on normal worlds only: v0 entry at non-normal world " + name);
      if (!m.evidence[w].empty())
        out.push_back("evidence is stored for normal worlds only: entry at non-normal world " +
                      name);
    }
    for (const auto& [prop, value] : m.v0[w]) {
      (void)value;
      if (prop == 0) out.push_back("v0 proposition index must be positive at world " + name);
    }
    for (const auto& [term, members] : m.evidence[w]) {
      if (!term.is_atomic())
        out.push_back("evidence keys must be atomic terms: " + print_term(term) + " at " + name);
      if (members.size() != n)
        out.push_back("evidence set is not a subset of W: " + print_term(term) + " at " + name);
    }
  }
  return out;
}

std::string_view to_string(ConstantSpec::Mode mode) {
  switch (mode) {
    case ConstantSpec::Mode::Empty:
      return "empty";
    case ConstantSpec::Mode::Explicit:
      return "explicit";
    case ConstantSpec::Mode::Full:
      return "full";
  }
  return "empty";
}

}  // namespace jus
