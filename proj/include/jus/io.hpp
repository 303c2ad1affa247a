#ifndef JUS_IO_HPP
#define JUS_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "jus/explore.hpp"
#include "jus/model.hpp"
#include "jus/proof.hpp"

namespace jus {

// Malformed or unreadable input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// {"worlds":[...],"normal":[...],"v0":{w:{"P1":true}},"v1":{w:{"<formula>":bool}},
//  "evidence":{w:{"<atomic term>":[worlds]}},"evidence_default":"all"|"empty"}
// Only "worlds" is required. Structural problems that validate_model can
// describe (duplicate names, data on the wrong kind of world) pass through.
SubsetModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const SubsetModel& m);

// {"mode":"empty"|"explicit"|"full","pairs":[["c1","<formula>"],...]}
ConstantSpec cs_from_json(const nlohmann::json& j);
nlohmann::json cs_to_json(const ConstantSpec& cs);

// [{"formula":..., "rule":"axiom"|"an"|"mp", "schema":..., "constant":...,
//   "premises":[minor, major]}] with 1-based premises.
Proof proof_from_json(const nlohmann::json& j);
nlohmann::json proof_to_json(const Proof& p);

nlohmann::json signature_to_json(const ModelSignature& sig);
nlohmann::json report_to_json(const SearchReport& r);

}  // namespace jus

#endif  // JUS_IO_HPP
