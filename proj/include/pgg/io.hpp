#pragma once

#include "pgg/families.hpp"
#include "pgg/game.hpp"

#include <json.hpp>

#include <string>

namespace pgg {

using Json = nlohmann::ordered_json;

// Line-oriented instance format, '#' comments:
//   p pgg <n> <m>
//   k <int>
//   c <num>/<den>
//   a <u> <v>          (one per arc)
//   name <v> <string>  (optional)
// parse(serialize(x)) is the identity on the canonical form serialize emits.
LabeledInstance parse_instance(const std::string& text);
std::string serialize_instance(const LabeledInstance& li);

// 3-uniform hypergraph files:
//   h 3uniform <n> <m>
//   e <a> <b> <c>      (one per hyperedge)
Hypergraph3 parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph3& h);

// Profile files. Pure:
//   buy <v> <t1> <t2> ...
//   abstain <v>
// Mixed adds `mix <v> <p> <t1> ...` (single support set); a file whose first
// non-blank character is '{' is instead read as the JSON schema emitted by
// serialize_mixed_profile, which also carries multi-set supports.
PureProfile parse_pure_profile(const GameInstance& inst, const std::string& text);
std::string serialize_pure_profile(const PureProfile& x);
MixedProfile parse_mixed_profile(const GameInstance& inst, const std::string& text);
std::string serialize_mixed_profile(const MixedProfile& sigma);

// FNV-1a over the canonical serialization; hex string.
std::string instance_digest(const LabeledInstance& li);

// Report skeleton: command, digest, tool version. Callers add result fields;
// dump with report_to_string for byte-stable output.
Json make_report(const std::string& command, const LabeledInstance& li);
std::string report_to_string(const Json& report);

Json vertices_json(const std::vector<Vertex>& vs);
Json extension_json(const Extension& ext);
Json mixed_profile_json(const MixedProfile& sigma);

inline constexpr const char* kToolVersion = "pgg 1.0.0";

}  // namespace pgg
