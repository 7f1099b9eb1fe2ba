#pragma once

// Text interchange format for weight systems (schema_version "1"):
//
//   {"schema_version":"1","obstruction":[b1,b2],"orientation":1,"genus":g,
//    "circle_boundaries":[[p,q],...],
//    "fixed_cycles":[[{"pair":[a,b],"f":f},...],...],
//    "exceptional":[{"alpha":a,"gamma1":g1,"gamma2":g2},...]}
//
// serialize_document emits exactly this key order on one line, so a document
// written by it parses and re-serializes to the same bytes. Sign
// representatives inside cycles are kept verbatim.

#include <string>
#include <string_view>

#include "t2w/core.hpp"
#include "t2w/surgery.hpp"

namespace t2w {

inline constexpr std::string_view kSchemaVersion = "1";

/// Throws Error(kParse) on malformed input, including integers outside the
/// 64-bit range.
WeightSystem parse_document(std::string_view text);

std::string serialize_document(const WeightSystem& w);

/// One line per fixed point: cycle, point, left and right arc isotropies, f,
/// orbit type, L(r,s) and its +-s class representative. Tab separated, with a
/// header line.
std::string local_models_listing(const WeightSystem& w);

/// Gluing manifest of a decomposition; `piece_names[i]` names piece i.
std::string decomposition_manifest(const Decomposition& d,
                                   const std::vector<std::string>& piece_names,
                                   const std::string& manifold_name);

}  // namespace t2w
