#pragma once

// JSON manifests describing a presentation and a representation into Sp(2,1).
//
//   {
//     "name": "gamma8_rho0",
//     "generators": ["a", "b"],
//     "relators": ["BabAbaBAbA"],
//     "images": { "a": [["1", "1", "(-1 - i*sqrt3)/2"], ...], "b": [...] },
//     "form": [[...], [...], [...]],              optional, else derived
//     "flavors": ["sp21", "u21", "su21", "m"],    optional, default all
//     "quotient": { "name": "...", "relators": ["aaa", "bbb"] },   optional
//     "flags": { "zariski_dense": true },         optional metadata
//     "expected": { ... },                        optional, used by --check
//     "notes": ["..."]                            optional
//   }

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "foxcoh/lie.hpp"
#include "foxcoh/matrix.hpp"
#include "foxcoh/words.hpp"

namespace foxcoh {

struct QuotientSpec {
  std::string name;
  Presentation presentation;
};

struct Manifest {
  std::string name;
  Presentation presentation;
  /// Aligned with presentation.generators.
  std::vector<QuatMatrix> images;
  std::optional<QuatMatrix> form;
  std::vector<Flavor> flavors;
  std::optional<QuotientSpec> quotient;
  bool claimed_zariski_dense = false;
  nlohmann::ordered_json expected;
  std::vector<std::string> notes;
};

/// Parses every field (words and entry expressions included) before
/// returning. Throws Error(InvalidInput), SyntaxError and friends.
Manifest parse_manifest(const nlohmann::ordered_json& doc);
Manifest load_manifest(const std::filesystem::path& path);

/// Uses the explicit form when given (it is only validated), otherwise
/// derives one from the generator images.
HermitianForm manifest_form(const Manifest& manifest);
Representation make_representation(const Manifest& manifest, HermitianForm form);

}  // namespace foxcoh
