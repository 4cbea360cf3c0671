#include "foxcoh/manifest.hpp"

#include <fstream>

#include "foxcoh/entry.hpp"
#include "foxcoh/error.hpp"

namespace foxcoh {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::InvalidInput, message); }

const ordered_json& require(const ordered_json& doc, const char* key) {
  if (!doc.contains(key)) invalid(std::string("manifest is missing \"") + key + "\"");
  return doc.at(key);
}

std::string as_string(const ordered_json& value, const std::string& what) {
  if (!value.is_string()) invalid(what + " must be a string");
  return value.get<std::string>();
}

std::vector<std::string> string_list(const ordered_json& value, const std::string& what) {
  if (!value.is_array()) invalid(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) out.push_back(as_string(item, what));
  return out;
}

QuatMatrix parse_matrix(const ordered_json& value, const std::string& what) {
  if (!value.is_array() || value.size() != 3) invalid(what + " must be a 3x3 array of entry strings");
  QuatMatrix m;
  for (std::size_t r = 0; r < 3; ++r) {
    const auto& row = value[r];
    if (!row.is_array() || row.size() != 3) invalid(what + " must be a 3x3 array of entry strings");
    for (std::size_t c = 0; c < 3; ++c) {
      const std::string text = as_string(row[c], what);
      try {
        m(r, c) = parse_entry(text);
      } catch (const Error& e) {
        throw Error(e.code(), what + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                  ") \"" + text + "\": " + e.what());
      }
    }
  }
  return m;
}

}  // namespace

Manifest parse_manifest(const ordered_json& doc) {
  if (!doc.is_object()) invalid("manifest must be a JSON object");
  Manifest m;
  m.name = doc.contains("name") ? as_string(doc.at("name"), "name") : "unnamed";

  std::string generators;
  for (const auto& g : string_list(require(doc, "generators"), "generators")) {
    if (g.size() != 1) invalid("generator names must be single letters, got \"" + g + "\"");
    generators += g;
  }
  m.presentation = Presentation::parse(generators, string_list(require(doc, "relators"), "relators"));

  const auto& images = require(doc, "images");
  if (!images.is_object()) invalid("images must be an object keyed by generator");
  for (const auto& [key, value] : images.items())
    if (key.size() != 1 || generators.find(key[0]) == std::string::npos)
      throw Error(ErrorCode::UnknownGenerator, "image given for undeclared generator \"" + key + "\"");
  for (char g : generators) {
    const std::string key(1, g);
    if (!images.contains(key)) invalid("missing image for generator \"" + key + "\"");
    m.images.push_back(parse_matrix(images.at(key), "image of " + key));
  }

  if (doc.contains("form")) m.form = parse_matrix(doc.at("form"), "form");

  if (doc.contains("flavors")) {
    for (const auto& name : string_list(doc.at("flavors"), "flavors")) {
      auto f = parse_flavor(name);
      if (!f) invalid("unknown flavor \"" + name + "\"");
      m.flavors.push_back(*f);
    }
  } else {
    m.flavors = {Flavor::sp21, Flavor::u21, Flavor::su21, Flavor::m};
  }

  if (doc.contains("quotient")) {
    const auto& q = doc.at("quotient");
    if (!q.is_object()) invalid("quotient must be an object");
    QuotientSpec spec;
    spec.name = q.contains("name") ? as_string(q.at("name"), "quotient name") : "quotient";
    spec.presentation = Presentation::parse(generators, string_list(require(q, "relators"), "quotient relators"));
    m.quotient = std::move(spec);
  }

  if (doc.contains("flags")) {
    const auto& flags = doc.at("flags");
    if (flags.contains("zariski_dense")) m.claimed_zariski_dense = flags.at("zariski_dense").get<bool>();
  }
  if (doc.contains("expected")) m.expected = doc.at("expected");
  if (doc.contains("notes")) m.notes = string_list(doc.at("notes"), "notes");
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open manifest " + path.string());
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    invalid("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_manifest(doc);
}

HermitianForm manifest_form(const Manifest& manifest) {
  if (manifest.form) return HermitianForm(*manifest.form);
  return derive_invariant_form(manifest.images);
}

Representation make_representation(const Manifest& manifest, HermitianForm form) {
  return Representation{std::move(form), manifest.presentation.generators, manifest.images,
                        manifest.claimed_zariski_dense};
}

}  // namespace foxcoh
