#include "foxcoh/cli.hpp"

#include <algorithm>
#include <sstream>

#include "foxcoh/cohomology.hpp"
#include "foxcoh/error.hpp"

namespace foxcoh {

using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInGroup:
    case ErrorCode::NotARepresentation:
    case ErrorCode::NoInvariantForm:
    case ErrorCode::CheckFailed:
      return 1;
    default:
      return 2;
  }
}

namespace {

ordered_json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

ordered_json matrix_json(const QuatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < 3; ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

ordered_json smith_json(const SmithForm& s) {
  ordered_json factors = ordered_json::array();
  for (const auto& f : s.factors) factors.push_back(integer_json(f));
  return {{"factors", factors}, {"free_rank", s.free_rank}};
}

std::string smith_text(const SmithForm& s) {
  std::string out;
  for (const auto& f : s.factors) out += (out.empty() ? "" : " + ") + std::string("Z/") + f.get_str();
  if (s.free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += s.free_rank == 1 ? "Z" : "Z^" + std::to_string(s.free_rank);
  }
  return out.empty() ? "0" : out;
}

ordered_json form_json(const Manifest& manifest, const HermitianForm& form) {
  const Signature s = hermitian_signature(form.matrix());
  return {{"source", manifest.form ? "explicit" : "derived"},
          {"matrix", matrix_json(form.matrix())},
          {"signature", {s.positive, s.negative}}};
}

ordered_json header(const Manifest& manifest, std::string_view command) {
  return {{"tool", "foxcoh"}, {"version", kVersion}, {"command", command}, {"manifest", manifest.name}};
}

struct Mismatch {
  std::string path;
  ordered_json expected;
  ordered_json computed;
};

// Compares every key of `expected` that `computed` also has, recursively.
void compare(const std::string& path, const ordered_json& expected, const ordered_json& computed,
             std::vector<Mismatch>& out) {
  if (expected.is_object() && computed.is_object()) {
    for (const auto& [key, value] : expected.items()) {
      const std::string child = path.empty() ? key : path + "." + key;
      if (!computed.contains(key)) {
        out.push_back({child, value, nullptr});
      } else {
        compare(child, value, computed.at(key), out);
      }
    }
    return;
  }
  if (expected != computed) out.push_back({path, expected, computed});
}

void apply_check(RunResult& result, const std::vector<std::pair<ordered_json, ordered_json>>& pairs,
                 const std::vector<std::string>& prefixes) {
  std::vector<Mismatch> mismatches;
  for (std::size_t i = 0; i < pairs.size(); ++i) compare(prefixes[i], pairs[i].first, pairs[i].second, mismatches);
  ordered_json list = ordered_json::array();
  for (const auto& m : mismatches)
    list.push_back({{"path", m.path}, {"expected", m.expected}, {"computed", m.computed}});
  result.report["check"] = {{"passed", mismatches.empty()}, {"mismatches", list}};
  if (mismatches.empty()) {
    result.summary += "check: all expected values match\n";
    return;
  }
  for (const auto& m : mismatches)
    result.summary += "check FAILED: " + m.path + " expected " + m.expected.dump() + ", computed " +
                      m.computed.dump() + "\n";
  if (result.exit_code == 0) {
    result.exit_code = 1;
    result.report["status"] = "failed";
    result.report["error"] = {{"code", error_code_name(ErrorCode::CheckFailed)},
                              {"message", std::to_string(mismatches.size()) + " expected value(s) differ"}};
  }
}

// --- verify -----------------------------------------------------------------

RunResult run_verify(const Manifest& manifest) {
  RunResult result;
  result.report = header(manifest, "verify");
  std::ostringstream text;
  text << "manifest " << manifest.name << "\n";

  const HermitianForm form = manifest_form(manifest);
  result.report["form"] = form_json(manifest, form);
  text << "form (" << (manifest.form ? "explicit" : "derived") << "): " << form.matrix().to_string()
       << ", signature (2,1)\n";

  std::optional<ErrorCode> failure;
  ordered_json membership = ordered_json::array();
  for (std::size_t i = 0; i < manifest.images.size(); ++i) {
    const bool ok = form.preserved_by(manifest.images[i]);
    const std::string g(1, manifest.presentation.generators[i]);
    membership.push_back({{"generator", g}, {"ok", ok}});
    text << "  " << g << "* J " << g << " = J: " << (ok ? "yes" : "NO") << "\n";
    if (!ok && !failure) failure = ErrorCode::NotInGroup;
  }
  result.report["membership"] = membership;

  const Representation rho = make_representation(manifest, form);
  auto relator_checks = [&](const std::string& name, const Presentation& p) {
    ordered_json list = ordered_json::array();
    for (std::size_t j = 0; j < p.relators.size(); ++j) {
      const bool ok = evaluate_word_matrix(p.relators[j], rho) == QuatMatrix::identity();
      const std::string word = p.relators[j].to_string(p.generators);
      list.push_back({{"index", j + 1}, {"word", word}, {"ok", ok}});
      text << "  " << name << " relator " << word << " -> identity: " << (ok ? "yes" : "NO") << "\n";
      if (!ok && !failure) failure = ErrorCode::NotARepresentation;
    }
    return list;
  };
  result.report["relators"] = relator_checks(manifest.name, manifest.presentation);
  if (manifest.quotient)
    result.report["quotient_relators"] = relator_checks(manifest.quotient->name, manifest.quotient->presentation);

  if (failure) {
    result.exit_code = 1;
    result.report["status"] = "failed";
    result.report["error"] = {{"code", error_code_name(*failure)},
                              {"message", *failure == ErrorCode::NotInGroup
                                              ? "a generator image does not preserve the form"
                                              : "a relator does not map to the identity"}};
    text << "verification FAILED (" << error_code_name(*failure) << ")\n";
  } else {
    result.report["status"] = "ok";
    text << "verification passed\n";
  }
  result.summary = text.str();
  return result;
}

// --- h1 ---------------------------------------------------------------------

struct FlavorRun {
  Flavor flavor;
  CohomologyReport report;
};

ordered_json cohomology_json(const CohomologyReport& r, const std::string& generators) {
  ordered_json j = {{"flavor", flavor_name(r.flavor)},
                    {"basis_size", r.basis_size},
                    {"generators", r.generators},
                    {"relators", r.relators},
                    {"h0", r.h0},
                    {"z1", r.z1},
                    {"b1", r.b1},
                    {"h1", r.h1},
                    {"cocycle_rank", r.cocycle_rank},
                    {"zariski_tangent_dimension", r.h1}};
  if (r.split) j["split"] = {{"u21", r.split->u21}, {"m", r.split->m}};
  ordered_json cent = ordered_json::object();
  for (std::size_t i = 0; i < r.centralizers.size(); ++i) cent[std::string(1, generators[i])] = r.centralizers[i];
  j["centralizers"] = cent;
  return j;
}

// Runs every requested flavor on one presentation.
ordered_json h1_block(const Representation& rho, const Presentation& p, const std::vector<Flavor>& flavors,
                      std::vector<FlavorRun>& runs, std::ostringstream& text) {
  const SmithForm ab = smith_normal_form(abelianization_matrix(p));
  ordered_json block = {{"abelianization", smith_json(ab)}};
  text << "  abelianization: " << smith_text(ab) << "\n";

  ordered_json reports = ordered_json::object();
  for (Flavor f : flavors) {
    const CohomologyReport r = h1_dimension(rho, lie_basis(rho.form, f), p);
    runs.push_back({f, r});
    reports[std::string(flavor_name(f))] = cohomology_json(r, p.generators);
    text << "  " << flavor_name(f) << " (d=" << r.basis_size << "): H0 " << r.h0 << ", Z1 " << r.z1 << ", B1 "
         << r.b1 << ", H1 " << r.h1 << " (Zariski tangent dimension)";
    if (r.split) text << ", split u21 " << r.split->u21 << " + m " << r.split->m;
    text << "\n";
  }
  block["h1"] = reports;

  auto find = [&runs](Flavor f) -> const CohomologyReport* {
    for (const auto& run : runs)
      if (run.flavor == f) return &run.report;
    return nullptr;
  };
  ordered_json verdicts = ordered_json::object();
  const CohomologyReport* sp = find(Flavor::sp21);
  const CohomologyReport* u = find(Flavor::u21);
  const CohomologyReport* su = find(Flavor::su21);
  std::optional<std::size_t> u_h1;
  if (u) u_h1 = u->h1;
  else if (sp && sp->split) u_h1 = sp->split->u21;
  if (sp && u_h1) {
    const long excess = static_cast<long>(sp->h1) - static_cast<long>(*u_h1);
    verdicts["sp21_minus_u21"] = excess;
    verdicts["deformable_outside_u21"] = excess > 0;
    text << "  H1(sp21) - H1(u21) = " << excess
         << (excess > 0 ? ": deformations leave U(2,1)\n" : ": no deformations outside U(2,1) at first order\n");
  }
  if (u_h1 && su) {
    const bool holds = *u_h1 == su->h1 + ab.free_rank;
    verdicts["central_split"] = {
        {"u21", *u_h1}, {"su21", su->h1}, {"free_rank", ab.free_rank}, {"holds", holds}};
  }
  block["verdicts"] = verdicts;
  return block;
}

RunResult run_h1(const Manifest& manifest, const RunOptions& options) {
  RunResult result;
  result.report = header(manifest, "h1");
  std::ostringstream text;
  const std::vector<Flavor>& flavors = options.flavors.empty() ? manifest.flavors : options.flavors;

  const HermitianForm form = manifest_form(manifest);
  const Representation rho = make_representation(manifest, form);
  result.report["form"] = form_json(manifest, form);

  text << manifest.name << ":\n";
  std::vector<FlavorRun> runs;
  ordered_json main = h1_block(rho, manifest.presentation, flavors, runs, text);
  for (auto& [key, value] : main.items()) result.report[key] = value;

  if (options.quotient) {
    if (!manifest.quotient) throw Error(ErrorCode::InvalidInput, "manifest has no quotient presentation");
    text << manifest.quotient->name << " (quotient):\n";
    std::vector<FlavorRun> quotient_runs;
    ordered_json q = {{"name", manifest.quotient->name}};
    q.update(h1_block(rho, manifest.quotient->presentation, flavors, quotient_runs, text));
    result.report["quotient"] = q;

    ordered_json inflation = ordered_json::array();
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const bool holds = runs[i].report.h1 >= quotient_runs[i].report.h1;
      inflation.push_back({{"flavor", flavor_name(runs[i].flavor)},
                           {"presentation", runs[i].report.h1},
                           {"quotient", quotient_runs[i].report.h1},
                           {"holds", holds}});
      text << "  inflation " << flavor_name(runs[i].flavor) << ": " << runs[i].report.h1
           << (holds ? " >= " : " < ") << quotient_runs[i].report.h1 << "\n";
    }
    result.report["inflation"] = inflation;
  }
  result.report["status"] = "ok";
  result.summary = text.str();

  if (options.check) {
    // Only flavors that were run are compared.
    auto prune = [&flavors](const ordered_json& by_flavor) {
      ordered_json kept = ordered_json::object();
      for (auto& [flavor, values] : by_flavor.items()) {
        auto f = parse_flavor(flavor);
        if (f && std::find(flavors.begin(), flavors.end(), *f) != flavors.end()) kept[flavor] = values;
      }
      return kept;
    };
    auto expected_block = [&prune](const ordered_json& e) {
      ordered_json block = ordered_json::object();
      if (e.contains("abelianization")) block["abelianization"] = e.at("abelianization");
      if (e.contains("h1")) block["h1"] = prune(e.at("h1"));
      return block;
    };
    std::vector<std::pair<ordered_json, ordered_json>> pairs{{expected_block(manifest.expected), result.report}};
    std::vector<std::string> prefixes{""};
    if (options.quotient && manifest.expected.contains("quotient")) {
      pairs.emplace_back(expected_block(manifest.expected.at("quotient")), result.report.at("quotient"));
      prefixes.emplace_back("quotient");
    }
    apply_check(result, pairs, prefixes);
  }
  return result;
}

// --- centralizer ------------------------------------------------------------

RunResult run_centralizer(const Manifest& manifest, const RunOptions& options) {
  if (options.arguments.size() != 1)
    throw Error(ErrorCode::InvalidInput, "centralizer expects exactly one word argument");
  RunResult result;
  result.report = header(manifest, "centralizer");
  std::ostringstream text;

  const HermitianForm form = manifest_form(manifest);
  const Representation rho = make_representation(manifest, form);
  const FreeWord word = parse_word(options.arguments[0], manifest.presentation.generators);
  const QuatMatrix g = evaluate_word_matrix(word, rho);
  const std::string word_text = word.is_identity() ? "1" : word.to_string(manifest.presentation.generators);
  result.report["word"] = word_text;
  result.report["matrix"] = matrix_json(g);

  const std::vector<Flavor> flavors = options.flavors.empty() ? std::vector<Flavor>{Flavor::sp21} : options.flavors;
  ordered_json list = ordered_json::object();
  for (Flavor f : flavors) {
    const std::size_t d = flavor_dimension(f);
    const std::size_t dim = centralizer_dimension(g, lie_basis(form, f));
    const long bound = static_cast<long>(d) - 2 * static_cast<long>(dim);
    list[std::string(flavor_name(f))] = {{"algebra_dimension", d}, {"centralizer_dimension", dim}, {"pair_bound", bound}};
    text << "centralizer of rho(" << word_text << ") in " << flavor_name(f) << ": dimension " << dim
         << "; dim - 2 dim Z = " << d << " - 2*" << dim << " = " << bound << "\n";
  }
  result.report["centralizers"] = list;
  result.report["status"] = "ok";
  result.summary = text.str();

  if (options.check && manifest.expected.contains("centralizer") &&
      manifest.expected.at("centralizer").contains(word_text)) {
    ordered_json expected = manifest.expected.at("centralizer").at(word_text);
    ordered_json computed = ordered_json::object();
    for (auto& [flavor, block] : list.items()) computed[flavor] = block.at("centralizer_dimension");
    ordered_json kept = ordered_json::object();
    for (auto& [flavor, value] : expected.items())
      if (computed.contains(flavor)) kept[flavor] = value;
    apply_check(result, {{kept, computed}}, {"centralizer." + word_text});
  }
  return result;
}

// --- abelianization / fox ---------------------------------------------------

const Presentation& chosen_presentation(const Manifest& manifest, const RunOptions& options, std::string& name) {
  if (!options.quotient) {
    name = manifest.name;
    return manifest.presentation;
  }
  if (!manifest.quotient) throw Error(ErrorCode::InvalidInput, "manifest has no quotient presentation");
  name = manifest.quotient->name;
  return manifest.quotient->presentation;
}

RunResult run_abelianization(const Manifest& manifest, const RunOptions& options) {
  RunResult result;
  result.report = header(manifest, "abelianization");
  std::string name;
  const Presentation& p = chosen_presentation(manifest, options, name);
  const IntMatrix m = abelianization_matrix(p);
  const SmithForm s = smith_normal_form(m);

  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(row);
  }
  result.report["presentation"] = name;
  result.report["relation_matrix"] = rows;
  result.report["abelianization"] = smith_json(s);
  result.report["status"] = "ok";
  result.summary = "abelianization of " + name + ": " + smith_text(s) + "\n";

  if (options.check) {
    const ordered_json& e = manifest.expected;
    const ordered_json* expected = nullptr;
    if (options.quotient) {
      if (e.contains("quotient") && e.at("quotient").contains("abelianization"))
        expected = &e.at("quotient").at("abelianization");
    } else if (e.contains("abelianization")) {
      expected = &e.at("abelianization");
    }
    if (expected) apply_check(result, {{*expected, result.report.at("abelianization")}}, {"abelianization"});
  }
  return result;
}

RunResult run_fox(const Manifest& manifest, const RunOptions& options) {
  if (options.arguments.size() != 2)
    throw Error(ErrorCode::InvalidInput, "fox expects a generator and a 1-based relator index");
  std::string name;
  const Presentation& p = chosen_presentation(manifest, options, name);
  const std::string& g = options.arguments[0];
  if (g.size() != 1 || p.generators.find(g[0]) == std::string::npos)
    throw Error(ErrorCode::UnknownGenerator, "unknown generator \"" + g + "\"");
  std::size_t index = 0;
  try {
    index = std::stoul(options.arguments[1]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "relator index must be a positive integer");
  }
  if (index == 0 || index > p.relators.size())
    throw Error(ErrorCode::InvalidInput, "relator index out of range 1.." + std::to_string(p.relators.size()));

  const FreeWord& relator = p.relators[index - 1];
  const GroupRingElement d = fox_derivative(static_cast<std::uint8_t>(p.generators.find(g[0])), relator);
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : d.terms())
    terms.push_back({{"word", w.is_identity() ? "1" : w.to_string(p.generators)}, {"coefficient", integer_json(c)}});

  RunResult result;
  result.report = header(manifest, "fox");
  result.report["presentation"] = name;
  result.report["generator"] = g;
  result.report["relator_index"] = index;
  result.report["relator"] = relator.to_string(p.generators);
  result.report["derivative"] = d.to_string(p.generators);
  result.report["terms"] = terms;
  result.report["augmentation"] = integer_json(augmentation(d));
  result.report["status"] = "ok";
  result.summary = "d/d" + g + " " + relator.to_string(p.generators) + " = " + d.to_string(p.generators) +
                   "\naugmentation: " + augmentation(d).get_str() + "\n";
  return result;
}

RunResult error_result(const ordered_json& base, ErrorCode code, const std::string& message) {
  RunResult result;
  result.exit_code = exit_code_for(code);
  result.report = base;
  result.report["status"] = "error";
  result.report["error"] = {{"code", error_code_name(code)}, {"message", message}};
  result.summary = std::string("error [") + std::string(error_code_name(code)) + "]: " + message + "\n";
  return result;
}

}  // namespace

RunResult run(const Manifest& manifest, std::string_view command, const RunOptions& options) {
  const ordered_json base = header(manifest, command);
  try {
    if (command == "verify") return run_verify(manifest);
    if (command == "h1") return run_h1(manifest, options);
    if (command == "centralizer") return run_centralizer(manifest, options);
    if (command == "abelianization") return run_abelianization(manifest, options);
    if (command == "fox") return run_fox(manifest, options);
    return error_result(base, ErrorCode::InvalidInput, "unknown command \"" + std::string(command) + "\"");
  } catch (const Error& e) {
    return error_result(base, e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_result(base, ErrorCode::InvalidInput, e.what());
  }
}

RunResult run_file(const std::filesystem::path& manifest_path, std::string_view command, const RunOptions& options) {
  try {
    return run(load_manifest(manifest_path), command, options);
  } catch (const Error& e) {
    Manifest placeholder;
    placeholder.name = manifest_path.filename().string();
    return error_result(header(placeholder, command), e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    Manifest placeholder;
    placeholder.name = manifest_path.filename().string();
    return error_result(header(placeholder, command), ErrorCode::InvalidInput, e.what());
  }
}

}  // namespace foxcoh
