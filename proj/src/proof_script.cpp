#include "graded/proof_script.hpp"

#include <sstream>

#include "graded/errors.hpp"
#include "graded/parser.hpp"

namespace graded {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t index_arg(const json& args, const char* key) {
  if (!args.contains(key) || !args[key].is_number_unsigned()) {
    throw ValidationError(std::string("missing or invalid '") + key + "'");
  }
  return args[key].get<std::size_t>();
}

}  // namespace

ordered_json justification_to_json(const Justification& j) {
  ordered_json out;
  ordered_json args = ordered_json::object();
  if (const auto* h = std::get_if<Hypothesis>(&j)) {
    out["kind"] = "hyp";
    args["index"] = h->index;
  } else if (const auto* a = std::get_if<AxiomUse>(&j)) {
    out["kind"] = "axiom";
    args["schema"] = std::string(schema_name(a->schema));
    if (a->grades) {
      ordered_json grades = ordered_json::array();
      for (const auto& g : *a->grades) grades.push_back(g.str());
      args["grades"] = std::move(grades);
    }
  } else if (const auto* t = std::get_if<TautologyUse>(&j)) {
    out["kind"] = "taut";
    if (t->atoms) args["atoms"] = *t->atoms;
  } else {
    const auto& mp = std::get<ModusPonens>(j);
    out["kind"] = "mp";
    args["minor"] = mp.minor;
    args["major"] = mp.major;
  }
  out["args"] = std::move(args);
  return out;
}

Justification justification_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ValidationError("justification needs a string 'kind'");
  }
  const std::string kind = j["kind"];
  const json args = j.value("args", json::object());
  if (!args.is_object()) throw ValidationError("'args' must be an object");

  if (kind == "hyp") return Hypothesis{index_arg(args, "index")};
  if (kind == "mp") return ModusPonens{index_arg(args, "minor"), index_arg(args, "major")};
  if (kind == "taut") {
    TautologyUse t;
    if (args.contains("atoms")) t.atoms = index_arg(args, "atoms");
    return t;
  }
  if (kind == "axiom") {
    if (!args.contains("schema") || !args["schema"].is_string()) {
      throw ValidationError("axiom justification needs a 'schema'");
    }
    auto schema = schema_from_name(args["schema"].get<std::string>());
    if (!schema) throw ValidationError("unknown schema '" + args["schema"].get<std::string>() + "'");
    AxiomUse use{*schema, std::nullopt};
    if (args.contains("grades")) {
      if (!args["grades"].is_array()) throw ValidationError("'grades' must be an array");
      std::vector<Grade> grades;
      for (const auto& g : args["grades"]) {
        if (!g.is_string()) throw ValidationError("grades are written as strings");
        grades.push_back(Grade::parse(g.get<std::string>()));
      }
      use.grades = std::move(grades);
    }
    return use;
  }
  throw ValidationError("unknown justification kind '" + kind + "'");
}

std::string write_proof_script(const Proof& proof) {
  std::ostringstream os;
  for (const auto& line : proof.lines) {
    ordered_json j;
    j["formula"] = render(line.formula);
    j["just"] = justification_to_json(line.justification);
    os << j.dump() << '\n';
  }
  return os.str();
}

Proof read_proof_script(std::string_view text) {
  Proof proof;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "script line " + std::to_string(line_no) + ": ";
    json j;
    try {
      j = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw ParseError(e.byte, where + "invalid JSON");
    }
    if (!j.is_object() || !j.contains("formula") || !j["formula"].is_string() || !j.contains("just")) {
      throw ValidationError(where + "expected {formula, just}");
    }
    try {
      Formula f = parse_formula(j["formula"].get<std::string>());
      proof.add(std::move(f), justification_from_json(j["just"]));
    } catch (const ParseError& e) {
      throw ParseError(e.offset(), where + e.detail());
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
  }
  return proof;
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json out;
  out["accepted"] = v.accepted;
  if (v.line) out["line"] = *v.line;
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

}  // namespace graded
