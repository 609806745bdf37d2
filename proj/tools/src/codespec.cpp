#include "codespec.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mtdual/error.hpp"

namespace mtdual::cli {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::vector<std::uint32_t> digit_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(std::string(what) + " entries must be non-negative integers");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

std::string notation(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("expected a string or integer, got " + j.dump());
}

}  // namespace

CodeSpec parse_codespec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  const json& field = member(doc, "field");
  const json& p_json = member(field, "p");
  if (!p_json.is_number_integer() || p_json.get<long long>() < 2) throw ParseError("field.p must be an integer >= 2");
  const auto p = p_json.get<std::uint32_t>();
  int e = 1;
  if (field.contains("e")) {
    if (!field["e"].is_number_integer() || field["e"].get<int>() < 1) throw ParseError("field.e must be a positive integer");
    e = field["e"].get<int>();
  }
  std::vector<std::uint32_t> modulus{0, 1};
  if (field.contains("modulus")) {
    modulus = digit_list(field["modulus"], "field.modulus");
  } else if (e != 1) {
    throw ParseError("field.modulus is required when e > 1");
  }
  if (static_cast<int>(modulus.size()) != e + 1)
    throw ParseError("field.modulus must have e+1 coefficients (ascending, leading 1)");
  std::optional<std::vector<std::uint32_t>> generator;
  if (field.contains("generator") && !field["generator"].is_null())
    generator = digit_list(field["generator"], "field.generator");

  CodeSpec spec;
  spec.field = GaloisField::create(p, modulus, generator);

  const json& shifts = member(doc, "shifts");
  if (!shifts.is_array()) throw ParseError("shifts must be an array");
  for (const auto& s : shifts) spec.shifts.push_back(spec.field->parse(notation(s)));

  const json& blocks = member(doc, "block_lengths");
  if (!blocks.is_array()) throw ParseError("block_lengths must be an array");
  for (const auto& b : blocks) {
    if (!b.is_number_integer()) throw ParseError("block lengths must be integers");
    spec.block_lengths.push_back(b.get<int>());
  }

  const json& rows = doc.contains("rows") ? doc["rows"] : json::array();
  if (!rows.is_array()) throw ParseError("rows must be an array of arrays");
  for (const auto& r : rows) {
    if (!r.is_array()) throw ParseError("each row must be an array of polynomials");
    PolyVector pv;
    for (const auto& entry : r) pv.push_back(Poly::parse(spec.field, notation(entry)));
    spec.rows.push_back(std::move(pv));
  }
  return spec;
}

CodeSpec load_codespec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_codespec(buf.str());
}

}  // namespace mtdual::cli
