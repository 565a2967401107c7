#include "automorphe/fixture.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace automorphe {

namespace {

using json = nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("fixture: not valid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("fixture: missing field '") + key + "'");
  return j.at(key);
}

double real_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw SchemaError(std::string("fixture: field '") + key + "' must be a number");
  return v.get<double>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("fixture: cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

MaassExpansion parse_fixture(const std::string& text) {
  const json j = parse_json(text);
  MaassExpansion e;
  e.lambda = real_field(j, "lambda");
  const json& par = field(j, "parity");
  if (!par.is_number_integer() || (par.get<int>() != 0 && par.get<int>() != 1))
    throw SchemaError("fixture: parity must be 0 or 1");
  e.parity = par.get<int>();
  e.precision = real_field(j, "precision");
  if (!(e.precision > 0)) throw SchemaError("fixture: precision must be positive");
  const json& co = field(j, "coeffs");
  if (!co.is_object() || co.empty()) throw SchemaError("fixture: coeffs must be a non-empty object");
  for (const auto& [key, v] : co.items()) {
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || k < 1) throw SchemaError("fixture: coefficient key '" + key + "' is not a positive integer");
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw SchemaError("fixture: coefficient " + key + " must be [re, im]");
    e.coeffs[k] = cplx(v[0].get<double>(), v[1].get<double>());
  }
  e.K = static_cast<int>(std::min<i64>(e.max_index(), 1000));
  e.hecke_normalized = true;
  const auto it = e.coeffs.find(1);
  if (it == e.coeffs.end()) throw NormalizationError("fixture: b_1 missing");
  if (std::abs(it->second - 1.0) > e.precision) throw NormalizationError("fixture: b_1 differs from 1 beyond the declared precision");
  e.validate();
  return e;
}

MaassExpansion load_fixture(const std::string& path) { return parse_fixture(read_file(path)); }

double fixture_norm(const std::string& path) {
  const json j = parse_json(read_file(path));
  if (!j.is_object() || !j.contains("norm")) return 1.0;
  const double n = real_field(j, "norm");
  if (!(n > 0)) throw SchemaError("fixture: norm must be positive");
  return n;
}

}  // namespace automorphe
