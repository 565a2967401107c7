#include "automorphe/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace automorphe {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> param_columns(const std::vector<ReportRow>& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.params)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

double parse_num(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("report: bad number '" + s + "'");
  return v;
}

}  // namespace

void ScanReport::validate() const {
  for (const auto& r : rows) {
    if (r.pass.has_value() && !(r.bound > 0)) throw DomainError("ScanReport: asserted row needs a positive bound");
    if (!std::isfinite(r.ratio)) throw DomainError("ScanReport: ratio is not finite");
  }
}

bool ScanReport::passed() const {
  for (const auto& r : rows)
    if (r.pass.has_value() && !*r.pass) return false;
  return true;
}

std::string ScanReport::to_csv() const {
  const auto cols = param_columns(rows);
  std::ostringstream os;
  bool first = true;
  for (const auto& c : cols) {
    os << (first ? "" : ",") << quote(c);
    first = false;
  }
  for (const auto& c : REPORT_COLUMNS) {
    os << (first ? "" : ",") << c;
    first = false;
  }
  os << '\n';
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      const auto it = std::find_if(r.params.begin(), r.params.end(), [&](const auto& kv) { return kv.first == c; });
      if (it != r.params.end()) os << num(it->second);
      os << ',';
    }
    os << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << num(r.bound) << ',' << num(r.ratio) << ',';
    if (r.pass.has_value()) os << (*r.pass ? "pass" : "fail");
    os << ',' << quote(r.note) << '\n';
  }
  return os.str();
}

ScanReport ScanReport::from_csv(const std::string& text, const std::string& experiment) {
  ScanReport rep;
  rep.experiment = experiment;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("report: empty csv");
  const auto head = split_csv_line(line);
  const std::size_t fixed = REPORT_COLUMNS.size();
  if (head.size() < fixed) throw std::invalid_argument("report: csv header too short");
  const std::size_t np = head.size() - fixed;
  for (std::size_t i = 0; i < fixed; ++i)
    if (head[np + i] != REPORT_COLUMNS[i]) throw std::invalid_argument("report: unexpected csv column " + head[np + i]);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != head.size()) throw std::invalid_argument("report: csv row width mismatch");
    ReportRow r;
    for (std::size_t i = 0; i < np; ++i)
      if (!cells[i].empty()) r.params.emplace_back(head[i], parse_num(cells[i]));
    r.value = cplx(parse_num(cells[np]), parse_num(cells[np + 1]));
    r.bound = parse_num(cells[np + 2]);
    r.ratio = parse_num(cells[np + 3]);
    if (cells[np + 4] == "pass") r.pass = true;
    else if (cells[np + 4] == "fail") r.pass = false;
    else if (!cells[np + 4].empty()) throw std::invalid_argument("report: bad pass cell");
    r.note = cells[np + 5];
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

std::string ScanReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = REPORT_SCHEMA_VERSION;
  j["experiment"] = experiment;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) j["metadata"][k] = v;
  j["passed"] = passed();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json jr;
    jr["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) jr["params"][k] = v;
    jr["value"] = {r.value.real(), r.value.imag()};
    jr["bound"] = r.bound;
    jr["ratio"] = r.ratio;
    if (r.pass.has_value()) jr["pass"] = *r.pass;
    else jr["pass"] = nullptr;
    jr["note"] = r.note;
    j["rows"].push_back(jr);
  }
  return j.dump(2) + "\n";
}

ScanReport ScanReport::from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  if (j.at("schema_version").get<int>() != REPORT_SCHEMA_VERSION) throw std::invalid_argument("report: unknown schema_version");
  ScanReport rep;
  rep.experiment = j.at("experiment").get<std::string>();
  for (const auto& [k, v] : j.at("metadata").items()) rep.metadata[k] = v.get<double>();
  for (const auto& jr : j.at("rows")) {
    ReportRow r;
    for (const auto& [k, v] : jr.at("params").items()) r.params.emplace_back(k, v.get<double>());
    r.value = cplx(jr.at("value").at(0).get<double>(), jr.at("value").at(1).get<double>());
    r.bound = jr.at("bound").get<double>();
    r.ratio = jr.at("ratio").get<double>();
    if (!jr.at("pass").is_null()) r.pass = jr.at("pass").get<bool>();
    r.note = jr.at("note").get<std::string>();
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace automorphe
