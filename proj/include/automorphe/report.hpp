#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "automorphe/common.hpp"

namespace automorphe {

inline constexpr int REPORT_SCHEMA_VERSION = 1;

struct ReportRow {
  std::vector<std::pair<std::string, double>> params;
  cplx value = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  std::optional<bool> pass;  // empty when no assertion applies
  std::string note;

  bool operator==(const ReportRow& o) const = default;
};

struct ScanReport {
  std::string experiment;
  std::vector<ReportRow> rows;
  std::map<std::string, double> metadata;

  // bound > 0 on asserted rows, finite ratios
  void validate() const;
  bool passed() const;
  std::string to_csv() const;
  std::string to_json() const;
  static ScanReport from_csv(const std::string& text, const std::string& experiment = "");
  static ScanReport from_json(const std::string& text);

  bool operator==(const ScanReport& o) const = default;
};

// fixed columns after the parameter columns
inline const std::vector<std::string> REPORT_COLUMNS = {"value_re", "value_im", "bound", "ratio", "pass", "note"};

}  // namespace automorphe
