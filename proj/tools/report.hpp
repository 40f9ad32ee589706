#pragma once

#include "tessparam/scalar.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tessparam::cli {

/// One output value: exact text plus, for numbers, a decimal rendering.
struct Value {
  std::string exact;
  std::optional<std::string> decimal;
};

using Row = std::vector<std::pair<std::string, Value>>;

struct Section {
  std::string name;
  bool table = false;  // false: a single key/value row
  std::vector<Row> rows;
};

/// Command output. JSON nests sections by name; CSV is the long form
/// section,row,key,exact,decimal with an empty row index for key/value
/// sections. Both carry the same strings.
class Report {
 public:
  Report(std::string command, int precision);

  int precision() const { return precision_; }

  Value number(const Scalar& v) const;
  static Value text(std::string s);

  /// Key/value section, created on first use.
  Row& record(const std::string& section);
  /// Appends a row to a table section.
  Row& append(const std::string& section);

  void write_json(std::ostream& os) const;
  void write_csv(std::ostream& os) const;

 private:
  Section& section(const std::string& name, bool table);

  std::string command_;
  int precision_;
  std::vector<Section> sections_;
};

void put(Row& row, const std::string& key, Value v);

}  // namespace tessparam::cli
