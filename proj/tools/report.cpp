#include "report.hpp"

#include <json.hpp>

#include <stdexcept>

namespace tessparam::cli {

using json = nlohmann::ordered_json;

Report::Report(std::string command, int precision) : command_(std::move(command)), precision_(precision) {
  Row& meta = record("meta");
  put(meta, "command", text(command_));
  put(meta, "precision_digits", text(std::to_string(precision_)));
}

Value Report::number(const Scalar& v) const { return {v.to_string(), v.to_decimal(precision_)}; }

Value Report::text(std::string s) { return {std::move(s), std::nullopt}; }

Section& Report::section(const std::string& name, bool table) {
  for (auto& s : sections_) {
    if (s.name != name) continue;
    if (s.table != table) throw std::logic_error("section " + name + " used as both table and record");
    return s;
  }
  sections_.push_back({name, table, {}});
  return sections_.back();
}

Row& Report::record(const std::string& name) {
  Section& s = section(name, false);
  if (s.rows.empty()) s.rows.emplace_back();
  return s.rows.front();
}

Row& Report::append(const std::string& name) { return section(name, true).rows.emplace_back(); }

void put(Row& row, const std::string& key, Value v) { row.emplace_back(key, std::move(v)); }

namespace {

json encode(const Value& v) {
  if (!v.decimal) return v.exact;
  return json{{"exact", v.exact}, {"decimal", *v.decimal}};
}

json encode(const Row& row) {
  json obj = json::object();
  for (const auto& [k, v] : row) obj[k] = encode(v);
  return obj;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Report::write_json(std::ostream& os) const {
  json doc = json::object();
  for (const auto& s : sections_) {
    if (!s.table) {
      doc[s.name] = encode(s.rows.front());
      continue;
    }
    json arr = json::array();
    for (const auto& r : s.rows) arr.push_back(encode(r));
    doc[s.name] = arr;
  }
  os << doc.dump(2) << '\n';
}

void Report::write_csv(std::ostream& os) const {
  os << "section,row,key,exact,decimal\n";
  for (const auto& s : sections_) {
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      std::string index = s.table ? std::to_string(i) : "";
      for (const auto& [k, v] : s.rows[i])
        os << csv_field(s.name) << ',' << index << ',' << csv_field(k) << ',' << csv_field(v.exact) << ','
           << (v.decimal ? csv_field(*v.decimal) : "") << '\n';
    }
  }
}

}  // namespace tessparam::cli
