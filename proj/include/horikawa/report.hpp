#pragma once

// Structured command output. Every value is kept as text together with the
// operation that produced it; JSON output turns integral values that fit in
// 64 bits into numbers and leaves everything else as strings.

#include <horikawa/numbers.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace horikawa {

struct Field {
  std::string name;
  std::string value;
  std::string source;  // operation that produced the value

  friend bool operator==(const Field&, const Field&) = default;
};

struct Section {
  std::string title;
  std::vector<Field> fields;

  Section& add(std::string name, std::string value, std::string source) {
    fields.push_back({std::move(name), std::move(value), std::move(source)});
    return *this;
  }
  friend bool operator==(const Section&, const Section&) = default;
};

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

struct CheckLine {
  std::string id;
  std::string anchor;  // the identity being checked
  std::string scope;   // parameter range covered
  bool passed = true;
  std::string detail;

  friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

struct Report {
  std::string command;
  std::vector<Field> inputs;
  std::vector<Section> sections;
  std::vector<Table> tables;
  std::vector<CheckLine> checks;
  std::vector<std::string> assumptions;
  std::vector<std::string> references;
  std::string error;
  int exit_code = 0;

  Section& section(std::string title) {
    sections.push_back({std::move(title), {}});
    return sections.back();
  }
  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline bool fits_int64(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) return false;
  // Reject forms that would not print back identically ("+1", "007", "-0").
  return std::to_string(out) == s;
}

inline nlohmann::json value_to_json(const std::string& v) {
  std::int64_t n = 0;
  if (fits_int64(v, n)) return n;
  return v;
}

inline std::string value_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  return j.get<std::string>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const Field& f) {
  j = nlohmann::json{{"name", f.name}, {"value", detail::value_to_json(f.value)}, {"source", f.source}};
}
inline void from_json(const nlohmann::json& j, Field& f) {
  f.name = j.at("name").get<std::string>();
  f.value = detail::value_from_json(j.at("value"));
  f.source = j.at("source").get<std::string>();
}

inline void to_json(nlohmann::json& j, const Section& s) { j = nlohmann::json{{"title", s.title}, {"fields", s.fields}}; }
inline void from_json(const nlohmann::json& j, Section& s) {
  s.title = j.at("title").get<std::string>();
  s.fields = j.at("fields").get<std::vector<Field>>();
}

inline void to_json(nlohmann::json& j, const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(detail::value_to_json(cell));
    rows.push_back(std::move(r));
  }
  j = nlohmann::json{{"title", t.title}, {"columns", t.columns}, {"rows", std::move(rows)}};
}
inline void from_json(const nlohmann::json& j, Table& t) {
  t.title = j.at("title").get<std::string>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  t.rows.clear();
  for (const auto& r : j.at("rows")) {
    std::vector<std::string> row;
    for (const auto& cell : r) row.push_back(detail::value_from_json(cell));
    t.rows.push_back(std::move(row));
  }
}

inline void to_json(nlohmann::json& j, const CheckLine& c) {
  j = nlohmann::json{{"id", c.id}, {"identity", c.anchor}, {"scope", c.scope}, {"passed", c.passed}, {"detail", c.detail}};
}
inline void from_json(const nlohmann::json& j, CheckLine& c) {
  c.id = j.at("id").get<std::string>();
  c.anchor = j.at("identity").get<std::string>();
  c.scope = j.at("scope").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.detail = j.at("detail").get<std::string>();
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"command", r.command},         {"inputs", r.inputs},   {"sections", r.sections},
                     {"tables", r.tables},           {"checks", r.checks},   {"assumptions", r.assumptions},
                     {"references", r.references},   {"error", r.error},     {"exit_code", r.exit_code}};
}
inline void from_json(const nlohmann::json& j, Report& r) {
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs").get<std::vector<Field>>();
  r.sections = j.at("sections").get<std::vector<Section>>();
  r.tables = j.at("tables").get<std::vector<Table>>();
  r.checks = j.at("checks").get<std::vector<CheckLine>>();
  r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  r.references = j.at("references").get<std::vector<std::string>>();
  r.error = j.at("error").get<std::string>();
  r.exit_code = j.at("exit_code").get<int>();
}

inline std::string to_json_text(const Report& r) { return nlohmann::json(r).dump(2) + "\n"; }

inline Report report_from_json_text(const std::string& text) { return nlohmann::json::parse(text).get<Report>(); }

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "== " << r.command << "\n";
  for (const auto& f : r.inputs) out << "  input " << f.name << " = " << f.value << "\n";
  for (const auto& s : r.sections) {
    out << "\n[" << s.title << "]\n";
    std::size_t width = 0;
    for (const auto& f : s.fields) width = std::max(width, f.name.size());
    for (const auto& f : s.fields) {
      out << "  " << f.name << std::string(width - f.name.size(), ' ') << "  " << f.value;
      if (!f.source.empty()) out << "    <- " << f.source;
      out << "\n";
    }
  }
  for (const auto& t : r.tables) {
    out << "\n[" << t.title << "]\n";
    std::vector<std::size_t> widths(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) widths[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      out << " ";
      for (std::size_t c = 0; c < cells.size() && c < widths.size(); ++c)
        out << " " << cells[c] << std::string(widths[c] - cells[c].size(), ' ');
      out << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
    if (t.rows.empty()) out << "  (no rows)\n";
  }
  if (!r.checks.empty()) {
    out << "\n[checks]\n";
    for (const auto& c : r.checks) {
      out << "  " << (c.passed ? "PASS " : "FAIL ") << c.id << "  [" << c.scope << "]  " << c.anchor << "\n";
      if (!c.passed) out << "       " << c.detail << "\n";
    }
  }
  if (!r.assumptions.empty()) {
    out << "\n[assumptions]\n";
    for (const auto& a : r.assumptions) out << "  - " << a << "\n";
  }
  if (!r.references.empty()) {
    out << "\n[identities]\n";
    for (const auto& a : r.references) out << "  - " << a << "\n";
  }
  if (!r.error.empty()) out << "\nerror: " << r.error << "\n";
  return out.str();
}

}  // namespace horikawa
