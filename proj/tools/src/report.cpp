#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace fuzzydist::cli {

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_value(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "null";
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const double* d = std::get_if<double>(&v)) return std::isfinite(*d) ? format_real(*d) : "null";
  return quote(std::get<std::string>(v));
}

std::string csv_value(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "";
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const double* d = std::get_if<double>(&v)) return format_real(*d);
  const std::string& s = std::get<std::string>(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_object(std::ostream& out, const Record& r, const std::string& indent) {
  out << "{";
  bool first = true;
  for (const auto& [k, v] : r.fields()) {
    out << (first ? "\n" : ",\n") << indent << "  " << quote(k) << ": " << json_value(v);
    first = false;
  }
  out << "\n" << indent << "}";
}

}  // namespace

Record& Record::set(const std::string& key, Value v) {
  for (auto& [k, old] : fields_) {
    if (k == key) {
      old = std::move(v);
      return *this;
    }
  }
  fields_.emplace_back(key, std::move(v));
  return *this;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  // Keep reals recognizable as reals ("1.0", not "1").
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void write_json(std::ostream& out, const Report& report) {
  out << "{\n  \"meta\": {";
  for (const auto& [k, v] : report.meta.fields()) {
    out << "\n    " << quote(k) << ": " << json_value(v) << ",";
  }
  out << "\n    \"args\": [";
  for (std::size_t i = 0; i < report.args.size(); ++i) out << (i ? ", " : "") << quote(report.args[i]);
  out << "]\n  },\n  \"results\": [";
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    out << (i ? ",\n    " : "\n    ");
    write_object(out, report.results[i], "    ");
  }
  out << (report.results.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_csv(std::ostream& out, const Report& report) {
  for (const auto& [k, v] : report.meta.fields()) out << "# " << k << "=" << csv_value(v) << "\n";
  out << "# args=";
  for (std::size_t i = 0; i < report.args.size(); ++i) out << (i ? " " : "") << report.args[i];
  out << "\n";
  // Column set: union of keys in first-seen order.
  std::vector<std::string> columns;
  for (const Record& r : report.results) {
    for (const auto& [k, v] : r.fields()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const Record& r : report.results) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ",";
      for (const auto& [k, v] : r.fields()) {
        if (k == columns[i]) {
          out << csv_value(v);
          break;
        }
      }
    }
    out << "\n";
  }
}

}  // namespace fuzzydist::cli
