#pragma once

// Flat result records and their JSON / CSV encodings. Reals are written with
// 17 significant digits so both encodings round-trip to the same double.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fuzzydist::cli {

using Value = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

class Record {
 public:
  Record& set(const std::string& key, Value v);
  const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

struct Report {
  Record meta;
  std::vector<std::string> args;
  std::vector<Record> results;
};

std::string format_real(double x);

void write_json(std::ostream& out, const Report& report);
void write_csv(std::ostream& out, const Report& report);

}  // namespace fuzzydist::cli
