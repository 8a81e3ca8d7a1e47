#include "fuzzydist/tables.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <locale>
#include <sstream>
#include <vector>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw DomainError(source + ":" + std::to_string(line) + ": " + what);
}

// A classic-locale stream keeps '.' as the decimal separator whatever the global locale is.
bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  std::istringstream is{std::string(s)};
  is.imbue(std::locale::classic());
  is >> out;
  return !is.fail() && is.peek() == std::char_traits<char>::eof() && std::isfinite(out);
}

struct Row {
  int line = 0;
  std::vector<double> values;
};

std::vector<Row> read_rows(std::istream& in, const std::string& source) {
  std::vector<Row> rows;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream fields(text);
    std::string tok;
    Row row{line, {}};
    while (fields >> tok) {
      double v = 0.0;
      if (!parse_real(tok, v)) fail(source, line, "not a finite real number: '" + tok + "'");
      row.values.push_back(v);
    }
    if (!row.values.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  const auto bad = [&]() { return DomainError("not a complex number of the form a+bi: '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  if (s.back() != 'i') {
    double re = 0.0;
    if (!parse_real(s, re)) throw bad();
    return {re, 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 0;) {
    if ((s[i] == '+' || s[i] == '-') && (i == 0 || (s[i - 1] != 'e' && s[i - 1] != 'E'))) {
      split = i;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  double re = 0.0;
  double im = 0.0;
  if (!re_part.empty() && !parse_real(re_part, re)) throw bad();
  if (!parse_real(im_part, im)) throw bad();
  return {re, im};
}

std::string format_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

ProbabilityProfile read_profile(std::istream& in, HalfInteger n, const std::string& source) {
  const std::vector<Row> rows = read_rows(in, source);
  const auto dim = static_cast<std::size_t>(n.twice() + 1);
  if (rows.size() != dim) {
    fail(source, rows.empty() ? 0 : rows.back().line,
         "expected " + std::to_string(dim) + " rows for n = " + n.to_string() + ", found " +
             std::to_string(rows.size()));
  }
  ProbabilityProfile out{n, {}};
  HalfInteger n3 = n;
  for (const Row& row : rows) {
    if (row.values.size() != dim) {
      fail(source, row.line, "expected " + std::to_string(dim) + " probabilities, found " +
                                 std::to_string(row.values.size()));
    }
    double sum = 0.0;
    for (double v : row.values) {
      if (v < 0.0) fail(source, row.line, "negative probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) fail(source, row.line, "row does not sum to 1");
    std::vector<double> p = row.values;
    for (double& v : p) v /= sum;
    out.entries[n3] = std::move(p);
    n3 -= kOne;
  }
  return out;
}

ProbabilityProfile read_profile_file(const std::string& path, HalfInteger n) {
  std::ifstream in(path);
  if (!in) throw DomainError(path + ": cannot open profile file");
  return read_profile(in, n, path);
}

EnergySpectrum read_spectrum(std::istream& in, const std::string& source) {
  const std::vector<Row> rows = read_rows(in, source);
  if (rows.size() != 1) {
    fail(source, rows.empty() ? 0 : rows[1].line, "expected a single row of energy levels");
  }
  return {rows.front().values};
}

EnergySpectrum read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(path + ": cannot open spectrum file");
  return read_spectrum(in, path);
}

}  // namespace fuzzydist
