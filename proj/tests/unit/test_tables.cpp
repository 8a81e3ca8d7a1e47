#include <doctest.h>

#include <sstream>

#include "fuzzydist/errors.hpp"
#include "fuzzydist/tables.hpp"

using namespace fuzzydist;

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.3+0.4i") == Complex(0.3, 0.4));
  CHECK(parse_complex("0.3-0.4i") == Complex(0.3, -0.4));
  CHECK(parse_complex("-2") == Complex(-2.0, 0.0));
  CHECK(parse_complex("1.5i") == Complex(0.0, 1.5));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("1e-3+2e-3i") == Complex(1e-3, 2e-3));
  CHECK(parse_complex("1e+2-i") == Complex(100.0, -1.0));
  for (const char* bad : {"", "x", "1+", "1+2", "1+2j", "i2", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_complex(bad), DomainError);
  }
}

TEST_CASE("complex formatting round-trips exactly") {
  for (Complex z : {Complex(0.3, 0.4), Complex(-1.0 / 3.0, 1e-300), Complex(0, -2.5), Complex(1e17, 0)}) {
    CHECK(parse_complex(format_complex(z)) == z);
  }
  CHECK(format_complex(Complex(0.3, 0.4)) == "0.29999999999999999+0.40000000000000002i");
}

TEST_CASE("profile tables") {
  std::istringstream in(
      "# comment line\n"
      "0.5 0.25 0.25\n"
      "\n"
      "0.2 0.3 0.5  # trailing comment\n"
      "1 0 0\n");
  auto p = read_profile(in, kOne, "mem");
  CHECK(p.at(kOne)[0] == 0.5);
  CHECK(p.at(HalfInteger{})[2] == 0.5);
  CHECK(p.at(-kOne)[0] == 1.0);

  std::istringstream nearly("0.3333333333 0.3333333333 0.3333333333\n"
                            "1 0 0\n"
                            "0 1 0\n");
  auto q = read_profile(nearly, kOne);
  double sum = 0.0;
  for (double x : q.at(kOne)) sum += x;
  CHECK(std::abs(sum - 1.0) < 1e-15);
}

TEST_CASE("profile table errors name the line") {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_profile(in, kOne, "tbl");
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("1 0 0\n1 0\n0 0 1\n").rfind("tbl:2:", 0) == 0);
  CHECK(message("1 0 0\n0 1 0\n0.5 0.6 0\n").rfind("tbl:3:", 0) == 0);
  CHECK(message("1 0 0\n0 1 x\n0 0 1\n").rfind("tbl:2:", 0) == 0);
  CHECK(message("1 0 0\n0 1 0\n").find("tbl") == 0);
  CHECK(message("1 0 0\n0 1 0\n0 0 1\n1 0 0\n").find("tbl") == 0);
  CHECK(message("1.5 -0.5 0\n0 1 0\n0 0 1\n").rfind("tbl:1:", 0) == 0);
}

TEST_CASE("spectrum tables") {
  std::istringstream in("# levels\n0 1 2.5\n");
  auto e = read_spectrum(in);
  REQUIRE(e.levels.size() == 3);
  CHECK(e.levels[2] == 2.5);
  std::istringstream two("0 1\n2 3\n");
  CHECK_THROWS_AS(read_spectrum(two), DomainError);
  std::istringstream none("# nothing\n");
  CHECK_THROWS_AS(read_spectrum(none), DomainError);
}

TEST_CASE("files") {
  const std::string dir = FUZZYDIST_TEST_DATA;
  auto p = read_profile_file(dir + "/uniform_n1.txt", kOne);
  CHECK(std::abs(p.at(HalfInteger{})[1] - 1.0 / 3.0) < 1e-9);
  auto e = read_spectrum_file(dir + "/two_level.txt");
  CHECK(e.levels.size() == 2);
  CHECK_THROWS_AS(read_spectrum_file(dir + "/missing.txt"), DomainError);
}
