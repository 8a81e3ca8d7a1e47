#pragma once

// Plain-text input tables: whitespace-separated reals, '#' starts a comment,
// blank lines are ignored. Errors name the file and line.

#include <istream>
#include <string>
#include <string_view>

#include "fuzzydist/linalg.hpp"
#include "fuzzydist/quantum_space.hpp"

namespace fuzzydist {

/// "a+bi", "a-bi", "a", "bi", "i", "-i". Throws DomainError on anything else.
Complex parse_complex(std::string_view text);

/// "a+bi" with 17 significant digits, e.g. "0.29999999999999999+0.40000000000000002i".
std::string format_complex(Complex z);

/// One row per n3 from +n down to -n, each with 2n+1 probabilities (l3 from +n down).
/// Rows must sum to 1 within 1e-9 and are renormalized.
ProbabilityProfile read_profile(std::istream& in, HalfInteger n, const std::string& source = "<stream>");
ProbabilityProfile read_profile_file(const std::string& path, HalfInteger n);

/// A single row of energy levels.
EnergySpectrum read_spectrum(std::istream& in, const std::string& source = "<stream>");
EnergySpectrum read_spectrum_file(const std::string& path);

}  // namespace fuzzydist
