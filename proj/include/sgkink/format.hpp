#pragma once

// Text round-trip helpers shared by the CLI and the report writer: shortest
// exact decimal for doubles, the a+bi complex syntax, and atomic file output.

#include <complex>
#include <string>
#include <string_view>

namespace sgkink {

// Decimal form that round-trips through strtod ("%.17g").
std::string format_double(double x);

// "a+bi" / "a-bi" with both parts in format_double form.
std::string format_complex(std::complex<double> v);

// Parses "a", "bi", "a+bi", "a-bi" (also bare "i", "+i", "-i" and exponent
// forms like "1e-3-2.5e+4i"). Whitespace at the ends is ignored. Throws
// std::invalid_argument on anything else.
std::complex<double> parse_complex(std::string_view text);

// Writes content to path via a temporary file in the same directory plus an
// atomic rename, so a crash or error never leaves a partial file behind.
// Throws std::runtime_error on I/O failure.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace sgkink
