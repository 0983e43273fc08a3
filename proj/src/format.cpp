#include "sgkink/format.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace sgkink {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> v) {
  std::string out = format_double(v.real());
  const std::string im = format_double(v.imag());
  if (!im.empty() && im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real_strict(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty numeric field");
  for (const char ch : s) {
    // Decimal forms only: no hex floats, no inf/nan spellings.
    if (std::isalpha(static_cast<unsigned char>(ch)) && ch != 'e' && ch != 'E') {
      throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
    }
  }
  const std::string owned(s);
  char* end = nullptr;
  const double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) {
    throw std::invalid_argument("malformed number: '" + owned + "'");
  }
  return v;
}

// Coefficient in front of 'i': empty and "+" mean 1, "-" means -1.
double parse_imag_coefficient(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real_strict(s);
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i' && s.back() != 'I') {
    return {parse_real_strict(s), 0.0};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last +/- that is not an exponent sign; everything after it
  // is the imaginary coefficient.
  for (std::size_t i = body.size(); i-- > 1;) {
    const char ch = body[i];
    if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      return {parse_real_strict(body.substr(0, i)), parse_imag_coefficient(body.substr(i))};
    }
  }
  return {0.0, parse_imag_coefficient(body)};
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed for " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move " + tmp + " into place at " + path);
  }
}

}  // namespace sgkink
