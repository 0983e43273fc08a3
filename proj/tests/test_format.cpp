#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "sgkink/format.hpp"

using namespace sgkink;

TEST_CASE("format_double round-trips through strtod") {
  std::mt19937_64 rng(911);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::ldexp(mant(rng), expo(rng));
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-15.0) == "-15");
}

TEST_CASE("parse_complex accepts the documented forms") {
  CHECK(parse_complex("2") == std::complex<double>(2.0, 0.0));
  CHECK(parse_complex("-3.5") == std::complex<double>(-3.5, 0.0));
  CHECK(parse_complex("3i") == std::complex<double>(0.0, 3.0));
  CHECK(parse_complex("-2.5i") == std::complex<double>(0.0, -2.5));
  CHECK(parse_complex("i") == std::complex<double>(0.0, 1.0));
  CHECK(parse_complex("-i") == std::complex<double>(0.0, -1.0));
  CHECK(parse_complex("+i") == std::complex<double>(0.0, 1.0));
  CHECK(parse_complex("1+2i") == std::complex<double>(1.0, 2.0));
  CHECK(parse_complex("1-2i") == std::complex<double>(1.0, -2.0));
  CHECK(parse_complex("-1.5-2e-3i") == std::complex<double>(-1.5, -2e-3));
  CHECK(parse_complex("1e+5i") == std::complex<double>(0.0, 1e5));
  CHECK(parse_complex("2.5E-2+1E+1i") == std::complex<double>(2.5e-2, 1e1));
  CHECK(parse_complex(" 0.5+0.5i ") == std::complex<double>(0.5, 0.5));
  CHECK(parse_complex("3-i") == std::complex<double>(3.0, -1.0));
}

TEST_CASE("parse_complex rejects malformed input") {
  for (const char* bad : {"", "   ", "oops", "1+2j", "i5", "1++2i", "2i+1", "1 + 2i", "0x1fi",
                          "inf", "nan", "1+infi"}) {
    CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
  }
}

TEST_CASE("complex format/parse round-trip is exact") {
  std::mt19937_64 rng(412);
  std::uniform_real_distribution<double> comp(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const std::complex<double> v(comp(rng), comp(rng));
    const std::complex<double> back = parse_complex(format_complex(v));
    CHECK(std::abs(back - v) <= 1e-15 * std::abs(v));
    CHECK(back.real() == v.real());
    CHECK(back.imag() == v.imag());
  }
  CHECK(format_complex({0.5, -0.25}) == "0.5-0.25i");
  CHECK(format_complex({0.5, 0.25}) == "0.5+0.25i");
}

TEST_CASE("atomic_write leaves complete files and no temporaries") {
  const std::string dir = "/tmp/sgkink_format_test";
  std::filesystem::create_directories(dir);
  std::remove((dir + "/out.txt").c_str());
  std::remove((dir + "/out.txt.tmp").c_str());

  const std::string path = dir + "/out.txt";
  atomic_write(path, "alpha\nbeta\n");
  std::ifstream in(path);
  std::stringstream got;
  got << in.rdbuf();
  CHECK(got.str() == "alpha\nbeta\n");
  std::ifstream tmp(path + ".tmp");
  CHECK_FALSE(tmp.good());

  atomic_write(path, "gamma\n");
  std::ifstream in2(path);
  std::stringstream got2;
  got2 << in2.rdbuf();
  CHECK(got2.str() == "gamma\n");

  CHECK_THROWS_AS(atomic_write("/tmp/sgkink_no_such_dir/x/y.txt", "z"), std::runtime_error);
}
