#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <string_view>

namespace halfwave {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr const char* kVersion = "0.1.0";

// sin(x)/x, continuous at the origin.
inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// <k> = (1 + k^2)^(1/2)
inline double bracket(double k) { return std::sqrt(1.0 + k * k); }

// FNV-1a, 64 bit. Output files are stamped with this hash of the config.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

// Uniform draw on [-1, 1) built directly from mt19937_64 output, so results
// do not depend on the standard library's distribution internals.
inline double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * ((rng() >> 11) * 0x1p-53) - 1.0;
}

}  // namespace halfwave
