#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cedm {

// Deterministic RNG used everywhere; a dialogue owns exactly one stream.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) {
  // 53-bit mantissa draw; stable across standard libraries, unlike
  // std::uniform_real_distribution.
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

// Uniform integer in [0, n). n must be > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  // Rejection-free modulo is fine here: n is tiny compared to 2^64.
  return static_cast<std::size_t>(rng() % n);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  if (v.empty()) throw std::logic_error("pick from empty vector");
  return v[uniform_index(rng, v.size())];
}

inline double normal_sample(Rng& rng, double mean, double stddev) {
  // Box-Muller, single value per call; keeps sampling stateless.
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  return mean + stddev * z;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", p);
  return buf;
}

// FNV-1a; used for config hashes in logs.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cedm
