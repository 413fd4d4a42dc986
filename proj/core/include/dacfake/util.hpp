#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dacfake {

// ---------------------------------------------------------------------------
// Strings

std::string to_lower(std::string_view s);           // ASCII case fold
std::string trim(std::string_view s);               // strip ASCII whitespace
std::string collapse_spaces(std::string_view s);    // runs of blanks -> one ' '
std::vector<std::string> split(std::string_view s, char sep);
bool starts_with(std::string_view s, std::string_view prefix);

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// ---------------------------------------------------------------------------
// Hashing (artifact chaining, not security)

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed);
std::string hash_hex(std::uint64_t h);

// ---------------------------------------------------------------------------
// Deterministic RNG
//
// std::uniform_*_distribution is implementation-defined, so every seeded
// contract in the library draws through these helpers instead.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  // splitmix64
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in [0, n); unbiased rejection sampling
  std::uint64_t next_below(std::uint64_t n);

  // derive an independent stream (ensemble members, folds, ...)
  Rng fork(std::uint64_t stream) const {
    return Rng(state_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates with the deterministic Rng above.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

// ---------------------------------------------------------------------------
// Files

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dacfake
