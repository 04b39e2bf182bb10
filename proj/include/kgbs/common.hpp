#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

namespace kgbs {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Stateless 64-bit mixer (splitmix64 finalizer). Used to derive
/// independent seeds from structured keys.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-sensitive seed combiner; stable across platforms and runs.
class SeedHasher {
 public:
  explicit SeedHasher(std::uint64_t base) : state_(mix64(base)) {}

  SeedHasher& add(std::uint64_t v) {
    state_ = mix64(state_ ^ mix64(v + 0x632be59bd9b4e019ULL));
    return *this;
  }
  SeedHasher& add(double v) { return add(std::bit_cast<std::uint64_t>(v)); }
  SeedHasher& add(int v) { return add(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
  SeedHasher& add(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    return add(h);
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace kgbs
