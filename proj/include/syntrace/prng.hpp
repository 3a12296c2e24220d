#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace syntrace {

// Counter-based splittable generator (SplitMix64 mix over a keyed counter).
// Identical (seed, stream) gives an identical sequence on every platform;
// generators are cheap value types, one per (purpose, index) stream.
class Prng {
 public:
  explicit Prng(uint64_t seed, uint64_t stream = 0)
      : key_(mix(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream + 0xBF58476D1CE4E5B9ull))) {}

  Prng derive(uint64_t substream) const { return Prng(key_, substream); }

  uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // [0, n); n > 0
  uint64_t uniform_int(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Box-Muller; consumes two uniforms per pair, caches the spare.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_int(i)]);
    }
  }

  static uint64_t mix(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }

 private:
  Prng(uint64_t parent_key, uint64_t substream)
      : key_(mix(parent_key ^ mix(substream + 0x94D049BB133111EBull))) {}

  uint64_t key_;
  uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Stream-id registry so seeded subsystems never collide.
namespace stream {
inline constexpr uint64_t kInitEmbed = 1;
inline constexpr uint64_t kInitPos = 2;
inline constexpr uint64_t kInitQ = 3;
inline constexpr uint64_t kInitK = 4;
inline constexpr uint64_t kInitV = 5;
inline constexpr uint64_t kInitFfn1 = 6;
inline constexpr uint64_t kInitFfn2 = 7;
inline constexpr uint64_t kInitBankKey = 8;
inline constexpr uint64_t kInitBankQuery = 16;  // + timestep
inline constexpr uint64_t kDatasetShuffle = 100;
inline constexpr uint64_t kSampleFill = 101;     // derive(id)
inline constexpr uint64_t kSamplePerturb = 102;  // derive(id)
inline constexpr uint64_t kEpochBenign = 103;    // derive(epoch)
inline constexpr uint64_t kEpochBackdoor = 104;  // derive(epoch)
inline constexpr uint64_t kDefense = 105;        // derive(sample id)
}  // namespace stream

}  // namespace syntrace
