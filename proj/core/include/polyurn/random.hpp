#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <limits>

namespace polyurn {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A stream is identified by (key, stream index); the 128-bit counter is
// (block_lo, block_hi, stream_lo, stream_hi), so distinct stream indices never
// share a counter value under the same key. Blocks are produced eight at a
// time (AVX2 when the CPU has it, scalar otherwise; same output either way). Satisfies UniformRandomBitGenerator with
// 32-bit output.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  // Blocks generated per refill; the output sequence does not depend on it.
  static constexpr std::size_t kBatch = 8;

  Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    if (index_ == kBuffer) refill();
    return buffer_[index_++];
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1).
  double uniform_open() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound <= 0xFFFFFFFFu) {
      const auto b = static_cast<std::uint32_t>(bound);
      std::uint64_t m = static_cast<std::uint64_t>((*this)()) * b;
      auto low = static_cast<std::uint32_t>(m);
      if (low < b) {
        const std::uint32_t threshold = static_cast<std::uint32_t>(-b) % b;
        while (low < threshold) {
          m = static_cast<std::uint64_t>((*this)()) * b;
          low = static_cast<std::uint32_t>(m);
        }
      }
      return m >> 32;
    }
    __uint128_t m = static_cast<__uint128_t>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<__uint128_t>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Skips `blocks` 128-bit blocks past the block holding the last output.
  void discard_blocks(std::uint64_t blocks) noexcept {
    const std::uint64_t consumed = (index_ + 3) / 4;
    next_block_ = next_block_ - (kBuffer / 4) + consumed + blocks;
    index_ = kBuffer;
  }

  // One Philox4x32-10 bijection: counter block -> output block.
  static Block generate(Block ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  // Outputs of blocks first .. first + kBatch - 1 of stream `stream`, in order.
  static void generate_batch(std::uint64_t first, std::array<std::uint32_t, 2> stream, Key key,
                             std::uint32_t* out) noexcept;

  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

 private:
  static constexpr std::size_t kBuffer = 4 * kBatch;

  void refill() noexcept {
    generate_batch(next_block_, stream_, key_, buffer_.data());
    next_block_ += kBatch;
    index_ = 0;
  }

  Key key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t next_block_ = 0;
  std::size_t index_ = kBuffer;
  std::array<std::uint32_t, kBuffer> buffer_{};
};

// Stream j of a run seeded with `seed`.
inline Philox4x32 make_stream(std::uint64_t seed, std::uint64_t index) noexcept {
  return Philox4x32(seed, index);
}

}  // namespace polyurn
