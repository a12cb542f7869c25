#include "polyurn/random.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define POLYURN_HAVE_AVX2_PATH 1
#endif

namespace polyurn {

namespace {

void batch_scalar(std::uint64_t first, std::array<std::uint32_t, 2> stream, Philox4x32::Key key,
                  std::uint32_t* out) noexcept {
  for (std::size_t b = 0; b < Philox4x32::kBatch; ++b) {
    const std::uint64_t block = first + b;
    const Philox4x32::Block ctr{static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                                stream[0], stream[1]};
    const auto r = Philox4x32::generate(ctr, key);
    for (std::size_t w = 0; w < 4; ++w) out[4 * b + w] = r[w];
  }
}

#ifdef POLYURN_HAVE_AVX2_PATH

static_assert(Philox4x32::kBatch == 8, "AVX2 path generates eight blocks at a time");

// Eight independent blocks, one per 32-bit lane.
__attribute__((target("avx2"))) inline void mul_hi_lo(__m256i a, __m256i m, __m256i& hi, __m256i& lo) {
  const __m256i even = _mm256_mul_epu32(a, m);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), m);
  lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
  hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

__attribute__((target("avx2"))) void batch_avx2(std::uint64_t first, std::array<std::uint32_t, 2> stream,
                                                Philox4x32::Key key, std::uint32_t* out) noexcept {
  const auto lo = static_cast<std::uint32_t>(first);
  const auto hi = static_cast<std::uint32_t>(first >> 32);
  __m256i c0 = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(lo)), _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
  __m256i c1 = _mm256_set1_epi32(static_cast<int>(hi));
  __m256i c2 = _mm256_set1_epi32(static_cast<int>(stream[0]));
  __m256i c3 = _mm256_set1_epi32(static_cast<int>(stream[1]));
  const __m256i m0 = _mm256_set1_epi32(static_cast<int>(Philox4x32::kMul0));
  const __m256i m1 = _mm256_set1_epi32(static_cast<int>(Philox4x32::kMul1));
  std::uint32_t k0 = key[0];
  std::uint32_t k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    __m256i h0, l0, h1, l1;
    mul_hi_lo(c0, m0, h0, l0);
    mul_hi_lo(c2, m1, h1, l1);
    c0 = _mm256_xor_si256(_mm256_xor_si256(h1, c1), _mm256_set1_epi32(static_cast<int>(k0)));
    c2 = _mm256_xor_si256(_mm256_xor_si256(h0, c3), _mm256_set1_epi32(static_cast<int>(k1)));
    c1 = l1;
    c3 = l0;
    k0 += Philox4x32::kWeyl0;
    k1 += Philox4x32::kWeyl1;
  }
  // Transpose word-major lanes back to block order.
  const __m256i a = _mm256_unpacklo_epi32(c0, c1);
  const __m256i b = _mm256_unpackhi_epi32(c0, c1);
  const __m256i c = _mm256_unpacklo_epi32(c2, c3);
  const __m256i d = _mm256_unpackhi_epi32(c2, c3);
  const __m256i e = _mm256_unpacklo_epi64(a, c);  // blocks 0, 4
  const __m256i f = _mm256_unpackhi_epi64(a, c);  // blocks 1, 5
  const __m256i g = _mm256_unpacklo_epi64(b, d);  // blocks 2, 6
  const __m256i h = _mm256_unpackhi_epi64(b, d);  // blocks 3, 7
  auto* dst = reinterpret_cast<__m256i*>(out);
  _mm256_storeu_si256(dst + 0, _mm256_permute2x128_si256(e, f, 0x20));
  _mm256_storeu_si256(dst + 1, _mm256_permute2x128_si256(g, h, 0x20));
  _mm256_storeu_si256(dst + 2, _mm256_permute2x128_si256(e, f, 0x31));
  _mm256_storeu_si256(dst + 3, _mm256_permute2x128_si256(g, h, 0x31));
}

bool cpu_has_avx2() noexcept {
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
}

#endif

}  // namespace

void Philox4x32::generate_batch(std::uint64_t first, std::array<std::uint32_t, 2> stream, Key key,
                                std::uint32_t* out) noexcept {
#ifdef POLYURN_HAVE_AVX2_PATH
  // The vector path keeps the high counter word fixed across the batch.
  const bool no_carry = static_cast<std::uint32_t>(first) <= 0xFFFFFFFFu - (kBatch - 1);
  if (no_carry && cpu_has_avx2()) {
    batch_avx2(first, stream, key, out);
    return;
  }
#endif
  batch_scalar(first, stream, key, out);
}

}  // namespace polyurn
