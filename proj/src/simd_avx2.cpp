#include <immintrin.h>

#include "cmlab/simd.hpp"

namespace cmlab::simd {

std::uint64_t popcount_words_avx2(const std::uint64_t* w, std::size_t n) {
    // Nibble-LUT popcount over 256-bit lanes.
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                                         2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
        __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi64(v, 4), low));
        __m256i cnt = _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
        acc = _mm256_add_epi64(acc, cnt);
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += std::uint64_t(__builtin_popcountll(w[i]));
    return total;
}

std::int64_t legendre_scan_avx2(const std::int8_t* chi, std::uint32_t p, std::uint32_t c3,
                                std::uint32_t c2, std::uint32_t c1, std::uint32_t c0) {
    using u128 = unsigned __int128;
    // Eight interleaved lanes with stride-8 finite differences:
    //   D1(x) = f(x+8)-f(x) = 24 c3 x^2 + (192 c3 + 16 c2) x + (512 c3 + 64 c2 + 8 c1)
    //   D2(x) = 384 c3 x + 3072 c3 + 128 c2,  D3 = 3072 c3
    alignas(32) std::uint32_t f0[8], d1v[8], d2v[8];
    for (std::uint32_t j = 0; j < 8; ++j) {
        u128 x = j;
        f0[j] = std::uint32_t((((u128(c3) * x + c2) * x + c1) * x + c0) % p);
        d1v[j] = std::uint32_t((u128(24) * c3 % p * x % p * x + (u128(192) * c3 + u128(16) * c2) * x +
                                u128(512) * c3 + u128(64) * c2 + u128(8) * c1) %
                               p);
        d2v[j] = std::uint32_t((u128(384) * c3 * x + u128(3072) * c3 + u128(128) * c2) % p);
    }
    const std::uint32_t d3s = std::uint32_t(u128(3072) * c3 % p);

    __m256i f = _mm256_load_si256(reinterpret_cast<const __m256i*>(f0));
    __m256i d1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d1v));
    __m256i d2 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d2v));
    const __m256i d3 = _mm256_set1_epi32(int(d3s));
    const __m256i pv = _mm256_set1_epi32(int(p));
    const __m256i pm1 = _mm256_set1_epi32(int(p - 1));
    __m256i acc = _mm256_setzero_si256();

    auto reduce = [&](__m256i v) {
        __m256i mask = _mm256_cmpgt_epi32(v, pm1);
        return _mm256_sub_epi32(v, _mm256_and_si256(mask, pv));
    };

    const std::uint32_t iters = p / 8;
    for (std::uint32_t it = 0; it < iters; ++it) {
        __m256i bytes = _mm256_i32gather_epi32(reinterpret_cast<const int*>(chi), f, 1);
        bytes = _mm256_srai_epi32(_mm256_slli_epi32(bytes, 24), 24);
        acc = _mm256_add_epi32(acc, bytes);
        f = reduce(_mm256_add_epi32(f, d1));
        d1 = reduce(_mm256_add_epi32(d1, d2));
        d2 = reduce(_mm256_add_epi32(d2, d3));
    }

    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::int64_t sum = 0;
    for (int j = 0; j < 8; ++j) sum += lanes[j];
    for (std::uint32_t x = iters * 8; x < p; ++x) {
        std::uint32_t v = std::uint32_t((((u128(c3) * x + c2) * x + c1) * x + c0) % p);
        sum += chi[v];
    }
    return sum;
}

} // namespace cmlab::simd
