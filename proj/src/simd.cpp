#include "cmlab/simd.hpp"

#include "cmlab/int128.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace cmlab::simd {

namespace {

enum class Backend { Scalar, Avx2, Neon };

Backend detect() {
#if defined(CMLAB_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
#if defined(__aarch64__)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

const Backend g_backend = detect();

} // namespace

const char* active_backend() {
    switch (g_backend) {
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
        default: return "scalar";
    }
}

std::uint64_t popcount_words_scalar(const std::uint64_t* w, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::uint64_t(__builtin_popcountll(w[i]));
    return total;
}

#if defined(__aarch64__)
namespace {
std::uint64_t popcount_words_neon(const std::uint64_t* w, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t v = vld1q_u8(reinterpret_cast<const std::uint8_t*>(w + i));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) total += std::uint64_t(__builtin_popcountll(w[i]));
    return total;
}
} // namespace
#endif

std::uint64_t popcount_words(const std::uint64_t* w, std::size_t n) {
#if defined(CMLAB_HAVE_AVX2_TU)
    if (g_backend == Backend::Avx2) return popcount_words_avx2(w, n);
#endif
#if defined(__aarch64__)
    if (g_backend == Backend::Neon) return popcount_words_neon(w, n);
#endif
    return popcount_words_scalar(w, n);
}

std::int64_t legendre_scan_scalar(const std::int8_t* chi, std::uint32_t p, std::uint32_t c3,
                                  std::uint32_t c2, std::uint32_t c1, std::uint32_t c0) {
    // Incremental cubic evaluation: three additions per x, values kept in [0, p).
    auto norm = [p](std::uint64_t v) { return std::uint32_t(v % p); };
    // f(x+1) - f(x) = 3 c3 x^2 + (3 c3 + 2 c2) x + (c3 + c2 + c1)
    // second difference: 6 c3 x + 6 c3 + 2 c2, third difference: 6 c3
    std::uint32_t f = c0;
    std::uint32_t d1 = norm(std::uint64_t(c3) + c2 + c1);
    std::uint32_t d2 = norm(6ull * c3 + 2ull * c2);
    std::uint32_t d3 = norm(6ull * c3);
    std::int64_t sum = 0;
    for (std::uint32_t x = 0; x < p; ++x) {
        sum += chi[f];
        f += d1;
        if (f >= p) f -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += d3;
        if (d2 >= p) d2 -= p;
    }
    return sum;
}

std::int64_t legendre_scan(const std::int8_t* chi, std::uint32_t p, std::uint32_t c3,
                           std::uint32_t c2, std::uint32_t c1, std::uint32_t c0) {
#if defined(CMLAB_HAVE_AVX2_TU)
    if (g_backend == Backend::Avx2 && p >= 64)
        return legendre_scan_avx2(chi, p, c3, c2, c1, c0);
#endif
    return legendre_scan_scalar(chi, p, c3, c2, c1, c0);
}

} // namespace cmlab::simd
