#pragma once

#include <cstddef>
#include <cstdint>

namespace cmlab::simd {

// Kernels come in a scalar reference flavour plus vector variants picked at
// runtime. The scalar versions stay exposed so equivalence tests can compare
// the two paths bit for bit.

const char* active_backend(); // "scalar", "avx2" or "neon"

// Population count over a word array.
std::uint64_t popcount_words(const std::uint64_t* w, std::size_t n);
std::uint64_t popcount_words_scalar(const std::uint64_t* w, std::size_t n);
#if defined(CMLAB_HAVE_AVX2_TU)
std::uint64_t popcount_words_avx2(const std::uint64_t* w, std::size_t n);
#endif

// sum_{x=0}^{p-1} chi[(c3 x^3 + c2 x^2 + c1 x + c0) mod p] for an int8 table
// chi of length p (padded to p+4 so 4-byte gathers stay in bounds).
// Coefficients must already be reduced into [0, p). Requires p < 2^30.
std::int64_t legendre_scan(const std::int8_t* chi, std::uint32_t p, std::uint32_t c3,
                           std::uint32_t c2, std::uint32_t c1, std::uint32_t c0);
std::int64_t legendre_scan_scalar(const std::int8_t* chi, std::uint32_t p, std::uint32_t c3,
                                  std::uint32_t c2, std::uint32_t c1, std::uint32_t c0);
#if defined(CMLAB_HAVE_AVX2_TU)
std::int64_t legendre_scan_avx2(const std::int8_t* chi, std::uint32_t p, std::uint32_t c3,
                                std::uint32_t c2, std::uint32_t c1, std::uint32_t c0);
#endif

} // namespace cmlab::simd
