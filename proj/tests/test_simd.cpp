#include <doctest.h>

#include <random>
#include <vector>

#include "cmlab/arith.hpp"
#include "cmlab/simd.hpp"

using namespace cmlab;

TEST_CASE("popcount kernel equivalence") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 50; ++it) {
        size_t n = rng() % 300;
        std::vector<u64> words(n);
        for (auto& w : words) w = rng();
        CHECK(simd::popcount_words(words.data(), n) ==
              simd::popcount_words_scalar(words.data(), n));
    }
}

TEST_CASE("legendre scan kernel equivalence") {
    std::mt19937_64 rng(202);
    std::vector<u64> ps = {3, 67, 101, 257, 1009, 4099, 65537, 99991};
    for (u64 p : ps) {
        std::vector<std::int8_t> chi(p + 4);
        for (auto& c : chi) c = std::int8_t(int(rng() % 3) - 1);
        for (int it = 0; it < 8; ++it) {
            u32 c3 = u32(rng() % p), c2 = u32(rng() % p), c1 = u32(rng() % p), c0 = u32(rng() % p);
            auto a = simd::legendre_scan(chi.data(), u32(p), c3, c2, c1, c0);
            auto b = simd::legendre_scan_scalar(chi.data(), u32(p), c3, c2, c1, c0);
            CHECK(a == b);
        }
    }
    MESSAGE("active simd backend: ", simd::active_backend());
}
