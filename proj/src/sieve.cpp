#include "cmlab/sieve.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "cmlab/simd.hpp"

namespace cmlab {

std::vector<u64> small_primes(u64 n) {
    std::vector<u64> primes;
    if (n < 2) return primes;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    for (u64 i = 2; i <= n; ++i)
        if (!comp[i]) primes.push_back(i);
    return primes;
}

namespace {

constexpr u64 kSegmentOdds = 1u << 20; // odds per segment -> 128 KiB bitmap

// Walk the odd numbers of [lo, hi) with a bit-per-odd segment sieve. For each
// segment, seg(words, base, count_valid_bits) is invoked; bit i represents
// base + 2i, set = prime.
template <typename SegFn>
void sieve_segments(u64 lo, u64 hi, const SegFn& seg) {
    if (hi > 4000000000000000000ull) throw std::invalid_argument("sieve: range too large");
    if (lo < 2) lo = 2;
    if (lo >= hi) return;
    u64 root = u64(std::sqrt(double(hi))) + 2;
    auto base_primes = small_primes(root);

    u64 start = lo | 1; // first odd >= lo
    std::vector<u64> words(kSegmentOdds / 64);

    for (u64 base = start; base < hi; base += 2 * kSegmentOdds) {
        u64 count = std::min(kSegmentOdds, (hi - base + 1) / 2);
        std::memset(words.data(), 0xff, words.size() * sizeof(u64));
        // clear bits beyond count
        for (u64 i = count; i < kSegmentOdds; ++i) words[i >> 6] &= ~(1ull << (i & 63));

        for (std::size_t k = 1; k < base_primes.size(); ++k) { // skip p=2
            u64 p = base_primes[k];
            if (p * p >= base + 2 * count) break;
            u64 first = p * p;
            if (first < base) {
                u64 m = (base + p - 1) / p;
                if (m % 2 == 0) ++m;
                first = m * p;
            }
            for (u64 j = (first - base) / 2; j < count; j += p)
                words[j >> 6] &= ~(1ull << (j & 63));
        }
        seg(words.data(), base, count);
    }
}

} // namespace

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (lo <= 2 && hi > 2) fn(2);
    sieve_segments(lo, hi, [&](const u64* words, u64 base, u64 count) {
        for (u64 w = 0; w * 64 < count; ++w) {
            u64 bits = words[w];
            while (bits) {
                u64 b = u64(__builtin_ctzll(bits));
                bits &= bits - 1;
                fn(base + 2 * (w * 64 + b));
            }
        }
    });
}

u64 count_primes(u64 lo, u64 hi) {
    u64 total = (lo <= 2 && hi > 2) ? 1 : 0;
    sieve_segments(lo, hi, [&](const u64* words, u64 base, u64 count) {
        (void)base;
        total += simd::popcount_words(words, (count + 63) / 64);
    });
    return total;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
    return out;
}

} // namespace cmlab
