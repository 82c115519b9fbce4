#pragma once

#include <functional>
#include <vector>

#include "cmlab/int128.hpp"

namespace cmlab {

// Simple Eratosthenes up to n inclusive; returns the primes.
std::vector<u64> small_primes(u64 n);

// Segmented sieve over [lo, hi): calls fn(p) for every prime in order.
// Requires hi <= 4e18; intended range per the callers is hi <= 1e9.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);

// Number of primes in [lo, hi). Counts set bits in the segment bitmaps via
// the runtime-dispatched popcount kernel.
u64 count_primes(u64 lo, u64 hi);

// Collected primes in [lo, hi).
std::vector<u64> primes_in_range(u64 lo, u64 hi);

} // namespace cmlab
