#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmlab/int128.hpp"

namespace cmlab {

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 mod);

// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(u64 n);

struct Factorization {
    u64 value = 1;
    std::vector<std::pair<u64, int>> factors; // (prime, exponent), primes ascending
};

// Trial division for small factors, Brent's rho for the rest. n >= 1.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

// Largest nu with p^nu | n, for n != 0.
int ord_p(i64 n, u64 p);

// Kronecker symbol (a|n), n != 0. Extends Legendre/Jacobi.
int kronecker(i64 a, i64 n);

// Tonelli-Shanks. Returns the smaller of the two square roots of a mod p,
// or nullopt when a is a non-residue. p must be an odd prime.
std::optional<u64> sqrt_mod(i64 a, u64 p);

// Odd part of n.
inline u64 odd_part(u64 n) {
    while (n && n % 2 == 0) n /= 2;
    return n;
}

} // namespace cmlab
