#pragma once

#include <complex>
#include <vector>

#include "cmlab/arith.hpp"
#include "cmlab/rational.hpp"

namespace cmlab {

struct GaussInt {
    i64 re = 0;
    i64 im = 0;

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
    GaussInt conj() const { return {re, -im}; }
    u64 norm() const { return u64(i128(re) * re + i128(im) * im); }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_odd() const { return norm() % 2 == 1; } // not divisible by 1+i
};

// i^k with k mod 4.
GaussInt unit_i(int k);

// Value of a quartic residue symbol: zero or i^k.
struct QuarticValue {
    bool zero = false;
    int k = 0; // exponent of i, mod 4
    static QuarticValue zero_value() { return {true, 0}; }
    static QuarticValue unit(int k) { return {false, ((k % 4) + 4) % 4}; }
    friend bool operator==(QuarticValue a, QuarticValue b) {
        return a.zero == b.zero && (a.zero || a.k == b.k);
    }
    QuarticValue operator*(QuarticValue o) const {
        if (zero || o.zero) return zero_value();
        return unit(k + o.k);
    }
    QuarticValue conj() const { return zero ? *this : unit(-k); }
    GaussInt to_gauss() const { return zero ? GaussInt{0, 0} : unit_i(k); }
};

// p = m^2 + n^2 for a rational prime p = 1 mod 4 (or p = 2), by Cornacchia
// descent from a square root of -1 mod p.
std::pair<u64, u64> two_squares_prime(u64 p);

// Quotient and minimal-norm remainder; ties broken by lexicographically
// smallest (re, im) of the remainder.
std::pair<GaussInt, GaussInt> divmod(GaussInt a, GaussInt b);
GaussInt gauss_gcd(GaussInt a, GaussInt b);

// The unique associate u*z with u in {1,i,-1,-i} congruent to 1 mod 2+2i,
// i.e. re+im = 1 mod 4 and im even. Throws NOT_ODD when (1+i) | z. Units
// map to 1.
GaussInt primary_associate(GaussInt z);

// True when z generates a prime ideal of Z[i]: prime norm, or an associate
// of a rational prime p = 3 mod 4.
bool is_gaussian_prime(GaussInt z);

// alpha^{(N(pi)-1)/4} identified in {0, 1, i, -1, -i}. pi must be a Gaussian
// prime of odd norm (throws NOT_PRIME / NOT_ODD otherwise).
QuarticValue quartic_symbol_prime(GaussInt alpha, GaussInt pi);

// Jacobi-style symbol for arbitrary odd xi, evaluated by the reciprocity
// chain (primary normalization, unit and (1+i) extraction via the
// supplementary laws, reciprocity flips). Never factors xi.
QuarticValue quartic_symbol_jacobi(GaussInt alpha, GaussInt xi);

// Symbol with an odd positive rational modulus, multiplicative over
// factorize(q); split primes use the two conjugate prime symbols, inert
// primes exponentiate in Z[i]/(p).
QuarticValue quartic_symbol_rational(GaussInt z, u64 q);

// Brute-force quartic Gauss sum over Z[i]/(p), exactly rounded. Equals
// p * (i|p)_4 for every odd prime p; throws NONCONVERGENT if the rounding
// residual exceeds 1e-6.
GaussInt gauss_sum_quartic(u64 p);

// Incomplete character sum with trace constraint Tr(beta*z) = 2t mod q,
// summed over z in Z[i]/(q). beta = i^beta_k. Exact integer values.
// Closed form per the product formula; brute force is the literal sum.
Rational quartic_trace_sum_closed(u64 q, i64 t, int beta_k);
GaussInt quartic_trace_sum_bruteforce(u64 q, i64 t, int beta_k); // q <= 1000

// Precomputed symbol table for sweeping all (t, beta) of one modulus.
class QuarticTraceSumTable {
  public:
    explicit QuarticTraceSumTable(u64 q); // q odd, q <= 1000
    // exact value of the constrained sum; imaginary part is always 0 and is
    // asserted by callers via value().im
    GaussInt value(i64 t, int beta_k) const;
    u64 modulus() const { return q_; }

  private:
    u64 q_;
    // bucket[beta_k][residue of Tr(beta z) mod q] accumulated as GaussInt
    std::vector<std::vector<GaussInt>> buckets_;
};

// (i|q)_4 = (-1)^{(q^2-1)/8} for odd q >= 1.
int quartic_symbol_i_rational(u64 q);

} // namespace cmlab
