#pragma once

#include <vector>

#include "cmlab/arith.hpp"
#include "cmlab/rational.hpp"

namespace cmlab {

// a + b*omega with omega = e^{2 pi i / 3}.
struct EisInt {
    i64 re = 0;
    i64 om = 0;

    friend EisInt operator+(EisInt a, EisInt b) { return {a.re + b.re, a.om + b.om}; }
    friend EisInt operator-(EisInt a, EisInt b) { return {a.re - b.re, a.om - b.om}; }
    friend EisInt operator*(EisInt a, EisInt b) {
        // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
        return {a.re * b.re - a.om * b.om, a.re * b.om + a.om * b.re - a.om * b.om};
    }
    friend bool operator==(EisInt a, EisInt b) { return a.re == b.re && a.om == b.om; }
    EisInt conj() const { return {re - om, -om}; }
    u64 norm() const { return u64(i128(re) * re - i128(re) * om + i128(om) * om); }
    i64 trace() const { return 2 * re - om; }
    bool is_zero() const { return re == 0 && om == 0; }
};

// zeta6^k with zeta6 = 1 + omega = -omega^2, the primitive 6th root of unity.
EisInt unit_w6(int k);

// Value of a sextic (or cubic, even exponents only) residue symbol:
// zero or zeta6^k.
struct SexticValue {
    bool zero = false;
    int k = 0; // exponent of zeta6, mod 6
    static SexticValue zero_value() { return {true, 0}; }
    static SexticValue unit(int k) { return {false, ((k % 6) + 6) % 6}; }
    static SexticValue omega_power(int d) { return unit(2 * d); }
    friend bool operator==(SexticValue a, SexticValue b) {
        return a.zero == b.zero && (a.zero || a.k == b.k);
    }
    SexticValue operator*(SexticValue o) const {
        if (zero || o.zero) return zero_value();
        return unit(k + o.k);
    }
    SexticValue conj() const { return zero ? *this : unit(-k); }
    bool is_cubic() const { return zero || k % 2 == 0; }
    int omega_exp() const { return (2 * k) % 3; }      // zeta6^k = sign * omega^omega_exp
    int sign() const { return k % 2 == 0 ? 1 : -1; }
    EisInt to_eis() const { return zero ? EisInt{0, 0} : unit_w6(k); }
};

// An Eisenstein prime of norm p for a rational prime p = 1 mod 3, found by
// Cornacchia descent on 4p = t^2 + 3 s^2.
EisInt split_prime_above(u64 p);

// Nearest-lattice-point division; ties broken by lexicographically smallest
// (re, om) of the remainder.
std::pair<EisInt, EisInt> divmod(EisInt a, EisInt b);
EisInt eis_gcd(EisInt a, EisInt b);

// The unique associate u*z congruent to 2 mod 3 (re = -1 mod 3, 3 | om).
// Throws NOT_COPRIME_TO_3 when (1 - omega) | z. Units map to -1.
EisInt primary_associate_eis(EisInt z);

bool is_eisenstein_prime(EisInt z);

// alpha^{(N(pi)-1)/3} identified in {0, 1, omega, omega^2}; pi prime with
// norm coprime to 3.
SexticValue cubic_symbol_prime(EisInt alpha, EisInt pi);

// Jacobi-style cubic symbol evaluated by the reciprocity chain; never
// factors xi. Requires (N(xi), 3) = 1.
SexticValue cubic_symbol_jacobi(EisInt alpha, EisInt xi);

// Cubic symbol with rational modulus q, (q, 3) = 1, via factorize(q).
SexticValue cubic_symbol_rational(EisInt z, u64 q);

// Sextic symbol of a rational integer at a prime pi with (N(pi), 6) = 1,
// computed by exponentiation. Satisfies value^3 = kronecker(a, N(pi)) and
// conj(value) = kronecker(a, N(pi)) * cubic_symbol_prime(a, pi).
SexticValue sextic_symbol_rational(i64 a, EisInt pi);

// Brute-force cubic Gauss sum over Z[omega]/(p) with the optional quadratic
// twist (N(z)|p)^kappa; equals p * kronecker(3, p)^kappa. p prime > 3.
EisInt gauss_sum_cubic(u64 p, int kappa);

// Exact value scale * zeta6^k used for the trace-constrained sums.
struct EisUnitValue {
    Rational scale;
    int unit_k = 0; // zeta6 exponent, canonical: scale >= 0, k = 0 when scale = 0
    friend bool operator==(const EisUnitValue& a, const EisUnitValue& b) {
        return a.scale == b.scale && (a.scale.is_zero() || a.unit_k == b.unit_k);
    }
};

EisUnitValue normalize_unit_value(EisInt v); // asserts v = n * zeta6^k

// Incomplete character sum over z in Z[omega]/(q) with (q,6)=1:
//   sum (z|q)_3 (N(z)|q)^kappa over Tr(beta z) = t mod q,  beta = zeta6^beta_k.
EisUnitValue cubic_trace_sum_closed(u64 q, i64 t, int beta_k, int kappa);
EisUnitValue cubic_trace_sum_bruteforce(u64 q, i64 t, int beta_k, int kappa); // q <= 1000

class CubicTraceSumTable {
  public:
    explicit CubicTraceSumTable(u64 q); // (q, 6) = 1, q <= 1000
    EisUnitValue value(i64 t, int beta_k, int kappa) const;

  private:
    u64 q_;
    std::vector<std::vector<EisInt>> buckets_; // [kappa*6 + beta_k][t]
};

} // namespace cmlab
