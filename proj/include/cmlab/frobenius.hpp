#pragma once

#include <vector>

#include "cmlab/arith.hpp"
#include "cmlab/eisenstein.hpp"
#include "cmlab/gaussian.hpp"

namespace cmlab {

// The nine class-number-one CM discriminants.
inline constexpr int kDiscriminants[9] = {1, 2, 3, 7, 11, 19, 43, 67, 163};
bool is_cm_discriminant(int D);

// One member of the CM curve family:
//   D = 1: y^2 = x^3 - g x
//   D = 3: y^2 = x^3 + g
//   else : y^2 = 4 x^3 + a x + b with the fixed rational (a, b) scaled by g
struct CurveSpec {
    int D;
    i64 g;
    CurveSpec(int D_, i64 g_);
};

enum class SplitType { Split, Inert, Ramified };

// Field discriminant: -4D for D = 1, 2 mod 4, -D for D = 3 mod 4.
i64 field_discriminant(int D);

SplitType split_type(int D, u64 p);

// A prime above p in the order of discriminant D, in canonical form:
//   D = 1, 2 mod 4:  p = m^2 + D n^2, m > 0, n > 0 (m odd when D = 1)
//   D = 3 mod 4:    4p = t^2 + D s^2, t > 0, s > 0, t = s mod 2
struct SplitPrime {
    int D = 1;
    u64 p = 0;
    i64 m = 0, n = 0; // D = 1, 2 mod 4
    i64 t = 0, s = 0; // D = 3 mod 4

    i64 trace() const { return D % 4 == 3 ? t : 2 * m; }
    GaussInt gauss() const { return {m, n}; }              // D = 1
    EisInt eis() const { return {(t + s) / 2, s}; }        // D = 3
};

// Solve the norm form for a split prime (throws NOT_SPLIT otherwise).
SplitPrime norm_form_solve(int D, u64 p);

// Primes where the model or the formulas are invalid: p | 2g, plus the
// model denominators and the ramified discriminant prime.
std::vector<u64> bad_primes(const CurveSpec& curve);
bool is_good_prime(const CurveSpec& curve, u64 p);

// Trace of Frobenius via the explicit formulas (Deuring zero on inert
// primes, residue-symbol twist of the split element otherwise).
// Throws BAD_PRIME unless p is a good prime of the curve.
i64 ap_formula(const CurveSpec& curve, u64 p);

// chi table for the Legendre-sum oracle; length p + 4 (gather padding).
std::vector<std::int8_t> legendre_table(u64 p);

// a_p = -sum_x chi(f(x)) with f the curve cubic over F_p; for D = 2 the
// integral model y^2 = x(x^2 - 4gx + 2g^2) is used. p <= 1e5.
i64 ap_bruteforce(const CurveSpec& curve, u64 p);
i64 ap_bruteforce(const CurveSpec& curve, u64 p, const std::int8_t* chi);

// Cubic coefficients (c3, c2, c1, c0) of the curve reduced mod p.
struct CubicModP {
    u64 c3, c2, c1, c0;
};
CubicModP curve_cubic_mod_p(const CurveSpec& curve, u64 p);

} // namespace cmlab
