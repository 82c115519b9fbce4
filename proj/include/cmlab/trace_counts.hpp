#pragma once

#include <array>
#include <map>
#include <vector>

#include "cmlab/frobenius.hpp"

namespace cmlab {

// Counts of good primes p <= x per trace value; traces outside
// [r_min, r_max] land in `overflow`.
struct TraceHistogram {
    CurveSpec curve;
    u64 x = 0;
    i64 r_min = 0, r_max = 0;
    std::vector<u64> counts; // index r - r_min
    u64 overflow = 0;
    u64 good_total = 0;
    std::vector<u64> bad_skipped;

    u64 count(i64 r) const {
        if (r < r_min || r > r_max) return 0;
        return counts[size_t(r - r_min)];
    }
};

TraceHistogram count_traces(const CurveSpec& curve, u64 x, i64 r_min, i64 r_max,
                            int threads = 1);

// pi_{D,r}(x) both ways: over prime elements (some unit twist of the prime
// above p has trace r, counted as unordered conjugate pairs), and over the
// quadratic progression h_{D,r}(n).
struct FixedTraceCounts {
    u64 via_elements = 0;
    u64 via_polynomial = 0;
};
FixedTraceCounts count_fixed_trace(int D, i64 r, u64 x);

// h_{D,r}(n); zero polynomial when undefined (D = 1, 2 mod 4 with odd r).
struct QuadProgression {
    bool defined = false;
    i64 a = 0, b = 0, c = 0; // h(n) = a n^2 + b n + c
};
QuadProgression trace_polynomial(int D, i64 r);

// Unordered-pair count of prime elements with norm <= x, trace exactly r,
// and norm = a mod q (gcd(q, a) = 1 unless q = 1).
u64 count_norm_class(int D, u64 x, i64 r, u64 q, u64 a);

// Primary Gaussian prime elements of norm <= x with Tr(beta pi) = r,
// (alpha|pi)_4 = i^d and pi = 2 gamma1 + 1 + 2 gamma2 i mod 16.
u64 count_gauss_classes(u64 x, i64 r, u64 alpha, int beta_k, int gamma1, int gamma2, int d);

// Sum of the above over all d, beta, gamma (one pass); equals
// 2 pi_{1,r}(x) + O(1).
u64 gauss_class_total(u64 x, i64 r, u64 alpha);

// Primary Eisenstein prime elements of norm <= x with Tr(beta pi) = r,
// N = 2k+1 mod 8, (alpha|pi)_3 = omega^d, (alpha|N) = eps, pi = gamma mod 2
// (gamma indexed 0,1,2 for 1, omega, 1+omega).
u64 count_eis_classes(u64 x, i64 r, u64 alpha, int beta_k, int gamma_idx, int d, int k, int eps);
u64 eis_class_total(u64 x, i64 r, u64 alpha);

// Primes <= x of the form a m^2 + b m + c, m in Z+ (distinct primes).
struct QuadPoly {
    i64 a, b, c;
    i64 disc() const { return b * b - 4 * a * c; }
};
u64 count_quadratic_primes(const QuadPoly& f, u64 x);
u64 count_quadratic_primes_ap(const QuadPoly& f, u64 x, u64 q, u64 u);

// N0, N1, N2, N+, N- of a primitive quadratic polynomial mod odd q.
struct ResidueCounts {
    i64 n0, n1, n2, nplus, nminus;
    friend bool operator==(const ResidueCounts& a, const ResidueCounts& b) = default;
};
ResidueCounts residue_counts_bruteforce(const QuadPoly& f, u64 q);
ResidueCounts residue_counts_closed(const QuadPoly& f, u64 q); // needs (q, 2a) = 1

// Solution counts of the trace norm-forms in residue classes:
//   rho:   #{t mod q : 2 t^2 + r^2/4 = a}          (needs 2 | r)
//   rho_D: #{t mod q : D t^2 - D r t + (D+1) r^2 / 4 = a}   (D = 3 mod 4)
u64 rho_count(i64 r, u64 q, u64 a);
u64 rho_D_count(int D, i64 r, u64 q, u64 a);
u64 rho_D_mod8_closed(int D, i64 r, int k);

} // namespace cmlab
