#pragma once

#include <map>
#include <string>

#include "cmlab/rational.hpp"
#include "cmlab/trace_counts.hpp"

namespace cmlab {

// g = (-1)^delta 2^lambda D^mu g1 with gcd(2D, g1) = 1 (mu = 0 for D = 1, 2).
struct GFactorization {
    int delta = 0;
    int lambda = 0;
    int mu = 0;
    u64 g1 = 1;
    Factorization g1_factors;
};
GFactorization g_factorize(int D, i64 g);

// Omega_j(D; q, r): product over p^nu || q with p !| r, j !| nu of
// -1 / (p - 1 - (-D|p)). q odd.
Rational local_factor(int D, u64 q, i64 r, int j);
Rational local_factor(int D, const Factorization& q, i64 r, int j);

// A_j(q): product of the primes whose exponent in q is not divisible by j.
u64 power_obstruction(u64 q, int j);
u64 power_obstruction(const Factorization& q, int j);

// Membership of j in the auxiliary prime set J_p(g, r):
// j !| ord_p(g1), p !| r, and A_j(g1) | p r.
bool aux_set_contains(u64 p, int D, i64 g, i64 r, int j);
bool aux_set_contains(u64 p, const GFactorization& f, i64 r, int j);

// xi(D, r) in {0,1,2} and theta(D, r) in {0,1} per the case tables.
std::pair<int, int> xi_theta(int D, i64 r);

enum class EulerMethod { Direct, Accelerated };

// prod_{p !| 2r, p <= cutoff} (1 - (-D|p)/(p-1)); the accelerated route
// rewrites each factor as (1 - chi/p)(1 - chi/((p-1)(p-chi))), folds the
// full first product into L(1, chi_D) by the class number formula, and
// truncates only the absolutely convergent correction.
double euler_product(int D, i64 r, u64 cutoff, EulerMethod method);

// h_{D,r} = xi(D,r) * sqrt(D)/phi(D) * euler_product.
double h_density(int D, i64 r, u64 cutoff, EulerMethod method = EulerMethod::Direct);

// The Lang-Trotter second constant through the A_p/B_p route and the
// F_4 table; 0 when gcd(D, r) has an odd prime factor.
double second_constant(int D, i64 r, u64 cutoff);
Rational f4_table(int D, i64 r);

// Hardy-Littlewood densities for a m^2 + b m + c (and m = u mod q).
// Throws HYPOTHESIS_FAIL naming the violated clause.
double hl_constant(const QuadPoly& f, u64 cutoff);
double hl_constant_ap(const QuadPoly& f, u64 q, i64 u, u64 cutoff);

struct ConstantReport {
    int D = 1;
    i64 g = 0;
    i64 r = 0;
    int xi = 0;
    Rational finite_factor;   // bracket / family denominator, lowest terms
    double euler_value = 0.0; // truncated Euler product
    EulerMethod method = EulerMethod::Direct;
    u64 cutoff = 0;
    double h = 0.0;     // h_{D,r}
    double varpi = 0.0; // h * finite_factor
    std::map<std::string, Rational> breakdown;
};

// The exact rational bracket/denominator multiplying h_{D,r} in the
// families of explicit constants; 0 under the congruence conventions
// (2 !| r for D=1; 3 | r for D=3; r != 2 mod 4 for D=2; D | r otherwise).
Rational finite_factor_exact(int D, i64 g, i64 r,
                             std::map<std::string, Rational>* breakdown = nullptr);

ConstantReport lt_constant(int D, i64 g, i64 r, u64 cutoff = 1000000,
                           EulerMethod method = EulerMethod::Direct);

// Classification verdicts. `flag` means: varpi vanishes (positivity mode),
// finitely many anomalous primes (anomalous mode), varpi_r = varpi_{-r}
// (symmetry mode). `fired` identifies the theorem bullet that triggered,
// "NONE" when flag is false.
struct Verdict {
    bool flag = false;
    std::string fired = "NONE";
};

Verdict classify_positivity(int D, i64 g, i64 r);
Verdict classify_anomalous(int D, i64 g);
Verdict classify_anomalous_setform(int D, i64 g);
Verdict classify_symmetry(int D, i64 g, i64 r);

// Conjectural class densities, exact finite parts:
// Delta_G * G_d (the h_{1,r}/16 normalization is the caller's),
// Delta_E * E_{d,k,eps} (normalization h_{3,r}/72).
Rational predicted_gauss_density(i64 r, u64 alpha, int beta_k, int gamma1, int gamma2, int d);
Rational predicted_eis_density(i64 r, u64 alpha, int beta_k, int gamma_idx, int d, int k,
                               int eps);

// Conjectural density for count_norm_class (unordered pairs): half the
// displayed element-count asymptotic, times sqrt(x)/log x at the caller.
double predicted_norm_class_density(int D, i64 r, u64 q, u64 a, u64 cutoff);

} // namespace cmlab
