#include "cmlab/constants.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cmlab/sieve.hpp"

namespace cmlab {

GFactorization g_factorize(int D, i64 g) {
    if (g == 0) throw std::invalid_argument("g_factorize: g must be nonzero");
    if (!is_cm_discriminant(D)) throw std::invalid_argument("g_factorize: bad D");
    GFactorization f;
    u64 m = u64(g < 0 ? -g : g);
    f.delta = g < 0 ? 1 : 0;
    while (m % 2 == 0) {
        m /= 2;
        ++f.lambda;
    }
    if (D % 2 == 1 && D > 1) {
        while (m % u64(D) == 0) {
            m /= u64(D);
            ++f.mu;
        }
    }
    f.g1 = m;
    f.g1_factors = factorize(m);
    return f;
}

Rational local_factor(int D, const Factorization& q, i64 r, int j) {
    if (q.value % 2 == 0) throw std::invalid_argument("BAD_MODULUS: q must be odd");
    Rational out(1);
    for (auto& [p, e] : q.factors) {
        if (r % i64(p) == 0) continue;
        if (e % j == 0) continue;
        out = out * Rational(-1, i128(p) - 1 - kronecker(-i64(D), i64(p)));
    }
    return out;
}

Rational local_factor(int D, u64 q, i64 r, int j) {
    return local_factor(D, factorize(q), r, j);
}

u64 power_obstruction(const Factorization& q, int j) {
    u64 out = 1;
    for (auto& [p, e] : q.factors)
        if (e % j != 0) out *= p;
    return out;
}

u64 power_obstruction(u64 q, int j) { return power_obstruction(factorize(q), j); }

bool aux_set_contains(u64 p, const GFactorization& f, i64 r, int j) {
    int ord = 0;
    for (auto& [q, e] : f.g1_factors.factors)
        if (q == p) ord = e;
    if (ord % j == 0) return false;
    if (r % i64(p) == 0) return false;
    u64 obstruction = power_obstruction(f.g1_factors, j);
    i128 pr = i128(p) * (r < 0 ? -r : r);
    return pr % obstruction == 0;
}

bool aux_set_contains(u64 p, int D, i64 g, i64 r, int j) {
    return aux_set_contains(p, g_factorize(D, g), r, j);
}

std::pair<int, int> xi_theta(int D, i64 r) {
    if (r == 0) throw std::invalid_argument("xi_theta: r must be nonzero");
    u64 ar = u64(r < 0 ? -r : r);
    int xi = 0, theta = 0;
    if (D % 4 == 1 && r % 2 == 0 && std::gcd(u64(D), ar) == 1) xi = 1;
    if (D % 4 == 2 && r % 2 == 0 && std::gcd(u64(D), u64(ar / 2)) == 1) xi = 1;
    if (D % 4 == 3 && r % 2 == 0 && std::gcd(u64(D), ar) == 1) xi = 1;
    if (D % 8 == 3 && r % 2 != 0 && std::gcd(u64(D), ar) == 1) xi = 2;
    if (D == 2 && ((r % 4) + 4) % 4 == 2) theta = 1;
    if (D % 4 == 3 && r % 2 == 0 && std::gcd(u64(D), ar) == 1) theta = 1;
    if (D % 8 == 3 && r % 2 != 0 && std::gcd(u64(D), ar) == 1) theta = 1;
    return {xi, theta};
}

namespace {

int w_roots_of_unity(int D) { return D == 1 ? 4 : (D == 3 ? 6 : 2); }

const double kPi = 3.14159265358979323846;

} // namespace

double euler_product(int D, i64 r, u64 cutoff, EulerMethod method) {
    if (cutoff < 1000) throw std::invalid_argument("euler_product: cutoff too small");
    u64 ar = u64(r < 0 ? -r : r);
    if (method == EulerMethod::Direct) {
        double prod = 1.0;
        for_each_prime(3, cutoff + 1, [&](u64 p) {
            if (ar % p == 0) return;
            prod *= 1.0 - double(kronecker(-i64(D), i64(p))) / double(p - 1);
        });
        return prod;
    }
    // (1 - chi/(p-1)) = (1 - chi/p) * (1 - chi/((p-1)(p-chi))). The full
    // first product is 1/L(1, chi_D) with L from the class number formula
    // (h(D) = 1); remove the factors at p = 2 and p | r again.
    i64 disc = field_discriminant(D);
    double adisc = double(-disc);
    double L = 2.0 * kPi / (w_roots_of_unity(D) * std::sqrt(adisc));
    double value = 1.0 / L;
    int chi2 = kronecker(disc, 2);
    value /= 1.0 - double(chi2) / 2.0;
    for (auto& [p, e] : factorize(ar == 0 ? 1 : ar).factors) {
        (void)e;
        if (p == 2) continue;
        value /= 1.0 - double(kronecker(-i64(D), i64(p))) / double(p);
    }
    for_each_prime(3, cutoff + 1, [&](u64 p) {
        if (ar % p == 0) return;
        int chi = kronecker(-i64(D), i64(p));
        value *= 1.0 - double(chi) / (double(p - 1) * (double(p) - chi));
    });
    return value;
}

double h_density(int D, i64 r, u64 cutoff, EulerMethod method) {
    auto [xi, theta] = xi_theta(D, r);
    (void)theta;
    if (xi == 0) return 0.0;
    return xi * std::sqrt(double(D)) / double(euler_phi(u64(D))) *
           euler_product(D, r, cutoff, method);
}

Rational f4_table(int D, i64 r) {
    int rm = int(((r % 4) + 4) % 4);
    if (D % 4 == 1) return rm % 2 == 0 ? Rational(2) : Rational(0);
    if (D % 4 == 2) return rm == 2 ? Rational(4) : Rational(0);
    if (D % 8 == 3) return rm % 2 == 0 ? Rational(2, 3) : Rational(4, 3);
    return rm % 2 == 0 ? Rational(2) : Rational(0); // D = 7 mod 8
}

double second_constant(int D, i64 r, u64 cutoff) {
    if (r == 0) throw std::invalid_argument("second_constant: r must be nonzero");
    u64 ar = u64(r < 0 ? -r : r);
    u64 g = std::gcd(u64(D), ar);
    if (odd_part(g) > 1) return 0.0; // ODD_COMMON_FACTOR
    Rational f4 = f4_table(D, r);
    if (f4.is_zero()) return 0.0;
    double c = double(w_roots_of_unity(D)) / (2.0 * kPi) * f4.to_double();
    // finite product over odd p | r
    for (auto& [p, e] : factorize(ar).factors) {
        (void)e;
        if (p == 2) continue;
        int chi = kronecker(-i64(D), i64(p));
        if (u64(D) % p == 0)
            c *= 0.0;
        else if (chi == 1)
            c /= 1.0 - 1.0 / double(p);
        else
            c /= 1.0 + 1.0 / double(p);
    }
    for_each_prime(3, cutoff + 1, [&](u64 p) {
        if (ar % p == 0) return;
        double pd = double(p);
        if (u64(D) % p == 0) {
            c /= 1.0 - 1.0 / pd;
        } else if (kronecker(-i64(D), i64(p)) == 1) {
            c *= (1.0 - 2.0 / pd) / ((1.0 - 1.0 / pd) * (1.0 - 1.0 / pd));
        } else {
            c /= 1.0 - 1.0 / (pd * pd);
        }
    });
    return c;
}

namespace {

bool is_perfect_square_u(u64 v) {
    u64 s = u64(std::llround(std::sqrt(double(v))));
    for (u64 t = s > 1 ? s - 1 : 0; t <= s + 1; ++t)
        if (t * t == v) return true;
    return false;
}

} // namespace

double hl_constant(const QuadPoly& f, u64 cutoff) {
    if (f.a <= 0) throw std::invalid_argument("HYPOTHESIS_FAIL: a must be positive");
    i64 disc = f.disc();
    if (disc >= 0 && is_perfect_square_u(u64(disc)))
        throw std::invalid_argument("HYPOTHESIS_FAIL: discriminant is a perfect square");
    if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
        throw std::invalid_argument("HYPOTHESIS_FAIL: polynomial is not primitive");
    if ((f.a + f.b) % 2 == 0 && f.c % 2 == 0)
        throw std::invalid_argument("HYPOTHESIS_FAIL: a+b and c are both even");
    u64 delta = odd_part(u64(std::gcd(f.a, f.b < 0 ? -f.b : f.b)));
    double c = (f.a + f.b) % 2 == 0 ? 2.0 : 1.0; // (2, a+b)
    c /= std::sqrt(double(f.a));
    c *= double(delta) / double(euler_phi(delta));
    u64 aa = u64(f.a);
    for_each_prime(3, cutoff + 1, [&](u64 p) {
        if (aa % p == 0) return;
        c *= 1.0 - double(kronecker(disc, i64(p))) / double(p - 1);
    });
    return c;
}

double hl_constant_ap(const QuadPoly& f, u64 q, i64 u, u64 cutoff) {
    if (f.a <= 0) throw std::invalid_argument("HYPOTHESIS_FAIL: a must be positive");
    if (q == 0) throw std::invalid_argument("HYPOTHESIS_FAIL: q must be positive");
    i64 disc = f.disc();
    if (disc >= 0 && is_perfect_square_u(u64(disc)))
        throw std::invalid_argument("HYPOTHESIS_FAIL: discriminant is a perfect square");
    if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
        throw std::invalid_argument("HYPOTHESIS_FAIL: polynomial is not primitive");
    i64 fu = f.a * u * u + f.b * u + f.c;
    if (std::gcd(u64(fu < 0 ? -fu : fu), q) != 1)
        throw std::invalid_argument("HYPOTHESIS_FAIL: gcd(q, f(u)) != 1");
    bool abq_even = ((f.a + f.b) * i64(q)) % 2 == 0;
    bool abuc_even = ((f.a + f.b) * u + f.c) % 2 == 0;
    if (abq_even && abuc_even)
        throw std::invalid_argument("HYPOTHESIS_FAIL: (a+b)q and (a+b)u+c are both even");
    i64 lin = 2 * f.a * u + f.b;
    u64 gq = u64(std::gcd(f.a * i64(q), lin < 0 ? -lin : lin)); // (aq, 2au+b)
    u64 Delta = odd_part(q * gq);
    double c = abq_even ? 2.0 : 1.0;
    c /= double(q) * std::sqrt(double(f.a));
    c *= double(Delta) / double(euler_phi(Delta));
    u64 qa = q * u64(f.a);
    for_each_prime(3, cutoff + 1, [&](u64 p) {
        if (qa % p == 0) return;
        c *= 1.0 - double(kronecker(disc, i64(p))) / double(p - 1);
    });
    return c;
}

namespace {

Rational re_omega(i64 k) { // Re(omega^k) as a rational
    i64 m = ((k % 3) + 3) % 3;
    return m == 0 ? Rational(1) : Rational(-1, 2);
}

int parity(i64 v) { return int(((v % 2) + 2) % 2); }

} // namespace

Rational finite_factor_exact(int D, i64 g, i64 r, std::map<std::string, Rational>* breakdown) {
    if (r == 0) throw std::invalid_argument("finite_factor_exact: r must be nonzero");
    GFactorization f = g_factorize(D, g);
    auto put = [&](const std::string& k, const Rational& v) {
        if (breakdown) (*breakdown)[k] = v;
    };
    switch (D) {
        case 1: {
            if (r % 2 != 0) return Rational(0); // convention
            Rational o2 = local_factor(1, f.g1_factors, r, 2);
            Rational o4 = local_factor(1, f.g1_factors, r, 4);
            put("Omega2", o2);
            put("Omega4", o4);
            Rational kappa;
            if (r % 4 == 0) {
                int sgn = parity(i64(f.lambda) * (r / 4));
                kappa = Rational(1) - (sgn ? -o2 : o2);
            } else if (f.lambda % 2 == 0) {
                i64 g1 = i64(f.g1);
                int a = parity((r - 2) / 4 + (g1 * g1 - 1) / 8);
                int b = parity(f.delta + (i64(f.lambda) + g1 - 1) / 2);
                Rational twist = Rational(a ? -1 : 1) * Rational(b ? 2 : 0);
                kappa = Rational(1) + o2 + twist * o4;
            } else {
                kappa = Rational(1);
            }
            put("kappa", kappa);
            return kappa / Rational(4);
        }
        case 3: {
            if (r % 3 == 0) return Rational(0); // convention
            Rational o2 = local_factor(3, f.g1_factors, r, 2);
            Rational o3 = local_factor(3, f.g1_factors, r, 3);
            Rational o6 = local_factor(3, f.g1_factors, r, 6);
            put("Omega2", o2);
            put("Omega3", o3);
            put("Omega6", o6);
            i64 g1 = i64(f.g1);
            i64 e3 = (g1 * g1 - 1) / 3;
            Rational s1;
            if (r % 2 == 0) {
                s1 = Rational(1) + Rational(2) * re_omega(f.mu) * re_omega(f.lambda + e3);
            } else {
                s1 = re_omega(1 + e3) +
                     re_omega(f.mu) * (re_omega(2 - f.lambda + e3) + re_omega(2 + f.lambda));
            }
            i64 rm24 = ((r % 24) + 24) % 24;
            Rational s2;
            int base_dlm = parity(f.delta + f.lambda + f.mu + (g1 - 1) / 2);
            int base_dm = parity(f.delta + f.mu + (g1 - 1) / 2);
            if (rm24 == 8)
                s2 = Rational(base_dlm ? -1 : 1);
            else if (rm24 == 16)
                s2 = Rational(base_dlm ? 1 : -1);
            else if (rm24 == 20)
                s2 = Rational(base_dm ? -1 : 1);
            else if (rm24 == 4)
                s2 = Rational(base_dm ? 1 : -1);
            else if (rm24 % 12 == 2)
                s2 = f.lambda % 2 == 0 ? Rational(1) : Rational(0);
            else if (rm24 % 12 == 10)
                s2 = f.lambda % 2 == 0 ? Rational(-1) : Rational(0);
            else if (rm24 % 6 == 5)
                s2 = (f.lambda % 2 == 0 && base_dm == 0) ? Rational(1) : Rational(0);
            else // rm24 % 6 == 1
                s2 = (f.lambda % 2 == 0 && base_dm == 0) ? Rational(-1) : Rational(0);
            put("varsigma1", s1);
            put("varsigma2", s2);
            Rational kron3g1(kronecker(3, i64(f.g1)));
            Rational bracket = Rational(1) + Rational(2, 3) * s1 * o3 +
                               s2 * kron3g1 * (o2 + Rational(2, 3) * s1 * o6);
            put("bracket", bracket);
            return bracket / Rational(6);
        }
        case 2: {
            if (((r % 4) + 4) % 4 != 2) return Rational(0); // convention
            Rational o2 = local_factor(2, f.g1_factors, r, 2);
            put("Omega2", o2);
            i64 g1 = i64(f.g1);
            int e = parity((r - 2) * (r + 10) / 32 + f.delta + f.lambda + (g1 - 1) / 2);
            Rational twist = Rational(e ? -1 : 1, 2) * Rational(kronecker(2, g1)) * o2;
            Rational bracket = Rational(1) + twist;
            put("bracket", bracket);
            return bracket / Rational(2);
        }
        default: {
            if (r % D == 0) return Rational(0); // convention
            Rational o2 = local_factor(D, f.g1_factors, r, 2);
            put("Omega2", o2);
            i64 g1 = i64(f.g1);
            Rational eps;
            if (r % 2 != 0) {
                eps = (f.lambda % 2 == 0 && parity((g1 - 1) / 2) == parity(f.delta + f.mu))
                          ? Rational(parity((g1 - 1) / 2) ? -1 : 1)
                          : Rational(0);
            } else if (r % 4 != 0) {
                eps = f.lambda % 2 == 0 ? Rational(parity((g1 - 1) / 2) ? -1 : 1) : Rational(0);
            } else {
                eps = Rational(parity(f.delta + f.mu + i64(f.lambda) * (r / 4)) ? -1 : 1);
            }
            put("epsilonD", eps);
            int sym = kronecker(2, D);
            int kr = 1;
            for (int i = 0; i <= f.lambda; ++i) kr *= sym;
            kr *= kronecker(g1, i64(D)) * kronecker(r, i64(D));
            Rational bracket = Rational(1) + eps * Rational(kr) * o2;
            put("bracket", bracket);
            return bracket / Rational(2);
        }
    }
}

ConstantReport lt_constant(int D, i64 g, i64 r, u64 cutoff, EulerMethod method) {
    ConstantReport rep;
    rep.D = D;
    rep.g = g;
    rep.r = r;
    rep.method = method;
    rep.cutoff = cutoff;
    auto [xi, theta] = xi_theta(D, r);
    (void)theta;
    rep.xi = xi;
    rep.finite_factor = finite_factor_exact(D, g, r, &rep.breakdown);
    rep.euler_value = euler_product(D, r, cutoff, method);
    rep.h = xi == 0 ? 0.0
                    : xi * std::sqrt(double(D)) / double(euler_phi(u64(D))) * rep.euler_value;
    rep.varpi = (xi == 0 || rep.finite_factor.is_zero())
                    ? 0.0
                    : rep.h * rep.finite_factor.to_double();
    return rep;
}

Rational predicted_gauss_density(i64 r, u64 alpha, int beta_k, int gamma1, int gamma2, int d) {
    if (alpha == 0 || alpha % 2 == 0)
        throw std::invalid_argument("BAD_PARAMS: alpha must be odd positive");
    beta_k = ((beta_k % 4) + 4) % 4;
    if (beta_k >= 2) return predicted_gauss_density(-r, alpha, beta_k - 2, gamma1, gamma2, d);
    d = ((d % 4) + 4) % 4;
    int eta = (alpha % 4 == 1) ? 0 : 1;
    i64 rm32 = ((r % 32) + 32) % 32;
    bool delta_g = beta_k == 0 ? rm32 == i64((4 * gamma1 + 2) % 32)
                               : rm32 == i64(((-4 * gamma2) % 32 + 32) % 32);
    if (!delta_g) return Rational(0);
    auto fac = factorize(alpha);
    Rational o2 = local_factor(1, fac, r, 2);
    Rational o4 = local_factor(1, fac, r, 4);
    QuarticValue ib = quartic_symbol_rational(unit_i(1 + beta_k), alpha);
    if (ib.zero || ib.k % 2 != 0) throw std::logic_error("(i beta | alpha)_4 should be real");
    int re_id = d == 0 ? 1 : (d == 2 ? -1 : 0); // Re(i^d)
    Rational term = Rational(2 * re_id) * Rational(parity(i64(eta) * gamma2) ? -1 : 1) *
                    Rational(ib.k == 0 ? 1 : -1) * o4;
    return Rational(1) + term + Rational(d % 2 == 0 ? 1 : -1) * o2;
}

Rational predicted_eis_density(i64 r, u64 alpha, int beta_k, int gamma_idx, int d, int k,
                               int eps) {
    if (alpha == 0 || std::gcd(alpha, u64(6)) != 1)
        throw std::invalid_argument("BAD_PARAMS: need gcd(alpha, 6) = 1");
    beta_k = ((beta_k % 6) + 6) % 6;
    if (beta_k % 2 == 1) return predicted_eis_density(-r, alpha, (beta_k + 3) % 6, gamma_idx, d, k, eps);
    int bsq = beta_k % 3; // index of beta^2 mod 2 in {1, omega, 1+omega}
    i64 rm24 = ((r % 24) + 24) % 24;
    int delta_e = 0;
    if (rm24 == 16 && k % 4 == 1 && gamma_idx == bsq) delta_e = 8;
    else if (rm24 == 4 && k % 4 == 3 && gamma_idx == bsq) delta_e = 8;
    else if (rm24 % 12 == 10 && k % 2 == 0 && gamma_idx == bsq) delta_e = 4;
    else if (rm24 % 6 == 1 && (gamma_idx == (bsq + 1) % 3 || gamma_idx == (bsq + 2) % 3))
        delta_e = 1;
    if (delta_e == 0) return Rational(0);
    auto fac = factorize(alpha);
    Rational o2 = local_factor(3, fac, r, 2);
    Rational o3 = local_factor(3, fac, r, 3);
    Rational o6 = local_factor(3, fac, r, 6);
    int quad = eps * (parity(i64(k) * ((i64(alpha) - 1) / 2)) ? -1 : 1) * kronecker(3, i64(alpha));
    SexticValue bsym = cubic_symbol_rational(unit_w6(beta_k), alpha);
    if (bsym.zero || !bsym.is_cubic()) throw std::logic_error("(beta|alpha)_3 should be cubic");
    int wexp = ((d + bsym.omega_exp()) % 3 + 3) % 3; // omega^d * (beta|alpha)_3
    Rational two_re = wexp == 0 ? Rational(2) : Rational(-1);
    Rational e = Rational(1) + Rational(quad) * o2 + two_re * (o3 + Rational(quad) * o6);
    return Rational(delta_e) * e;
}

double predicted_norm_class_density(int D, i64 r, u64 q, u64 a, u64 cutoff) {
    if (r == 0) throw std::invalid_argument("r must be nonzero");
    auto [xi, theta] = xi_theta(D, r);
    (void)xi;
    if (theta == 0) return 0.0;
    u64 qsharp = odd_part(q);
    u64 ar = u64(r < 0 ? -r : r);
    double euler = 1.0;
    for_each_prime(3, cutoff + 1, [&](u64 p) {
        if (q % p == 0 || ar % p == 0) return;
        euler *= 1.0 - double(kronecker(-i64(D), i64(p))) / double(p - 1);
    });
    double value;
    if (D == 2) {
        u64 rho = rho_count(r, q, a);
        value = double(rho) * 2.0 * std::sqrt(2.0) / double(q) * double(qsharp) /
                double(euler_phi(qsharp)) * euler;
    } else {
        u64 rho = rho_D_count(D, r, q, a);
        u64 two = (q % 2 == 0 || r % 2 != 0) ? 2 : 1; // (2, q(r+1))
        value = double(rho) * 2.0 * double(two) / double(q) * std::sqrt(double(D)) *
                double(qsharp) / double(euler_phi(u64(D) * qsharp)) * euler;
    }
    return value / 2.0; // unordered-pair convention
}

} // namespace cmlab
