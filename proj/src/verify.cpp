#include "cmlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "cmlab/constants.hpp"
#include "cmlab/parallel.hpp"
#include "cmlab/sieve.hpp"

namespace cmlab {

namespace {

using Results = std::vector<CheckResult>;

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void add(Results& out, const std::string& name, bool pass, const std::string& detail = "",
         bool info = false) {
    out.push_back({name, pass, info, detail});
}

std::vector<GaussInt> primary_gauss_primes(u64 bound) {
    std::vector<GaussInt> primes;
    for_each_prime(3, bound, [&](u64 p) {
        if (p % 4 == 1) {
            auto [m, n] = two_squares_prime(p);
            primes.push_back(primary_associate({i64(m), i64(n)}));
        } else {
            primes.push_back(primary_associate({i64(p), 0}));
        }
    });
    return primes;
}

std::vector<EisInt> primary_eis_primes(u64 bound) {
    std::vector<EisInt> primes;
    for_each_prime(5, bound, [&](u64 p) {
        if (p % 3 == 1)
            primes.push_back(primary_associate_eis(split_prime_above(p)));
        else
            primes.push_back(primary_associate_eis({i64(p), 0}));
    });
    return primes;
}

// ---------------------------------------------------------------- criterion 1

Results criterion_symbols(int) {
    Results out;
    std::mt19937_64 rng(0x5eed0001);
    auto gprimes = primary_gauss_primes(2000);
    auto eprimes = primary_eis_primes(2000);

    u64 quartic_bad = 0, cubic_bad = 0;
    for (int it = 0; it < 10000; ++it) {
        GaussInt a{i64(rng() % 201) - 100, i64(rng() % 201) - 100};
        GaussInt pi = gprimes[rng() % gprimes.size()];
        if (a.is_zero()) continue;
        if (!(quartic_symbol_jacobi(a, pi) == quartic_symbol_prime(a, pi))) ++quartic_bad;
    }
    add(out, "quartic reciprocity chain vs exponentiation (1e4 pairs)", quartic_bad == 0,
        std::to_string(quartic_bad) + " mismatches");
    for (int it = 0; it < 10000; ++it) {
        EisInt a{i64(rng() % 201) - 100, i64(rng() % 201) - 100};
        EisInt pi = eprimes[rng() % eprimes.size()];
        if (a.is_zero()) continue;
        if (!(cubic_symbol_jacobi(a, pi) == cubic_symbol_prime(a, pi))) ++cubic_bad;
    }
    add(out, "cubic reciprocity chain vs exponentiation (1e4 pairs)", cubic_bad == 0,
        std::to_string(cubic_bad) + " mismatches");

    // Sun's identity (xi|p)_4^2 = (N(xi)|p) over odd primes p < 500.
    std::vector<u64> odd_primes = primes_in_range(3, 500);
    u64 sun_bad = 0;
    for (int it = 0; it < 1000; ++it) {
        GaussInt xi{i64(rng() % 101) - 50, i64(rng() % 101) - 50};
        if (xi.is_zero()) continue;
        u64 p = odd_primes[rng() % odd_primes.size()];
        QuarticValue v = quartic_symbol_rational(xi, p);
        int sq = v.zero ? 0 : ((2 * v.k) % 4 == 0 ? 1 : -1); // value of v^2
        int rhs = kronecker(i64(xi.norm() % p), i64(p));
        if (sq != rhs) ++sun_bad;
    }
    add(out, "Sun identity (xi|p)_4^2 = (N(xi)|p) (1e3 cases)", sun_bad == 0,
        std::to_string(sun_bad) + " mismatches");

    // (a|q)_4 = 1 and (a|q)_3 = 1 for rational coprime pairs.
    u64 quartic_one_bad = 0, cubic_one_bad = 0;
    for (int it = 0; it < 1000; ++it) {
        u64 q = 2 * (rng() % 500) + 3;
        i64 a = i64(rng() % 2000) + 1;
        if (std::gcd(u64(a), q) != 1) continue;
        QuarticValue v = quartic_symbol_rational({a, 0}, q);
        if (v.zero || v.k != 0) ++quartic_one_bad;
        u64 q3 = q;
        while (q3 % 3 == 0) q3 += 2;
        if (std::gcd(u64(a), q3) != 1) continue;
        SexticValue w = cubic_symbol_rational({a, 0}, q3);
        if (w.zero || w.k != 0) ++cubic_one_bad;
    }
    add(out, "(a|q)_4 = 1 for rational coprime pairs (1e3)", quartic_one_bad == 0,
        std::to_string(quartic_one_bad) + " failures");
    add(out, "(a|q)_3 = 1 for rational coprime pairs (1e3)", cubic_one_bad == 0,
        std::to_string(cubic_one_bad) + " failures");

    // Multiplicativity and conjugation properties.
    u64 mult_bad = 0, conj_bad = 0, recip_bad = 0;
    for (int it = 0; it < 2000; ++it) {
        GaussInt a1{i64(rng() % 41) - 20, i64(rng() % 41) - 20};
        GaussInt a2{i64(rng() % 41) - 20, i64(rng() % 41) - 20};
        GaussInt xi = gprimes[rng() % gprimes.size()] * gprimes[rng() % gprimes.size()];
        if (a1.is_zero() || a2.is_zero()) continue;
        if (!(quartic_symbol_jacobi(a1 * a2, xi) ==
              quartic_symbol_jacobi(a1, xi) * quartic_symbol_jacobi(a2, xi)))
            ++mult_bad;
        if (!(quartic_symbol_jacobi(a1, xi).conj() ==
              quartic_symbol_jacobi(a1.conj(), xi.conj())))
            ++conj_bad;
    }
    for (int it = 0; it < 1000; ++it) {
        EisInt e1 = eprimes[rng() % eprimes.size()], e2 = eprimes[rng() % eprimes.size()];
        if (e1.norm() == e2.norm()) continue;
        // cubic reciprocity for primary pairs
        if (!(cubic_symbol_jacobi(e1, e2) == cubic_symbol_jacobi(e2, e1))) ++recip_bad;
    }
    add(out, "quartic multiplicativity + conjugation (2e3)", mult_bad == 0 && conj_bad == 0,
        std::to_string(mult_bad) + "+" + std::to_string(conj_bad) + " failures");
    add(out, "cubic reciprocity symmetry on primary pairs (1e3)", recip_bad == 0,
        std::to_string(recip_bad) + " failures");

    // Sextic cube law and conjugate relation.
    u64 sextic_bad = 0;
    for (int it = 0; it < 1000; ++it) {
        EisInt pi = eprimes[rng() % eprimes.size()];
        if (pi.norm() % 2 == 0 || pi.norm() % 3 == 0) continue;
        i64 a = i64(rng() % 1000) + 2;
        SexticValue v = sextic_symbol_rational(a, pi);
        int rhs = kronecker(a, i64(pi.norm()));
        if (v.zero) {
            if (rhs != 0) ++sextic_bad;
            continue;
        }
        SexticValue cube = v * v * v;
        if (!(cube == SexticValue::unit(rhs == 1 ? 0 : 3))) ++sextic_bad;
        // conj(v) = (a|N(pi)) * (a|pi)_3
        SexticValue cubic = cubic_symbol_prime({a, 0}, pi);
        SexticValue expect = rhs == 1 ? cubic : cubic * SexticValue::unit(3);
        if (!(v.conj() == expect)) ++sextic_bad;
    }
    add(out, "sextic cube law + conjugate relation (1e3)", sextic_bad == 0,
        std::to_string(sextic_bad) + " failures");
    return out;
}

// ---------------------------------------------------------------- criterion 2

Results criterion_incomplete_sums(int) {
    Results out;
    u64 q_bad = 0, q_cases = 0;
    for (u64 q = 1; q <= 99; q += 2) {
        QuarticTraceSumTable table(q);
        for (i64 t = 0; t < i64(q); ++t) {
            for (int b = 0; b < 4; ++b) {
                ++q_cases;
                GaussInt bf = table.value(t, b);
                Rational cl = quartic_trace_sum_closed(q, t, b);
                if (bf.im != 0 || !(Rational(bf.re) == cl)) ++q_bad;
            }
        }
    }
    add(out, "Q closed = brute force, odd q <= 99, all t, all beta", q_bad == 0,
        std::to_string(q_cases) + " cases, " + std::to_string(q_bad) + " mismatches");

    u64 c_bad = 0, c_cases = 0;
    for (u64 q = 1; q <= 91; ++q) {
        if (std::gcd(q, u64(6)) != 1) continue;
        CubicTraceSumTable table(q);
        for (i64 t = 0; t < i64(q); ++t) {
            for (int b = 0; b < 6; ++b) {
                for (int kappa = 0; kappa < 2; ++kappa) {
                    ++c_cases;
                    if (!(table.value(t, b, kappa) == cubic_trace_sum_closed(q, t, b, kappa)))
                        ++c_bad;
                }
            }
        }
    }
    add(out, "C closed = brute force, (q,6)=1, q <= 91, all t, beta, kappa", c_bad == 0,
        std::to_string(c_cases) + " cases, " + std::to_string(c_bad) + " mismatches");
    return out;
}

// ---------------------------------------------------------------- criterion 3

Results criterion_gauss_sums(int) {
    Results out;
    u64 g_bad = 0, c_bad = 0, n = 0;
    for_each_prime(3, 300, [&](u64 p) {
        ++n;
        GaussInt g = gauss_sum_quartic(p);
        GaussInt expect = quartic_symbol_i_rational(p) == 1 ? GaussInt{i64(p), 0}
                                                            : GaussInt{-i64(p), 0};
        if (!(g == expect)) ++g_bad;
    });
    add(out, "quartic Gauss sum G(p) = p (i|p)_4, odd p < 300", g_bad == 0,
        std::to_string(n) + " primes, " + std::to_string(g_bad) + " mismatches");
    n = 0;
    for_each_prime(5, 300, [&](u64 p) {
        for (int kappa = 0; kappa < 2; ++kappa) {
            ++n;
            EisInt c = gauss_sum_cubic(p, kappa);
            i64 expect = i64(p);
            if (kappa && kronecker(3, i64(p)) == -1) expect = -expect;
            if (!(c == EisInt{expect, 0})) ++c_bad;
        }
    });
    add(out, "cubic Gauss sum C(p,k) = p (3|p)^k, 5 <= p < 300", c_bad == 0,
        std::to_string(n) + " cases, " + std::to_string(c_bad) + " mismatches");
    return out;
}

// ---------------------------------------------------------------- criterion 4

Results criterion_frobenius(int threads) {
    Results out;
    const std::vector<i64> gs = {-7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7};
    std::vector<CurveSpec> curves;
    for (int D : kDiscriminants)
        for (i64 g : gs) curves.emplace_back(D, g);

    std::atomic<u64> agree_bad{0}, inert_bad{0}, hasse_bad{0}, tested{0};
    std::vector<u64> primes = primes_in_range(3, 10000);
    parallel_chunks(0, primes.size(), threads, [&](int, u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            u64 p = primes[i];
            auto chi = legendre_table(p);
            for (const auto& c : curves) {
                if (!is_good_prime(c, p)) continue;
                i64 b = ap_bruteforce(c, p, chi.data());
                i64 f = ap_formula(c, p);
                ++tested;
                if (f != b) ++agree_bad;
                if (split_type(c.D, p) == SplitType::Inert && (f != 0 || b != 0)) ++inert_bad;
                if (double(f) * f >= 4.0 * double(p)) ++hasse_bad;
            }
        }
    });
    add(out, "ap formula = brute force (9 D, 12 g, good p < 1e4)", agree_bad == 0,
        std::to_string(tested.load()) + " pairs, " + std::to_string(agree_bad.load()) +
            " mismatches");
    add(out, "Deuring zero on inert good primes", inert_bad == 0,
        std::to_string(inert_bad.load()) + " violations");
    add(out, "Hasse bound |ap| < 2 sqrt(p)", hasse_bad == 0,
        std::to_string(hasse_bad.load()) + " violations");

    bool spots = ap_formula(CurveSpec(1, -4), 5) == -2 && ap_formula(CurveSpec(3, 2), 7) == -1 &&
                 ap_formula(CurveSpec(11, 1), 5) == -3 && ap_formula(CurveSpec(2, 1), 3) == 2;
    add(out, "spot traces a5(1,-4)=-2 a7(3,2)=-1 a5(11,1)=-3 a3(2,1)=2", spots);
    return out;
}

// ---------------------------------------------------------------- criterion 5

Results criterion_deuring(int threads) {
    Results out;
    const u64 x = 10000000;
    TraceHistogram h = count_traces(CurveSpec(1, -4), x, 0, 0, threads);
    u64 pi_x = count_primes(2, x + 1);
    double ratio = double(h.count(0)) / double(pi_x);
    bool pass = std::abs(ratio - 0.5) < 0.005;
    add(out, "Deuring density pi_{E,0}(1e7)/pi(1e7) = 1/2 (tol 5e-3)", pass,
        "ratio " + fmt(ratio) + ", zero-trace " + std::to_string(h.count(0)) + " of " +
            std::to_string(pi_x));
    return out;
}

// ---------------------------------------------------------------- criterion 6

Results criterion_classifiers(int threads) {
    Results out;
    std::atomic<u64> pos_bad{0}, sym_bad{0}, anom_link_bad{0}, checked{0};
    parallel_chunks(0, 2000, threads, [&](int, u64 lo, u64 hi) {
        for (u64 gi = lo; gi < hi; ++gi) {
            i64 g = i64(gi) - 1000 + (i64(gi) >= 1000 ? 1 : 0); // skip 0
            for (int D : kDiscriminants) {
                for (i64 r = -60; r <= 60; ++r) {
                    if (r == 0) continue;
                    ++checked;
                    auto [xi, th] = xi_theta(D, r);
                    (void)th;
                    bool exact = xi == 0 || finite_factor_exact(D, g, r).is_zero();
                    if (exact != classify_positivity(D, g, r).flag) ++pos_bad;
                    bool sym_exact =
                        xi == 0 || finite_factor_exact(D, g, r) == finite_factor_exact(D, g, -r);
                    if (sym_exact != classify_symmetry(D, g, r).flag) ++sym_bad;
                }
                if (classify_anomalous(D, g).flag != classify_positivity(D, g, 1).flag)
                    ++anom_link_bad;
            }
        }
    });
    add(out, "positivity bullets = exact vanishing (g in [-1000,1000], r in [-60,60])",
        pos_bad == 0, std::to_string(checked.load()) + " triples, " +
                          std::to_string(pos_bad.load()) + " mismatches");
    add(out, "symmetry bullets = exact +-r factor equality", sym_bad == 0,
        std::to_string(sym_bad.load()) + " mismatches");
    add(out, "anomalous = positivity at r = 1", anom_link_bad == 0,
        std::to_string(anom_link_bad.load()) + " mismatches");

    std::atomic<u64> forms_bad{0};
    parallel_chunks(1, 1000001, threads, [&](int, u64 lo, u64 hi) {
        for (u64 a = lo; a < hi; ++a) {
            for (i64 g : {i64(a), -i64(a)}) {
                for (int D : {3, 11}) {
                    if (classify_anomalous(D, g).flag != classify_anomalous_setform(D, g).flag)
                        ++forms_bad;
                }
            }
        }
    });
    add(out, "anomalous set-form = condition-form (D in {3,11}, |g| <= 1e6)", forms_bad == 0,
        std::to_string(forms_bad.load()) + " mismatches");
    return out;
}

// ---------------------------------------------------------------- criterion 7

// Per-D base Euler products over odd primes <= cutoff (r-independent part).
struct EulerBases {
    double h_base = 1.0; // prod (1 - chi/(p-1))
    double b_base = 1.0; // prod B_p
};

EulerBases euler_bases(int D, u64 cutoff) {
    EulerBases b;
    for_each_prime(3, cutoff + 1, [&](u64 p) {
        double pd = double(p);
        int chi = kronecker(-i64(D), i64(p));
        b.h_base *= 1.0 - double(chi) / (pd - 1.0);
        if (u64(D) % p == 0)
            b.b_base /= 1.0 - 1.0 / pd;
        else if (chi == 1)
            b.b_base *= (1.0 - 2.0 / pd) / ((1.0 - 1.0 / pd) * (1.0 - 1.0 / pd));
        else
            b.b_base /= 1.0 - 1.0 / (pd * pd);
    });
    return b;
}

Results criterion_constants(int) {
    Results out;
    const u64 cutoff = 10000000;
    const double kPi = 3.14159265358979323846;
    u64 ident_bad = 0, accel_bad = 0, cases = 0;
    double worst = 0, worst_accel = 0;
    for (int D : kDiscriminants) {
        EulerBases base = euler_bases(D, cutoff);
        for (i64 r = -12; r <= 12; ++r) {
            if (r == 0) continue;
            auto [xi, th] = xi_theta(D, r);
            (void)th;
            if (xi == 0) continue;
            ++cases;
            u64 ar = u64(r < 0 ? -r : r);
            double euler = base.h_base;
            double bprod = base.b_base;
            double aprod = 1.0;
            for (auto& [p, e] : factorize(ar).factors) {
                (void)e;
                if (p == 2) continue;
                double pd = double(p);
                int chi = kronecker(-i64(D), i64(p));
                euler /= 1.0 - double(chi) / (pd - 1.0);
                if (u64(D) % p == 0) {
                    bprod *= 1.0 - 1.0 / pd;
                    aprod = 0.0;
                } else if (chi == 1) {
                    bprod /= (1.0 - 2.0 / pd) / ((1.0 - 1.0 / pd) * (1.0 - 1.0 / pd));
                    aprod /= 1.0 - 1.0 / pd;
                } else {
                    bprod *= 1.0 - 1.0 / (pd * pd);
                    aprod /= 1.0 + 1.0 / pd;
                }
            }
            double h = xi * std::sqrt(double(D)) / double(euler_phi(u64(D))) * euler;
            double wd = D == 1 ? 4 : (D == 3 ? 6 : 2);
            double c = wd / (2.0 * kPi) * f4_table(D, r).to_double() * aprod * bprod;
            double rel = std::abs(c / h - 1.0);
            worst = std::max(worst, rel);
            if (rel >= 5e-3) ++ident_bad;
            double h_acc = h_density(D, r, 100000, EulerMethod::Accelerated);
            double rel2 = std::abs(h_acc / h - 1.0);
            worst_accel = std::max(worst_accel, rel2);
            if (rel2 >= 5e-3) ++accel_bad;
        }
    }
    add(out, "c_{D,r} = h_{D,r} within 5e-3 at cutoff 1e7 (|r| <= 12)", ident_bad == 0,
        std::to_string(cases) + " cases, worst " + fmt(worst));
    add(out, "accelerated h (1e5) vs direct h (1e7) within 5e-3", accel_bad == 0,
        "worst " + fmt(worst_accel));
    return out;
}

// ---------------------------------------------------------------- criterion 8

Results criterion_residue_counts(int) {
    Results out;
    u64 bad = 0, cases = 0;
    for (u64 q = 1; q <= 99; q += 2) {
        for (i64 a = -6; a <= 6; ++a) {
            if (a == 0 || std::gcd(u64(a < 0 ? -a : a), q) != 1) continue;
            for (i64 b = -6; b <= 6; ++b) {
                for (i64 c = -6; c <= 6; ++c) {
                    if (std::gcd(std::gcd(a, b < 0 ? -b : b), c < 0 ? -c : c) != 1) continue;
                    ++cases;
                    QuadPoly f{a, b, c};
                    if (!(residue_counts_bruteforce(f, q) == residue_counts_closed(f, q))) ++bad;
                }
            }
        }
    }
    add(out, "N0,N1,N2,N+- closed = brute (odd q <= 99, |a|,|b|,|c| <= 6)", bad == 0,
        std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches");

    u64 rho_bad = 0, rho_cases = 0;
    for (int D : {7, 11, 19, 43, 67, 163}) {
        for (i64 r = -24; r <= 24; ++r) {
            if (r == 0) continue;
            for (int k = 0; k < 4; ++k) {
                ++rho_cases;
                if (rho_D_count(D, r, 8, u64(2 * k + 1)) != rho_D_mod8_closed(D, r, k)) ++rho_bad;
            }
        }
    }
    add(out, "rho_D(r,8,2k+1) closed = brute (D >= 7, |r| <= 24)", rho_bad == 0,
        std::to_string(rho_cases) + " cases, " + std::to_string(rho_bad) + " mismatches");
    return out;
}

// ---------------------------------------------------------------- criterion 9

Results criterion_structural(int threads) {
    Results out;
    // two-route fixed-trace counts at 1e6
    u64 route_bad = 0;
    i64 worst_gap = 0;
    for (int D : {2, 7, 11, 19}) {
        for (i64 r : {1, 2, 3, 4}) {
            FixedTraceCounts f = count_fixed_trace(D, r, 1000000);
            i64 gap = i64(f.via_elements) - i64(f.via_polynomial);
            worst_gap = std::max(worst_gap, gap < 0 ? -gap : gap);
            if (gap < -10 || gap > 10) ++route_bad;
        }
    }
    add(out, "fixed-trace element route = polynomial route +-10 at 1e6", route_bad == 0,
        "worst gap " + std::to_string(worst_gap));

    // class decompositions at 1e5
    u64 dec_bad = 0;
    for (i64 r : {2, 4}) {
        for (u64 alpha : {1ull, 5ull}) {
            u64 total = gauss_class_total(100000, r, alpha);
            u64 pi2 = 2 * count_fixed_trace(1, r, 100000).via_elements;
            i64 gap = i64(total) - i64(pi2);
            if (gap < -4 || gap > 4) ++dec_bad;
        }
    }
    for (i64 r : {1, 2}) {
        for (u64 alpha : {5ull, 7ull}) {
            u64 total = eis_class_total(100000, r, alpha);
            u64 pi2 = 2 * count_fixed_trace(3, r, 100000).via_elements;
            i64 gap = i64(total) - i64(pi2);
            if (gap < -6 || gap > 6) ++dec_bad;
        }
    }
    add(out, "sum G_d = 2 pi_{1,r} +-4 and sum E = 2 pi_{3,r} +-6 at 1e5", dec_bad == 0);

    // sieve upper bound at 1e7
    const u64 x = 10000000;
    const double sx = std::sqrt(double(x)) / std::log(double(x));
    struct {
        int D;
        i64 g;
    } grid[] = {{1, 1}, {1, -4}, {2, 1}, {3, 2}, {3, -432}, {7, 1},
                {11, 1}, {19, 1}, {43, 2}, {67, 1}, {163, 1}, {2, -6}};
    u64 sieve_bad = 0, sieve_cases = 0;
    for (auto [D, g] : grid) {
        TraceHistogram h = count_traces(CurveSpec(D, g), x, -12, 12, threads);
        EulerBases base = euler_bases(D, 1000000);
        for (i64 r = 1; r <= 12; ++r) {
            auto [xi, th] = xi_theta(D, r);
            (void)th;
            double euler = base.h_base;
            for (auto& [p, e] : factorize(u64(r)).factors) {
                (void)e;
                if (p == 2) continue;
                euler /= 1.0 - double(kronecker(-i64(D), i64(p))) / (double(p) - 1.0);
            }
            double hd = xi * std::sqrt(double(D)) / double(euler_phi(u64(D))) * euler;
            double bound = 3.51 * hd * sx + 50.0;
            ++sieve_cases;
            if (double(h.count(r) + h.count(-r)) > bound) ++sieve_bad;
        }
    }
    add(out, "pi_{E,r} + pi_{E,-r} <= 3.51 h_{D,r} sqrt(x)/log x + 50 at 1e7", sieve_bad == 0,
        std::to_string(sieve_cases) + " cases, " + std::to_string(sieve_bad) + " violations");
    return out;
}

// ---------------------------------------------------------------- criterion 10

Results criterion_smoke(int threads) {
    Results out;
    const u64 x8 = 100000000, x7 = 10000000;
    const double sx8 = std::sqrt(double(x8)) / std::log(double(x8));

    {
        TraceHistogram h = count_traces(CurveSpec(3, -432), x8, -8, 8, threads);
        for (i64 r : {2, -1, 5}) {
            ConstantReport rep = lt_constant(3, -432, r, 1000000);
            double predicted = rep.varpi * sx8;
            double ratio = double(h.count(r)) / predicted;
            add(out, "smoke y^2=x^3-432 r=" + std::to_string(r) + " ratio in [0.6,1.5]",
                ratio > 0.6 && ratio < 1.5,
                "count " + std::to_string(h.count(r)) + ", predicted " + fmt(predicted) +
                    ", ratio " + fmt(ratio),
                true);
        }
    }
    {
        TraceHistogram h = count_traces(CurveSpec(1, -4), x8, -4, 4, threads);
        for (i64 r : {2, -2}) {
            ConstantReport rep = lt_constant(1, -4, r, 1000000);
            double predicted = rep.varpi * sx8;
            double ratio = double(h.count(r)) / predicted;
            add(out, "smoke y^2=x^3+4x r=" + std::to_string(r) + " ratio in [0.6,1.5]",
                ratio > 0.6 && ratio < 1.5,
                "count " + std::to_string(h.count(r)) + ", predicted " + fmt(predicted) +
                    ", ratio " + fmt(ratio),
                true);
        }
    }
    {
        // congruence-obstructed classes stay O(1)
        TraceHistogram h1 = count_traces(CurveSpec(1, -4), x7, -9, 9, threads);
        u64 odd_total = 0;
        for (i64 r = -9; r <= 9; r += 2) odd_total += h1.count(r);
        add(out, "smoke odd traces of y^2=x^3+4x at 1e7 (varpi=0 classes)", odd_total <= 3,
            std::to_string(odd_total) + " primes", true);
        TraceHistogram h3 = count_traces(CurveSpec(3, -432), x7, -9, 9, threads);
        u64 mod3_total = h3.count(-9) + h3.count(-6) + h3.count(-3) + h3.count(3) +
                         h3.count(6) + h3.count(9);
        add(out, "smoke 3|r traces of y^2=x^3-432 at 1e7 (varpi=0 classes)", mod3_total <= 3,
            std::to_string(mod3_total) + " primes", true);
    }
    {
        // Adjudicate the r = 8 vs 16 mod 24 discrepancy for y^2 = x^3 + 2:
        // the theorems give bracket 0 at 8 mod 24 and 2 at 16 mod 24; the
        // background corollary says eta = 2 at 8 mod 12.
        TraceHistogram h = count_traces(CurveSpec(3, 2), x8, -100, 100, threads);
        u64 at8 = 0, at16 = 0;
        for (i64 r = -100; r <= 100; ++r) {
            if (((r % 24) + 24) % 24 == 8) at8 += h.count(r);
            if (((r % 24) + 24) % 24 == 16) at16 += h.count(r);
        }
        std::string detail = "pi at r=8 mod 24: " + std::to_string(at8) +
                             ", r=16 mod 24: " + std::to_string(at16) +
                             " (theorems predict 0 and >0; corollary would swap them)";
        add(out, "smoke adjudication y^2=x^3+2, r=8 vs 16 mod 24 at 1e8",
            at8 <= 6 && at16 > 100, detail, true);
    }
    return out;
}

} // namespace

Results acceptance_criterion(int n, int threads) {
    switch (n) {
        case 1: return criterion_symbols(threads);
        case 2: return criterion_incomplete_sums(threads);
        case 3: return criterion_gauss_sums(threads);
        case 4: return criterion_frobenius(threads);
        case 5: return criterion_deuring(threads);
        case 6: return criterion_classifiers(threads);
        case 7: return criterion_constants(threads);
        case 8: return criterion_residue_counts(threads);
        case 9: return criterion_structural(threads);
        case 10: return criterion_smoke(threads);
        default: throw std::invalid_argument("acceptance criterion must be 1..10");
    }
}

Results verify_suite(const std::string& suite, int threads) {
    Results out;
    auto extend = [&](int n) {
        for (auto& r : acceptance_criterion(n, threads)) out.push_back(std::move(r));
    };
    if (suite == "symbols") {
        extend(1);
    } else if (suite == "gauss-sums") {
        extend(2);
        extend(3);
    } else if (suite == "frobenius") {
        extend(4);
        extend(5);
    } else if (suite == "residue-counts") {
        extend(8);
    } else if (suite == "classifiers") {
        extend(6);
    } else if (suite == "all") {
        for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9}) extend(n);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return out;
}

} // namespace cmlab
