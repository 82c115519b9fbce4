#include "cmlab/trace_counts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cmlab/parallel.hpp"
#include "cmlab/sieve.hpp"

namespace cmlab {

TraceHistogram count_traces(const CurveSpec& curve, u64 x, i64 r_min, i64 r_max, int threads) {
    if (r_min > r_max) throw std::invalid_argument("count_traces: empty window");
    TraceHistogram h{curve, x, r_min, r_max, {}, 0, 0, bad_primes(curve)};
    size_t w = size_t(r_max - r_min + 1);
    h.counts.assign(w, 0);
    if (x < 2) return h;

    int n = threads < 1 ? 1 : threads;
    std::vector<TraceHistogram> partial(n, h);
    parallel_chunks(2, x + 1, n, [&](int idx, u64 lo, u64 hi) {
        TraceHistogram& local = partial[idx];
        for_each_prime(lo, hi, [&](u64 p) {
            if (!is_good_prime(curve, p)) return;
            i64 r = ap_formula(curve, p);
            ++local.good_total;
            if (r < r_min || r > r_max)
                ++local.overflow;
            else
                ++local.counts[size_t(r - r_min)];
        });
    });
    for (auto& part : partial) {
        h.good_total += part.good_total;
        h.overflow += part.overflow;
        for (size_t i = 0; i < w; ++i) h.counts[i] += part.counts[i];
    }
    return h;
}

namespace {

// Number of units u with Tr(u * pi) = r, for the prime above p.
int unit_trace_matches(int D, const SplitPrime& sp, i64 r) {
    int c = 0;
    if (D == 1) {
        i64 ts[4] = {2 * sp.m, -2 * sp.n, -2 * sp.m, 2 * sp.n};
        for (i64 t : ts) c += (t == r);
    } else if (D == 3) {
        EisInt pi = sp.eis();
        for (int k = 0; k < 6; ++k) c += ((unit_w6(k) * pi).trace() == r);
    } else {
        c += (sp.trace() == r) + (-sp.trace() == r);
    }
    return c;
}

// Unordered-pair count at a ramified prime p | disc (elements of norm p).
int ramified_pairs(int D, u64 p, i64 r) {
    if (D == 1 && p == 2) return (r == 2 || r == -2) ? 1 : 0;
    if (D == 3 && p == 3) return (r == 3 || r == -3) ? 1 : 0;
    return r == 0 ? 1 : 0; // sqrt(-D) has trace 0; irrelevant for r != 0
}

} // namespace

QuadProgression trace_polynomial(int D, i64 r) {
    QuadProgression q;
    if (D % 4 == 3) {
        q.defined = true;
        q.a = D;
        q.b = -i64(D) * r;
        q.c = (i64(D) + 1) / 4 * r * r;
    } else if (r % 2 == 0) {
        q.defined = true;
        q.a = D;
        q.b = 0;
        q.c = (r / 2) * (r / 2);
    }
    return q;
}

FixedTraceCounts count_fixed_trace(int D, i64 r, u64 x) {
    if (r == 0) throw std::invalid_argument("ZERO_R: r must be nonzero");
    if (!is_cm_discriminant(D)) throw std::invalid_argument("bad D");
    FixedTraceCounts out;

    for_each_prime(2, x + 1, [&](u64 p) {
        SplitType st = split_type(D, p);
        if (st == SplitType::Inert) return;
        if (st == SplitType::Ramified) {
            out.via_elements += u64(ramified_pairs(D, p, r));
            return;
        }
        SplitPrime sp = norm_form_solve(D, p);
        out.via_elements += u64(unit_trace_matches(D, sp, r));
    });

    QuadProgression h = trace_polynomial(D, r);
    if (h.defined) {
        std::set<u64> primes;
        for (i64 n = 1;; ++n) {
            i64 v = h.a * n * n + h.b * n + h.c;
            if (v > i64(x)) {
                // the D = 3 mod 4 parabola dips until n = r/2; keep going
                if (2 * h.a * n + h.b > 0) break;
                continue;
            }
            if (v >= 2 && is_prime(u64(v))) primes.insert(u64(v));
        }
        out.via_polynomial = primes.size();
    }
    return out;
}

u64 count_norm_class(int D, u64 x, i64 r, u64 q, u64 a) {
    if (q == 0) throw std::invalid_argument("BAD_RESIDUE: q must be positive");
    if (q > 1 && std::gcd(q, a) != 1) throw std::invalid_argument("BAD_RESIDUE: gcd(q,a) != 1");
    u64 total = 0;
    for_each_prime(2, x + 1, [&](u64 p) {
        if (q > 1 && p % q != a % q) return;
        SplitType st = split_type(D, p);
        if (st == SplitType::Inert) return;
        if (st == SplitType::Ramified) {
            total += u64(ramified_pairs(D, p, r));
            return;
        }
        total += u64(unit_trace_matches(D, norm_form_solve(D, p), r));
    });
    return total;
}

namespace {

void check_gauss_class_params(u64 alpha, int beta_k, int gamma1, int gamma2, int d) {
    if (alpha == 0 || alpha % 2 == 0)
        throw std::invalid_argument("BAD_PARAMS: alpha must be odd positive");
    if (d < 0 || d > 3 || beta_k < 0 || beta_k > 3)
        throw std::invalid_argument("BAD_PARAMS: exponent out of range");
    if (gamma1 < 0 || gamma1 > 7 || gamma2 < 0 || gamma2 > 7 || (gamma1 - gamma2) % 2 != 0)
        throw std::invalid_argument("BAD_PARAMS: gamma out of range or mismatched parity");
}

} // namespace

u64 count_gauss_classes(u64 x, i64 r, u64 alpha, int beta_k, int gamma1, int gamma2, int d) {
    check_gauss_class_params(alpha, beta_k, gamma1, gamma2, d);
    u64 total = 0;
    GaussInt beta = unit_i(beta_k);
    for_each_prime(5, x + 1, [&](u64 p) {
        if (p % 4 != 1) return;
        auto [m, n] = two_squares_prime(p);
        GaussInt pi0 = primary_associate({i64(m), i64(n)});
        for (GaussInt pi : {pi0, pi0.conj()}) {
            GaussInt bp = beta * pi;
            if (2 * bp.re != r) continue;
            if (((pi.re % 16) + 16) % 16 != i64((2 * gamma1 + 1) % 16)) continue;
            if (((pi.im % 16) + 16) % 16 != i64((2 * gamma2) % 16)) continue;
            QuarticValue v = quartic_symbol_prime({i64(alpha), 0}, pi);
            if (!v.zero && v.k == d) ++total;
        }
    });
    return total;
}

u64 gauss_class_total(u64 x, i64 r, u64 alpha) {
    // One pass: each primary prime element contributes once per beta with
    // Tr(beta pi) = r, provided its symbol is a unit (p coprime to alpha).
    u64 total = 0;
    for_each_prime(5, x + 1, [&](u64 p) {
        if (p % 4 != 1) return;
        auto [m, n] = two_squares_prime(p);
        GaussInt pi0 = primary_associate({i64(m), i64(n)});
        for (GaussInt pi : {pi0, pi0.conj()}) {
            QuarticValue v = quartic_symbol_prime({i64(alpha), 0}, pi);
            if (v.zero) continue;
            i64 traces[4] = {2 * pi.re, -2 * pi.im, -2 * pi.re, 2 * pi.im};
            for (i64 t : traces) total += (t == r);
        }
    });
    return total;
}

namespace {

int gamma_index_mod_2(EisInt pi) {
    int re = int(((pi.re % 2) + 2) % 2), om = int(((pi.om % 2) + 2) % 2);
    if (re == 1 && om == 0) return 0; // 1
    if (re == 0 && om == 1) return 1; // omega
    if (re == 1 && om == 1) return 2; // 1 + omega
    return -1;                        // divisible by 2 (impossible for odd norm)
}

} // namespace

u64 count_eis_classes(u64 x, i64 r, u64 alpha, int beta_k, int gamma_idx, int d, int k, int eps) {
    if (alpha == 0 || std::gcd(alpha, u64(6)) != 1)
        throw std::invalid_argument("BAD_PARAMS: need gcd(alpha, 6) = 1");
    if (d < 0 || d > 2 || k < 0 || k > 3 || (eps != 1 && eps != -1) || gamma_idx < 0 ||
        gamma_idx > 2)
        throw std::invalid_argument("BAD_PARAMS");
    u64 total = 0;
    EisInt beta = unit_w6(beta_k);
    for_each_prime(5, x + 1, [&](u64 p) {
        if (p % 3 != 1) return;
        EisInt pi0 = primary_associate_eis(split_prime_above(p));
        if (u64(2 * k + 1) % 8 != p % 8) return;
        int epsv = kronecker(i64(alpha), i64(p));
        if (epsv != eps) return;
        for (EisInt pi : {pi0, pi0.conj()}) {
            if ((beta * pi).trace() != r) continue;
            if (gamma_index_mod_2(pi) != gamma_idx) continue;
            SexticValue v = cubic_symbol_prime({i64(alpha), 0}, pi);
            if (!v.zero && v.is_cubic() && v.omega_exp() == d) ++total;
        }
    });
    return total;
}

u64 eis_class_total(u64 x, i64 r, u64 alpha) {
    u64 total = 0;
    for_each_prime(5, x + 1, [&](u64 p) {
        if (p % 3 != 1) return;
        EisInt pi0 = primary_associate_eis(split_prime_above(p));
        if (kronecker(i64(alpha), i64(p)) == 0) return;
        for (EisInt pi : {pi0, pi0.conj()}) {
            SexticValue v = cubic_symbol_prime({i64(alpha), 0}, pi);
            if (v.zero) continue;
            for (int b = 0; b < 6; ++b) total += ((unit_w6(b) * pi).trace() == r);
        }
    });
    return total;
}

u64 count_quadratic_primes(const QuadPoly& f, u64 x) {
    if (f.a <= 0) throw std::invalid_argument("count_quadratic_primes: need a > 0");
    std::set<u64> primes;
    for (i64 m = 1;; ++m) {
        i64 v = f.a * m * m + f.b * m + f.c;
        if (v > i64(x)) {
            if (2 * f.a * m + f.b > 0) break;
            continue;
        }
        if (v >= 2 && is_prime(u64(v))) primes.insert(u64(v));
    }
    return primes.size();
}

u64 count_quadratic_primes_ap(const QuadPoly& f, u64 x, u64 q, u64 u) {
    if (f.a <= 0) throw std::invalid_argument("count_quadratic_primes: need a > 0");
    if (q == 0) throw std::invalid_argument("count_quadratic_primes: need q > 0");
    std::set<u64> primes;
    for (i64 m = 1;; ++m) {
        i64 v = f.a * m * m + f.b * m + f.c;
        if (v > i64(x)) {
            if (2 * f.a * m + f.b > 0) break;
            continue;
        }
        if (u64(((m % i64(q)) + i64(q)) % i64(q)) != u % q) continue;
        if (v >= 2 && is_prime(u64(v))) primes.insert(u64(v));
    }
    return primes.size();
}

ResidueCounts residue_counts_bruteforce(const QuadPoly& f, u64 q) {
    if (q % 2 == 0) throw std::invalid_argument("BAD_MODULUS: q must be odd");
    i64 qq = i64(q);
    i64 n0 = 0, n1 = 0, n2 = 0;
    for (i64 t = 0; t < qq; ++t) {
        i64 v = ((f.a * t % qq * t + f.b * t + f.c) % qq + qq) % qq;
        if (v == 0) ++n0;
        if (std::gcd(v, qq) == 1) ++n1;
        n2 += kronecker(v, qq);
    }
    return {n0, n1, n2, (n1 + n2) / 2, (n1 - n2) / 2};
}

namespace {

// #{y mod p^nu : y^2 = delta}, p odd prime.
i64 count_sqrt_prime_power(i64 delta, u64 p, int nu) {
    i64 pn = 1;
    for (int i = 0; i < nu; ++i) pn *= i64(p);
    delta = ((delta % pn) + pn) % pn;
    if (delta == 0) { // y = 0 mod p^ceil(nu/2)
        i64 c = 1;
        for (int i = 0; i < nu / 2; ++i) c *= i64(p);
        return c;
    }
    int e = 0;
    i64 d = delta;
    while (d % i64(p) == 0) {
        d /= i64(p);
        ++e;
    }
    if (e >= nu) { // cannot happen since delta != 0 mod p^nu
        throw std::logic_error("count_sqrt_prime_power");
    }
    if (e % 2 != 0) return 0;
    if (kronecker(d, i64(p)) != 1) return 0;
    i64 c = 2;
    for (int i = 0; i < e / 2; ++i) c *= i64(p);
    return c;
}

} // namespace

ResidueCounts residue_counts_closed(const QuadPoly& f, u64 q) {
    if (q % 2 == 0) throw std::invalid_argument("BAD_MODULUS: q must be odd");
    if (std::gcd(u64(std::abs(f.a)), q) != 1)
        throw std::invalid_argument("BAD_MODULUS: need (q, 2a) = 1");
    if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
        throw std::invalid_argument("residue_counts_closed: polynomial must be primitive");
    i64 delta = f.disc();
    // Multiplicative over prime powers; with (a, q) = 1:
    //   N1(p^nu) = p^nu - p^{nu-1} (1 + (delta|p))
    //   N2(p^nu) = N1(p^nu) for even nu, else p^{nu-1} N2(f, p)
    //   N0(p^nu) = #{y mod p^nu : y^2 = delta}   (y = 2 a t + b)
    i64 n0 = 1, n1 = 1, n2 = 1;
    for (auto& [p, e] : factorize(q).factors) {
        i64 pp = i64(p);
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= pp;
        int chi = kronecker(delta, pp);
        n0 *= count_sqrt_prime_power(delta, p, e);
        i64 n1p = pe - pe / pp * (1 + chi);
        n1 *= n1p;
        if (e % 2 == 0) {
            n2 *= n1p;
        } else {
            i64 base = (delta % pp == 0) ? (pp - 1) * kronecker(f.a, pp)
                                         : -kronecker(f.a, pp);
            n2 *= pe / pp * base;
        }
    }
    return {n0, n1, n2, (n1 + n2) / 2, (n1 - n2) / 2};
}

u64 rho_count(i64 r, u64 q, u64 a) {
    if (r % 2 != 0) throw std::invalid_argument("UNDEFINED: rho needs 2 | r");
    i64 qq = i64(q), c = (r / 2) * (r / 2) % qq;
    u64 cnt = 0;
    for (i64 t = 0; t < qq; ++t)
        if (u64(((2 * t * t + c) % qq + qq) % qq) == a % q) ++cnt;
    return cnt;
}

u64 rho_D_count(int D, i64 r, u64 q, u64 a) {
    if (D % 4 != 3) throw std::invalid_argument("UNDEFINED: rho_D needs D = 3 mod 4");
    i64 qq = i64(q);
    i64 dd = i64(D);
    u64 cnt = 0;
    for (i64 t = 0; t < qq; ++t) {
        i64 v = (dd * t % qq * t - dd * r % qq * t + (dd + 1) / 4 * r % qq * r) % qq;
        if (u64((v % qq + qq) % qq) == a % q) ++cnt;
    }
    return cnt;
}

u64 rho_D_mod8_closed(int D, i64 r, int k) {
    if (D % 4 != 3) throw std::invalid_argument("UNDEFINED: rho_D needs D = 3 mod 4");
    auto mod = [](i64 v, i64 m) { return ((v % m) + m) % m; };
    if (r % 2 != 0) return D % 8 == 3 ? 2 : 0;
    if (r % 4 != 0) { // 2 || r
        i64 a1 = mod((r * r - 4) / 8, 4), a2 = mod((r * r + 12) / 8, 4);
        return (k == a1 || k == a2) ? 2 : 0;
    }
    i64 a3 = mod(r * r / 8 + (D - 1) / 2, 4);
    return k == a3 ? 4 : 0;
}

} // namespace cmlab
