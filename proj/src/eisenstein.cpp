#include "cmlab/eisenstein.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace cmlab {

EisInt unit_w6(int k) {
    switch (((k % 6) + 6) % 6) {
        case 0: return {1, 0};
        case 1: return {1, 1};   // -omega^2
        case 2: return {0, 1};   // omega
        case 3: return {-1, 0};
        case 4: return {-1, -1}; // omega^2
        default: return {0, -1}; // -omega
    }
}

std::pair<EisInt, EisInt> divmod(EisInt a, EisInt b) {
    if (b.is_zero()) throw std::domain_error("eis divmod: zero divisor");
    i128 n = i128(b.re) * b.re - i128(b.re) * b.om + i128(b.om) * b.om;
    // a * conj(b) in the 1, omega basis
    EisInt c = b.conj();
    i128 xr = i128(a.re) * c.re - i128(a.om) * c.om;
    i128 xo = i128(a.re) * c.om + i128(a.om) * c.re - i128(a.om) * c.om;
    auto fdiv = [](i128 x, i128 m) {
        i128 q = x / m;
        if (x % m != 0 && ((x < 0) != (m < 0))) --q;
        return q;
    };
    i64 qr0 = i64(fdiv(xr, n)), qo0 = i64(fdiv(xo, n));
    EisInt best_q{0, 0}, best_r{0, 0};
    i128 best_norm = -1;
    for (i64 dr = 0; dr <= 1; ++dr) {
        for (i64 po = 0; po <= 1; ++po) {
            EisInt q{qr0 + dr, qo0 + po};
            EisInt r = a - b * q;
            i128 rn = i128(r.re) * r.re - i128(r.re) * r.om + i128(r.om) * r.om;
            bool better = best_norm < 0 || rn < best_norm ||
                          (rn == best_norm &&
                           (r.re < best_r.re || (r.re == best_r.re && r.om < best_r.om)));
            if (better) {
                best_norm = rn;
                best_q = q;
                best_r = r;
            }
        }
    }
    return {best_q, best_r};
}

EisInt eis_gcd(EisInt a, EisInt b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a;
}

EisInt primary_associate_eis(EisInt z) {
    if (z.is_zero() || z.norm() % 3 == 0)
        throw std::invalid_argument("NOT_COPRIME_TO_3: (1-omega) divides z");
    for (int k = 0; k < 6; ++k) {
        EisInt w = unit_w6(k) * z;
        if (((w.re % 3) + 3) % 3 == 2 && w.om % 3 == 0) return w;
    }
    throw std::logic_error("primary_associate_eis: no primary associate"); // unreachable
}

bool is_eisenstein_prime(EisInt z) {
    u64 n = z.norm();
    if (n < 2) return false;
    if (is_prime(n)) return true;
    for (int s = 0; s < 2; ++s) {
        EisInt w = s ? EisInt{-z.re, -z.om} : z;
        u64 p = 0;
        if (w.om == 0 && w.re > 0) p = u64(w.re);
        if (w.re == 0 && w.om > 0) p = u64(w.om);
        if (w.re == w.om && w.re > 0) p = u64(w.re);
        if (p != 0 && p % 3 == 2 && is_prime(p)) return true;
    }
    return false;
}

namespace {

EisInt reduce_mod(EisInt z, u64 m) {
    i64 mm = i64(m);
    i64 r = z.re % mm, o = z.om % mm;
    if (r < 0) r += mm;
    if (o < 0) o += mm;
    return {r, o};
}

EisInt mulmod_eis(EisInt a, EisInt b, u64 m) {
    i128 re = i128(a.re) * b.re - i128(a.om) * b.om;
    i128 om = i128(a.re) * b.om + i128(a.om) * b.re - i128(a.om) * b.om;
    i64 mm = i64(m);
    i64 r = i64(re % mm), o = i64(om % mm);
    if (r < 0) r += mm;
    if (o < 0) o += mm;
    return {r, o};
}

EisInt powmod_eis(EisInt base, u64 exp, u64 m) {
    EisInt r{1, 0};
    base = reduce_mod(base, m);
    while (exp) {
        if (exp & 1) r = mulmod_eis(r, base, m);
        base = mulmod_eis(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Image of omega in Z[omega]/(pi) = F_p for pi = a + b omega of prime norm p.
u64 image_of_omega(EisInt pi, u64 p) {
    i64 pp = i64(p);
    u64 b = u64(((pi.om % pp) + pp) % pp);
    u64 a = u64(((pi.re % pp) + pp) % pp);
    u64 binv = powmod(b, p - 2, p);
    return mulmod((p - a) % p, binv, p);
}

SexticValue match_unit_mod_p(u64 v, u64 w, u64 p) {
    if (v == 0) return SexticValue::zero_value();
    u64 imgs[6];
    imgs[0] = 1;
    imgs[2] = w;
    imgs[4] = mulmod(w, w, p);
    imgs[3] = p - 1;
    imgs[5] = p - w;
    imgs[1] = (p - imgs[4]) % p;
    for (int k = 0; k < 6; ++k)
        if (v == imgs[k]) return SexticValue::unit(k);
    throw std::logic_error("eisenstein symbol: residue is not a 6th root of unity");
}

SexticValue match_unit_eis(EisInt v, u64 m) {
    if (v.is_zero()) return SexticValue::zero_value();
    for (int k = 0; k < 6; ++k)
        if (v == reduce_mod(unit_w6(k), m)) return SexticValue::unit(k);
    throw std::logic_error("eisenstein symbol: residue is not a 6th root of unity");
}

SexticValue power_symbol_deg1(EisInt alpha, EisInt pi, u64 p, u64 divisor) {
    u64 w = image_of_omega(pi, p);
    i64 pp = i64(p);
    u64 re = u64(((alpha.re % pp) + pp) % pp);
    u64 om = u64(((alpha.om % pp) + pp) % pp);
    u64 a = (re + mulmod(om, w, p)) % p;
    if (a == 0) return SexticValue::zero_value();
    u64 v = powmod(a, (p - 1) / divisor, p);
    return match_unit_mod_p(v, w, p);
}

SexticValue power_symbol_inert(EisInt alpha, u64 q, u64 divisor) {
    EisInt a = reduce_mod(alpha, q);
    u64 g = std::gcd(std::gcd(u64(a.re), u64(a.om)), q);
    if (g == q) return SexticValue::zero_value();
    EisInt v = powmod_eis(a, (q * q - 1) / divisor, q);
    return match_unit_eis(v, q);
}

u64 inert_rational_of(EisInt pi) {
    for (int s = 0; s < 2; ++s) {
        EisInt w = s ? EisInt{-pi.re, -pi.om} : pi;
        if (w.om == 0 && w.re > 0) return u64(w.re);
        if (w.re == 0 && w.om > 0) return u64(w.om);
        if (w.re == w.om && w.re > 0) return u64(w.re);
    }
    return 0;
}

} // namespace

SexticValue cubic_symbol_prime(EisInt alpha, EisInt pi) {
    u64 n = pi.norm();
    if (n % 3 == 0) throw std::invalid_argument("NOT_COPRIME_TO_3: prime above 3");
    if (is_prime(n)) return power_symbol_deg1(alpha, pi, n, 3);
    u64 q = inert_rational_of(pi);
    if (q != 0 && q % 3 == 2 && is_prime(q)) return power_symbol_inert(alpha, q, 3);
    throw std::invalid_argument("NOT_PRIME: modulus is not an Eisenstein prime");
}

SexticValue cubic_symbol_jacobi(EisInt alpha, EisInt xi) {
    if (xi.is_zero() || xi.norm() % 3 == 0)
        throw std::invalid_argument("NOT_COPRIME_TO_3: denominator");
    int acc = 0; // exponent of omega
    xi = primary_associate_eis(xi);
    while (true) {
        if (xi.norm() == 1) return SexticValue::omega_power(acc); // xi == -1
        auto [q, r] = divmod(alpha, xi);
        (void)q;
        alpha = r;
        if (alpha.is_zero()) return SexticValue::zero_value();
        // alpha = zeta6^{-a} * (1-omega)^b * prim
        const EisInt lam{1, -1}; // 1 - omega
        const EisInt lam_conj_over_3{2, 1};
        int b = 0;
        while (alpha.norm() % 3 == 0) {
            EisInt t = alpha * lam_conj_over_3;
            if (t.re % 3 != 0 || t.om % 3 != 0) throw std::logic_error("cubic: bad lambda division");
            alpha = {t.re / 3, t.om / 3};
            ++b;
        }
        (void)lam;
        EisInt prim = primary_associate_eis(alpha);
        int a = 0;
        while (!(unit_w6(a) * alpha == prim)) ++a;
        // Supplementary laws on primary xi = x + y omega:
        //   (omega|xi)     = omega^{(N-1)/3}
        //   (1-omega|xi)   = omega^{2(x+1)/3}
        //   (zeta6^j|xi)   = omega^{2 j (N-1)/3}   (zeta6 = -omega^2, (-1|xi) = 1)
        i128 nxi = i128(xi.re) * xi.re - i128(xi.re) * xi.om + i128(xi.om) * xi.om;
        int n3 = int(((nxi - 1) / 3) % 3);
        int s3 = int((((2 * (i128(xi.re) + 1) / 3) % 3) + 3) % 3);
        acc = int(((acc - 2 * a * n3 + b * s3) % 3 + 9) % 3);
        alpha = prim;
        if (alpha == EisInt{-1, 0}) return SexticValue::omega_power(acc);
        // cubic reciprocity: (prim|xi)_3 = (xi|prim)_3 for primary operands
        std::swap(alpha, xi);
    }
}

EisInt split_prime_above(u64 p) {
    // p = 1 mod 3: find a + b omega of norm p from 4p = t^2 + 3 s^2.
    u64 r0 = *sqrt_mod(-3, p);
    for (u64 root : {r0, p - r0}) {
        u64 x0 = root % 2 == 1 ? root : root + p; // odd lift, x0^2 = -3 mod 4p
        u64 a = 2 * p, b = x0;
        while (u128(b) * b > 4 * p) {
            u64 t = a % b;
            a = b;
            b = t;
        }
        u64 t = b;
        u64 rem = 4 * p - t * t;
        if (rem % 3 != 0) continue;
        u64 s2 = rem / 3;
        u64 s = u64(std::llround(std::sqrt(double(s2))));
        while (s * s < s2) ++s;
        while (s > 0 && s * s > s2) --s;
        if (s * s != s2 || (t + s) % 2 != 0) continue;
        EisInt cand{i64((t + s) / 2), i64(s)};
        if (cand.norm() == p) return cand;
    }
    throw std::logic_error("split_prime_above: descent failed");
}

SexticValue cubic_symbol_rational(EisInt z, u64 q) {
    if (q % 3 == 0) throw std::invalid_argument("NOT_COPRIME_TO_3");
    SexticValue acc = SexticValue::unit(0);
    for (auto& [p, e] : factorize(q).factors) {
        SexticValue v;
        if (p % 3 == 1) {
            EisInt pi = split_prime_above(p);
            v = power_symbol_deg1(z, pi, p, 3) * power_symbol_deg1(z, pi.conj(), p, 3);
        } else {
            v = power_symbol_inert(z, p, 3);
        }
        for (int i = 0; i < e; ++i) acc = acc * v;
    }
    return acc;
}

SexticValue sextic_symbol_rational(i64 a, EisInt pi) {
    u64 n = pi.norm();
    if (std::gcd(n, u64(6)) != 1) throw std::invalid_argument("BAD_NORM: gcd(N(pi), 6) != 1");
    if (is_prime(n)) return power_symbol_deg1({a, 0}, pi, n, 6);
    u64 q = inert_rational_of(pi);
    if (q != 0 && q % 3 == 2 && is_prime(q)) return power_symbol_inert({a, 0}, q, 6);
    throw std::invalid_argument("NOT_PRIME: modulus is not an Eisenstein prime");
}

namespace {

// Tables of (z|q)_3 and kronecker(N(z), q) for all z mod q.
struct CubicTables {
    std::vector<SexticValue> cubic; // (z|q)_3
    std::vector<int> quad;          // (N(z)|q)
};

CubicTables cubic_tables_mod(u64 q) {
    CubicTables t;
    t.cubic.assign(q * q, SexticValue::unit(0));
    t.quad.assign(q * q, 1);
    for (auto& [p, e] : factorize(q).factors) {
        std::vector<SexticValue> local(q * q);
        if (p % 3 == 1) {
            EisInt pi = split_prime_above(p);
            u64 w1 = image_of_omega(pi, p), w2 = image_of_omega(pi.conj(), p);
            std::vector<u64> pw(p);
            for (u64 r = 0; r < p; ++r) pw[r] = powmod(r, (p - 1) / 3, p);
            for (u64 x = 0; x < q; ++x) {
                for (u64 y = 0; y < q; ++y) {
                    u64 a1 = (x % p + mulmod(y % p, w1, p)) % p;
                    u64 a2 = (x % p + mulmod(y % p, w2, p)) % p;
                    SexticValue v1 = a1 == 0 ? SexticValue::zero_value()
                                             : match_unit_mod_p(pw[a1], w1, p);
                    SexticValue v2 = a2 == 0 ? SexticValue::zero_value()
                                             : match_unit_mod_p(pw[a2], w2, p);
                    local[x * q + y] = v1 * v2;
                }
            }
        } else {
            for (u64 x = 0; x < q; ++x)
                for (u64 y = 0; y < q; ++y)
                    local[x * q + y] = power_symbol_inert({i64(x), i64(y)}, p, 3);
        }
        for (u64 idx = 0; idx < q * q; ++idx) {
            SexticValue v = local[idx];
            SexticValue powed = SexticValue::unit(0);
            for (int i = 0; i < e; ++i) powed = powed * v;
            t.cubic[idx] = t.cubic[idx] * powed;
        }
    }
    for (u64 x = 0; x < q; ++x)
        for (u64 y = 0; y < q; ++y) {
            EisInt z{i64(x), i64(y)};
            t.quad[x * q + y] = kronecker(i64(z.norm() % q), i64(q));
        }
    return t;
}

} // namespace

EisInt gauss_sum_cubic(u64 p, int kappa) {
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("need a prime > 3");
    auto tabs = cubic_tables_mod(p);
    const double twopi = 8.0 * std::atan(1.0);
    std::complex<double> omega_c = std::polar(1.0, twopi / 3.0);
    std::complex<double> sum{0.0, 0.0};
    for (u64 x = 0; x < p; ++x) {
        for (u64 y = 0; y < p; ++y) {
            SexticValue v = tabs.cubic[x * p + y];
            if (v.zero) continue;
            int q = kappa ? tabs.quad[x * p + y] : 1;
            if (q == 0) continue;
            i64 tr = (i64(2 * x) - i64(y)) % i64(p);
            std::complex<double> e = std::polar(1.0, twopi * double(tr) / double(p));
            EisInt u = v.to_eis();
            std::complex<double> uc = double(u.re) + double(u.om) * omega_c;
            sum += e * uc * double(q);
        }
    }
    // Express the (real integer) result exactly.
    double re = std::round(sum.real());
    if (std::abs(sum.real() - re) > 1e-6 || std::abs(sum.imag()) > 1e-6)
        throw std::runtime_error("NONCONVERGENT: rounding residual too large");
    return {i64(re), 0};
}

EisUnitValue normalize_unit_value(EisInt v) {
    if (v.is_zero()) return {Rational(0), 0};
    for (int k = 0; k < 6; ++k) {
        EisInt u = unit_w6(k);
        // v = n * u with n > 0 iff v and u are parallel with positive ratio
        i64 n = 0;
        if (u.re != 0 && v.re % u.re == 0)
            n = v.re / u.re;
        else if (u.om != 0 && v.om % u.om == 0)
            n = v.om / u.om;
        if (n > 0 && EisInt{n * u.re, n * u.om} == v) return {Rational(n), k};
    }
    throw std::logic_error("normalize_unit_value: not unit times positive integer");
}

CubicTraceSumTable::CubicTraceSumTable(u64 q) : q_(q) {
    if (std::gcd(q, u64(6)) != 1) throw std::invalid_argument("BAD_MODULUS: need (q,6)=1");
    if (q > 1000) throw std::invalid_argument("TOO_LARGE: q must be <= 1000");
    buckets_.assign(12, std::vector<EisInt>(q, EisInt{0, 0}));
    auto tabs = cubic_tables_mod(q);
    for (u64 x = 0; x < q; ++x) {
        for (u64 y = 0; y < q; ++y) {
            SexticValue v = tabs.cubic[x * q + y];
            if (v.zero) continue;
            int quad = tabs.quad[x * q + y];
            EisInt z{i64(x), i64(y)};
            EisInt uval = v.to_eis();
            for (int bk = 0; bk < 6; ++bk) {
                i64 tr = (unit_w6(bk) * z).trace() % i64(q);
                if (tr < 0) tr += i64(q);
                for (int kappa = 0; kappa < 2; ++kappa) {
                    int f = kappa ? quad : 1;
                    if (f == 0) continue;
                    EisInt& b = buckets_[kappa * 6 + bk][u64(tr)];
                    b = b + EisInt{f * uval.re, f * uval.om};
                }
            }
        }
    }
}

EisUnitValue CubicTraceSumTable::value(i64 t, int beta_k, int kappa) const {
    i64 r = t % i64(q_);
    if (r < 0) r += i64(q_);
    EisInt v = buckets_[kappa * 6 + ((beta_k % 6) + 6) % 6][u64(r)];
    return normalize_unit_value(v);
}

EisUnitValue cubic_trace_sum_bruteforce(u64 q, i64 t, int beta_k, int kappa) {
    CubicTraceSumTable table(q);
    return table.value(t, beta_k, kappa);
}

EisUnitValue cubic_trace_sum_closed(u64 q, i64 t, int beta_k, int kappa) {
    if (std::gcd(q, u64(6)) != 1) throw std::invalid_argument("BAD_MODULUS: need (q,6)=1");
    auto fac = factorize(q);
    Rational scale(i64(euler_phi(fac)));
    // (conj(beta)|q)_3 with beta = zeta6^k: conj(beta) = zeta6^{-k} and
    // (zeta6|q)_3 = omega^{2 (q^2-1)/3}; fold the omega exponent into unit_k.
    int nq3 = int(((u128(q) * q - 1) / 3) % 3);
    int omega_exp = ((-2 * beta_k * nq3) % 3 + 3) % 3;
    if (kappa && kronecker(3, i64(q)) == -1) scale = -scale;
    int j = kappa ? 6 : 3;
    for (auto& [p, e] : fac.factors) {
        if (t % i64(p) == 0) continue;
        int chi = kronecker(-3, i64(p));
        if (e % j != 0) scale = scale * Rational(-1, i128(p) - 1 - chi);
        scale = scale * (Rational(1) - Rational(chi, i128(p) - 1));
    }
    if (scale.is_zero()) return {Rational(0), 0};
    int unit_k = (2 * omega_exp) % 6; // omega^d = zeta6^{2d}
    if (scale.sign() < 0) {
        scale = -scale;
        unit_k = (unit_k + 3) % 6;
    }
    return {scale, unit_k};
}

} // namespace cmlab
