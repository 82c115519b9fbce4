#include "cmlab/gaussian.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cmlab {

GaussInt unit_i(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

std::pair<GaussInt, GaussInt> divmod(GaussInt a, GaussInt b) {
    if (b.is_zero()) throw std::domain_error("gauss divmod: zero divisor");
    i128 n = i128(b.re) * b.re + i128(b.im) * b.im;
    i128 xr = i128(a.re) * b.re + i128(a.im) * b.im;  // Re(a * conj b)
    i128 xi = i128(a.im) * b.re - i128(a.re) * b.im;  // Im(a * conj b)
    auto fdiv = [](i128 x, i128 m) { // floor division
        i128 q = x / m;
        if (x % m != 0 && ((x < 0) != (m < 0))) --q;
        return q;
    };
    i64 qr0 = i64(fdiv(xr, n)), qi0 = i64(fdiv(xi, n));
    GaussInt best_q{0, 0}, best_r{0, 0};
    i128 best_norm = -1;
    for (i64 dr = 0; dr <= 1; ++dr) {
        for (i64 di = 0; di <= 1; ++di) {
            GaussInt q{qr0 + dr, qi0 + di};
            GaussInt r = a - b * q;
            i128 rn = i128(r.re) * r.re + i128(r.im) * r.im;
            bool better = best_norm < 0 || rn < best_norm ||
                          (rn == best_norm &&
                           (r.re < best_r.re || (r.re == best_r.re && r.im < best_r.im)));
            if (better) {
                best_norm = rn;
                best_q = q;
                best_r = r;
            }
        }
    }
    return {best_q, best_r};
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a;
}

GaussInt primary_associate(GaussInt z) {
    if (z.is_zero() || !z.is_odd()) throw std::invalid_argument("NOT_ODD: (1+i) divides z");
    for (int k = 0; k < 4; ++k) {
        GaussInt w = unit_i(k) * z;
        if (((w.re + w.im) % 4 + 4) % 4 == 1 && w.im % 2 == 0) return w;
    }
    throw std::logic_error("primary_associate: no primary associate"); // unreachable
}

bool is_gaussian_prime(GaussInt z) {
    u64 n = z.norm();
    if (n < 2) return false;
    if (is_prime(n)) return true;
    // associate of an inert rational prime p = 3 mod 4
    u64 p = 0;
    if (z.im == 0) p = u64(z.re < 0 ? -z.re : z.re);
    if (z.re == 0) p = u64(z.im < 0 ? -z.im : z.im);
    return p != 0 && p % 4 == 3 && is_prime(p);
}

namespace {

// Reduce components mod m into [0, m).
GaussInt reduce_mod(GaussInt z, u64 m) {
    i64 mm = i64(m);
    i64 r = z.re % mm, i = z.im % mm;
    if (r < 0) r += mm;
    if (i < 0) i += mm;
    return {r, i};
}

GaussInt mulmod_gauss(GaussInt a, GaussInt b, u64 m) {
    i128 re = i128(a.re) * b.re - i128(a.im) * b.im;
    i128 im = i128(a.re) * b.im + i128(a.im) * b.re;
    i64 mm = i64(m);
    i64 r = i64(re % mm), i = i64(im % mm);
    if (r < 0) r += mm;
    if (i < 0) i += mm;
    return {r, i};
}

GaussInt powmod_gauss(GaussInt base, u64 exp, u64 m) {
    GaussInt r{1, 0};
    base = reduce_mod(base, m);
    while (exp) {
        if (exp & 1) r = mulmod_gauss(r, base, m);
        base = mulmod_gauss(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Image of i in Z[i]/(pi) = F_p for a degree-one prime pi = a+bi of norm p.
u64 image_of_i(GaussInt pi, u64 p) {
    u64 b = u64(((pi.im % i64(p)) + i64(p)) % i64(p));
    u64 a = u64(((pi.re % i64(p)) + i64(p)) % i64(p));
    // a + b*i = 0 mod pi  =>  i = -a/b
    u64 binv = powmod(b, p - 2, p);
    return mulmod((p - a) % p, binv, p);
}

QuarticValue match_unit_mod_p(u64 v, u64 iota, u64 p) {
    if (v == 0) return QuarticValue::zero_value();
    if (v == 1) return QuarticValue::unit(0);
    if (v == iota) return QuarticValue::unit(1);
    if (v == p - 1) return QuarticValue::unit(2);
    if (v == (p - iota) % p) return QuarticValue::unit(3);
    throw std::logic_error("quartic symbol: residue is not a 4th root of unity");
}

QuarticValue match_unit_gauss(GaussInt v, u64 m) {
    if (v.is_zero()) return QuarticValue::zero_value();
    for (int k = 0; k < 4; ++k)
        if (v == reduce_mod(unit_i(k), m)) return QuarticValue::unit(k);
    throw std::logic_error("quartic symbol: residue is not a 4th root of unity");
}

} // namespace

std::pair<u64, u64> two_squares_prime(u64 p) {
    if (p == 2) return {1, 1};
    u64 x0 = *sqrt_mod(-1, p);
    for (u64 r : {x0, p - x0}) {
        u64 a = p, b = r;
        while (b * b > p) {
            u64 t = a % b;
            a = b;
            b = t;
        }
        u64 m = b, rem = p - m * m;
        u64 n = u64(std::llround(std::sqrt(double(rem))));
        for (u64 nn = (n > 0 ? n - 1 : 0); nn <= n + 1; ++nn)
            if (nn * nn == rem) return {m, nn};
    }
    throw std::logic_error("two_squares_prime: descent failed");
}

namespace {

// Symbol of alpha at a degree-one prime pi with prime norm p: map Z[i]/(pi)
// to F_p and exponentiate there.
QuarticValue quartic_prime_deg1(GaussInt alpha, GaussInt pi, u64 p) {
    u64 iota = image_of_i(pi, p);
    i64 pp = i64(p);
    u64 re = u64(((alpha.re % pp) + pp) % pp);
    u64 im = u64(((alpha.im % pp) + pp) % pp);
    u64 a = (re + mulmod(im, iota, p)) % p;
    u64 v = powmod(a, (p - 1) / 4, p);
    if (a == 0) return QuarticValue::zero_value();
    return match_unit_mod_p(v, iota, p);
}

// Symbol at an inert rational prime q = 3 mod 4: exponentiate in Z[i]/(q).
QuarticValue quartic_prime_inert(GaussInt alpha, u64 q) {
    GaussInt a = reduce_mod(alpha, q);
    i64 g = i64(std::gcd(std::gcd(u64(a.re), u64(a.im)), q));
    if (g == i64(q)) return QuarticValue::zero_value();
    GaussInt v = powmod_gauss(a, (q * q - 1) / 4, q);
    return match_unit_gauss(v, q);
}

} // namespace

QuarticValue quartic_symbol_prime(GaussInt alpha, GaussInt pi) {
    if (!pi.is_odd()) throw std::invalid_argument("NOT_ODD: prime modulus has even norm");
    u64 n = pi.norm();
    if (is_prime(n)) return quartic_prime_deg1(alpha, pi, n);
    u64 p = 0;
    if (pi.im == 0) p = u64(pi.re < 0 ? -pi.re : pi.re);
    if (pi.re == 0) p = u64(pi.im < 0 ? -pi.im : pi.im);
    if (p != 0 && p % 4 == 3 && is_prime(p)) return quartic_prime_inert(alpha, p);
    throw std::invalid_argument("NOT_PRIME: modulus is not a Gaussian prime");
}

QuarticValue quartic_symbol_jacobi(GaussInt alpha, GaussInt xi) {
    if (xi.is_zero() || !xi.is_odd()) throw std::invalid_argument("NOT_ODD: even denominator");
    int acc = 0; // exponent of i
    xi = primary_associate(xi);
    while (true) {
        if (xi.norm() == 1) return QuarticValue::unit(acc); // xi == 1
        auto [q, r] = divmod(alpha, xi);
        (void)q;
        alpha = r;
        if (alpha.is_zero()) return QuarticValue::zero_value();
        // alpha = i^a * (1+i)^b * alpha' with alpha' primary
        const GaussInt one_plus_i{1, 1};
        int b = 0;
        while (!alpha.is_odd()) {
            auto [qq, rr] = divmod(alpha, one_plus_i);
            if (!rr.is_zero()) throw std::logic_error("quartic: bad (1+i) division");
            alpha = qq;
            ++b;
        }
        GaussInt prim = primary_associate(alpha);
        int a = 0;
        while (!(unit_i(a) * alpha == prim)) ++a;
        // alpha = i^{-a} * prim after pulling (1+i)^b out; supplementary laws
        // on primary xi = x + y i:
        //   (i|xi)   = i^{(N-1)/4}
        //   (1+i|xi) = i^{(x - y - y^2 - 1)/4}
        i128 nxi = i128(xi.re) * xi.re + i128(xi.im) * xi.im;
        int n4 = int(((nxi - 1) / 4) % 4);
        int s4 = int((((i128(xi.re) - xi.im - i128(xi.im) * xi.im - 1) / 4) % 4 + 4) % 4);
        acc = int(((acc - a * n4 + b * s4) % 4 + 8) % 4);
        alpha = prim;
        if (alpha.norm() == 1) return QuarticValue::unit(acc); // alpha' == 1
        // reciprocity flip for primary pairs
        i128 nal = i128(alpha.re) * alpha.re + i128(alpha.im) * alpha.im;
        int flip = int((((nxi - 1) / 4) % 2) * (((nal - 1) / 4) % 2));
        acc = (acc + 2 * flip) % 4;
        std::swap(alpha, xi);
    }
}

QuarticValue quartic_symbol_rational(GaussInt z, u64 q) {
    if (q % 2 == 0) throw std::invalid_argument("NOT_ODD: rational modulus must be odd");
    QuarticValue acc = QuarticValue::unit(0);
    for (auto& [p, e] : factorize(q).factors) {
        QuarticValue v;
        if (p % 4 == 1) {
            auto [m, n] = two_squares_prime(p);
            GaussInt pi{i64(m), i64(n)};
            v = quartic_prime_deg1(z, pi, p) * quartic_prime_deg1(z, pi.conj(), p);
        } else {
            v = quartic_prime_inert(z, p);
        }
        for (int i = 0; i < e; ++i) acc = acc * v;
    }
    return acc;
}

int quartic_symbol_i_rational(u64 q) {
    if (q % 2 == 0) throw std::invalid_argument("NOT_ODD");
    u128 e = (u128(q) * q - 1) / 8;
    return e % 2 == 0 ? 1 : -1;
}

namespace {

// Table of (z|q)_4 for all z mod q, built from prime symbols.
std::vector<QuarticValue> symbol_table_mod(u64 q) {
    auto fac = factorize(q);
    std::vector<QuarticValue> acc(q * q, QuarticValue::unit(0));
    for (auto& [p, e] : fac.factors) {
        std::vector<QuarticValue> local(q * q);
        if (p % 4 == 1) {
            auto [mm, nn] = two_squares_prime(p);
            GaussInt pi{i64(mm), i64(nn)};
            u64 iota = image_of_i(pi, p);
            u64 iota2 = image_of_i(pi.conj(), p);
            // residue powers r^{(p-1)/4} for r in [0,p)
            std::vector<u64> pw(p);
            for (u64 r = 0; r < p; ++r) pw[r] = powmod(r, (p - 1) / 4, p);
            for (u64 x = 0; x < q; ++x) {
                for (u64 y = 0; y < q; ++y) {
                    u64 a1 = (x + mulmod(y % p, iota, p)) % p;
                    u64 a2 = (x + mulmod(y % p, iota2, p)) % p;
                    QuarticValue v1 = a1 == 0 ? QuarticValue::zero_value()
                                              : match_unit_mod_p(pw[a1], iota, p);
                    QuarticValue v2 = a2 == 0 ? QuarticValue::zero_value()
                                              : match_unit_mod_p(pw[a2], iota2, p);
                    local[x * q + y] = v1 * v2;
                }
            }
        } else {
            for (u64 x = 0; x < q; ++x)
                for (u64 y = 0; y < q; ++y)
                    local[x * q + y] = quartic_prime_inert({i64(x), i64(y)}, p);
        }
        for (u64 idx = 0; idx < q * q; ++idx) {
            QuarticValue v = local[idx];
            QuarticValue powed = QuarticValue::unit(0);
            for (int i = 0; i < e; ++i) powed = powed * v;
            acc[idx] = acc[idx] * powed;
        }
    }
    return acc;
}

} // namespace

GaussInt gauss_sum_quartic(u64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("need an odd prime");
    auto tab = symbol_table_mod(p);
    const double twopi = 8.0 * std::atan(1.0);
    std::complex<double> sum{0.0, 0.0};
    for (u64 x = 0; x < p; ++x) {
        double tr = double(2 * x % p);
        std::complex<double> e = std::polar(1.0, twopi * tr / double(p));
        for (u64 y = 0; y < p; ++y) {
            QuarticValue v = tab[x * p + y];
            if (v.zero) continue;
            GaussInt u = unit_i(v.k);
            sum += e * std::complex<double>(double(u.re), double(u.im));
        }
    }
    double re = std::round(sum.real()), im = std::round(sum.imag());
    if (std::abs(sum.real() - re) > 1e-6 || std::abs(sum.imag() - im) > 1e-6)
        throw std::runtime_error("NONCONVERGENT: rounding residual too large");
    return {i64(re), i64(im)};
}

QuarticTraceSumTable::QuarticTraceSumTable(u64 q) : q_(q) {
    if (q % 2 == 0) throw std::invalid_argument("NOT_ODD");
    if (q > 1000) throw std::invalid_argument("TOO_LARGE: q must be <= 1000");
    buckets_.assign(4, std::vector<GaussInt>(q, GaussInt{0, 0}));
    auto tab = symbol_table_mod(q);
    for (u64 x = 0; x < q; ++x) {
        for (u64 y = 0; y < q; ++y) {
            QuarticValue v = tab[x * q + y];
            if (v.zero) continue;
            GaussInt u = unit_i(v.k);
            // Tr(i^k (x+yi)) for k = 0..3: 2x, -2y, -2x, 2y
            i64 t0 = i64(2 * x % q), t1 = i64((2 * (q - y)) % q);
            i64 tr[4] = {t0, t1, i64((q - u64(t0)) % q), i64((q - u64(t1)) % q)};
            for (int k = 0; k < 4; ++k) {
                GaussInt& b = buckets_[k][u64(tr[k])];
                b = b + u;
            }
        }
    }
}

GaussInt QuarticTraceSumTable::value(i64 t, int beta_k) const {
    i64 r = (2 * t) % i64(q_);
    if (r < 0) r += i64(q_);
    return buckets_[((beta_k % 4) + 4) % 4][u64(r)];
}

GaussInt quartic_trace_sum_bruteforce(u64 q, i64 t, int beta_k) {
    QuarticTraceSumTable table(q);
    return table.value(t, beta_k);
}

Rational quartic_trace_sum_closed(u64 q, i64 t, int beta_k) {
    if (q % 2 == 0) throw std::invalid_argument("NOT_ODD");
    auto fac = factorize(q);
    // phi(q) * (i^{1+k}|q)_4 * Omega_4(1;q,t) * prod_{p|q, p !| t}(1 - (-1|p)/(p-1))
    Rational value(i64(euler_phi(fac)));
    int i_sym = quartic_symbol_i_rational(q); // +-1
    if ((1 + beta_k) % 2 != 0) {
        // (i^{1+k}|q)_4 = ((i|q)_4)^{1+k}; even powers collapse to 1
        if (i_sym == -1) value = -value;
    }
    for (auto& [p, e] : fac.factors) {
        bool divides_t = (t % i64(p) == 0);
        if (divides_t) continue;
        int chi = kronecker(-1, i64(p));
        if (e % 4 != 0) value = value * Rational(-1, i128(p) - 1 - chi);
        value = value * (Rational(1) - Rational(chi, i128(p) - 1));
    }
    return value;
}

} // namespace cmlab
