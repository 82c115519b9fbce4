#include "cmlab/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmlab/simd.hpp"

namespace cmlab {

bool is_cm_discriminant(int D) {
    for (int d : kDiscriminants)
        if (d == D) return true;
    return false;
}

CurveSpec::CurveSpec(int D_, i64 g_) : D(D_), g(g_) {
    if (!is_cm_discriminant(D)) throw std::invalid_argument("CurveSpec: D not in the CM set");
    if (g == 0) throw std::invalid_argument("CurveSpec: g must be nonzero");
}

i64 field_discriminant(int D) { return D % 4 == 3 ? -i64(D) : -4 * i64(D); }

SplitType split_type(int D, u64 p) {
    if (!is_cm_discriminant(D)) throw std::invalid_argument("split_type: bad D");
    int k = kronecker(field_discriminant(D), i64(p));
    if (k == 1) return SplitType::Split;
    if (k == -1) return SplitType::Inert;
    return SplitType::Ramified;
}

SplitPrime norm_form_solve(int D, u64 p) {
    if (split_type(D, p) != SplitType::Split)
        throw std::invalid_argument("NOT_SPLIT: p does not split");
    SplitPrime sp;
    sp.D = D;
    sp.p = p;
    if (D == 1) {
        auto [m, n] = two_squares_prime(p);
        if (m % 2 == 0) std::swap(m, n);
        sp.m = i64(m);
        sp.n = i64(n);
        return sp;
    }
    if (D == 2) {
        u64 r0 = *sqrt_mod(-2, p);
        for (u64 root : {r0, p - r0}) {
            u64 a = p, b = root;
            while (b * b > p) {
                u64 t2 = a % b;
                a = b;
                b = t2;
            }
            u64 m = b, rem = p - m * m;
            if (rem % 2 != 0) continue;
            u64 n2 = rem / 2;
            u64 n = u64(std::llround(std::sqrt(double(n2))));
            while (n * n < n2) ++n;
            while (n > 0 && n * n > n2) --n;
            if (n * n == n2) {
                sp.m = i64(m);
                sp.n = i64(n);
                return sp;
            }
        }
        throw std::logic_error("norm_form_solve: D=2 descent failed");
    }
    // D = 3 mod 4: 4p = t^2 + D s^2
    u64 r0 = *sqrt_mod(-D, p);
    for (u64 root : {r0, p - r0}) {
        u64 x0 = root % 2 == 1 ? root : root + p; // odd lift mod 2p
        u64 a = 2 * p, b = x0;
        while (u128(b) * b > 4 * p) {
            u64 t2 = a % b;
            a = b;
            b = t2;
        }
        u64 t = b;
        u64 rem = 4 * p - t * t;
        if (rem % u64(D) != 0) continue;
        u64 s2 = rem / u64(D);
        u64 s = u64(std::llround(std::sqrt(double(s2))));
        while (s * s < s2) ++s;
        while (s > 0 && s * s > s2) --s;
        if (s * s == s2 && (t + s) % 2 == 0 && s > 0) {
            sp.t = i64(t);
            sp.s = i64(s);
            return sp;
        }
    }
    throw std::logic_error("norm_form_solve: descent failed");
}

std::vector<u64> bad_primes(const CurveSpec& curve) {
    std::vector<u64> bad{2};
    u64 ag = u64(curve.g < 0 ? -curve.g : curve.g);
    for (auto& [p, e] : factorize(ag).factors) {
        (void)e;
        bad.push_back(p);
    }
    if (curve.D == 3 || curve.D == 11) bad.push_back(3); // model denominators / disc
    if (curve.D >= 7) bad.push_back(u64(curve.D));
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    return bad;
}

bool is_good_prime(const CurveSpec& curve, u64 p) {
    if (!is_prime(p)) return false;
    if (p == 2) return false;
    u64 ag = u64(curve.g < 0 ? -curve.g : curve.g);
    if (ag % p == 0) return false;
    if ((curve.D == 3 || curve.D == 11) && p == 3) return false;
    if (curve.D >= 7 && p == u64(curve.D)) return false;
    return true;
}

i64 ap_formula(const CurveSpec& curve, u64 p) {
    if (!is_good_prime(curve, p)) throw std::invalid_argument("BAD_PRIME");
    SplitType st = split_type(curve.D, p);
    if (st == SplitType::Inert) return 0;
    if (st == SplitType::Ramified) throw std::invalid_argument("BAD_PRIME: ramified");
    SplitPrime sp = norm_form_solve(curve.D, p);
    switch (curve.D) {
        case 1: {
            GaussInt pi = primary_associate(sp.gauss());
            QuarticValue chi = quartic_symbol_prime({curve.g, 0}, pi.conj());
            GaussInt z = chi.to_gauss() * pi;
            return 2 * z.re;
        }
        case 3: {
            EisInt pi = primary_associate_eis(sp.eis());
            SexticValue chi = sextic_symbol_rational(4 * curve.g, pi.conj());
            EisInt z = chi.to_eis() * pi;
            return -z.trace();
        }
        case 2: {
            i64 tr = sp.trace(); // 2m, m odd, m > 0
            int e = int((p / 8 + u64((tr - 2) / 4)) % 2);
            i64 sign = kronecker(curve.g, i64(p)) * (e ? -1 : 1);
            return sign * tr;
        }
        default: {
            i64 tr = sp.trace(); // t > 0
            return kronecker(curve.g, i64(p)) * i64(kronecker(2 * tr, curve.D)) * tr;
        }
    }
}

std::vector<std::int8_t> legendre_table(u64 p) {
    std::vector<std::int8_t> chi(p + 4, -1);
    chi[0] = 0;
    for (u64 x = 1; x <= (p - 1) / 2; ++x) chi[mulmod(x, x, p)] = 1;
    chi[p] = chi[p + 1] = chi[p + 2] = chi[p + 3] = 0;
    return chi;
}

CubicModP curve_cubic_mod_p(const CurveSpec& curve, u64 p) {
    auto md = [p](i64 v) { return u64(((v % i64(p)) + i64(p)) % i64(p)); };
    u64 g1 = md(curve.g);
    u64 g2 = mulmod(g1, g1, p), g3 = mulmod(g2, g1, p);
    auto inv = [p](u64 v) { return powmod(v % p, p - 2, p); };
    switch (curve.D) {
        case 1: return {1, 0, (p - g1) % p, 0};
        case 3: return {1, 0, 0, g1};
        case 2: // integral model y^2 = x(x^2 - 4gx + 2g^2)
            return {1, (p - mulmod(4 % p, g1, p)) % p, mulmod(2 % p, g2, p), 0};
        case 7: // y^2 = 4x^3 - (35/4) g^2 x - (49/8) g^3
            return {4 % p, 0, mulmod(p - mulmod(35 % p, inv(4), p), g2, p),
                    mulmod(p - mulmod(49 % p, inv(8), p), g3, p)};
        case 11: // y^2 = 4x^3 - (88/3) g^2 x + (847/27) g^3
            return {4 % p, 0, mulmod(p - mulmod(88 % p, inv(3), p), g2, p),
                    mulmod(mulmod(847 % p, inv(27), p), g3, p)};
        case 19: return {4 % p, 0, mulmod(p - 152 % p, g2, p), mulmod(361 % p, g3, p)};
        case 43: return {4 % p, 0, mulmod(p - 3440 % p, g2, p), mulmod(38829 % p, g3, p)};
        case 67: return {4 % p, 0, mulmod(p - 29480 % p, g2, p), mulmod(974113 % p, g3, p)};
        case 163:
            return {4 % p, 0, mulmod(p - 8697680 % p, g2, p), mulmod(4936546769ull % p, g3, p)};
        default: throw std::logic_error("curve_cubic_mod_p: bad D");
    }
}

i64 ap_bruteforce(const CurveSpec& curve, u64 p, const std::int8_t* chi) {
    if (!is_good_prime(curve, p)) throw std::invalid_argument("BAD_PRIME");
    if (p > 100000) throw std::invalid_argument("TOO_LARGE: p must be <= 1e5");
    CubicModP f = curve_cubic_mod_p(curve, p);
    return -simd::legendre_scan(chi, std::uint32_t(p), std::uint32_t(f.c3), std::uint32_t(f.c2),
                                std::uint32_t(f.c1), std::uint32_t(f.c0));
}

i64 ap_bruteforce(const CurveSpec& curve, u64 p) {
    auto chi = legendre_table(p);
    return ap_bruteforce(curve, p, chi.data());
}

} // namespace cmlab
