#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cmlab/constants.hpp"

namespace cmlab {

namespace {

int parity(i64 v) { return int(((v % 2) + 2) % 2); }

i64 nonneg_mod(i64 v, i64 m) { return ((v % m) + m) % m; }

bool divides(u64 d, i64 v) { return v % i64(d) == 0; }

bool is_perfect_power(u64 v, int k) {
    if (v == 0) return false;
    u64 root = u64(std::llround(std::pow(double(v), 1.0 / k)));
    for (u64 r = root > 1 ? root - 1 : 1; r <= root + 1; ++r) {
        u64 acc = 1;
        bool over = false;
        for (int i = 0; i < k; ++i) {
            if (acc > v / r + 1) {
                over = true;
                break;
            }
            acc *= r;
        }
        if (!over && acc == v) return true;
    }
    return false;
}

bool is_square_i(i64 v) { return v >= 0 && is_perfect_power(u64(v), 2); }
bool is_cube_i(i64 v) { return v >= 0 ? is_perfect_power(u64(v), 3) : is_perfect_power(u64(-v), 3); }
bool is_sixth_u(u64 v) { return is_perfect_power(v, 6); }

Verdict vanish(const std::string& which) { return {true, which}; }
Verdict keep() { return {false, "NONE"}; }

Verdict positivity_d1(const GFactorization& f, i64 r) {
    if (r % 2 != 0) return vanish("CONVENTION");
    i64 g1 = i64(f.g1);
    i64 rm8 = nonneg_mod(r, 8);
    bool a2 = divides(power_obstruction(f.g1_factors, 2), r);
    bool a4 = divides(power_obstruction(f.g1_factors, 4), r);
    bool lam_even = f.lambda % 2 == 0;
    int dl = parity(f.delta + f.lambda / 2); // delta + lambda/2 (lambda even cases only)
    i64 g1m8 = nonneg_mod(g1, 8);
    if (a2 && rm8 == 0) return vanish("D1.I.1");
    if (a2 && rm8 == 4 && lam_even) return vanish("D1.I.2");
    if (a4 && rm8 == 2 && lam_even && dl == 0 && g1m8 == 3) return vanish("D1.II.1");
    if (a4 && rm8 == 2 && lam_even && dl == 1 && g1m8 == 5) return vanish("D1.II.2");
    if (a4 && rm8 == 6 && lam_even && dl == 1 && g1m8 == 1) return vanish("D1.II.3");
    if (a4 && rm8 == 6 && lam_even && dl == 0 && g1m8 == 7) return vanish("D1.II.4");
    // Omega_2 = Omega_4 = -1/3 requires both j = 2 and j = 4 obstructed at
    // 3 or 5 (j = 4 matters when some prime enters g1 to an exponent
    // = 2 mod 4).
    bool j35 = (aux_set_contains(3, f, r, 2) || aux_set_contains(5, f, r, 2)) &&
               (aux_set_contains(3, f, r, 4) || aux_set_contains(5, f, r, 4));
    if (j35 && rm8 == 2 && lam_even && dl == 1 && g1m8 == 1) return vanish("D1.III.1");
    if (j35 && rm8 == 2 && lam_even && dl == 0 && g1m8 == 7) return vanish("D1.III.2");
    if (j35 && rm8 == 6 && lam_even && dl == 0 && g1m8 == 3) return vanish("D1.III.3");
    if (j35 && rm8 == 6 && lam_even && dl == 1 && g1m8 == 5) return vanish("D1.III.4");
    return keep();
}

Verdict positivity_d3(const GFactorization& f, i64 r) {
    if (r % 3 == 0) return vanish("CONVENTION");
    i64 g1 = i64(f.g1);
    i64 e3 = (g1 * g1 - 1) / 3;
    i64 rm24 = nonneg_mod(r, 24);
    i64 g1m12 = nonneg_mod(g1, 12), g1m9 = nonneg_mod(g1, 9);
    int dlm = parity(f.delta + f.lambda + f.mu);
    int dm = parity(f.delta + f.mu);
    int dmg = parity(f.delta + f.mu + (g1 - 1) / 2);
    int kg = kronecker(g1, 3), kng = kronecker(-g1, 3);
    bool lam_even = f.lambda % 2 == 0;
    bool mu3 = f.mu % 3 == 0;
    bool le3 = (f.lambda + e3) % 3 == 0;

    // (I) {2,3,6} in J_5 u J_7
    bool j57 = true;
    for (int j : {2, 3, 6})
        j57 = j57 && (aux_set_contains(5, f, r, j) || aux_set_contains(7, f, r, j));
    if (j57) {
        if (rm24 == 8 && mu3 && le3 && (dlm ? -1 : 1) == kg) return vanish("D3.I.1");
        if (rm24 == 16 && mu3 && le3 && (dlm ? -1 : 1) == kng) return vanish("D3.I.2");
        if (rm24 == 20 && mu3 && le3 && (dm ? -1 : 1) == kg) return vanish("D3.I.3");
        if (rm24 == 4 && mu3 && le3 && (dm ? -1 : 1) == kng) return vanish("D3.I.4");
        bool g1_pm1 = g1m12 == 1 || g1m12 == 11;
        bool g1_pm5 = g1m12 == 5 || g1m12 == 7;
        if (rm24 % 12 == 2 && g1_pm1 && mu3 && le3 && lam_even) return vanish("D3.I.5");
        if (rm24 % 12 == 10 && g1_pm5 && mu3 && le3 && lam_even) return vanish("D3.I.6");
        bool three_cond = mu3 && (2 + f.lambda) % 3 == 0 && ((g1 * g1 + 2) / 3) % 3 == 0;
        if (rm24 % 6 == 5 && g1_pm1 && three_cond && lam_even && dmg == 0)
            return vanish("D3.I.7");
        if (rm24 % 6 == 1 && g1_pm5 && three_cond && lam_even && dmg == 0)
            return vanish("D3.I.8");
    }
    // (II) A_2(g1) | r
    if (divides(power_obstruction(f.g1_factors, 2), r)) {
        if (rm24 == 8 && (dlm ? -1 : 1) == kng) return vanish("D3.II.1");
        if (rm24 == 16 && (dlm ? -1 : 1) == kg) return vanish("D3.II.2");
        if (rm24 == 20 && (dm ? -1 : 1) == kng) return vanish("D3.II.3");
        if (rm24 == 4 && (dm ? -1 : 1) == kg) return vanish("D3.II.4");
        bool g1_pm1 = g1m12 == 1 || g1m12 == 11;
        bool g1_pm5 = g1m12 == 5 || g1m12 == 7;
        if (rm24 % 12 == 2 && g1_pm5 && lam_even) return vanish("D3.II.5");
        if (rm24 % 12 == 10 && g1_pm1 && lam_even) return vanish("D3.II.6");
        if (rm24 % 6 == 5 && g1_pm5 && lam_even && dmg == 0) return vanish("D3.II.7");
        if (rm24 % 6 == 1 && g1_pm1 && lam_even && dmg == 0) return vanish("D3.II.8");
    }
    // (III) A_3(g1) | r
    if (divides(power_obstruction(f.g1_factors, 3), r)) {
        bool odd_r = rm24 % 6 == 1 || rm24 % 6 == 5;
        if (odd_r && (g1m9 == 1 || g1m9 == 8) && f.lambda % 3 == 0 && mu3)
            return vanish("D3.III.1");
        if (odd_r && (g1m9 == 2 || g1m9 == 7) && (f.lambda + 1) % 3 == 0 && mu3)
            return vanish("D3.III.2");
    }
    return keep();
}

Verdict positivity_d_ge7(int D, const GFactorization& f, i64 r) {
    if (r % D == 0) return vanish("CONVENTION");
    i64 g1 = i64(f.g1);
    int k2 = kronecker(2, D), kg1 = kronecker(g1, D), kr = kronecker(r, D);
    int k2g1r = k2 * kg1 * kr;  // (2 g1 r | D)
    int kg1r = kg1 * kr;        // (g1 r | D)
    bool lam_even = f.lambda % 2 == 0;
    bool a2 = divides(power_obstruction(f.g1_factors, 2), r);
    int gp = parity((g1 + 1) / 2), gm = parity((g1 - 1) / 2);
    int dm = parity(f.delta + f.mu);
    int dmg = parity(f.delta + f.mu + (g1 - 1) / 2);
    i64 rm4 = nonneg_mod(r, 4);
    if (rm4 == 2 && (gp ? -1 : 1) == k2g1r && lam_even && a2) return vanish("D7.1");
    if (rm4 == 0 && (dm ? -1 : 1) == -k2g1r && lam_even && a2) return vanish("D7.2");
    if (rm4 == 0 && (parity(dm + r / 4) ? -1 : 1) == -kg1r && !lam_even && a2)
        return vanish("D7.3");
    if (r % 2 != 0 && (gp ? -1 : 1) == k2g1r && lam_even && dmg == 0 && a2) return vanish("D7.4");
    if (D == 11) {
        bool j3 = aux_set_contains(3, f, r, 2);
        if (rm4 == 2 && (gm ? -1 : 1) == k2g1r && lam_even && j3) return vanish("D11.5");
        if (rm4 == 0 && (dm ? -1 : 1) == k2g1r && lam_even && j3) return vanish("D11.6");
        if (rm4 == 0 && (parity(dm + r / 4) ? -1 : 1) == kg1r && !lam_even && j3)
            return vanish("D11.7");
        if (r % 2 != 0 && (gm ? -1 : 1) == k2g1r && lam_even && dmg == 0 && j3)
            return vanish("D11.8");
    }
    if (r % 2 != 0 && D == 7) return vanish("D7.9");
    return keep();
}

} // namespace

Verdict classify_positivity(int D, i64 g, i64 r) {
    if (r == 0) throw std::invalid_argument("classify_positivity: r must be nonzero");
    GFactorization f = g_factorize(D, g);
    switch (D) {
        case 1: return positivity_d1(f, r);
        case 3: return positivity_d3(f, r);
        case 2: return nonneg_mod(r, 4) == 2 ? keep() : vanish("CONVENTION");
        default: return positivity_d_ge7(D, f, r);
    }
}

Verdict classify_anomalous(int D, i64 g) {
    GFactorization f = g_factorize(D, g);
    if (D == 1 || D == 2 || D == 7) return {true, "CONGRUENCE"};
    if (D == 3) {
        i64 g1 = i64(f.g1);
        bool lam_even = f.lambda % 2 == 0;
        int dm = parity(f.delta + f.mu);
        bool mu3 = f.mu % 3 == 0, lam2mod3 = (2 + f.lambda) % 3 == 0;
        if (g1 % 5 == 0 && is_sixth_u(f.g1 / 5) && mu3 && lam2mod3 && lam_even && dm == 0)
            return {true, "g1=5a^6"};
        u64 seven5 = 16807;
        if (f.g1 % seven5 == 0 && is_sixth_u(f.g1 / seven5) && mu3 && lam2mod3 && lam_even &&
            dm == 1)
            return {true, "g1=7^5b^6"};
        if (is_perfect_power(f.g1, 2) && lam_even && dm == 0) return {true, "g1=c^2"};
        if (is_perfect_power(f.g1, 3) && f.lambda % 3 == 0 && mu3) return {true, "g1=d^3"};
        return {false, "NONE"};
    }
    // D in {11, 19, 43, 67, 163}: bullets 4 (and 8 for D = 11) of the
    // positivity list at r = 1.
    Verdict v = classify_positivity(D, g, 1);
    return v;
}

Verdict classify_anomalous_setform(int D, i64 g) {
    if (D == 1 || D == 2 || D == 7) return {true, "CONGRUENCE"};
    if (D == 3) {
        if (is_square_i(g)) return {true, "square"};
        if (g < 0 && (-g) % 3 == 0 && is_square_i((-g) / 3)) return {true, "-3*square"};
        if (is_cube_i(g)) return {true, "cube"};
        struct {
            i64 t;
            const char* name;
        } sixths[] = {{80, "80*sixth"},
                      {-2160, "-2160*sixth"},
                      {-268912, "-268912*sixth"},
                      {7260624, "7260624*sixth"}};
        for (auto& s : sixths) {
            if ((g < 0) == (s.t < 0) && g % s.t == 0 && is_sixth_u(u64(g / s.t)))
                return {true, s.name};
        }
        return {false, "NONE"};
    }
    if (is_square_i(g)) return {true, "square"};
    if (g < 0 && (-g) % D == 0 && is_square_i((-g) / D)) return {true, "-D*square"};
    if (D == 11) {
        if (g > 0 && g % 33 == 0 && is_square_i(g / 33)) return {true, "33*square"};
        if (g < 0 && (-g) % 3 == 0 && is_square_i((-g) / 3)) return {true, "-3*square"};
    }
    return {false, "NONE"};
}

Verdict classify_symmetry(int D, i64 g, i64 r) {
    if (r == 0) throw std::invalid_argument("classify_symmetry: r must be nonzero");
    GFactorization f = g_factorize(D, g);
    i64 g1 = i64(f.g1);
    switch (D) {
        case 1: {
            if (nonneg_mod(r, 4) == 2 && f.lambda % 2 == 0) {
                bool sym = parity(f.delta + (f.lambda + g1 - 1) / 2) == 0;
                return {sym, sym ? "D1.restriction" : "NONE"};
            }
            return {true, "D1.always"};
        }
        case 3: {
            if (r % 3 == 0) return {true, "D3.3|r"};
            if (nonneg_mod(r, 4) != 0 && f.lambda % 2 != 0) return {true, "D3.odd-lambda"};
            bool odd_r = r % 2 != 0;
            if (odd_r && nonneg_mod(g1, 4) == 1 && parity(f.delta + f.mu) == 1)
                return {true, "D3.g1=1mod4"};
            if (odd_r && nonneg_mod(g1, 4) == 3 && parity(f.delta + f.mu) == 0)
                return {true, "D3.g1=3mod4"};
            // largest square divisor of g1
            Factorization sq = f.g1_factors;
            u64 val = 1;
            for (auto& [p, e] : sq.factors) {
                e = 2 * (e / 2);
                for (int i = 0; i < e; ++i) val *= p;
            }
            sq.value = val;
            bool a3 = divides(power_obstruction(sq, 3), r);
            i64 g1m9 = nonneg_mod(g1, 9);
            if (odd_r && (g1m9 == 1 || g1m9 == 8) && f.lambda % 3 == 0 && f.mu % 3 == 0 && a3)
                return {true, "D3.cube-class-1"};
            if (odd_r && (g1m9 == 2 || g1m9 == 7) && (f.lambda + 1) % 3 == 0 && f.mu % 3 == 0 &&
                a3)
                return {true, "D3.cube-class-2"};
            return {false, "NONE"};
        }
        case 2: {
            bool sym = nonneg_mod(r, 4) != 2;
            return {sym, sym ? "D2.vanishing" : "NONE"};
        }
        default: {
            if (r % D == 0) return {true, "D7.D|r"};
            if (D == 7 && std::gcd(u64(r < 0 ? -r : r), u64(14)) == 1) return {true, "D7.odd"};
            if (nonneg_mod(r, 4) == 2 && f.lambda % 2 != 0) return {true, "D7.even-odd-lambda"};
            if (r % 2 != 0 && f.lambda % 2 != 0) return {true, "D7.odd-odd-lambda"};
            if (r % 2 != 0 && parity(f.delta + f.mu + (g1 - 1) / 2) == 1)
                return {true, "D7.odd-odd-dmg"};
            return {false, "NONE"};
        }
    }
}

} // namespace cmlab
