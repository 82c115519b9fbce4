#include <doctest.h>

#include <random>

#include "cmlab/eisenstein.hpp"
#include "cmlab/sieve.hpp"

using namespace cmlab;

namespace {

std::vector<EisInt> eis_prime_pool(u64 bound) {
    std::vector<EisInt> pool;
    for_each_prime(5, bound, [&](u64 p) {
        if (p % 3 == 1)
            pool.push_back(primary_associate_eis(split_prime_above(p)));
        else
            pool.push_back(primary_associate_eis({i64(p), 0}));
    });
    return pool;
}

} // namespace

TEST_CASE("primary normalization in Z[omega]") {
    CHECK(primary_associate_eis({3, 1}) == EisInt{2, 3});
    CHECK(primary_associate_eis({2, 0}) == EisInt{2, 0});
    CHECK(primary_associate_eis({1, 1}) == EisInt{-1, 0}); // unit -> -1
    CHECK(primary_associate_eis({1, 0}) == EisInt{-1, 0});
    CHECK_THROWS(primary_associate_eis({1, -1})); // 1 - omega
    std::mt19937_64 rng(5);
    for (int it = 0; it < 500; ++it) {
        EisInt z{i64(rng() % 99) - 49, i64(rng() % 99) - 49};
        if (z.is_zero() || z.norm() % 3 == 0) continue;
        EisInt p0 = primary_associate_eis(z);
        CHECK(((p0.re % 3) + 3) % 3 == 2);
        CHECK(p0.om % 3 == 0);
        for (int k = 1; k < 6; ++k) CHECK(primary_associate_eis(unit_w6(k) * z) == p0);
    }
}

TEST_CASE("cubic symbol special values") {
    // (omega | 2+3w)_3 = omega^{(7-1)/3} = omega^2
    CHECK(cubic_symbol_prime({0, 1}, {2, 3}) == SexticValue::omega_power(2));
    CHECK(cubic_symbol_prime({-1, 0}, {2, 3}) == SexticValue::omega_power(0));
    CHECK(cubic_symbol_jacobi({3, 0}, {2, 3}) == SexticValue::omega_power(2));
    CHECK(cubic_symbol_jacobi({5, 0}, {-1, 0}) == SexticValue::omega_power(0)); // unit denom
    // special-value lemmas on random primary xi with (N, 6) = 1:
    //   (2|xi)_3 = w^{2+(-1)^{(a-2)/3} - (-1)^{b/3}},  (1+2w|xi)_3 = w^{b/3},
    //   (3|xi)_3 = w^{2b/3}
    auto pool = eis_prime_pool(800);
    std::mt19937_64 rng(6);
    for (int it = 0; it < 500; ++it) {
        EisInt xi = pool[rng() % pool.size()] * pool[rng() % pool.size()];
        xi = primary_associate_eis(xi);
        if (xi.norm() % 2 == 0) continue;
        i64 a = xi.re, b = xi.om;
        int e2 = int((((2 + ((a - 2) / 3 % 2 ? -1 : 1) - (b / 3 % 2 ? -1 : 1)) % 3) + 3) % 3);
        CHECK(cubic_symbol_jacobi({2, 0}, xi) == SexticValue::omega_power(e2));
        CHECK(cubic_symbol_jacobi({1, 2}, xi) == SexticValue::omega_power(int(((b / 3) % 3 + 3) % 3)));
        CHECK(cubic_symbol_jacobi({3, 0}, xi) ==
              SexticValue::omega_power(int(((2 * b / 3) % 3 + 3) % 3)));
    }
}

TEST_CASE("cubic reciprocity chain vs exponentiation") {
    auto pool = eis_prime_pool(1500);
    std::mt19937_64 rng(43);
    for (int it = 0; it < 3000; ++it) {
        EisInt a{i64(rng() % 101) - 50, i64(rng() % 101) - 50};
        if (a.is_zero()) continue;
        EisInt pi = pool[rng() % pool.size()];
        CHECK(cubic_symbol_jacobi(a, pi) == cubic_symbol_prime(a, pi));
    }
    // conjugation: conj((a|xi)_3) = (conj a | conj xi)_3 = (a|xi)_3^2
    for (int it = 0; it < 1000; ++it) {
        EisInt a{i64(rng() % 41) - 20, i64(rng() % 41) - 20};
        if (a.is_zero()) continue;
        EisInt xi = pool[rng() % pool.size()] * pool[rng() % pool.size()];
        SexticValue v = cubic_symbol_jacobi(a, xi);
        CHECK(v.conj() == cubic_symbol_jacobi(a.conj(), xi.conj()));
        CHECK(v.conj() == v * v);
    }
    // reciprocity for primary pairs with distinct norms
    for (int it = 0; it < 1000; ++it) {
        EisInt e1 = pool[rng() % pool.size()], e2 = pool[rng() % pool.size()];
        if (e1.norm() == e2.norm()) continue;
        CHECK(cubic_symbol_jacobi(e1, e2) == cubic_symbol_jacobi(e2, e1));
    }
}

TEST_CASE("sextic symbol") {
    CHECK(sextic_symbol_rational(1, {2, 3}) == SexticValue::unit(0));
    CHECK(sextic_symbol_rational(7, {2, 3}).zero);
    auto pool = eis_prime_pool(1200);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 1000; ++it) {
        EisInt pi = pool[rng() % pool.size()];
        if (pi.norm() % 2 == 0) continue;
        i64 a = i64(rng() % 997) + 2;
        SexticValue v = sextic_symbol_rational(a, pi);
        int leg = kronecker(a, i64(pi.norm()));
        if (v.zero) {
            CHECK(leg == 0);
            continue;
        }
        CHECK(v * v * v == SexticValue::unit(leg == 1 ? 0 : 3)); // cube law
        SexticValue cubic = cubic_symbol_prime({a, 0}, pi);
        SexticValue expected = leg == 1 ? cubic : cubic * SexticValue::unit(3);
        CHECK(v.conj() == expected); // conjugate relation
    }
}

TEST_CASE("cubic Gauss sums") {
    CHECK(gauss_sum_cubic(7, 1) == EisInt{-7, 0});
    CHECK(gauss_sum_cubic(7, 0) == EisInt{7, 0});
    CHECK(gauss_sum_cubic(5, 0) == EisInt{5, 0});
    for_each_prime(5, 60, [&](u64 p) {
        for (int kappa : {0, 1}) {
            i64 expect = kappa && kronecker(3, i64(p)) == -1 ? -i64(p) : i64(p);
            CHECK(gauss_sum_cubic(p, kappa) == EisInt{expect, 0});
        }
    });
}

TEST_CASE("incomplete cubic sums: examples, closed form, beta relation") {
    auto v = cubic_trace_sum_bruteforce(7, 1, 0, 0);
    CHECK(v == EisUnitValue{Rational(1), 3}); // -1
    CHECK(cubic_trace_sum_closed(7, 1, 0, 0) == EisUnitValue{Rational(1), 3});
    CHECK(cubic_trace_sum_bruteforce(5, 0, 0, 0) == EisUnitValue{Rational(4), 0});
    CHECK(cubic_trace_sum_closed(1, 3, 0, 1) == EisUnitValue{Rational(1), 0});
    for (u64 q : {5ull, 7ull, 25ull, 35ull, 91ull}) {
        CubicTraceSumTable table(q);
        for (i64 t = 0; t < i64(q); ++t) {
            for (int kappa : {0, 1}) {
                EisUnitValue base = table.value(t, 0, kappa);
                for (int b = 0; b < 6; ++b) {
                    EisUnitValue bf = table.value(t, b, kappa);
                    CHECK(bf == cubic_trace_sum_closed(q, t, b, kappa));
                    // C_beta = (conj beta | q)_3 C_1
                    SexticValue rot = cubic_symbol_rational(unit_w6(-b), q);
                    EisUnitValue expect = base;
                    if (!base.scale.is_zero()) expect.unit_k = (base.unit_k + rot.k) % 6;
                    CHECK(bf == expect);
                }
            }
        }
    }
    CHECK_THROWS(cubic_trace_sum_closed(6, 0, 0, 0)); // BAD_MODULUS
}
