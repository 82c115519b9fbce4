#include <doctest.h>

#include <random>

#include "cmlab/gaussian.hpp"
#include "cmlab/sieve.hpp"

using namespace cmlab;

namespace {

std::vector<GaussInt> gauss_prime_pool(u64 bound) {
    std::vector<GaussInt> pool;
    for_each_prime(3, bound, [&](u64 p) {
        if (p % 4 == 1) {
            auto [m, n] = two_squares_prime(p);
            pool.push_back(primary_associate({i64(m), i64(n)}));
        } else {
            pool.push_back(primary_associate({i64(p), 0}));
        }
    });
    return pool;
}

} // namespace

TEST_CASE("primary normalization in Z[i]") {
    CHECK(primary_associate({1, 2}) == GaussInt{-1, -2});
    CHECK(primary_associate({3, 0}) == GaussInt{-3, 0});
    CHECK(primary_associate({1, 0}) == GaussInt{1, 0});
    CHECK(primary_associate({0, 1}) == GaussInt{1, 0}); // units map to 1
    CHECK_THROWS(primary_associate({1, 1}));            // even
    // normalization is constant on unit orbits
    std::mt19937_64 rng(1);
    for (int it = 0; it < 500; ++it) {
        GaussInt z{i64(rng() % 99) - 49, i64(rng() % 99) - 49};
        if (z.is_zero() || !z.is_odd()) continue;
        GaussInt p0 = primary_associate(z);
        for (int k = 1; k < 4; ++k) CHECK(primary_associate(unit_i(k) * z) == p0);
    }
}

TEST_CASE("quartic symbol values from the supplementary laws") {
    // (2 | -1-2i)_4 = i via the law at 2
    CHECK(quartic_symbol_jacobi({2, 0}, {-1, -2}) == QuarticValue::unit(1));
    // (i | xi)_4 = i^{(N-1)/4}; xi = -1+2i has norm 5
    CHECK(quartic_symbol_prime({0, 1}, {-1, 2}) == QuarticValue::unit(1));
    CHECK(quartic_symbol_prime({1, 0}, {-1, 2}) == QuarticValue::unit(0));
    GaussInt pi{-1, 2};
    CHECK(quartic_symbol_prime(pi, pi).zero);
    // rational modulus
    CHECK(quartic_symbol_rational({7, 0}, 15) == QuarticValue::unit(0));
    CHECK(quartic_symbol_rational({0, 1}, 3) == QuarticValue::unit(2));
    CHECK(quartic_symbol_rational({1, 2}, 3) == QuarticValue::unit(1));
    CHECK(quartic_symbol_jacobi({3, 0}, {1, 0}) == QuarticValue::unit(0)); // unit denominator
}

TEST_CASE("quartic reciprocity chain vs exponentiation") {
    auto pool = gauss_prime_pool(1500);
    std::mt19937_64 rng(42);
    for (int it = 0; it < 3000; ++it) {
        GaussInt a{i64(rng() % 101) - 50, i64(rng() % 101) - 50};
        if (a.is_zero()) continue;
        GaussInt pi = pool[rng() % pool.size()];
        CHECK(quartic_symbol_jacobi(a, pi) == quartic_symbol_prime(a, pi));
    }
    // composite denominators: multiplicativity over the factorization
    for (int it = 0; it < 1000; ++it) {
        GaussInt a{i64(rng() % 41) - 20, i64(rng() % 41) - 20};
        if (a.is_zero()) continue;
        GaussInt x1 = pool[rng() % pool.size()], x2 = pool[rng() % pool.size()];
        CHECK(quartic_symbol_jacobi(a, x1 * x2) ==
              quartic_symbol_prime(a, x1) * quartic_symbol_prime(a, x2));
    }
}

TEST_CASE("Sun identity") {
    auto odd_primes = primes_in_range(3, 500);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 1000; ++it) {
        GaussInt xi{i64(rng() % 101) - 50, i64(rng() % 101) - 50};
        if (xi.is_zero()) continue;
        u64 p = odd_primes[rng() % odd_primes.size()];
        QuarticValue v = quartic_symbol_rational(xi, p);
        int sq = v.zero ? 0 : ((2 * v.k) % 4 == 0 ? 1 : -1);
        CHECK(sq == kronecker(i64(xi.norm() % p), i64(p)));
    }
}

TEST_CASE("quartic Gauss sums") {
    CHECK(gauss_sum_quartic(3) == GaussInt{-3, 0});
    CHECK(gauss_sum_quartic(5) == GaussInt{-5, 0});
    CHECK(gauss_sum_quartic(13) == GaussInt{-13, 0});
    for_each_prime(3, 60, [&](u64 p) {
        GaussInt expect{quartic_symbol_i_rational(p) * i64(p), 0};
        CHECK(gauss_sum_quartic(p) == expect);
    });
}

TEST_CASE("incomplete quartic sums: examples and closed form") {
    CHECK(quartic_trace_sum_bruteforce(3, 1, 0) == GaussInt{1, 0});
    CHECK(quartic_trace_sum_bruteforce(3, 0, 0) == GaussInt{-2, 0});
    CHECK(quartic_trace_sum_closed(3, 1, 0) == Rational(1));
    CHECK(quartic_trace_sum_closed(1, 5, 2) == Rational(1)); // empty modulus
    for (u64 q : {3ull, 9ull, 15ull, 45ull, 99ull}) {
        QuarticTraceSumTable table(q);
        for (i64 t = 0; t < i64(q); ++t) {
            for (int b = 0; b < 4; ++b) {
                GaussInt bf = table.value(t, b);
                CHECK(bf.im == 0);
                CHECK(Rational(bf.re) == quartic_trace_sum_closed(q, t, b));
                // beta-relation: Q_beta = (beta|q)_4 Q_1 with (i|q)_4 = +-1
                int sgn = b % 2 == 0 ? 1 : quartic_symbol_i_rational(q);
                GaussInt base = table.value(t, 0);
                GaussInt expect = b % 4 < 2 ? base : base; // (-1|q)_4 = 1
                expect = {sgn * expect.re, 0};
                if (b == 0 || b == 2)
                    CHECK(bf == base);
                else
                    CHECK(bf == expect);
            }
        }
    }
    CHECK_THROWS(quartic_trace_sum_bruteforce(1001, 0, 0)); // TOO_LARGE
    CHECK_THROWS(quartic_trace_sum_closed(4, 0, 0));        // even modulus
}
