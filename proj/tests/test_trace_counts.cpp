#include <doctest.h>

#include <numeric>
#include <set>

#include "cmlab/sieve.hpp"
#include "cmlab/trace_counts.hpp"

using namespace cmlab;

TEST_CASE("trace histogram against a per-prime oracle") {
    CurveSpec c(1, -4);
    TraceHistogram h = count_traces(c, 100, -20, 20, 1);
    // hand-check every prime below 100 with the brute-force counter
    std::map<i64, u64> oracle;
    u64 good = 0;
    for_each_prime(2, 101, [&](u64 p) {
        if (!is_good_prime(c, p)) return;
        ++good;
        ++oracle[ap_bruteforce(c, p)];
    });
    CHECK(h.good_total == good);
    u64 sum = h.overflow;
    for (i64 r = -20; r <= 20; ++r) {
        CHECK(h.count(r) == (oracle.count(r) ? oracle[r] : 0));
        sum += h.count(r);
    }
    CHECK(sum == good);
    CHECK(h.count(-2) >= 1); // a_5 = -2
    // odd traces impossible for D = 1
    for (i64 r = -19; r <= 19; r += 2) CHECK(h.count(r) == 0);
    CHECK(h.bad_skipped == std::vector<u64>{2});
}

TEST_CASE("histogram invariant under thread chunking") {
    CurveSpec c(3, 2);
    TraceHistogram a = count_traces(c, 20000, -8, 8, 1);
    TraceHistogram b = count_traces(c, 20000, -8, 8, 3);
    CHECK(a.good_total == b.good_total);
    CHECK(a.overflow == b.overflow);
    CHECK(a.counts == b.counts);
}

TEST_CASE("fixed-trace counting routes") {
    auto f = count_fixed_trace(2, 2, 1000);
    CHECK(f.via_polynomial == 5); // 3, 19, 73, 163, 883 = 2n^2+1
    CHECK(f.via_elements == 5);
    CHECK_THROWS(count_fixed_trace(2, 0, 100)); // ZERO_R
    // h undefined for D = 1 and odd r: the polynomial route counts zero
    auto g = count_fixed_trace(1, 1, 100000);
    CHECK(g.via_polynomial == 0);
    CHECK(g.via_elements == 0);
    // two routes agree within 10 on the spec grid at 1e5
    for (int D : {2, 7, 11, 19, 43, 67, 163}) {
        for (i64 r : {1, 2, 3, 4}) {
            auto ft = count_fixed_trace(D, r, 100000);
            i64 gap = i64(ft.via_elements) - i64(ft.via_polynomial);
            CHECK(gap <= 10);
            CHECK(gap >= -10);
        }
    }
    // D = 1, 3 have extra units; routes still agree up to O(1)
    for (i64 r : {2, 4}) {
        auto ft = count_fixed_trace(1, r, 100000);
        i64 gap = i64(ft.via_elements) - i64(ft.via_polynomial);
        CHECK(gap <= 10);
        CHECK(gap >= -10);
    }
}

TEST_CASE("norm-class counts") {
    // q = 1 counts all split primes with some trace-r twist
    CHECK(count_norm_class(2, 1000, 2, 1, 0) == 5);
    CHECK(count_norm_class(2, 1000, 2, 8, 3) ==
          [] {
              // independent double loop: primes 2n^2+1 = 3 mod 8
              u64 c = 0;
              for (i64 n = 1; 2 * n * n + 1 <= 1000; ++n)
                  if (is_prime(u64(2 * n * n + 1)) && (2 * n * n + 1) % 8 == 3) ++c;
              return c;
          }());
    CHECK(count_norm_class(7, 10000, 3, 8, 5) ==
          [] {
              // brute force over 4p = t^2 + 7 s^2 with t = 3
              u64 c = 0;
              for (i64 s = 1; 9 + 7 * s * s <= 40000; s += 2) {
                  i64 fourp = 9 + 7 * s * s;
                  if (fourp % 4 != 0) continue;
                  i64 p = fourp / 4;
                  if (is_prime(u64(p)) && p % 8 == 5) ++c;
              }
              return c;
          }());
    CHECK_THROWS(count_norm_class(2, 100, 2, 8, 4)); // BAD_RESIDUE
}

TEST_CASE("gauss and eisenstein class counters") {
    // parameter validation
    CHECK_THROWS(count_gauss_classes(100, 2, 2, 0, 0, 0, 0));  // alpha even
    CHECK_THROWS(count_gauss_classes(100, 2, 1, 0, 0, 1, 0));  // gamma parity
    CHECK_THROWS(count_eis_classes(100, 1, 3, 0, 0, 0, 0, 1)); // gcd(alpha,6)
    // decomposition identities at 1e4
    for (i64 r : {2, 6}) {
        u64 total = gauss_class_total(10000, r, 1);
        u64 two_pi = 2 * count_fixed_trace(1, r, 10000).via_elements;
        i64 gap = i64(total) - i64(two_pi);
        CHECK(gap <= 4);
        CHECK(gap >= -4);
    }
    for (i64 r : {1, 2}) {
        u64 total = eis_class_total(10000, r, 5);
        u64 two_pi = 2 * count_fixed_trace(3, r, 10000).via_elements;
        i64 gap = i64(total) - i64(two_pi);
        CHECK(gap <= 6);
        CHECK(gap >= -6);
    }
    // the single-class counter sums to the one-pass total
    u64 direct = 0;
    for (int d = 0; d < 4; ++d)
        for (int b = 0; b < 4; ++b)
            for (int g1 = 0; g1 <= 7; ++g1)
                for (int g2 = g1 % 2; g2 <= 7; g2 += 2)
                    direct += count_gauss_classes(3000, 2, 5, b, g1, g2, d);
    CHECK(direct == gauss_class_total(3000, 2, 5));
}

TEST_CASE("quadratic progression prime counts") {
    CHECK(count_quadratic_primes({1, 0, 1}, 100) == 4); // 2, 5, 17, 37
    CHECK(count_quadratic_primes_ap({1, 0, 1}, 100, 2, 1) == 1); // odd m: only 2
    CHECK(count_quadratic_primes({2, 0, 1}, 1000) == 5);
    CHECK(count_quadratic_primes({1, 1, 41}, 1600) == 38); // Euler's polynomial, m = 1..38
}

TEST_CASE("residue counts") {
    auto r5 = residue_counts_bruteforce({1, 0, 1}, 5);
    CHECK(r5.n2 == -1);
    CHECK(2 * r5.nplus == r5.n1 + r5.n2);
    CHECK(2 * r5.nminus == r5.n1 - r5.n2);
    // degenerate square discriminant still agrees
    CHECK(residue_counts_bruteforce({1, 0, 0}, 9) == residue_counts_closed({1, 0, 0}, 9));
    CHECK(residue_counts_bruteforce({1, 0, -1}, 15) == residue_counts_closed({1, 0, -1}, 15));
    for (u64 q : {3ull, 9ull, 27ull, 45ull, 99ull}) {
        for (i64 a : {1, 2, -1}) {
            if (std::gcd(u64(a < 0 ? -a : a), q) != 1) continue;
            for (i64 b = -3; b <= 3; ++b)
                for (i64 c = -3; c <= 3; ++c) {
                    if (std::gcd(std::gcd(a, b < 0 ? -b : b), c < 0 ? -c : c) != 1) continue;
                    QuadPoly f{a, b, c};
                    CHECK(residue_counts_bruteforce(f, q) == residue_counts_closed(f, q));
                }
        }
    }
    CHECK_THROWS(residue_counts_closed({1, 0, 1}, 8)); // even modulus
}

TEST_CASE("rho solution counts") {
    CHECK(rho_D_count(11, 1, 8, 1) == 2); // t in {2, 7}
    CHECK(rho_D_mod8_closed(7, 1, 0) == 0); // D = 7 mod 8, odd r
    CHECK(rho_D_mod8_closed(11, 1, 0) == 2);
    CHECK(rho_count(2, 8, 3) == [] {
        u64 c = 0;
        for (i64 t = 0; t < 8; ++t)
            if ((2 * t * t + 1) % 8 == 3) ++c;
        return c;
    }());
    CHECK_THROWS(rho_count(1, 8, 1)); // UNDEFINED for odd r
    for (int D : {7, 11, 19, 43, 67, 163})
        for (i64 r = -24; r <= 24; ++r) {
            if (r == 0) continue;
            for (int k = 0; k < 4; ++k)
                CHECK(rho_D_count(D, r, 8, u64(2 * k + 1)) == rho_D_mod8_closed(D, r, k));
        }
}
