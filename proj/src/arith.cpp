#include "cmlab/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cmlab {

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

namespace {

bool composite_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for every n < 3.3e24, far beyond 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (composite_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace {

u64 pollard_brent(u64 n) {
    // Deterministic parameter sweep; n is odd, composite, with no factor < 1e4.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                u64 ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // Backtrack one step at a time.
                    d = 1;
                    y = ys;
                    do {
                        y = (mulmod(y, y, n) + c) % n;
                        d = std::gcd(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
            if (lam > (1 << 26)) break; // cycle bound; retry with next c
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(u64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.value = n;
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    int wi = 0;
    while (p <= 10000 && u128(p) * p <= n) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
        p += wheel[wi];
        wi = (wi + 1) & 7;
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 q : primes) {
        if (!f.factors.empty() && f.factors.back().first == q)
            ++f.factors.back().second;
        else
            f.factors.push_back({q, 1});
    }
    return f;
}

u64 euler_phi(const Factorization& f) {
    u64 r = f.value;
    for (auto& [p, e] : f.factors) {
        (void)e;
        r -= r / p;
    }
    return r;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

int ord_p(i64 n, u64 p) {
    if (n == 0) throw std::invalid_argument("ord_p: n must be nonzero");
    if (p < 2) throw std::invalid_argument("ord_p: p must be a prime");
    u64 m = n < 0 ? u64(-(n + 1)) + 1 : u64(n);
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) throw std::invalid_argument("kronecker: n must be nonzero");
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        // (a|2) by a mod 8
        int v = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++v;
        }
        i64 am8 = ((a % 8) + 8) % 8;
        if (v % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
    }
    // Now n odd positive; Jacobi loop (the symbol is periodic mod n).
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::optional<u64> sqrt_mod(i64 a, u64 p) {
    if (p == 2) return u64(((a % 2) + 2) % 2);
    u64 aa = u64(((a % i64(p)) + i64(p)) % i64(p));
    if (aa == 0) return 0;
    if (powmod(aa, (p - 1) / 2, p) != 1) return std::nullopt;
    u64 x;
    if (p % 4 == 3) {
        x = powmod(aa, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks with the smallest non-residue as generator.
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = s;
        u64 c = powmod(z, q, p);
        u64 t = powmod(aa, q, p);
        u64 r = powmod(aa, (q + 1) / 2, p);
        while (t != 1) {
            u64 i = 0, tt = t;
            while (tt != 1) {
                tt = mulmod(tt, tt, p);
                ++i;
            }
            u64 b = c;
            for (u64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        x = r;
    }
    return std::min(x, p - x);
}

} // namespace cmlab
