#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? u128(-(v + 1)) + 1 : u128(v);
    char buf[48];
    int n = 0;
    while (x) {
        buf[n++] = char('0' + int(x % 10));
        x /= 10;
    }
    std::string s;
    if (neg) s.push_back('-');
    while (n) s.push_back(buf[--n]);
    return s;
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace cmlab
