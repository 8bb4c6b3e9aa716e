#pragma once

#include <cstdint>
#include <string>

#include "gono/errors.hpp"

namespace gono {

// All exact arithmetic runs on int128 with explicit overflow checks. Overflow is a
// hard capacity_error; nothing in the library wraps silently.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw capacity_error("int128 add overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw capacity_error("int128 sub overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw capacity_error("int128 mul overflow");
    return r;
}

// Remainder in [0, m); m > 0.
inline int128 mod_floor(int128 a, int128 m) {
    int128 r = a % m;
    if (r < 0) r += m;
    return r;
}

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string digits;
    while (u != 0) {
        digits.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

// Parses an optionally signed decimal string; rejects junk and overflow.
inline int128 parse_int128(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i >= s.size()) throw precondition_error("empty integer literal");
    int128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw precondition_error("bad integer literal: " + s);
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

} // namespace gono
