// Exact rational scalars, points and axis-aligned rectangles.
// All coordinates and areas in the library are arbitrary-precision
// rationals; no floating point enters any geometric decision.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairalloc {

// mpq_class arithmetic keeps values canonical (lowest terms, positive
// denominator) as long as inputs are canonical; the factories below are
// the only places that construct a Rat from raw parts.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// 2^e as an exact rational, e may be negative.
inline Rat pow2(long e) {
    Rat r = 1;
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) {
    return floor_div(r.get_num(), r.get_den());
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline double to_double(const Rat& r) { return r.get_d(); }

// "n/d" or "n"; exact round trip with rat_to_string.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(s);
    } else {
        r = Rat(s);  // mpq_class parses "n/d" directly
    }
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

struct RatPoint {
    Rat x;
    Rat y;

    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RatPoint& o) const { return !(*this == o); }
    // Lexicographic by (x, y); the point enumeration order used throughout.
    bool operator<(const RatPoint& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return y < o.y;
    }
    RatPoint operator+(const RatPoint& o) const { return {x + o.x, y + o.y}; }
    RatPoint operator-(const RatPoint& o) const { return {x - o.x, y - o.y}; }
};

inline Rat squared_distance(const RatPoint& a, const RatPoint& b) {
    Rat dx = a.x - b.x;
    Rat dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Closed axis-aligned rectangle [x0,x1] x [y0,y1], x0 < x1, y0 < y1.
struct RatRect {
    Rat x0, y0, x1, y1;

    bool valid() const { return x0 < x1 && y0 < y1; }
    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
    Rat area() const { return width() * height(); }
    RatPoint center() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }

    bool contains(const RatPoint& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    bool contains_strictly(const RatPoint& p) const {
        return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1;
    }
    RatRect translated(const RatPoint& v) const {
        return {x0 + v.x, y0 + v.y, x1 + v.x, y1 + v.y};
    }
    bool operator==(const RatRect& o) const {
        return x0 == o.x0 && y0 == o.y0 && x1 == o.x1 && y1 == o.y1;
    }
};

// Intersection of closed rectangles; empty result reported via flag.
inline bool rect_intersect(const RatRect& a, const RatRect& b, RatRect& out) {
    Rat x0 = std::max(a.x0, b.x0);
    Rat y0 = std::max(a.y0, b.y0);
    Rat x1 = std::min(a.x1, b.x1);
    Rat y1 = std::min(a.y1, b.y1);
    if (x0 >= x1 || y0 >= y1) return false;
    out = RatRect{x0, y0, x1, y1};
    return true;
}

struct FairallocError : std::runtime_error {
    explicit FairallocError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairalloc
