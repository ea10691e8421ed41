#include "fairalloc/stern_brocot.hpp"

namespace fairalloc {

namespace {

// First Stern-Brocot hit of the open interval; minimizes numerator and
// denominator simultaneously (every other rational in the interval is a
// tree descendant of the hit, hence has both components at least as large).
// unbounded_hi means the interval is (lo, +inf).
Rat simplest_rec(const Rat& lo, const Rat& hi, bool unbounded_hi) {
    Int f = rat_floor(lo);
    Rat candidate(f + 1);
    if (unbounded_hi || candidate < hi) return candidate;
    Rat flo = lo - candidate + 1;  // lo - f, in [0, 1)
    Rat fhi = hi - candidate + 1;  // hi - f, in (0, 1]
    Rat inner;
    if (flo == 0) {
        inner = simplest_rec(1 / fhi, Rat(0), true);
    } else {
        inner = simplest_rec(1 / fhi, 1 / flo, false);
    }
    return Rat(f) + 1 / inner;
}

}  // namespace

Rat simplest_in_open_interval(const Rat& lo, const Rat& hi) {
    if (lo >= hi) {
        throw FairallocError("simplest_in_open_interval: empty interval");
    }
    return simplest_rec(lo, hi, false);
}

}  // namespace fairalloc
