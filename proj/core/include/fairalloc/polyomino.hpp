// Rational polyominos: finite unions of closed axis-aligned rectangles with
// rational corners, stored on the tensor grid of their own breakpoints.
//
// A value is a sorted vector of x-breakpoints, a sorted vector of
// y-breakpoints and, per row (gap between consecutive y-breakpoints), a
// sorted list of maximal half-open column-index runs.  The canonical form
// has no mergeable rows, no unused breakpoints and no empty leading or
// trailing rows, so two polyominos are equal as point sets iff their
// representations are equal.  Uniform-scale views (scale m, integer cell
// set) are available through cells_at_scale / from_cells.
//
// All operations are exact; nothing here rounds.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fairalloc/rational.hpp"

namespace fairalloc {

enum class PointClass { interior, boundary, outside };

struct GridCell {
    long x;
    long y;
    bool operator==(const GridCell& o) const { return x == o.x && y == o.y; }
    bool operator<(const GridCell& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

class Polyomino {
public:
    // Half-open column index range [begin, end), indices into xs().
    struct Run {
        int32_t begin;
        int32_t end;
        bool operator==(const Run& o) const {
            return begin == o.begin && end == o.end;
        }
    };
    using RowRuns = std::vector<Run>;

    Polyomino() = default;  // the empty polyomino

    static Polyomino from_rect(const RatRect& r);
    static Polyomino from_rects(std::span<const RatRect> rects);
    static Polyomino from_cells(const Int& scale, std::vector<GridCell> cells);
    // Takes ownership of a raw grid and normalizes it. Runs per row must be
    // sorted, disjoint and non-empty-range; rows.size()+1 == ys.size().
    static Polyomino from_raw(std::vector<Rat> xs, std::vector<Rat> ys,
                              std::vector<RowRuns> rows);

    bool empty() const { return rows_.empty(); }
    Rat area() const;
    RatRect bbox() const;  // requires non-empty
    std::size_t run_count() const;
    std::size_t tensor_cell_count() const;

    const std::vector<Rat>& xs() const { return xs_; }
    const std::vector<Rat>& ys() const { return ys_; }
    const std::vector<RowRuns>& rows() const { return rows_; }

    bool operator==(const Polyomino& o) const {
        return xs_ == o.xs_ && ys_ == o.ys_ && rows_ == o.rows_;
    }
    bool operator!=(const Polyomino& o) const { return !(*this == o); }

    Polyomino translated(const RatPoint& v) const;
    Polyomino scaled(const Rat& factor) const;  // factor > 0

    // Smallest m with all breakpoints in (1/m)Z; 1 for the empty polyomino.
    Int scale() const;
    // Integer cells of the scale-m uniform view, sorted lexicographically.
    // m must be a positive multiple of scale(); throws FairallocError
    // ("invalid refinement") otherwise, or if the count would exceed cap.
    std::vector<GridCell> cells_at_scale(const Int& m,
                                         std::size_t cap = 1u << 22) const;
    // Validates the refinement precondition and returns the (identical)
    // point set; observe the refined cell set via cells_at_scale.
    Polyomino refined(const Int& m) const;

    bool is_connected() const;  // 4-adjacency; false for empty
    bool is_simple() const;     // connected with connected complement
    PointClass classify_point(const RatPoint& p) const;
    bool contains_point(const RatPoint& p) const {
        return classify_point(p) != PointClass::outside;
    }
    Rat squared_diameter() const;  // throws on empty

    std::vector<Polyomino> components() const;
    Polyomino fill_holes() const;
    // Smallest polyomino made of scale-2^g dyadic squares containing *this.
    Polyomino dyadic_cover(long g) const;

    friend Polyomino poly_union(const Polyomino& a, const Polyomino& b);
    friend Polyomino poly_difference(const Polyomino& a, const Polyomino& b);
    friend Polyomino poly_intersection(const Polyomino& a, const Polyomino& b);
    // Closed sets share no point (no cell, face or corner at the common
    // refinement); disjoint compacts are automatically at positive distance.
    friend bool are_disjoint(const Polyomino& a, const Polyomino& b);
    // inner is contained in the topological interior of outer.
    friend bool in_interior(const Polyomino& outer, const Polyomino& inner);
    // inner is a subset of outer (as closed point sets).
    friend bool contains_subset(const Polyomino& outer, const Polyomino& inner);

private:
    std::vector<Rat> xs_;
    std::vector<Rat> ys_;
    std::vector<RowRuns> rows_;

    void normalize();
    friend struct PolyominoAccess;
};

// Run-list helpers shared with the carver and the tests. All lists are
// sorted, disjoint, maximal.
namespace runops {
Polyomino::RowRuns runs_union(const Polyomino::RowRuns& a,
                              const Polyomino::RowRuns& b);
Polyomino::RowRuns runs_difference(const Polyomino::RowRuns& a,
                                   const Polyomino::RowRuns& b);
Polyomino::RowRuns runs_intersection(const Polyomino::RowRuns& a,
                                     const Polyomino::RowRuns& b);
bool runs_cover(const Polyomino::RowRuns& cover, int32_t begin, int32_t end);
bool runs_contain_col(const Polyomino::RowRuns& runs, int32_t col);
// Any pair of runs whose closed column spans touch or overlap.
bool runs_touch_closed(const Polyomino::RowRuns& a, const Polyomino::RowRuns& b);
bool runs_overlap_open(const Polyomino::RowRuns& a, const Polyomino::RowRuns& b);

// Re-expresses p on a finer breakpoint grid; xs/ys must contain every
// breakpoint of p. Rows outside p's span come back empty.
std::vector<Polyomino::RowRuns> reslice(const Polyomino& p,
                                        const std::vector<Rat>& xs,
                                        const std::vector<Rat>& ys);
std::vector<Rat> merge_breakpoints(const std::vector<Rat>& a,
                                   const std::vector<Rat>& b);
}  // namespace runops

}  // namespace fairalloc
