#include "fairalloc/polyomino.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>

namespace fairalloc {

namespace runops {

Polyomino::RowRuns runs_union(const Polyomino::RowRuns& a,
                              const Polyomino::RowRuns& b) {
    Polyomino::RowRuns out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        Polyomino::Run next{};
        if (j >= b.size() || (i < a.size() && a[i].begin <= b[j].begin)) {
            next = a[i++];
        } else {
            next = b[j++];
        }
        if (!out.empty() && next.begin <= out.back().end) {
            out.back().end = std::max(out.back().end, next.end);
        } else {
            out.push_back(next);
        }
    }
    return out;
}

Polyomino::RowRuns runs_difference(const Polyomino::RowRuns& a,
                                   const Polyomino::RowRuns& b) {
    Polyomino::RowRuns out;
    std::size_t j = 0;
    for (const auto& r : a) {
        int32_t cur = r.begin;
        while (j < b.size() && b[j].end <= cur) ++j;
        std::size_t k = j;
        while (cur < r.end) {
            if (k >= b.size() || b[k].begin >= r.end) {
                out.push_back({cur, r.end});
                break;
            }
            if (b[k].begin > cur) out.push_back({cur, b[k].begin});
            cur = std::max(cur, b[k].end);
            if (b[k].end < r.end) ++k;
            else break;
        }
    }
    return out;
}

Polyomino::RowRuns runs_intersection(const Polyomino::RowRuns& a,
                                     const Polyomino::RowRuns& b) {
    Polyomino::RowRuns out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int32_t lo = std::max(a[i].begin, b[j].begin);
        int32_t hi = std::min(a[i].end, b[j].end);
        if (lo < hi) out.push_back({lo, hi});
        if (a[i].end < b[j].end) ++i;
        else ++j;
    }
    return out;
}

bool runs_cover(const Polyomino::RowRuns& cover, int32_t begin, int32_t end) {
    if (begin >= end) return true;
    // Runs are maximal and disjoint, so the whole interval must lie in one.
    auto it = std::upper_bound(cover.begin(), cover.end(), begin,
                               [](int32_t v, const Polyomino::Run& r) {
                                   return v < r.end;
                               });
    return it != cover.end() && it->begin <= begin && end <= it->end;
}

bool runs_contain_col(const Polyomino::RowRuns& runs, int32_t col) {
    auto it = std::upper_bound(runs.begin(), runs.end(), col,
                               [](int32_t v, const Polyomino::Run& r) {
                                   return v < r.end;
                               });
    return it != runs.end() && it->begin <= col;
}

bool runs_touch_closed(const Polyomino::RowRuns& a,
                       const Polyomino::RowRuns& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].begin <= b[j].end && b[j].begin <= a[i].end) return true;
        if (a[i].end < b[j].end) ++i;
        else ++j;
    }
    return false;
}

bool runs_overlap_open(const Polyomino::RowRuns& a,
                       const Polyomino::RowRuns& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].begin < b[j].end && b[j].begin < a[i].end) return true;
        if (a[i].end <= b[j].end) ++i;
        else ++j;
    }
    return false;
}

std::vector<Rat> merge_breakpoints(const std::vector<Rat>& a,
                                   const std::vector<Rat>& b) {
    std::vector<Rat> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Polyomino::RowRuns> reslice(const Polyomino& p,
                                        const std::vector<Rat>& xs,
                                        const std::vector<Rat>& ys) {
    std::vector<Polyomino::RowRuns> out(ys.empty() ? 0 : ys.size() - 1);
    if (p.empty()) return out;

    std::vector<int32_t> xmap(p.xs().size());
    for (std::size_t i = 0; i < p.xs().size(); ++i) {
        auto it = std::lower_bound(xs.begin(), xs.end(), p.xs()[i]);
        xmap[i] = static_cast<int32_t>(it - xs.begin());
    }

    std::size_t j = 0;  // merged row cursor
    for (std::size_t r = 0; r < p.rows().size(); ++r) {
        if (p.rows()[r].empty()) continue;
        Polyomino::RowRuns remapped;
        remapped.reserve(p.rows()[r].size());
        for (const auto& run : p.rows()[r]) {
            remapped.push_back({xmap[run.begin], xmap[run.end]});
        }
        const Rat& lo = p.ys()[r];
        const Rat& hi = p.ys()[r + 1];
        while (j + 1 < ys.size() && ys[j] < lo) ++j;
        for (std::size_t k = j; k + 1 < ys.size() && ys[k] < hi; ++k) {
            out[k] = remapped;
        }
    }
    return out;
}

}  // namespace runops

using namespace runops;

void Polyomino::normalize() {
    // Coalesce per-row runs into maximal form, dropping empty ranges.
    for (auto& row : rows_) {
        RowRuns out;
        out.reserve(row.size());
        for (const auto& r : row) {
            if (r.begin >= r.end) continue;
            if (!out.empty() && out.back().end >= r.begin) {
                out.back().end = std::max(out.back().end, r.end);
            } else {
                out.push_back(r);
            }
        }
        row = std::move(out);
    }

    // Trim empty rows at the extremes.
    std::size_t lo = 0, hi = rows_.size();
    while (lo < hi && rows_[lo].empty()) ++lo;
    while (hi > lo && rows_[hi - 1].empty()) --hi;
    if (lo == hi) {
        xs_.clear();
        ys_.clear();
        rows_.clear();
        return;
    }
    if (lo > 0 || hi < rows_.size()) {
        rows_.assign(rows_.begin() + static_cast<long>(lo),
                     rows_.begin() + static_cast<long>(hi));
        ys_.assign(ys_.begin() + static_cast<long>(lo),
                   ys_.begin() + static_cast<long>(hi) + 1);
    }

    // Merge identical adjacent rows (removes redundant y-breakpoints).
    {
        std::vector<RowRuns> nrows;
        std::vector<Rat> nys;
        nys.push_back(ys_.front());
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            if (!nrows.empty() && nrows.back() == rows_[j]) continue;
            if (!nrows.empty()) nys.push_back(ys_[j]);
            nrows.push_back(std::move(rows_[j]));
        }
        nys.push_back(ys_.back());
        rows_ = std::move(nrows);
        ys_ = std::move(nys);
    }

    // Drop x-breakpoints no run begins or ends at.
    std::vector<char> used(xs_.size(), 0);
    for (const auto& row : rows_) {
        for (const auto& r : row) {
            used[static_cast<std::size_t>(r.begin)] = 1;
            used[static_cast<std::size_t>(r.end)] = 1;
        }
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) {
        std::vector<int32_t> remap(xs_.size(), -1);
        std::vector<Rat> nxs;
        nxs.reserve(xs_.size());
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            if (used[i]) {
                remap[i] = static_cast<int32_t>(nxs.size());
                nxs.push_back(std::move(xs_[i]));
            }
        }
        for (auto& row : rows_) {
            for (auto& r : row) {
                r.begin = remap[static_cast<std::size_t>(r.begin)];
                r.end = remap[static_cast<std::size_t>(r.end)];
            }
        }
        xs_ = std::move(nxs);
    }
}

Polyomino Polyomino::from_raw(std::vector<Rat> xs, std::vector<Rat> ys,
                              std::vector<RowRuns> rows) {
    Polyomino p;
    p.xs_ = std::move(xs);
    p.ys_ = std::move(ys);
    p.rows_ = std::move(rows);
    p.normalize();
    return p;
}

Polyomino Polyomino::from_rect(const RatRect& r) {
    return from_rects(std::span<const RatRect>(&r, 1));
}

Polyomino Polyomino::from_rects(std::span<const RatRect> rects) {
    if (rects.empty()) return {};
    std::vector<Rat> xs, ys;
    xs.reserve(rects.size() * 2);
    ys.reserve(rects.size() * 2);
    for (const auto& r : rects) {
        if (!r.valid()) throw FairallocError("from_rects: degenerate rectangle");
        xs.push_back(r.x0);
        xs.push_back(r.x1);
        ys.push_back(r.y0);
        ys.push_back(r.y1);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    auto xindex = [&xs](const Rat& v) {
        return static_cast<int32_t>(
            std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
    };
    auto yindex = [&ys](const Rat& v) {
        return static_cast<std::size_t>(
            std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
    };

    std::vector<RowRuns> rows(ys.size() - 1);
    for (const auto& r : rects) {
        int32_t ix0 = xindex(r.x0), ix1 = xindex(r.x1);
        for (std::size_t j = yindex(r.y0); j < yindex(r.y1); ++j) {
            rows[j].push_back({ix0, ix1});
        }
    }
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(),
                  [](const Run& a, const Run& b) { return a.begin < b.begin; });
        RowRuns merged;
        for (const auto& r : row) {
            if (!merged.empty() && r.begin <= merged.back().end) {
                merged.back().end = std::max(merged.back().end, r.end);
            } else {
                merged.push_back(r);
            }
        }
        row = std::move(merged);
    }
    return from_raw(std::move(xs), std::move(ys), std::move(rows));
}

Polyomino Polyomino::from_cells(const Int& scale, std::vector<GridCell> cells) {
    if (scale <= 0) throw FairallocError("from_cells: scale must be positive");
    std::vector<RatRect> rects;
    rects.reserve(cells.size());
    Rat inv = rat(Int(1), scale);
    for (const auto& c : cells) {
        Rat x0 = rat(Int(c.x), scale);
        Rat y0 = rat(Int(c.y), scale);
        rects.push_back(RatRect{x0, y0, x0 + inv, y0 + inv});
    }
    return from_rects(rects);
}

Rat Polyomino::area() const {
    Rat total = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (rows_[j].empty()) continue;
        Rat width = 0;
        for (const auto& r : rows_[j]) {
            width += xs_[static_cast<std::size_t>(r.end)] -
                     xs_[static_cast<std::size_t>(r.begin)];
        }
        total += width * (ys_[j + 1] - ys_[j]);
    }
    return total;
}

RatRect Polyomino::bbox() const {
    if (empty()) throw FairallocError("bbox of empty polyomino");
    // Canonical form keeps the extreme breakpoints tight.
    return RatRect{xs_.front(), ys_.front(), xs_.back(), ys_.back()};
}

std::size_t Polyomino::run_count() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
}

std::size_t Polyomino::tensor_cell_count() const {
    std::size_t n = 0;
    for (const auto& row : rows_) {
        for (const auto& r : row) {
            n += static_cast<std::size_t>(r.end - r.begin);
        }
    }
    return n;
}

Polyomino Polyomino::translated(const RatPoint& v) const {
    Polyomino p = *this;
    for (auto& x : p.xs_) x += v.x;
    for (auto& y : p.ys_) y += v.y;
    return p;
}

Polyomino Polyomino::scaled(const Rat& factor) const {
    if (factor <= 0) throw FairallocError("scaled: factor must be positive");
    Polyomino p = *this;
    for (auto& x : p.xs_) x *= factor;
    for (auto& y : p.ys_) y *= factor;
    return p;
}

Int Polyomino::scale() const {
    Int m = 1;
    for (const auto& v : xs_) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& v : ys_) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.get_den().get_mpz_t());
    return m;
}

std::vector<GridCell> Polyomino::cells_at_scale(const Int& m,
                                                std::size_t cap) const {
    if (m <= 0)
        throw FairallocError("invalid refinement: scale must be positive");
    if (m % scale() != 0)
        throw FairallocError("invalid refinement: not a multiple of the scale");
    if (empty()) return {};
    Rat count = area() * m * m;  // exact integer by the divisibility check
    if (!is_integer(count) || count > static_cast<unsigned long>(cap)) {
        throw FairallocError("cells_at_scale: cell count exceeds cap");
    }
    std::vector<GridCell> cells;
    cells.reserve(count.get_num().get_ui());
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        Rat ry0 = ys_[j] * m, ry1 = ys_[j + 1] * m;
        long y0 = static_cast<long>(ry0.get_num().get_si());
        long y1 = static_cast<long>(ry1.get_num().get_si());
        for (const auto& r : rows_[j]) {
            Rat rx0 = xs_[static_cast<std::size_t>(r.begin)] * m;
            Rat rx1 = xs_[static_cast<std::size_t>(r.end)] * m;
            long x0 = static_cast<long>(rx0.get_num().get_si());
            long x1 = static_cast<long>(rx1.get_num().get_si());
            for (long x = x0; x < x1; ++x) {
                for (long y = y0; y < y1; ++y) {
                    cells.push_back({x, y});
                }
            }
        }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

Polyomino Polyomino::refined(const Int& m) const {
    if (m <= 0) throw FairallocError("invalid refinement: scale must be positive");
    if (m % scale() != 0)
        throw FairallocError("invalid refinement: not a multiple of the scale");
    return *this;
}

namespace {

// Complement of the rows within a one-ring padded index box. Row index j in
// [0, nrows+2), column indices in [0, ncols+2); original run [a,b) appears
// as [a+1, b+1).
std::vector<Polyomino::RowRuns> padded_complement(
    const std::vector<Polyomino::RowRuns>& rows, int32_t ncols) {
    std::vector<Polyomino::RowRuns> comp(rows.size() + 2);
    const int32_t width = ncols + 2;
    comp.front() = {{0, width}};
    comp.back() = {{0, width}};
    for (std::size_t j = 0; j < rows.size(); ++j) {
        Polyomino::RowRuns& out = comp[j + 1];
        int32_t cur = 0;
        for (const auto& r : rows[j]) {
            if (r.begin + 1 > cur) out.push_back({cur, r.begin + 1});
            cur = r.end + 1;
        }
        if (cur < width) out.push_back({cur, width});
    }
    return comp;
}

// Marks runs reachable from the given start; returns visited flags indexed
// by run id under `offset`.
std::vector<char> flood_runs(const std::vector<Polyomino::RowRuns>& rows,
                             const std::vector<std::size_t>& offset,
                             std::size_t start_row, std::size_t start_run) {
    std::vector<char> seen(offset.back(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> queue;
    queue.emplace_back(start_row, start_run);
    seen[offset[start_row] + start_run] = 1;
    while (!queue.empty()) {
        auto [j, ri] = queue.back();
        queue.pop_back();
        const Polyomino::Run& run = rows[j][ri];
        for (int dj : {-1, 1}) {
            if (dj < 0 && j == 0) continue;
            std::size_t nj = j + static_cast<std::size_t>(dj);
            if (nj >= rows.size()) continue;
            const auto& nrow = rows[nj];
            auto it = std::upper_bound(nrow.begin(), nrow.end(), run.begin,
                                       [](int32_t v, const Polyomino::Run& r) {
                                           return v < r.end;
                                       });
            for (; it != nrow.end() && it->begin < run.end; ++it) {
                std::size_t id = offset[nj] +
                                 static_cast<std::size_t>(it - nrow.begin());
                if (!seen[id]) {
                    seen[id] = 1;
                    queue.emplace_back(nj,
                                       static_cast<std::size_t>(it - nrow.begin()));
                }
            }
        }
    }
    return seen;
}

std::vector<std::size_t> run_offsets(const std::vector<Polyomino::RowRuns>& rows) {
    std::vector<std::size_t> offset(rows.size() + 1, 0);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        offset[j + 1] = offset[j] + rows[j].size();
    }
    return offset;
}

}  // namespace

bool Polyomino::is_connected() const {
    if (empty()) return false;
    // Runs in adjacent rows connect iff their index intervals overlap;
    // tensor cells there share a full edge.
    auto offset = run_offsets(rows_);
    auto seen = flood_runs(rows_, offset, 0, 0);
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

bool Polyomino::is_simple() const {
    if (empty()) return false;
    if (!is_connected()) return false;
    auto comp = padded_complement(rows_, static_cast<int32_t>(xs_.size()) - 1);
    auto offset = run_offsets(comp);
    auto seen = flood_runs(comp, offset, 0, 0);
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

Polyomino Polyomino::fill_holes() const {
    if (empty()) return {};
    auto comp = padded_complement(rows_, static_cast<int32_t>(xs_.size()) - 1);
    auto offset = run_offsets(comp);
    auto seen = flood_runs(comp, offset, 0, 0);
    std::vector<RowRuns> rows = rows_;
    bool changed = false;
    for (std::size_t j = 1; j + 1 < comp.size(); ++j) {
        for (std::size_t ri = 0; ri < comp[j].size(); ++ri) {
            if (seen[offset[j] + ri]) continue;
            const Run& r = comp[j][ri];
            rows[j - 1].push_back({r.begin - 1, r.end - 1});
            changed = true;
        }
    }
    if (!changed) return *this;
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(),
                  [](const Run& a, const Run& b) { return a.begin < b.begin; });
    }
    return from_raw(xs_, ys_, std::move(rows));
}

std::vector<Polyomino> Polyomino::components() const {
    std::vector<Polyomino> out;
    if (empty()) return out;
    auto offset = run_offsets(rows_);
    std::vector<int> label(offset.back(), -1);
    int ncomp = 0;
    for (std::size_t j0 = 0; j0 < rows_.size(); ++j0) {
        for (std::size_t r0 = 0; r0 < rows_[j0].size(); ++r0) {
            if (label[offset[j0] + r0] >= 0) continue;
            int id = ncomp++;
            std::vector<std::pair<std::size_t, std::size_t>> queue{{j0, r0}};
            label[offset[j0] + r0] = id;
            while (!queue.empty()) {
                auto [j, ri] = queue.back();
                queue.pop_back();
                const Run& run = rows_[j][ri];
                for (int dj : {-1, 1}) {
                    if (dj < 0 && j == 0) continue;
                    std::size_t nj = j + static_cast<std::size_t>(dj);
                    if (nj >= rows_.size()) continue;
                    const auto& nrow = rows_[nj];
                    auto it = std::upper_bound(
                        nrow.begin(), nrow.end(), run.begin,
                        [](int32_t v, const Run& r) { return v < r.end; });
                    for (; it != nrow.end() && it->begin < run.end; ++it) {
                        std::size_t nid = offset[nj] +
                                          static_cast<std::size_t>(it - nrow.begin());
                        if (label[nid] < 0) {
                            label[nid] = id;
                            queue.emplace_back(
                                nj, static_cast<std::size_t>(it - nrow.begin()));
                        }
                    }
                }
            }
        }
    }
    std::vector<std::vector<RowRuns>> crows(
        static_cast<std::size_t>(ncomp),
        std::vector<RowRuns>(rows_.size()));
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (std::size_t ri = 0; ri < rows_[j].size(); ++ri) {
            crows[static_cast<std::size_t>(label[offset[j] + ri])][j].push_back(
                rows_[j][ri]);
        }
    }
    out.reserve(static_cast<std::size_t>(ncomp));
    for (auto& rows : crows) {
        out.push_back(from_raw(xs_, ys_, std::move(rows)));
    }
    return out;
}

PointClass Polyomino::classify_point(const RatPoint& p) const {
    if (empty()) return PointClass::outside;
    const int32_t ncols = static_cast<int32_t>(xs_.size()) - 1;
    const int32_t nrows = static_cast<int32_t>(rows_.size());

    auto axis_cells = [](const std::vector<Rat>& bps, const Rat& v,
                         int32_t& lo, int32_t& hi) {
        // Incident index range [lo, hi] of cells touching coordinate v,
        // possibly outside [0, n) when v is at or beyond the extremes.
        auto it = std::lower_bound(bps.begin(), bps.end(), v);
        if (it == bps.end()) {
            lo = hi = static_cast<int32_t>(bps.size()) - 1;  // virtual, outside
            return;
        }
        int32_t i = static_cast<int32_t>(it - bps.begin());
        if (*it == v) {
            lo = i - 1;
            hi = i;
        } else {
            lo = hi = i - 1;
        }
    };

    int32_t cx0, cx1, cy0, cy1;
    axis_cells(xs_, p.x, cx0, cx1);
    axis_cells(ys_, p.y, cy0, cy1);

    bool any = false, all = true;
    for (int32_t cy = cy0; cy <= cy1; ++cy) {
        for (int32_t cx = cx0; cx <= cx1; ++cx) {
            bool in = cy >= 0 && cy < nrows && cx >= 0 && cx < ncols &&
                      runs_contain_col(rows_[static_cast<std::size_t>(cy)], cx);
            any = any || in;
            all = all && in;
        }
    }
    if (!any) return PointClass::outside;
    return all ? PointClass::interior : PointClass::boundary;
}

Rat Polyomino::squared_diameter() const {
    if (empty()) throw FairallocError("squared_diameter of empty polyomino");
    std::vector<RatPoint> pts;
    pts.reserve(run_count() * 4);
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (const auto& r : rows_[j]) {
            const Rat& x0 = xs_[static_cast<std::size_t>(r.begin)];
            const Rat& x1 = xs_[static_cast<std::size_t>(r.end)];
            pts.push_back({x0, ys_[j]});
            pts.push_back({x1, ys_[j]});
            pts.push_back({x0, ys_[j + 1]});
            pts.push_back({x1, ys_[j + 1]});
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Monotone-chain convex hull; diameter of the set equals the diameter
    // of its hull, attained at hull vertices.
    auto cross = [](const RatPoint& o, const RatPoint& a,
                    const RatPoint& b) -> Rat {
        return Rat((a.x - o.x) * (b.y - o.y)) - Rat((a.y - o.y) * (b.x - o.x));
    };
    std::vector<RatPoint> hull;
    if (pts.size() <= 2) {
        hull = pts;
    } else {
        hull.resize(pts.size() * 2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
            hull[k++] = pts[i];
        }
        std::size_t lower = k + 1;
        for (std::size_t i = pts.size() - 1; i-- > 0;) {
            while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
            hull[k++] = pts[i];
        }
        hull.resize(k - 1);
    }
    Rat best = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        for (std::size_t j = i + 1; j < hull.size(); ++j) {
            Rat d = squared_distance(hull[i], hull[j]);
            if (d > best) best = d;
        }
    }
    return best;
}

Polyomino Polyomino::dyadic_cover(long g) const {
    if (empty()) return {};
    Rat s = pow2(g);
    Rat inv = pow2(-g);
    std::vector<RatRect> rects;
    rects.reserve(run_count());
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (const auto& r : rows_[j]) {
            Rat x0 = rat_floor(xs_[static_cast<std::size_t>(r.begin)] * s) * inv;
            Rat x1 = rat_ceil(xs_[static_cast<std::size_t>(r.end)] * s) * inv;
            Rat y0 = rat_floor(ys_[j] * s) * inv;
            Rat y1 = rat_ceil(ys_[j + 1] * s) * inv;
            rects.push_back(RatRect{x0, y0, x1, y1});
        }
    }
    return from_rects(rects);
}

namespace {

struct MergedPair {
    std::vector<Rat> xs, ys;
    std::vector<Polyomino::RowRuns> a, b;
};

MergedPair merge_pair(const Polyomino& pa, const Polyomino& pb) {
    MergedPair m;
    m.xs = merge_breakpoints(pa.xs(), pb.xs());
    m.ys = merge_breakpoints(pa.ys(), pb.ys());
    m.a = reslice(pa, m.xs, m.ys);
    m.b = reslice(pb, m.xs, m.ys);
    return m;
}

}  // namespace

Polyomino poly_union(const Polyomino& a, const Polyomino& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    auto m = merge_pair(a, b);
    std::vector<Polyomino::RowRuns> rows(m.a.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        rows[j] = runs_union(m.a[j], m.b[j]);
    }
    return Polyomino::from_raw(std::move(m.xs), std::move(m.ys), std::move(rows));
}

Polyomino poly_difference(const Polyomino& a, const Polyomino& b) {
    if (a.empty() || b.empty()) return a;
    auto m = merge_pair(a, b);
    std::vector<Polyomino::RowRuns> rows(m.a.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        rows[j] = runs_difference(m.a[j], m.b[j]);
    }
    return Polyomino::from_raw(std::move(m.xs), std::move(m.ys), std::move(rows));
}

Polyomino poly_intersection(const Polyomino& a, const Polyomino& b) {
    if (a.empty() || b.empty()) return {};
    auto m = merge_pair(a, b);
    std::vector<Polyomino::RowRuns> rows(m.a.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        rows[j] = runs_intersection(m.a[j], m.b[j]);
    }
    return Polyomino::from_raw(std::move(m.xs), std::move(m.ys), std::move(rows));
}

bool are_disjoint(const Polyomino& a, const Polyomino& b) {
    if (a.empty() || b.empty()) return true;
    RatRect ba = a.bbox(), bb = b.bbox();
    if (ba.x1 < bb.x0 || bb.x1 < ba.x0 || ba.y1 < bb.y0 || bb.y1 < ba.y0) {
        return true;
    }
    auto m = merge_pair(a, b);
    for (std::size_t j = 0; j < m.a.size(); ++j) {
        if (runs_touch_closed(m.a[j], m.b[j])) return false;
        if (j + 1 < m.a.size()) {
            if (runs_touch_closed(m.a[j], m.b[j + 1])) return false;
            if (runs_touch_closed(m.a[j + 1], m.b[j])) return false;
        }
    }
    return true;
}

bool in_interior(const Polyomino& outer, const Polyomino& inner) {
    if (inner.empty()) return true;
    if (outer.empty()) return false;
    auto m = merge_pair(outer, inner);
    const int32_t ncols = static_cast<int32_t>(m.xs.size()) - 1;
    const std::size_t nrows = m.a.size();
    for (std::size_t j = 0; j < nrows; ++j) {
        for (const auto& r : m.b[j]) {
            if (j == 0 || j + 1 == nrows) return false;
            if (r.begin == 0 || r.end == ncols) return false;
            if (!runs_cover(m.a[j - 1], r.begin - 1, r.end + 1)) return false;
            if (!runs_cover(m.a[j], r.begin - 1, r.end + 1)) return false;
            if (!runs_cover(m.a[j + 1], r.begin - 1, r.end + 1)) return false;
        }
    }
    return true;
}

bool contains_subset(const Polyomino& outer, const Polyomino& inner) {
    if (inner.empty()) return true;
    if (outer.empty()) return false;
    auto m = merge_pair(outer, inner);
    for (std::size_t j = 0; j < m.a.size(); ++j) {
        for (const auto& r : m.b[j]) {
            if (!runs_cover(m.a[j], r.begin, r.end)) return false;
        }
    }
    return true;
}

}  // namespace fairalloc
