#include <doctest.h>

#include <random>
#include <set>

#include "fairalloc/polyomino.hpp"
#include "oracles.hpp"

using namespace fairalloc;

namespace {

Polyomino unit_square() {
    return Polyomino::from_rect({rat(0), rat(0), rat(1), rat(1)});
}

oracle::CellSet random_blob(std::mt19937& rng, int n) {
    oracle::CellSet cells{{0, 0}};
    std::uniform_int_distribution<int> dir(0, 3);
    while (static_cast<int>(cells.size()) < n) {
        auto it = cells.begin();
        std::advance(it, static_cast<long>(rng() % cells.size()));
        auto [x, y] = *it;
        switch (dir(rng)) {
            case 0: cells.insert({x + 1, y}); break;
            case 1: cells.insert({x - 1, y}); break;
            case 2: cells.insert({x, y + 1}); break;
            default: cells.insert({x, y - 1}); break;
        }
    }
    return cells;
}

Polyomino random_poly(std::mt19937& rng, int n, long scale = 1) {
    return oracle::to_poly(random_blob(rng, n), scale);
}

}  // namespace

TEST_CASE("refine: subdivision identity and invariance") {
    Polyomino p = unit_square();
    CHECK(p.scale() == 1);
    CHECK(p.cells_at_scale(2).size() == 4);
    CHECK(p.refined(1) == p);
    CHECK_THROWS_AS(p.cells_at_scale(Int(0)), FairallocError);

    // L-shaped 3-cell polyomino refined by 3: 27 cells, equal area.
    Polyomino ell = Polyomino::from_cells(
        Int(1), {{0, 0}, {1, 0}, {0, 1}});
    auto refined_cells = ell.refined(3).cells_at_scale(3);
    CHECK(refined_cells.size() == 27);
    CHECK(ell.refined(3).area() == ell.area());
    CHECK(ell.area() == rat(3));

    // Not a multiple of the scale.
    Polyomino half = Polyomino::from_cells(Int(2), {{0, 0}});
    CHECK_THROWS_AS(half.refined(3), FairallocError);
}

TEST_CASE("area: exact counting") {
    CHECK(unit_square().area() == rat(1));
    Polyomino three = Polyomino::from_cells(Int(2), {{0, 0}, {1, 0}, {5, 7}});
    CHECK(three.area() == rat(3, 4));

    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        Polyomino p = random_poly(rng, 12, 2);
        CHECK(p.refined(4).area() == p.area());
    }
}

TEST_CASE("union and difference basics") {
    Polyomino p = unit_square();
    CHECK(poly_union(p, Polyomino{}) == p);
    CHECK(poly_difference(p, p).empty());
    CHECK(poly_difference(p, p) == Polyomino{});
}

TEST_CASE("inclusion-exclusion on random pairs") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Polyomino p = random_poly(rng, 8, 2);
        Polyomino q = random_poly(rng, 8, 3).translated(
            {rat(static_cast<long>(rng() % 5) - 2, 3),
             rat(static_cast<long>(rng() % 5) - 2, 2)});
        Rat lhs = poly_union(p, q).area() + poly_intersection(p, q).area();
        CHECK(lhs == p.area() + q.area());
    }
}

TEST_CASE("difference of union identity") {
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        Polyomino p = random_poly(rng, 10);
        Polyomino q = random_poly(rng, 10).translated({rat(1), rat(0)});
        CHECK(poly_difference(poly_union(p, q), q) == poly_difference(p, q));
    }
}

TEST_CASE("is_connected matches flood fill") {
    CHECK(oracle::to_poly({{0, 0}}).is_connected());
    // Two diagonally touching cells are not 4-connected.
    Polyomino diag = oracle::to_poly({{0, 0}, {1, 1}});
    CHECK_FALSE(diag.is_connected());
    CHECK_FALSE(Polyomino{}.is_connected());

    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        oracle::CellSet cells = random_blob(rng, 20);
        if (i % 3 == 0) cells.insert({100, 100});  // forced far island
        CHECK(oracle::to_poly(cells).is_connected() ==
              oracle::flood_connected(cells));
    }
}

TEST_CASE("is_simple: solid square, annulus, exhaustive small shapes") {
    oracle::CellSet solid;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) solid.insert({x, y});
    CHECK(oracle::to_poly(solid).is_simple());

    oracle::CellSet ring = solid;
    ring.erase({1, 1});
    CHECK_FALSE(oracle::to_poly(ring).is_simple());
    CHECK(oracle::to_poly(ring).is_connected());

    // Exhaustive ≤6-cell check against the two-flood-fill oracle (the
    // acceptance suite extends this to 8 cells).
    const std::size_t expected_counts[] = {1, 2, 6, 19, 63, 216};
    for (int n = 1; n <= 6; ++n) {
        auto shapes = oracle::enumerate_polyominoes(n);
        CHECK(shapes.size() == expected_counts[n - 1]);
        for (const auto& s : shapes) {
            Polyomino p = oracle::to_poly(s);
            CHECK(p.is_simple() == oracle::flood_simple(s));
            if (p.is_simple()) CHECK(p.is_connected());
        }
    }
}

TEST_CASE("classify_point: examples and refine-oracle") {
    Polyomino p = unit_square();
    CHECK(p.classify_point({rat(1, 2), rat(1, 2)}) == PointClass::interior);
    CHECK(p.classify_point({rat(0), rat(0)}) == PointClass::boundary);
    CHECK(p.classify_point({rat(2), rat(0)}) == PointClass::outside);

    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        auto cells = random_blob(rng, 9);
        Polyomino poly = oracle::to_poly(cells, 2);
        for (int k = 0; k < 40; ++k) {
            Rat px = rat(static_cast<long>(rng() % 33) - 16, 8);
            Rat py = rat(static_cast<long>(rng() % 33) - 16, 8);
            CHECK(poly.classify_point({px, py}) ==
                  oracle::classify(cells, 2, px, py));
        }
    }
}

TEST_CASE("in_interior: examples and corner oracle") {
    oracle::CellSet block;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) block.insert({x, y});
    Polyomino p = oracle::to_poly(block);
    Polyomino center = oracle::to_poly({{1, 1}});
    CHECK(in_interior(p, center));
    CHECK_FALSE(in_interior(p, p));
    CHECK(contains_subset(p, p));
    CHECK(contains_subset(p, center));

    std::mt19937 rng(29);
    for (int i = 0; i < 80; ++i) {
        Polyomino outer = random_poly(rng, 14);
        Polyomino inner = random_poly(rng, 3).translated(
            {rat(static_cast<long>(rng() % 4)), rat(static_cast<long>(rng() % 4))});
        // Oracle: every corner point of inner must be interior to outer,
        // and inner must be a subset of outer.
        bool expect = contains_subset(outer, inner);
        if (expect) {
            for (std::size_t j = 0; j < inner.rows().size() && expect; ++j) {
                for (const auto& r : inner.rows()[j]) {
                    const Rat& x0 = inner.xs()[static_cast<std::size_t>(r.begin)];
                    const Rat& x1 = inner.xs()[static_cast<std::size_t>(r.end)];
                    for (const RatPoint& pt :
                         {RatPoint{x0, inner.ys()[j]}, RatPoint{x1, inner.ys()[j]},
                          RatPoint{x0, inner.ys()[j + 1]},
                          RatPoint{x1, inner.ys()[j + 1]}}) {
                        if (outer.classify_point(pt) != PointClass::interior) {
                            expect = false;
                            break;
                        }
                    }
                    if (!expect) break;
                }
            }
        }
        CHECK(in_interior(outer, inner) == expect);
    }
}

TEST_CASE("squared_diameter: examples and brute force") {
    CHECK(unit_square().squared_diameter() == rat(2));
    Polyomino row3 = Polyomino::from_cells(Int(1), {{0, 0}, {1, 0}, {2, 0}});
    // Brute force over all corner pairs gives 10 for a 1x3 row.
    CHECK(row3.squared_diameter() == rat(10));

    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        Polyomino p = random_poly(rng, 10, 2);
        Rat best = 0;
        std::vector<RatPoint> corners;
        for (std::size_t j = 0; j < p.rows().size(); ++j) {
            for (const auto& r : p.rows()[j]) {
                corners.push_back({p.xs()[static_cast<std::size_t>(r.begin)], p.ys()[j]});
                corners.push_back({p.xs()[static_cast<std::size_t>(r.end)], p.ys()[j]});
                corners.push_back({p.xs()[static_cast<std::size_t>(r.begin)], p.ys()[j + 1]});
                corners.push_back({p.xs()[static_cast<std::size_t>(r.end)], p.ys()[j + 1]});
            }
        }
        for (std::size_t a = 0; a < corners.size(); ++a) {
            for (std::size_t b = a + 1; b < corners.size(); ++b) {
                Rat d = squared_distance(corners[a], corners[b]);
                if (d > best) best = d;
            }
        }
        CHECK(p.squared_diameter() == best);
    }
}

TEST_CASE("are_disjoint: face and corner contact count as touching") {
    Polyomino a = unit_square();
    Polyomino edge = a.translated({rat(1), rat(0)});
    Polyomino corner = a.translated({rat(1), rat(1)});
    Polyomino apart = a.translated({rat(1), rat(2)});
    Polyomino overlap = a.translated({rat(1, 2), rat(0)});
    CHECK_FALSE(are_disjoint(a, edge));
    CHECK_FALSE(are_disjoint(a, corner));
    CHECK_FALSE(are_disjoint(a, overlap));
    CHECK(are_disjoint(a, apart));
    CHECK(are_disjoint(a, Polyomino{}));
}

TEST_CASE("invariance under translation and refinement") {
    std::mt19937 rng(37);
    for (int i = 0; i < 30; ++i) {
        Polyomino p = random_poly(rng, 11, 2);
        RatPoint v{rat(static_cast<long>(rng() % 13) - 6, 4),
                   rat(static_cast<long>(rng() % 13) - 6, 8)};
        Polyomino t = p.translated(v);
        CHECK(t.area() == p.area());
        CHECK(t.is_connected() == p.is_connected());
        CHECK(t.is_simple() == p.is_simple());
        CHECK(t.squared_diameter() == p.squared_diameter());
        CHECK(t.translated({-v.x, -v.y}) == p);
        CHECK(p.refined(8).is_simple() == p.is_simple());
    }
}

TEST_CASE("canonical form: equal point sets compare equal") {
    // The same unit square assembled three different ways.
    Polyomino a = unit_square();
    Polyomino b = Polyomino::from_cells(Int(2), {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    std::vector<RatRect> split = {
        {rat(0), rat(0), rat(1, 3), rat(1)},
        {rat(1, 3), rat(0), rat(1), rat(1)},
    };
    Polyomino c = Polyomino::from_rects(split);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.tensor_cell_count() == 1);
}

TEST_CASE("components and fill_holes") {
    Polyomino two = oracle::to_poly({{0, 0}, {5, 5}});
    CHECK(two.components().size() == 2);
    oracle::CellSet ring;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y)
            if (x == 0 || y == 0 || x == 2 || y == 2) ring.insert({x, y});
    Polyomino filled = oracle::to_poly(ring).fill_holes();
    oracle::CellSet solid = ring;
    solid.insert({1, 1});
    CHECK(filled == oracle::to_poly(solid));
    CHECK(filled.is_simple());
}

TEST_CASE("dyadic cover contains and approximates") {
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i) {
        Polyomino p = random_poly(rng, 6, 3);
        for (long g : {0L, 1L, 3L}) {
            Polyomino cover = p.dyadic_cover(g);
            CHECK(contains_subset(cover, p));
            // Breakpoints of the cover live on the scale-2^g grid.
            CHECK((Int(1) << static_cast<unsigned>(g)) % cover.scale() == 0);
        }
    }
}
