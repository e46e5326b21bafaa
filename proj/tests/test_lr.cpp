#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "flagbott/cohomology.hpp"
#include "flagbott/lr.hpp"

using namespace flagbott;

namespace {

SkewShape plain_shape(const Partition& outer, const Partition& inner) {
    std::size_t r = outer.length();
    return SkewShape{GeneralizedPartition::extend(outer, r), GeneralizedPartition::extend(inner, r)};
}

std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (Partition& u : partitions_of(w, max_len, max_weight)) out.push_back(std::move(u));
    return out;
}

SchurDecomposition transpose_terms(const SchurDecomposition& dec, std::size_t r) {
    SchurDecomposition out(r);
    for (const auto& [w, mult] : dec.terms()) {
        Partition t = transpose(GeneralizedPartition(w).as_partition());
        out.add(t.padded(r), mult);
    }
    return out;
}

}  // namespace

TEST_CASE("reading order") {
    CHECK(lr_order_less({1, 3}, {2, 1}));
    CHECK(lr_order_less({1, 3}, {1, 2}));
    CHECK_FALSE(lr_order_less({2, 2}, {1, 5}));
}

TEST_CASE("classical rules on tiny shapes") {
    SkewShape cell = plain_shape(Partition{1}, Partition{});
    CHECK(check_classical(LRFilling::canonical(cell, Partition{1}, {1})));

    // two cells in a row, values 1 then 2 left to right: reading order sees
    // the 2 first and the prefix condition fails
    SkewShape row = plain_shape(Partition{2}, Partition{});
    LRFilling bad = LRFilling::canonical(row, Partition{1, 1}, {2, 1});
    CHECK_FALSE(check_classical(bad));
    CHECK_FALSE(check_eight(bad));

    LRFilling good = LRFilling::canonical(row, Partition{2}, {1, 1});
    CHECK(check_classical(good));
    CHECK(condition_young(good));
    CHECK(check_eight(good));
}

TEST_CASE("empty shape is accepted") {
    SkewShape empty = plain_shape(Partition{}, Partition{});
    LRFilling f = LRFilling::canonical(empty, Partition{}, {});
    CHECK(check_classical(f));
    CHECK(check_eight(f));
}

TEST_CASE("filling construction validates content") {
    SkewShape row = plain_shape(Partition{2}, Partition{});
    CHECK_THROWS_AS(LRFilling::canonical(row, Partition{2}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LRFilling::canonical(row, Partition{1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("enumeration on small shapes") {
    CHECK(enumerate_fillings(plain_shape(Partition{2, 1}, Partition{}), Partition{2, 1}).size() == 1);
    CHECK(enumerate_fillings(plain_shape(Partition{1}, Partition{}), Partition{1}).size() == 1);
    CHECK(enumerate_fillings(plain_shape(Partition{2, 2}, Partition{1}), Partition{2, 1}).size() == 1);
    CHECK_THROWS_AS(enumerate_fillings(plain_shape(Partition{2}, Partition{}), Partition{1}),
                    std::invalid_argument);
}

TEST_CASE("enumerated fillings pass every check") {
    for (const SkewShape& shape : reduced_skew_shapes(8)) {
        const int n = static_cast<int>(shape.cell_count());
        for (const Partition& v : partitions_of(n, n, n))
            for (const LRFilling& f : enumerate_fillings(shape, v)) {
                REQUIRE(check_classical(f));
                REQUIRE(condition_young(f));
                REQUIRE(check_eight(f));
            }
    }
}

TEST_CASE("eight conditions match the classical ones on shapes of up to five cells") {
    LRScratch scratch;
    for (const SkewShape& shape : reduced_skew_shapes(5)) {
        ShapeIndex idx = make_shape_index(shape);
        const int n = static_cast<int>(idx.cells.size());
        for (const Partition& v : partitions_of(n, n, n)) {
            std::vector<std::pair<int, int>> ycells;
            for (std::size_t row = 0; row < v.length(); ++row)
                for (int c = 1; c <= v.part(row); ++c) ycells.push_back({static_cast<int>(row) + 1, c});
            std::vector<int> slot(static_cast<std::size_t>(n));
            std::iota(slot.begin(), slot.end(), 0);
            std::vector<int> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));
            do {
                for (int t = 0; t < n; ++t) {
                    c1[static_cast<std::size_t>(t)] = ycells[static_cast<std::size_t>(slot[static_cast<std::size_t>(t)])].first;
                    c2[static_cast<std::size_t>(t)] = ycells[static_cast<std::size_t>(slot[static_cast<std::size_t>(t)])].second;
                }
                const bool classical = check_classical(idx, c1, v.parts(), scratch);
                const bool young = condition_young(idx, c1, c2, v.parts(), scratch);
                const bool eight = check_eight(idx, c1, c2, v.parts(), scratch);
                REQUIRE((classical && young) == eight);
                if (classical && young) {
                    // the second coordinate is forced to the occurrence index
                    LRFilling canon = LRFilling::canonical(shape, v, c1);
                    REQUIRE(canon.c2() == c2);
                }
            } while (std::next_permutation(slot.begin(), slot.end()));
        }
    }
}

TEST_CASE("products of small Schur bundles") {
    SchurDecomposition pieri = lr_product(GeneralizedPartition({1, 0}), Partition{1});
    SchurDecomposition expected(2);
    expected.add({2, 0}, 1);
    expected.add({1, 1}, 1);
    CHECK(pieri == expected);

    SchurDecomposition identity = lr_product(GeneralizedPartition({0, 0}), Partition{2, 1});
    CHECK(identity.term_count() == 1);
    CHECK(identity.multiplicity({2, 1}) == 1);
}

TEST_CASE("the square of the adjoint-shaped factor at length four") {
    SchurDecomposition dec = lr_product(GeneralizedPartition({2, 1, 0, 0}), Partition{2, 1});
    SchurDecomposition expected(4);
    expected.add({4, 2, 0, 0}, 1);
    expected.add({4, 1, 1, 0}, 1);
    expected.add({3, 3, 0, 0}, 1);
    expected.add({3, 2, 1, 0}, 2);
    expected.add({3, 1, 1, 1}, 1);
    expected.add({2, 2, 2, 0}, 1);
    expected.add({2, 2, 1, 1}, 1);
    CHECK(dec == expected);
}

TEST_CASE("parallel product agrees with the serial reference") {
    std::vector<Partition> small = partitions_up_to(5, 3);
    for (const Partition& u : small)
        for (const Partition& v : small) {
            GeneralizedPartition ug = GeneralizedPartition::extend(u, 4);
            CHECK(lr_product(ug, v) == lr_product_serial(ug, v));
        }
    GeneralizedPartition negative({2, 0, -1, -3});
    CHECK(lr_product(negative, Partition{3, 1}) == lr_product_serial(negative, Partition{3, 1}));
}

TEST_CASE("products with a generalized first factor shift cleanly") {
    // tensoring by the determinant moves every term by one box per row
    SchurDecomposition plain = lr_product(GeneralizedPartition({2, 1, 0}), Partition{2});
    SchurDecomposition shifted = lr_product(GeneralizedPartition({1, 0, -1}), Partition{2});
    SchurDecomposition expected(3);
    for (const auto& [w, mult] : plain.terms()) {
        std::vector<int> moved = w;
        for (int& x : moved) x -= 1;
        expected.add(moved, mult);
    }
    CHECK(shifted == expected);
}

TEST_CASE("term weights and containment") {
    GeneralizedPartition u({3, 1, -2});
    Partition v{3, 2};
    for (const LRTerm& term : lr_terms(u, v, true)) {
        CHECK(term.outer.weight() == u.weight() + v.weight());
        for (std::size_t i = 0; i < u.length(); ++i)
            CHECK(term.outer.part(i) >= u.part(i));
        CHECK(static_cast<long long>(term.fillings.size()) == term.multiplicity);
    }
}

TEST_CASE("dimension consistency of the product, ambient ranks up to five") {
    std::vector<Partition> small = partitions_up_to(6, 6);
    for (int d = 1; d <= 5; ++d)
        for (const Partition& u : small) {
            if (static_cast<int>(u.length()) > d) continue;
            for (const Partition& v : small) {
                BigInt lhs = dim_schur(u, d) * dim_schur(v, d);
                BigInt rhs = 0;
                SchurDecomposition dec =
                    lr_product(GeneralizedPartition::extend(u, static_cast<std::size_t>(d)), v);
                for (const auto& [w, mult] : dec.terms()) rhs += mult * dim_schur(w, d);
                REQUIRE(lhs == rhs);
            }
        }
}

TEST_CASE("transposing both factors transposes the decomposition") {
    std::vector<Partition> small = partitions_up_to(4, 4);
    const std::size_t r = 8;
    for (const Partition& u : small)
        for (const Partition& v : small) {
            if (u.weight() + v.weight() > 8) continue;
            SchurDecomposition direct =
                lr_product(GeneralizedPartition::extend(u, r), v);
            SchurDecomposition transposed =
                lr_product(GeneralizedPartition::extend(transpose(u), r), transpose(v));
            CHECK(transpose_terms(direct, r) == transposed);
        }
}

TEST_CASE("height increasing maps") {
    std::vector<std::pair<Cell, Cell>> identity{{{1, 1}, {1, 1}}, {{2, 1}, {2, 1}}};
    CHECK(is_height_increasing(identity));
    std::vector<std::pair<Cell, Cell>> drop{{{2, 1}, {1, 5}}};
    CHECK_FALSE(is_height_increasing(drop));
}

TEST_CASE("column-order preserving maps into the positive quadrant rise") {
    // all maps from Young diagrams with up to four cells into a 4x3 box that
    // strictly increase heights along each column are height increasing
    for (int w = 1; w <= 4; ++w)
        for (const Partition& shape : partitions_of(w, w, w)) {
            std::vector<Cell> cells;
            for (std::size_t i = 0; i < shape.length(); ++i)
                for (int j = 1; j <= shape.part(i); ++j) cells.push_back({static_cast<int>(i) + 1, j});
            std::vector<Cell> box;
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 3; ++j) box.push_back({i, j});
            std::vector<std::size_t> pick(cells.size(), 0);
            while (true) {
                std::vector<std::pair<Cell, Cell>> map;
                for (std::size_t t = 0; t < cells.size(); ++t) map.push_back({cells[t], box[pick[t]]});
                bool preserves = true;
                for (std::size_t s = 0; s < cells.size() && preserves; ++s)
                    for (std::size_t t = 0; t < cells.size() && preserves; ++t)
                        if (cells[s].col == cells[t].col && cells[s].row < cells[t].row &&
                            map[s].second.row >= map[t].second.row)
                            preserves = false;
                if (preserves) CHECK(is_height_increasing(map));
                std::size_t k = 0;
                while (k < pick.size() && pick[k] + 1 == box.size()) pick[k++] = 0;
                if (k == pick.size()) break;
                ++pick[k];
            }
        }
}
