#include <doctest.h>

#include <algorithm>
#include <set>

#include "strata/arrangement.hpp"
#include "strata/oracle.hpp"
#include "strata/sphere_cell.hpp"

using namespace strata;
using namespace strata::arrangement;
using combinat::PartitionTree;

TEST_CASE("cell counts") {
    CHECK(count_cells(2, 2, CellFilter::All) == 5);
    CHECK(count_cells(2, 2, CellFilter::Configuration) == 4);
    CHECK(count_cells(3, 1, CellFilter::Configuration) == 6);
    CHECK(count_cells(3, 2, CellFilter::Configuration) == 24);
    // m! total orders at depth 1
    BigInt fact = 1;
    for (int m = 1; m <= 6; ++m) {
        fact *= m;
        CHECK(count_cells(m, 1, CellFilter::Configuration) == fact);
    }
}

TEST_CASE("count_cells matches enumerate_cells without materializing") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (auto f : {CellFilter::All, CellFilter::Configuration})
                CHECK(count_cells(n, k, f) ==
                      static_cast<long long>(enumerate_cells(n, k, f).size()));
}

TEST_CASE("enumeration is deterministic and respects limits") {
    auto a = enumerate_cells(3, 2, CellFilter::Configuration);
    auto b = enumerate_cells(3, 2, CellFilter::Configuration);
    CHECK(a == b);

    ResourceLimits tight;
    tight.max_cells = 10;
    CHECK_THROWS_AS(enumerate_cells(3, 2, CellFilter::Configuration, tight), ResourceError);
    CHECK_THROWS_AS(enumerate_cells(7, 1, CellFilter::All), ResourceError);
    try {
        enumerate_cells(3, 2, CellFilter::Configuration, tight);
    } catch (const ResourceError& e) {
        CHECK(e.projected_count == "24");
    }
}

TEST_CASE("face_leq examples") {
    auto diagonal = PartitionTree::parse("[[{1,2}]]");
    auto e3 = PartitionTree::parse("[[{1},{2}]]");
    auto e3m = PartitionTree::parse("[[{2},{1}]]");
    CHECK(face_leq(diagonal, e3));
    CHECK(face_leq(e3, e3));
    CHECK_FALSE(face_leq(e3, e3m));
    CHECK_THROWS_AS(face_leq(diagonal, PartitionTree::parse("[{1,2}]")), ValidationError);
}

TEST_CASE("salvetti posets of the worked examples") {
    auto s22 = salvetti_poset(2, 2);
    CHECK(s22.size() == 4);
    CHECK(s22.height() - 1 == 1);       // the 4-cycle
    CHECK(s22.covers().size() == 4);

    auto s31 = salvetti_poset(3, 1);
    CHECK(s31.size() == 6);
    CHECK(s31.height() - 1 == 0);
    CHECK(s31.covers().empty());

    auto s32 = salvetti_poset(3, 2);
    CHECK(s32.size() == 24);
    CHECK(s32.height() - 1 == 2);
}

TEST_CASE("salvetti cell dimension range and cover steps") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}, {2, 4}}) {
        auto p = salvetti_poset(n, k);
        int lo = n * k, hi = 0;
        for (int i = 0; i < p.size(); ++i) {
            lo = std::min(lo, p.dim(i));
            hi = std::max(hi, p.dim(i));
        }
        CHECK(lo == k + n - 1);
        CHECK(hi == n * k);
        CHECK(p.cover_dimension_violations().empty());
        CHECK(p.height() - 1 == (n - 1) * (k - 1));
    }
}

TEST_CASE("full stratification has the diagonal as unique minimum") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 1}, {2, 3}}) {
        auto p = full_poset(n, k);
        std::vector<int> minima;
        for (int i = 0; i < p.size(); ++i) {
            bool has_lower = false;
            for (int j = 0; j < p.size() && !has_lower; ++j) has_lower = p.less(j, i);
            if (!has_lower) minima.push_back(i);
        }
        REQUIRE(minima.size() == 1);
        CHECK(p.dim(minima[0]) == k);  // the thin diagonal
        CHECK(p.tree(minima[0]).blocks().size() == 1);
        int top = 0;
        for (int i = 0; i < p.size(); ++i) top = std::max(top, p.dim(i));
        CHECK(top == n * k);
        CHECK(p.cover_dimension_violations().empty());
    }
}

TEST_CASE("combinatorial face order agrees with the geometric oracle exhaustively") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
        auto cells = enumerate_cells(n, k, CellFilter::All);
        for (const auto& a : cells)
            for (const auto& b : cells) {
                bool combinatorial = face_leq(a, b);
                bool geometric = oracle::closure_leq_geometric(combinat::tree_to_signvector(a),
                                                               combinat::tree_to_signvector(b));
                CHECK(combinatorial == geometric);
                // closure containment can only lower the dimension
                if (geometric) {
                    CHECK(a.dimension() <= b.dimension());
                    if (a.dimension() == b.dimension()) CHECK(a == b);
                }
            }
    }
}

TEST_CASE("raw sign vector realizability agrees with tree decoding exhaustively") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
        const int pairs = n * (n - 1) / 2;
        const int symbols = 2 * k + 1;
        long long total = 1;
        for (int p = 0; p < pairs; ++p) total *= symbols;
        long long realizable_count = 0;
        for (long long code = 0; code < total; ++code) {
            combinat::SignVector sv(n, k);
            long long rest = code;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    int s = static_cast<int>(rest % symbols);
                    rest /= symbols;
                    combinat::SignSymbol sym;
                    if (s > 0)
                        sym = (s % 2) ? combinat::SignSymbol::plus((s + 1) / 2)
                                      : combinat::SignSymbol::minus(s / 2);
                    sv.set_entry(i, j, sym);
                }
            bool dec = combinat::signvector_to_tree(sv).has_value();
            CHECK(oracle::realizable(sv) == dec);
            if (dec) ++realizable_count;
        }
        CHECK(realizable_count == count_cells(n, k, CellFilter::All));
    }
}

TEST_CASE("enumeration and face order are permutation equivariant") {
    auto cells = enumerate_cells(3, 2, CellFilter::Configuration);
    std::set<std::string> canon;
    for (const auto& t : cells) canon.insert(t.to_string());
    for (const auto& sigma : sphere::symmetric_group(3)) {
        auto map = sigma.as_relabel_map();
        for (const auto& t : cells) {
            PartitionTree image = t.relabeled(map);
            CHECK(canon.count(image.to_string()) == 1);
        }
        for (size_t a = 0; a < cells.size(); a += 5)
            for (size_t b = 0; b < cells.size(); b += 3)
                CHECK(face_leq(cells[a], cells[b]) ==
                      face_leq(cells[a].relabeled(map), cells[b].relabeled(map)));
    }
}
