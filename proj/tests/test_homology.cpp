#include <doctest.h>

#include <random>

#include "strata/arrangement.hpp"
#include "strata/homology.hpp"
#include "strata/simplicial.hpp"
#include "strata/sphere.hpp"

using namespace strata;
using namespace strata::homology;

using strata::simplicial::order_complex;

namespace {

IntegerMatrix from_rows(std::vector<std::vector<long long>> rows) {
    IntegerMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

}  // namespace

TEST_CASE("boundary matrices of the 4-cycle and the octahedron") {
    auto cyc = order_complex(sphere::sphere_poset(2, 1));
    auto d1 = boundary_matrix(cyc, 1);
    CHECK(d1.rows() == 4);
    CHECK(d1.cols() == 4);
    CHECK(smith_normal_form(d1).rank == 3);

    auto oct = order_complex(sphere::sphere_poset(2, 2));
    auto d2 = boundary_matrix(oct, 2);
    CHECK(d2.cols() == 8);
    CHECK(smith_normal_form(d2).rank == 7);

    CHECK(boundary_matrix(oct, 1).multiply(d2).is_zero());
    CHECK_THROWS_AS(boundary_matrix(oct, 3), ValidationError);
}

TEST_CASE("boundaries compose to zero on every constructed complex") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        CHECK(boundaries_compose_to_zero(order_complex(arrangement::salvetti_poset(n, k))));
        auto p = sphere::sphere_poset(n, k);
        auto nv = simplicial::nerve_complex(p);
        CHECK(boundaries_compose_to_zero(nv));
        if (!p.has_multiple_attachments()) {
            auto c = order_complex(p);
            CHECK(boundaries_compose_to_zero(c));
            CHECK(boundaries_compose_to_zero(simplicial::quotient(c, sphere::action_tables(p))));
        } else {
            CHECK(boundaries_compose_to_zero(simplicial::quotient(nv, sphere::action_tables(p))));
        }
    }
}

TEST_CASE("smith normal form examples") {
    auto r = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(r.factors == std::vector<BigInt>{1, 6});

    r = smith_normal_form(IntegerMatrix(3, 4));
    CHECK(r.factors.empty());
    CHECK(r.rank == 0);

    r = smith_normal_form(IntegerMatrix::identity(3));
    CHECK(r.factors == std::vector<BigInt>{1, 1, 1});

    // textbook instance with a nontrivial divisor chain
    r = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    CHECK(r.factors == std::vector<BigInt>{2, 2, 156});

    // a matrix whose pivots need the divisibility fix-up
    r = smith_normal_form(from_rows({{6, 0}, {0, 10}}), true);
    CHECK(r.factors == std::vector<BigInt>{2, 30});
}

TEST_CASE("smith normal form: divisibility and exact reconstruction on random matrices") {
    std::mt19937_64 rng(123456);
    std::uniform_int_distribution<int> entry(-20, 20), dims(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        IntegerMatrix m(dims(rng), dims(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);

        auto r = smith_normal_form(m, true);
        for (size_t i = 0; i + 1 < r.factors.size(); ++i) {
            CHECK(r.factors[i] > 0);
            CHECK(r.factors[i + 1] % r.factors[i] == 0);
        }
        REQUIRE(r.transforms.has_value());
        IntegerMatrix d = r.diagonal(m.rows(), m.cols());
        CHECK(r.transforms->row_ops.multiply(m).multiply(r.transforms->col_ops) == d);
        CHECK(r.transforms->row_ops_inv.multiply(d).multiply(r.transforms->col_ops_inv) == m);
    }
}

TEST_CASE("homology of the worked examples") {
    auto sphere22 = order_complex(sphere::sphere_poset(2, 2));
    CHECK(homology::homology(sphere22) == make_homology({{1, {}}, {0, {}}, {1, {}}}));

    auto p22 = sphere::sphere_poset(2, 2);
    auto rp2 = simplicial::quotient(order_complex(p22), sphere::action_tables(p22));
    CHECK(homology::homology(rp2) == make_homology({{1, {}}, {0, {2}}, {0, {}}}));

    auto sal32 = order_complex(arrangement::salvetti_poset(3, 2));
    auto h = homology::homology(sal32);
    REQUIRE(h.degrees.size() == 3);
    CHECK(h.degrees[0].betti == 1);
    CHECK(h.degrees[1].betti == 3);
    CHECK(h.degrees[2].betti == 2);
}

TEST_CASE("alternating betti sum equals the euler characteristic") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 1}}) {
        auto c = order_complex(arrangement::salvetti_poset(n, k));
        auto h = homology::homology(c);
        long long sum = 0;
        int sign = 1;
        for (const auto& g : h.degrees) {
            sum += sign * g.betti;
            sign = -sign;
        }
        CHECK(sum == simplicial::euler_char(c));
    }
}

TEST_CASE("homology is invariant under relabeling the cells") {
    auto p = arrangement::salvetti_poset(3, 2);
    auto c = order_complex(p);
    auto base = homology::homology(c);

    // renumber the vertices by a fixed permutation and rebuild the chains
    std::mt19937_64 rng(31337);
    std::vector<int> perm(static_cast<size_t>(c.vertex_count));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    simplicial::SimplicialComplex relabeled;
    relabeled.vertex_count = c.vertex_count;
    relabeled.simplices.resize(c.simplices.size());
    for (size_t d = 0; d < c.simplices.size(); ++d) {
        for (const auto& ch : c.simplices[d]) {
            simplicial::Chain image(ch.size());
            for (size_t i = 0; i < ch.size(); ++i) image[i] = perm[static_cast<size_t>(ch[i])];
            // the poset order is untouched, so the chain order stays as-is
            relabeled.simplices[d].push_back(image);
        }
        std::sort(relabeled.simplices[d].begin(), relabeled.simplices[d].end());
    }
    CHECK(homology::homology(relabeled) == base);
}

TEST_CASE("homology of point configurations in 3- and 4-space") {
    // betti rows of prod_{i<n} (1 + i t^{k-1}), torsion-free
    auto h = homology::homology(order_complex(arrangement::salvetti_poset(3, 3)));
    CHECK(h == make_homology({{1, {}}, {0, {}}, {3, {}}, {0, {}}, {2, {}}}));

    h = homology::homology(order_complex(arrangement::salvetti_poset(2, 4)));
    CHECK(h == make_homology({{1, {}}, {0, {}}, {0, {}}, {1, {}}}));
}

TEST_CASE("nerve homology models the configuration spaces of the 2-sphere") {
    auto p = sphere::sphere_poset(3, 2);
    auto nv = simplicial::nerve_complex(p);
    // three ordered points on the 2-sphere: the rotation group
    CHECK(homology::homology(nv) == make_homology({{1, {}}, {0, {2}}, {0, {}}, {1, {}}}));

    // unordered triples: the order-12 spherical space form, first homology
    // matching the abelianization of the sphere braid group on 3 strands
    auto q = simplicial::quotient(nv, sphere::action_tables(p));
    CHECK(homology::homology(q) == make_homology({{1, {}}, {0, {4}}, {0, {}}, {1, {}}}));
}

TEST_CASE("nerve homology of four ordered points on the 2-sphere" * doctest::timeout(120)) {
    // Moebius normalization splits off the sphere case: rotations times the
    // twice-punctured plane; the product has H_* =
    // (Z, Z^2 + Z/2, (Z/2)^2, Z, Z^2).
    auto p = sphere::sphere_poset(4, 2);
    auto nv = simplicial::nerve_complex(p);
    CHECK(homology::homology(nv) ==
          make_homology({{1, {}}, {2, {2}}, {0, {2, 2}}, {1, {}}, {2, {}}}));
}

TEST_CASE("group rendering") {
    CHECK(make_homology({{1, {}}, {0, {2}}, {0, {}}, {1, {}}}).to_string() == "(Z, Z/2, 0, Z)");
    CHECK(make_homology({{2, {}}, {1, {2, 4}}}).to_string() == "(Z^2, Z+Z/2+Z/4)");
}
