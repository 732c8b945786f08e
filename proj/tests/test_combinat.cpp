#include <doctest.h>

#include <random>

#include "strata/arrangement.hpp"
#include "strata/combinat.hpp"

using namespace strata;
using namespace strata::combinat;

namespace {

Rational rat(long long num, long long den = 1) { return Rational(num, den); }

std::vector<SignSymbol> all_symbols(int k) {
    std::vector<SignSymbol> s{SignSymbol::zero()};
    for (int j = 1; j <= k; ++j) {
        s.push_back(SignSymbol::plus(j));
        s.push_back(SignSymbol::minus(j));
    }
    return s;
}

}  // namespace

TEST_CASE("sign_of picks the topmost nonzero coordinate") {
    std::vector<Rational> x{rat(0), rat(5)};
    CHECK(sign_of(x) == SignSymbol::plus(2));

    x = {rat(-7), rat(0), rat(0)};
    CHECK(sign_of(x) == SignSymbol::minus(1));

    x = {rat(0), rat(0)};
    CHECK(sign_of(x) == SignSymbol::zero());

    std::vector<Rational> empty;
    CHECK_THROWS_AS(sign_of(empty), ValidationError);
}

TEST_CASE("sign_of is antisymmetric") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 5), kk(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        int k = kk(rng);
        std::vector<Rational> x, neg;
        for (int i = 0; i < k; ++i) {
            Rational v(num(rng), den(rng));
            x.push_back(v);
            neg.push_back(-v);
        }
        CHECK(sign_of(neg) == sign_of(x).negated());
    }
}

TEST_CASE("negation is an involution") {
    for (const SignSymbol& s : all_symbols(4)) CHECK(s.negated().negated() == s);
    CHECK(SignSymbol::zero().negated() == SignSymbol::zero());
}

TEST_CASE("symbol_leq examples") {
    CHECK(symbol_leq(SignSymbol::plus(1), SignSymbol::minus(2)));
    CHECK(symbol_leq(SignSymbol::zero(), SignSymbol::plus(1)));
    CHECK_FALSE(symbol_leq(SignSymbol::plus(2), SignSymbol::minus(2)));
}

TEST_CASE("symbol_leq is a partial order on S_k, k <= 4") {
    auto symbols = all_symbols(4);
    for (const auto& a : symbols) {
        CHECK(symbol_leq(a, a));
        for (const auto& b : symbols) {
            if (symbol_leq(a, b) && symbol_leq(b, a)) CHECK(a == b);
            for (const auto& c : symbols)
                if (symbol_leq(a, b) && symbol_leq(b, c)) CHECK(symbol_leq(a, c));
        }
    }
}

TEST_CASE("tree_to_signvector on the worked examples") {
    // n=2, k=2, separated at level 2
    auto t = PartitionTree::parse("[[{1}],[{2}]]");
    SignVector sv = tree_to_signvector(t);
    CHECK(sv.entry(1, 2) == SignSymbol::plus(2));
    CHECK(sv.entry(2, 1) == SignSymbol::minus(2));

    // n=2, k=2, level-2 block {1,2} with inner order ({2},{1})
    t = PartitionTree::parse("[[{2},{1}]]");
    CHECK(tree_to_signvector(t).entry(1, 2) == SignSymbol::minus(1));

    // n=3, k=1, total order p2 < p1 < p3
    t = PartitionTree::parse("[{2},{1},{3}]");
    sv = tree_to_signvector(t);
    CHECK(sv.entry(1, 2) == SignSymbol::minus(1));
    CHECK(sv.entry(1, 3) == SignSymbol::plus(1));
    CHECK(sv.entry(2, 3) == SignSymbol::plus(1));
}

TEST_CASE("signvector_to_tree on the worked examples") {
    SignVector sv(2, 2);
    sv.set_entry(1, 2, SignSymbol::plus(2));
    auto t = signvector_to_tree(sv);
    REQUIRE(t.has_value());
    CHECK(t->to_string() == "[[{1}],[{2}]]");

    SignVector cyc(3, 1);
    cyc.set_entry(1, 2, SignSymbol::plus(1));
    cyc.set_entry(2, 3, SignSymbol::plus(1));
    cyc.set_entry(1, 3, SignSymbol::minus(1));
    CHECK_FALSE(signvector_to_tree(cyc).has_value());

    SignVector zero(3, 1);
    t = signvector_to_tree(zero);
    REQUIRE(t.has_value());
    CHECK(t->to_string() == "[{1,2,3}]");
}

TEST_CASE("roundtrip over every enumerated tree") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
        for (const auto& t : arrangement::enumerate_cells(n, k, arrangement::CellFilter::All)) {
            auto back = signvector_to_tree(tree_to_signvector(t));
            REQUIRE(back.has_value());
            CHECK(*back == t);
        }
    }
}

TEST_CASE("cell dimensions") {
    CHECK(PartitionTree::parse("[[{1,2}]]").dimension() == 2);    // diagonal 2-cell
    CHECK(PartitionTree::parse("[[{1},{2}]]").dimension() == 3);  // separated at level 1
    CHECK(PartitionTree::parse("[[{1}],[{2}]]").dimension() == 4);

    // all-Zero tree has dimension k; full separation at the top level nk
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            for (const auto& t : arrangement::enumerate_cells(n, k, arrangement::CellFilter::All)) {
                bool all_zero = true, top_separated = true;
                for (int i = 1; i <= n && (all_zero || top_separated); ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        auto s = t.pair_symbol(i, j);
                        if (!s.is_zero()) all_zero = false;
                        if (s.level != k) top_separated = false;
                    }
                if (all_zero) CHECK(t.dimension() == k);
                if (top_separated) CHECK(t.dimension() == n * k);
                CHECK(t.dimension() <= n * k);
            }
        }
}

TEST_CASE("canonical text encoding round-trips bit-exactly") {
    CHECK(PartitionTree::parse("[[{2}],[{1},{3}]]").to_string() == "[[{2}],[{1},{3}]]");
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 1}, {2, 3}}) {
        for (const auto& t : arrangement::enumerate_cells(n, k, arrangement::CellFilter::All)) {
            CHECK(PartitionTree::parse(t.to_string()) == t);
        }
    }
}

TEST_CASE("construction rejects malformed trees") {
    CHECK_THROWS_AS(PartitionTree::leaf({}), ValidationError);
    CHECK_THROWS_AS(PartitionTree::leaf({1, 1}), ValidationError);
    CHECK_THROWS_AS(PartitionTree::leaf({0}), ValidationError);
    // overlapping blocks
    CHECK_THROWS_AS(PartitionTree(1, {PartitionTree::leaf({1, 2}), PartitionTree::leaf({2})}),
                    ValidationError);
    // depth mismatch between blocks
    CHECK_THROWS_AS(PartitionTree(2, {PartitionTree::leaf({1}),
                                      PartitionTree(1, {PartitionTree::leaf({2})})}),
                    ValidationError);
    CHECK_THROWS_AS(PartitionTree::parse("[{1},{1}]"), ValidationError);
    CHECK_THROWS_AS(PartitionTree::parse("[[{1}]"), ValidationError);

    // single points are fine at any depth
    CHECK(PartitionTree::parse("[[[{1}]]]").dimension() == 3);
}

TEST_CASE("sign vector antisymmetry convention and validation") {
    SignVector sv(3, 2);
    sv.set_entry(3, 1, SignSymbol::plus(2));
    CHECK(sv.entry(1, 3) == SignSymbol::minus(2));
    CHECK_THROWS_AS(sv.entry(1, 1), ValidationError);
    CHECK_THROWS_AS(sv.set_entry(1, 2, SignSymbol::plus(3)), ValidationError);
    CHECK_THROWS_AS(SignVector(0, 1), ValidationError);
    CHECK_THROWS_AS(SignVector(2, 0), ValidationError);
}
