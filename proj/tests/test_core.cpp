#include "bck/algebra.hpp"
#include "bck/classify.hpp"
#include "bck/construct.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <limits>

using namespace bck;

namespace {

const BckAlgebra& PI() { return standard_algebras().pi; }
const BckAlgebra& TC() { return standard_algebras().tc; }
const BckAlgebra& TWO() { return standard_algebras().two; }

std::vector<BckAlgebra> corpus(std::size_t max_order)
{
    std::vector<BckAlgebra> all;
    for (std::size_t n = 1; n <= max_order; ++n) {
        auto level = enumerate(n);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

} // namespace

TEST_CASE("Ratio reduces and orders exactly")
{
    CHECK(Ratio(10, 16) == Ratio(5, 8));
    CHECK(Ratio(10, 16).numerator() == 5);
    CHECK(Ratio(10, 16).denominator() == 8);
    CHECK(Ratio(0, 7) == Ratio(0, 1));
    CHECK(Ratio(13, 25) < Ratio(15, 25));
    CHECK(Ratio(2, 5) == Ratio::from_string("40/100"));
    CHECK(Ratio::from_string("3") == Ratio(3, 1));
    CHECK(Ratio(7, 9).to_string() == "7/9");
    CHECK_THROWS_AS(Ratio(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Ratio::from_string("2/x"), std::invalid_argument);
    CHECK_THROWS_AS(Ratio::from_string("/5"), std::invalid_argument);

    constexpr auto big = std::numeric_limits<std::uint64_t>::max();
    CHECK(Ratio(big - 1, big) < Ratio(1, 1));
    CHECK_THROWS_AS(checked_mul(big / 2, 3), std::overflow_error);
    CHECK(checked_mul(10000, 10000) == 100000000u);
}

TEST_CASE("CayleyTable rejects malformed shapes")
{
    CHECK_THROWS_AS(CayleyTable(2, {0, 0, 1}), FormatError);
    CHECK_THROWS_AS(CayleyTable(2, {0, 0, 1, 2}), FormatError);
    CHECK_THROWS_AS(CayleyTable(0, {}), FormatError);
    CHECK_THROWS_AS(CayleyTable::from_rows({{0, 0}, {1}}), FormatError);
}

TEST_CASE("standard algebras match the published tables")
{
    CHECK(TWO().table() == CayleyTable::from_rows({{0, 0}, {1, 0}}));
    CHECK(PI().table() == CayleyTable::from_rows({{0, 0, 0}, {1, 0, 0}, {2, 2, 0}}));
    CHECK(TC().table() == CayleyTable::from_rows({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}}));
}

TEST_CASE("validate accepts BCK-algebras and names the first failure")
{
    CHECK(validate(CayleyTable::from_rows({{0, 0, 0}, {1, 0, 0}, {2, 2, 0}})) == PI());
    CHECK(validate(CayleyTable(1, {0})).order() == 1);

    SUBCASE("0*1 = 1 breaks BCK4 at x = 1")
    {
        auto v = find_violation(CayleyTable::from_rows({{0, 1}, {1, 0}}));
        REQUIRE(v);
        CHECK(v->axiom == Axiom::BCK4);
        CHECK(v->witness == std::vector<Element>{1});
        CHECK_THROWS_AS(validate(CayleyTable::from_rows({{0, 1}, {1, 0}})), AxiomError);
    }
    SUBCASE("check order puts BCK3 before BCK4")
    {
        auto v = find_violation(CayleyTable::from_rows({{0, 1}, {1, 1}}));
        REQUIRE(v);
        CHECK(v->axiom == Axiom::BCK3);
        CHECK(v->witness == std::vector<Element>{1});
    }
    SUBCASE("x*0 = x")
    {
        auto v = find_violation(CayleyTable::from_rows({{0, 0}, {0, 0}}));
        REQUIRE(v);
        CHECK(v->axiom == Axiom::RightIdentity);
        CHECK(v->describe() == "x*0=x violated at x=1");
    }
    SUBCASE("antisymmetry")
    {
        auto v = find_violation(CayleyTable::from_rows({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}));
        REQUIRE(v);
        CHECK(v->axiom == Axiom::BCK5);
        CHECK(v->witness == std::vector<Element>{1, 2});
    }
    SUBCASE("BCK2 with least witness")
    {
        // (3*(3*1))*1 = (3*2)*1 = 2*1 = 1
        auto v = find_violation(CayleyTable::from_rows({{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 1, 0, 0}, {3, 2, 2, 0}}));
        REQUIRE(v);
        CHECK(v->axiom == Axiom::BCK2);
        CHECK(v->witness == std::vector<Element>{3, 1});
    }
    SUBCASE("BCK1 with least witness")
    {
        // ((2*1)*(2*0))*(0*1) = (1*2)*0 = 1
        auto v = find_violation(CayleyTable::from_rows({{0, 0, 0}, {1, 0, 1}, {2, 1, 0}}));
        REQUIRE(v);
        CHECK(v->axiom == Axiom::BCK1);
        CHECK(v->witness == std::vector<Element>{2, 1, 0});
        CHECK(v->describe() == "BCK1 violated at x=2, y=1, z=0");
    }
}

TEST_CASE("leq, meet and commutes on the standard algebras")
{
    CHECK(leq(PI(), 1, 2));
    CHECK_FALSE(leq(PI(), 2, 1));
    CHECK(meet(PI(), 1, 2) == 0);
    CHECK(meet(PI(), 2, 1) == 1);
    CHECK_FALSE(commutes(PI(), 1, 2));
    CHECK(meet(TC(), 1, 2) == 1);
    CHECK(commutes(TC(), 1, 2));
    CHECK_THROWS_AS(leq(PI(), 3, 0), std::out_of_range);
    CHECK_THROWS_AS(meet(PI(), 0, 7), std::out_of_range);
}

TEST_CASE("commuting degree of the standard algebras")
{
    auto pi = commuting_degree(PI());
    CHECK(pi.pair_count == 7);
    CHECK(pi.degree == Ratio(7, 9));
    CHECK(commuting_degree(TWO()).pair_count == 4);
    CHECK(commuting_degree(TWO()).degree == Ratio(1, 1));
    CHECK(commuting_degree(TC()).degree == Ratio(1, 1));
    auto m4 = commuting_degree(extend_top(PI()));
    CHECK(m4.pair_count == 10);
    CHECK(m4.degree == Ratio(10, 16));
}

TEST_CASE("classification predicates")
{
    CHECK(is_commutative(TC()));
    CHECK_FALSE(is_positive_implicative(TC()));
    CHECK_FALSE(is_commutative(PI()));
    CHECK(is_positive_implicative(PI()));
    auto bounded = extend_top(PI());
    REQUIRE(top_element(bounded));
    CHECK(*top_element(bounded) == 3);
    CHECK(is_bounded(bounded));
    const BckAlgebra parts[] = {TWO(), TWO()};
    CHECK_FALSE(is_bounded(bck_union(parts)));
}

TEST_CASE("Hasse covers")
{
    using Covers = std::vector<std::pair<Element, Element>>;
    CHECK(hasse_covers(m_chain(4)) == Covers{{0, 1}, {1, 2}, {2, 3}});
    CHECK(hasse_covers(BckAlgebra{}).empty());
    CHECK(hasse_covers(b_star(4)) == Covers{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("order-theoretic properties over the enumerated corpus up to order 5")
{
    for (const auto& a : corpus(5)) {
        const auto n = static_cast<Element>(a.order());
        CHECK(validate(a.table()) == a);
        for (Element x = 0; x < n; ++x) {
            CHECK(leq(a, 0, x));
            if (leq(a, x, 0))
                CHECK(x == 0);
            CHECK(meet(a, x, x) == x);
            CHECK(commutes(a, x, 0));
            for (Element y = 0; y < n; ++y) {
                const Element m = meet(a, x, y);
                CHECK(leq(a, m, x));
                CHECK(leq(a, m, y));
                // Greatest lower bound; holds for every pair of a commutative algebra.
                if (is_commutative(a)) {
                    for (Element z = 0; z < n; ++z)
                        if (leq(a, z, x) && leq(a, z, y))
                            CHECK(leq(a, z, m));
                }
                if (!leq(a, x, y) && !leq(a, y, x))
                    CHECK((a(x, y) != 0 || a(y, x) != 0));
            }
        }
    }
}

TEST_CASE("commuting report invariants over the corpus agree with the brute-force count")
{
    for (const auto& a : corpus(5)) {
        const auto r = commuting_degree(a);
        const std::uint64_t n = a.order();
        CHECK(r.pair_count == oracle::commuting_pairs(testutil::to_table(a)));
        CHECK(r.pair_count >= 3 * n - 2);
        CHECK(r.pair_count % 2 == n % 2);
        CHECK(r.degree == Ratio(r.pair_count, n * n));
        CHECK((r.degree == Ratio(1, 1)) == is_commutative(a));
        if (!is_commutative(a))
            CHECK(r.pair_count <= n * n - 2);
    }
}

TEST_CASE("a commuting pair whose meet is not the greatest lower bound")
{
    // 1 lies below the incomparable elements 2 and 3. Both meets of 2 and 3 are 0,
    // so the pair commutes, yet 1 is a larger common lower bound.
    const auto a = validate(CayleyTable::from_rows({{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 2, 0, 2}, {3, 3, 3, 0}}));
    CHECK(commutes(a, 2, 3));
    CHECK(meet(a, 2, 3) == 0);
    CHECK(leq(a, 1, 2));
    CHECK(leq(a, 1, 3));
    CHECK_FALSE(leq(a, 1, meet(a, 2, 3)));
}
