#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "anng/errors.hpp"
#include "anng/pgroup.hpp"

using namespace anng;

namespace {

PGroup cyclic(long long p, long long k) { return PGroup(p, Partition{k}); }

GroupElement elem(const PGroup& g, std::vector<long long> coords) {
    return GroupElement(g, std::move(coords));
}

} // namespace

TEST_CASE("group construction and parsing") {
    const PGroup g(2, Partition{2, 1});
    CHECK(g.rank() == 2);
    CHECK(g.modulus(0) == 4);
    CHECK(g.modulus(1) == 2);
    CHECK((g.order() == 8L));
    CHECK(g.str() == "2^2 + 2^1");
    CHECK(PGroup::parse("2^2 + 2") == g);
    CHECK(PGroup::parse("3^4").exponents() == Partition{4});
    CHECK(PGroup::parse("2 + 2^3").exponents() == Partition{3, 1});
    CHECK_THROWS_AS(PGroup(4, Partition{1}), DomainError);
    CHECK_THROWS_AS(PGroup::parse("2^3 + 3"), DomainError);
    CHECK_THROWS_AS(PGroup(2, Partition{70}), DomainError);
    CHECK(PGroup(5, Partition{}).rank() == 0);
    CHECK((PGroup(5, Partition{}).order() == 1L));
}

TEST_CASE("element reduction and enumeration") {
    const PGroup g(2, Partition{2, 1});
    CHECK(elem(g, {5, 3}).coords() == std::vector<long long>{1, 1});
    CHECK(elem(g, {-1, 0}).coords() == std::vector<long long>{3, 0});
    CHECK(elem(g, {0, 0}).is_zero());
    CHECK(all_elements(g).size() == 8);
    CHECK(all_elements(PGroup(3, Partition{})).size() == 1);
    CHECK_THROWS_AS(all_elements(cyclic(2, 40)), BudgetError);
    CHECK_THROWS_AS(elem(g, {1}), DomainError);
}

TEST_CASE("annihilator exponent") {
    CHECK(annihilator_exponent(elem(cyclic(2, 4), {6})) == 1);
    CHECK(annihilator_exponent(elem(cyclic(2, 4), {0})) == 4);
    CHECK(annihilator_exponent(elem(PGroup(2, Partition{2, 2}), {1, 0})) == 2);
    // Rank >= 2 with equal exponents: every element annihilates at p^n.
    const PGroup sq(3, Partition{2, 2});
    for (const GroupElement& a : all_elements(sq))
        CHECK(annihilator_exponent(a) == 2);
    CHECK(annihilator_exponent(elem(cyclic(3, 2), {3})) == 1);
    // Za = {(0,0),(2,1)}: 2*(1,0) = (2,0) is outside, 4 kills everything.
    CHECK(annihilator_exponent(elem(PGroup(2, Partition{2, 1}), {2, 1})) == 2);
}

TEST_CASE("orbits of the symmetric action") {
    CHECK(orbit_of(elem(cyclic(2, 4), {6})) == OrbitId{1, 4});
    CHECK(orbit_of(elem(cyclic(2, 4), {0})) == OrbitId{4, 4});
    CHECK(orbit_of(elem(cyclic(3, 2), {3})) == OrbitId{1, 2});
    CHECK_THROWS_AS(orbit_of(elem(PGroup(2, Partition{1, 1}), {1, 0})), DomainError);

    CHECK((orbit_size(4, 2, 2) == 2L));
    CHECK((orbit_size(4, 4, 2) == 1L));
    CHECK((orbit_size(2, 0, 3) == 6L));
    CHECK_THROWS_AS(orbit_size(2, 3, 2), DomainError);

    const auto orbits = all_orbits(cyclic(2, 4));
    REQUIRE(orbits.size() == 5);
    CHECK(orbits[0].elements.size() == 8);
    CHECK(orbits[1].elements == std::vector<long long>{2, 6, 10, 14});
    CHECK(orbits[2].elements == std::vector<long long>{4, 12});
    CHECK(orbits[3].elements == std::vector<long long>{8});
    CHECK(orbits[4].elements == std::vector<long long>{0});

    const auto z3 = all_orbits(cyclic(3, 3));
    CHECK(z3[0].elements.size() == 18);
    CHECK(z3[1].elements.size() == 6);
    CHECK(z3[2].elements.size() == 2);
    CHECK(z3[3].elements.size() == 1);

    const auto zp = all_orbits(cyclic(7, 1));
    CHECK(zp[0].elements.size() == 6);
    CHECK(zp[1].elements == std::vector<long long>{0});
}

TEST_CASE("orbit partition covers the group (p in {2,3,5}, k <= 6)") {
    for (long long p : {2LL, 3LL, 5LL})
        for (long long k = 1; k <= 6; ++k) {
            const auto orbits = all_orbits(cyclic(p, k));
            long long total = 0;
            std::set<long long> seen;
            for (const Orbit& o : orbits) {
                CHECK((orbit_size(k, o.id.valuation, p) ==
                       static_cast<long>(o.elements.size())));
                total += static_cast<long long>(o.elements.size());
                for (long long x : o.elements) CHECK(seen.insert(x).second);
            }
            CHECK((cyclic(p, k).order() == static_cast<long>(total)));
        }
}

TEST_CASE("cyclic degeneration criterion") {
    CHECK(degenerates_cyclic(1, 3, 2, 4));
    CHECK(degenerates_cyclic(1, 3, 1, 3));
    CHECK_FALSE(degenerates_cyclic(0, 2, 0, 3));
    CHECK_THROWS_AS(degenerates_cyclic(3, 3, 0, 1), DomainError);
}

TEST_CASE("cyclic degeneration agrees with the homomorphism oracle") {
    for (long long p : {2LL, 3LL})
        for (long long k = 1; k <= 4; ++k)
            for (long long l = 1; l <= 4; ++l)
                for (long long r = 0; r < k; ++r)
                    for (long long s = 0; s < l; ++s) {
                        long long pr = 1, ps = 1;
                        for (long long i = 0; i < r; ++i) pr *= p;
                        for (long long i = 0; i < s; ++i) ps *= p;
                        const bool oracle = exists_hom_mapping(elem(cyclic(p, k), {pr}),
                                                               elem(cyclic(p, l), {ps}));
                        CHECK(degenerates_cyclic(r, k, s, l) == oracle);
                    }
}

TEST_CASE("mutual degeneration forces equal orbits") {
    for (long long k = 1; k <= 5; ++k)
        for (long long l = 1; l <= 5; ++l)
            for (long long r = 0; r < k; ++r)
                for (long long s = 0; s < l; ++s)
                    if (degenerates_cyclic(r, k, s, l) && degenerates_cyclic(s, l, r, k)) {
                        CHECK(r == s);
                        CHECK(k == l);
                    }
}

TEST_CASE("fundamental order is a partial order") {
    std::vector<FundamentalPoint> pts;
    for (long long k = 1; k <= 6; ++k)
        for (long long r = 0; r < k; ++r) pts.push_back(FundamentalPoint{r, k});
    for (const auto& x : pts) CHECK(fp_le(x, x));
    for (const auto& x : pts)
        for (const auto& y : pts) {
            if (fp_le(x, y) && fp_le(y, x)) CHECK(x == y);
            for (const auto& z : pts)
                if (fp_le(x, y) && fp_le(y, z)) CHECK(fp_le(x, z));
        }
}

TEST_CASE("ideals") {
    const PGroup g(2, Partition{2, 1});
    CHECK(ideal_of(elem(g, {2, 1})).generators() ==
          std::vector<FundamentalPoint>{{0, 1}, {1, 2}});
    CHECK(ideal_of(elem(g, {0, 0})).empty());
    CHECK(ideal_of(elem(g, {0, 0})).members(6).empty());

    // Downward closure of (1,3): valuation grows, co-exponent shrinks.
    const auto members = ideal_of(elem(cyclic(2, 3), {2})).members(3);
    CHECK(members == std::vector<FundamentalPoint>{{1, 2}, {1, 3}, {2, 3}});

    // Ideals are downward closed.
    for (const GroupElement& a : all_elements(PGroup(2, Partition{3, 2}))) {
        const OrderIdeal ideal = ideal_of(a);
        const auto mem = ideal.members(5);
        for (const auto& x : mem)
            for (long long k = 1; k <= 5; ++k)
                for (long long r = 0; r < k; ++r)
                    if (fp_le(FundamentalPoint{r, k}, x))
                        CHECK(ideal.contains_point(FundamentalPoint{r, k}));
    }
}

TEST_CASE("general degeneration via ideals") {
    const PGroup g(2, Partition{2, 1});
    CHECK(degenerates_general(elem(g, {2, 1}), elem(g, {2, 0})));
    CHECK(degenerates_general(elem(g, {2, 1}), elem(g, {2, 1})));
    CHECK_FALSE(degenerates_general(elem(cyclic(2, 1), {1}), elem(cyclic(2, 2), {1})));
    CHECK_THROWS_AS(degenerates_general(elem(cyclic(2, 1), {1}), elem(cyclic(3, 1), {1})),
                    DomainError);
}

TEST_CASE("ideal criterion agrees with the homomorphism oracle (rank <= 2, exps <= 2)") {
    std::vector<PGroup> groups;
    for (long long e1 = 1; e1 <= 2; ++e1) {
        groups.push_back(PGroup(2, Partition{e1}));
        for (long long e2 = 1; e2 <= e1; ++e2)
            groups.push_back(PGroup(2, Partition{e1, e2}));
    }
    for (const PGroup& G : groups)
        for (const PGroup& H : groups)
            for (const GroupElement& a : all_elements(G))
                for (const GroupElement& b : all_elements(H))
                    CHECK(degenerates_general(a, b) == exists_hom_mapping(a, b));
}

TEST_CASE("homomorphism enumeration") {
    const auto homs = enumerate_homs(cyclic(2, 2), cyclic(2, 3));
    REQUIRE(homs.size() == 4);
    std::vector<long long> images;
    for (const Homomorphism& h : homs) images.push_back(h.generator_images()[0][0]);
    CHECK(images == std::vector<long long>{0, 2, 4, 6});
    CHECK(homs[1].apply_coords({3}) == std::vector<long long>{6});

    CHECK(enumerate_homs(PGroup(2, Partition{2, 1}), PGroup(2, Partition{})).size() == 1);
    CHECK(enumerate_homs(PGroup(2, Partition{1, 1}), cyclic(2, 1)).size() == 4);
    CHECK((hom_count(cyclic(3, 2), cyclic(3, 5)) == 9L));
    CHECK_THROWS_AS(enumerate_homs(cyclic(2, 30), cyclic(2, 30), 1000), BudgetError);
    CHECK_THROWS_AS(Homomorphism(cyclic(2, 1), cyclic(2, 2), {{1}}), DomainError);
}

TEST_CASE("hom oracle basics") {
    CHECK(exists_hom_mapping(elem(cyclic(2, 3), {2}), elem(cyclic(2, 4), {4})));
    CHECK(exists_hom_mapping(elem(cyclic(2, 3), {5}), elem(cyclic(2, 3), {0})));
    CHECK_FALSE(exists_hom_mapping(elem(cyclic(2, 2), {1}), elem(cyclic(2, 3), {1})));
}
