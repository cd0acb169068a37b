#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tvar/cone.hpp"

using namespace tvar;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("orthant is self dual") {
    Cone c = Cone::full_orthant(2);
    CHECK(c.rays().size() == 2);
    CHECK(c.dual() == c);
}

TEST_CASE("dual of a plane cone") {
    // Cone{(1,0),(1,2)} has dual Cone{(0,1),(2,-1)}
    Cone c = Cone::from_generators(2, {iv({1, 0}), iv({1, 2})});
    Cone d = c.dual();
    Cone expected = Cone::from_generators(2, {iv({0, 1}), iv({2, -1})});
    CHECK(d == expected);
    CHECK(d.dual() == c);
}

TEST_CASE("dual of a single ray is a halfplane") {
    Cone c = Cone::from_generators(2, {iv({1, 1})});
    Cone d = c.dual();
    CHECK(d.lineality().size() == 1);
    CHECK(d.contains(iv({1, 0})));
    CHECK(d.contains(iv({0, 1})));
    CHECK(d.contains(iv({1, -1})));
    CHECK(d.contains(iv({-1, 1})));
    CHECK(!d.contains(iv({-1, 0})));
    CHECK(d.dual() == c);
}

TEST_CASE("zero cone and whole space") {
    Cone zero = Cone::zero(3);
    CHECK(zero.is_zero());
    CHECK(zero.dim() == 0);
    Cone whole = zero.dual();
    CHECK(whole.dim() == 3);
    CHECK(whole.lineality().size() == 3);
    CHECK(whole.dual() == zero);
}

TEST_CASE("faces of the quadrant") {
    Cone c = Cone::full_orthant(2);
    auto faces = c.faces();
    CHECK(faces.size() == 4);  // zero cone, two rays, the cone itself
    for (const Cone& f : faces) CHECK(c.has_face(f));
}

TEST_CASE("containment and relative interior") {
    Cone c = Cone::from_generators(2, {iv({1, 0}), iv({1, 2})});
    CHECK(c.contains(iv({1, 1})));
    CHECK(c.contains_relint(iv({1, 1})));
    CHECK(c.contains(iv({1, 0})));
    CHECK(!c.contains_relint(iv({1, 0})));
    CHECK(!c.contains(iv({0, 1})));
    CHECK(c.contains(c.relint_point()));
    CHECK(c.contains_relint(c.relint_point()));
}

TEST_CASE("double dual on random cones") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 4);
    std::uniform_int_distribution<std::size_t> count_dist(1, 6);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t rank = rank_dist(rng);
        std::vector<IVec> gens;
        std::size_t count = count_dist(rng);
        for (std::size_t i = 0; i < count; ++i) {
            IVec g(rank);
            for (std::size_t j = 0; j < rank; ++j) g[j] = entry(rng);
            gens.push_back(g);
        }
        Cone c = Cone::from_generators(rank, gens);
        CHECK(c.dual().dual() == c);
        for (const IVec& g : gens) CHECK(c.contains(g));
    }
}

TEST_CASE("intersection is the common face of adjacent cones") {
    Cone a = Cone::from_generators(2, {iv({1, 0}), iv({1, 1})});
    Cone b = Cone::from_generators(2, {iv({1, 1}), iv({0, 1})});
    Cone meet = a.intersect(b);
    CHECK(meet == Cone::from_generators(2, {iv({1, 1})}));
    CHECK(a.has_face(meet));
    CHECK(b.has_face(meet));
}
