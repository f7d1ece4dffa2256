#include <doctest.h>

#include "support/oracles.hpp"

#include <fincat/builtin.hpp>
#include <fincat/category.hpp>
#include <fincat/congruence.hpp>
#include <fincat/errors.hpp>

#include <cmath>
#include <thread>

using namespace fincat;

TEST_CASE("hom-set sizes of small groups")
{
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    CHECK(enumerate_hom(z2, z3).size() == 1);
    CHECK(enumerate_hom(z2, z3).front().is_zero());
    CHECK(enumerate_hom(z2, z2).size() == 2);

    auto s3 = symmetric_group(3);
    CHECK(enumerate_hom(s3, s3).size() == oracle::hom_count(*s3, *s3));
    CHECK(enumerate_hom(s3, s3).size() == 10);
}

TEST_CASE("hom(Z/m, Z/n) = gcd(m, n) in FinAb")
{
    for (std::size_t m = 1; m <= 12; ++m)
        for (std::size_t n = 1; n <= 12; ++n) {
            auto a = cyclic_group(m, Kind::AbelianGroup);
            auto b = cyclic_group(n, Kind::AbelianGroup);
            CAPTURE(m);
            CAPTURE(n);
            CHECK(enumerate_hom(a, b).size() == oracle::gcd(m, n));
        }
}

TEST_CASE("enumerate_hom agrees with brute force on the small registry")
{
    std::vector<ObjectRef> objects;
    for (const auto & g : builtin_groups())
        if (g.object->size() <= 8)
            objects.push_back(g.object);
    for (const auto & a : objects)
        for (const auto & b : objects) {
            if (std::pow(double(b->size()), double(a->size() - 1)) > 2e5)
                continue;
            CAPTURE(describe(*a));
            CAPTURE(describe(*b));
            auto homs = enumerate_hom(a, b);
            CHECK(homs.size() == oracle::hom_count(*a, *b));
            CHECK(std::is_sorted(homs.begin(), homs.end()));
            CHECK(std::adjacent_find(homs.begin(), homs.end()) == homs.end());
        }
}

TEST_CASE("pointed set hom-sets")
{
    auto p3 = Object::pointed_set(3);
    auto p4 = Object::pointed_set(4);
    CHECK(enumerate_hom(p3, p4).size() == 16);
    CHECK(enumerate_hom(p4, p3).size() == 27);
}

TEST_CASE("enumeration is independent of the thread count")
{
    auto s4 = symmetric_group(4);
    auto a4 = alternating_group(4);
    for (const auto & [a, b] : std::vector<std::pair<ObjectRef, ObjectRef>>{{s4, s4}, {a4, s4}, {s4, dihedral_group(4)}}) {
        auto one = enumerate_hom(a, b, HomOptions{.threads = 1});
        for (unsigned t : {2u, 3u, 8u})
            CHECK(enumerate_hom(a, b, HomOptions{.threads = t}) == one);
    }
}

TEST_CASE("concurrent callers see identical memoized results")
{
    auto s4 = symmetric_group(4);
    std::vector<std::size_t> sizes(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        pool.emplace_back([&, i] { sizes[i] = hom_set(s4, s4).size() + subobjects(s4).size(); });
    for (auto & t : pool)
        t.join();
    for (auto s : sizes)
        CHECK(s == sizes.front());
}

TEST_CASE("composition")
{
    const auto & ex = standard_examples();
    auto f = ex.a3_in_s3;
    CHECK(compose(Morphism::identity(f.cod()), f) == f);
    CHECK(compose(f, Morphism::identity(f.dom())) == f);
    CHECK(compose(ex.s3_to_z2, ex.a3_in_s3).is_zero());
    CHECK_THROWS_AS(compose(ex.a3_in_s3, ex.s3_to_z2), CompositionMismatch);
}

TEST_CASE("composition is associative on the s3 universe")
{
    auto u = named_universe("s3-subgroups");
    auto arrows = u.arrows();
    for (const auto & f : arrows)
        for (const auto & g : arrows) {
            if (! same_object(f.cod(), g.dom()))
                continue;
            for (const auto & h : u.arrows_into(f.dom()))
                CHECK(compose(g, compose(f, h)) == compose(compose(g, f), h));
        }
}

TEST_CASE("mono and epi examples")
{
    const auto & ex = standard_examples();
    CHECK(is_mono(ex.a3_in_s3));
    CHECK_FALSE(is_epi(ex.a3_in_s3));
    CHECK_FALSE(is_mono(ex.s3_to_z2));
    CHECK(is_epi(ex.s3_to_z2));
    auto zero = Morphism::zero(ex.z2, ex.z2);
    CHECK_FALSE(is_mono(zero));
    CHECK_FALSE(is_epi(zero));
}

TEST_CASE("concrete and cancellation-based mono/epi agree up to size 8")
{
    for (const char * name : {"groups-le-8", "ab-small", "pointed-small"}) {
        auto u = named_universe(name);
        std::vector<ObjectRef> small;
        for (const auto & o : u.objects())
            if (o->size() <= 8)
                small.push_back(o);
        for (const auto & a : small)
            for (const auto & b : small)
                for (const auto & f : hom_set(a, b)) {
                    CAPTURE(describe(f));
                    CHECK(is_mono(f) == is_mono_by_cancellation(f, small));
                    CHECK(is_epi(f) == is_epi_by_cancellation(f, small));
                }
    }
}

TEST_CASE("invalid structures are rejected")
{
    CHECK_THROWS_AS(Object::from_table(Kind::Group, 2, {0, 1, 1, 1}), InvalidStructure);
    auto s3 = symmetric_group(3);
    std::vector<Element> s3_table(s3->table().begin(), s3->table().end());
    CHECK_THROWS_AS(Object::from_table(Kind::AbelianGroup, 6, s3_table), InvalidStructure);
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    CHECK_THROWS_AS(Morphism(z2, z3, {0, 1}), InvalidStructure);
    CHECK_THROWS_AS(Morphism(z2, Object::pointed_set(2), {0, 1}), BackendMismatch);
    CHECK_THROWS_AS(enumerate_hom(z2, Object::pointed_set(2)), BackendMismatch);
}

TEST_CASE("backend bounds")
{
    Backend grp(Kind::Group);
    CHECK(grp.size_bound() == 60);
    CHECK(Backend(Kind::AbelianGroup).size_bound() == 64);
    CHECK(Backend(Kind::PointedSet).size_bound() == 16);
    CHECK(grp.zero()->size() == 1);
    CHECK_NOTHROW(grp.admit(alternating_group(5)));
    CHECK_THROWS_AS(grp.admit(symmetric_group(5)), BoundExceeded);
    CHECK_THROWS_AS(grp.admit(cyclic_group(4, Kind::AbelianGroup)), BackendMismatch);
    CHECK_THROWS_AS(Backend(Kind::Group, 6).admit(symmetric_group(4)), BoundExceeded);
}

TEST_CASE("permutation and Cayley inputs give the same object")
{
    auto from_perms = Object::from_permutations(Kind::Group, 3, {{1, 0, 2}, {1, 2, 0}});
    auto s3 = symmetric_group(3);
    auto from_table = Object::from_table(Kind::Group, 6, std::vector<Element>(s3->table().begin(), s3->table().end()));
    CHECK(same_object(from_perms, from_table));
    CHECK(from_perms->size() == 6);
    CHECK_THROWS_AS(Object::from_permutations(Kind::Group, 5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, "", 60),
                    BoundExceeded);
}
