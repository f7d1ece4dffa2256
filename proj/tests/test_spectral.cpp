#include <doctest.h>

#include "support/oracles.hpp"

#include <fincat/builtin.hpp>
#include <fincat/errors.hpp>
#include <fincat/spectral.hpp>

using namespace fincat;

namespace {

std::vector<ClassRef> classes(const SpectralCategory & spec, const ObjectRef & a, const ObjectRef & b)
{
    std::vector<ClassRef> out;
    for (std::size_t i = 0; i < spec.hom(a, b).size(); ++i)
        out.push_back(ClassRef{a, b, i});
    return out;
}

} // namespace

TEST_CASE("spectral hom-sets")
{
    const auto & ex = standard_examples();
    auto z4u = named_universe("z4-chain");
    auto spec = SpectralCategory::build(z4u);
    CHECK(spec.exact());
    const auto & objects = z4u.objects();
    REQUIRE(objects.size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto & a : objects)
        for (const auto & b : objects)
            sizes.push_back(spec.hom(a, b).size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 1, 2, 2});
    CHECK(spec.hom(ex.ab_z4, ex.ab_z4).size() == 2);

    auto s3u = named_universe("s3-subgroups");
    auto s3spec = SpectralCategory::build(s3u);
    CHECK(s3spec.hom(ex.s3, ex.s3).size() == 10);
    auto zero = s3u.objects().front();
    REQUIRE(zero->is_zero());
    CHECK(s3spec.hom(zero, zero).size() == 1);

    auto admissible = [](const ObjectRef & a) {
        return [a](const std::vector<Element> & s) { return oracle::subobject_essential(*a, s); };
    };
    for (const auto & a : s3u.objects())
        for (const auto & b : s3u.objects())
            CHECK(s3spec.hom(a, b).size() == oracle::zigzag_class_count(*a, *b, admissible(a)));
}

TEST_CASE("the localization is a functor")
{
    for (const char * name : {"z4-chain", "s3-subgroups"}) {
        auto u = named_universe(name);
        auto spec = SpectralCategory::build(u);
        for (const auto & a : u.objects())
            CHECK(spec.functor(Morphism::identity(a)) == spec.identity(a));
        auto arrows = u.arrows();
        for (const auto & f : arrows)
            for (const auto & g : arrows)
                if (same_object(f.cod(), g.dom()))
                    CHECK(spec.functor(compose(g, f)) == spec.compose(spec.functor(g), spec.functor(f)));
    }
}

TEST_CASE("class composition is associative and unital")
{
    for (const char * name : {"z4-chain", "s3-subgroups"}) {
        auto u = named_universe(name);
        auto spec = SpectralCategory::build(u);
        for (const auto & a : u.objects())
            for (const auto & b : u.objects()) {
                for (const auto & f : classes(spec, a, b)) {
                    CHECK(spec.compose(spec.identity(b), f) == f);
                    CHECK(spec.compose(f, spec.identity(a)) == f);
                }
                for (const auto & c : u.objects())
                    for (const auto & d : u.objects())
                        for (const auto & f : classes(spec, a, b))
                            for (const auto & g : classes(spec, b, c))
                                for (const auto & h : classes(spec, c, d))
                                    CHECK(spec.compose(h, spec.compose(g, f)) == spec.compose(spec.compose(h, g), f));
            }
    }
}

TEST_CASE("members of M become invertible")
{
    const auto & ex = standard_examples();
    auto z4u = named_universe("z4-chain");
    auto spec = SpectralCategory::build(z4u);
    auto soc = spec.functor(ex.soc_z4);
    CHECK(spec.is_invertible(soc));
    CHECK_FALSE(spec.is_invertible(spec.zero(ex.ab_z4, ex.ab_z4)));

    for (const char * name : {"z4-chain", "s3-subgroups"}) {
        auto u = named_universe(name);
        auto sp = SpectralCategory::build(u);
        for (const auto & m : u.arrows())
            if (is_mono(m) && sp.m_class()(m))
                CHECK(sp.is_invertible(sp.functor(m)));
    }

    auto s3u = named_universe("s3-subgroups");
    auto s3spec = SpectralCategory::build(s3u);
    CHECK_FALSE(s3spec.is_invertible(s3spec.functor(ex.a3_in_s3)));
}

TEST_CASE("zero classes")
{
    for (const char * name : {"z4-chain", "s3-subgroups"}) {
        auto u = named_universe(name);
        auto spec = SpectralCategory::build(u);
        for (const auto & a : u.objects())
            for (const auto & b : u.objects()) {
                CHECK(spec.zero_class_well_defined(a, b));
                CHECK(spec.functor(Morphism::zero(a, b)) == spec.zero(a, b));
                for (const auto & c : u.objects())
                    for (const auto & f : classes(spec, a, b)) {
                        CHECK(spec.compose(spec.zero(b, c), f) == spec.zero(a, c));
                        CHECK(spec.compose(ClassRef{b, c, 0}, spec.zero(a, b)) == spec.zero(a, c));
                    }
            }
    }
}

TEST_CASE("pullbacks are preserved")
{
    const auto & ex = standard_examples();
    auto s3u = named_universe("s3-subgroups");
    auto spec = SpectralCategory::build(s3u);
    auto r = verify_limit_preservation(spec, {{ex.a3_in_s3, ex.s2_in_s3}, {ex.s2_in_s3, ex.s2_in_s3}});
    CHECK(r.passed());
    CHECK(r.cospans == 2);
    CHECK(r.cones > 0);

    auto z4u = named_universe("z4-chain");
    auto zspec = SpectralCategory::build(z4u);
    CHECK(verify_limit_preservation(zspec, {{ex.soc_z4, ex.soc_z4}}).passed());
    auto all = verify_limit_preservation(zspec, universe_cospans(z4u));
    CHECK(all.passed());
    CHECK(all.cospans == universe_cospans(z4u).size());
}

TEST_CASE("minimal M-subobjects")
{
    const auto & ex = standard_examples();
    auto z4u = named_universe("z4-chain");
    auto spec = SpectralCategory::build(z4u);
    auto m = minimal_m_subobject(ex.ab_z4, spec);
    CHECK(m.subobject.elements == std::vector<Element>{0, 2});
    CHECK(m.oracle_checks == z4u.size());

    auto s3u = named_universe("s3-subgroups");
    auto s3spec = SpectralCategory::build(s3u);
    CHECK(minimal_m_subobject(ex.s3, s3spec).subobject.is_total());
    for (const auto & a : s3u.objects())
        CHECK_NOTHROW(minimal_m_subobject(a, s3spec));
    CHECK(minimal_m_subobject(s3u.objects().front(), s3spec).subobject.is_zero());
}

TEST_CASE("uniform objects")
{
    const auto & ex = standard_examples();
    auto se = MorphismClass::subobject_essential();
    CHECK(is_uniform(ex.ab_z4, se).value);
    CHECK(is_uniform(ex.z5, se).value);
    CHECK(is_uniform(ex.a5, se).value == false);
    auto d = is_uniform(ex.s3, se);
    CHECK_FALSE(d.value);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->dom()->size() == 2);
    CHECK(is_mono(*d.witness));
    CHECK_FALSE(se(*d.witness));

    CHECK_THROWS_AS(is_uniform(ex.p2, se), PreconditionViolation);
    auto p = named_universe("pointed-small");
    auto pspec = SpectralCategory::build(p);
    for (const auto & a : p.objects()) {
        auto pu = is_uniform(a, pspec.m_class(), &p);
        if (pu.value)
            CHECK_FALSE(pu.exact);
        else
            CHECK((pu.witness.has_value() && ! pspec.m_class()(*pu.witness)));
    }
}

TEST_CASE("nonzero classes between uniform objects are invertible")
{
    for (const char * name : {"z4-chain", "s3-subgroups"}) {
        auto u = named_universe(name);
        auto spec = SpectralCategory::build(u);
        std::vector<ObjectRef> uniform;
        for (const auto & a : u.objects())
            if (is_uniform(a, spec.m_class()).value)
                uniform.push_back(a);
        REQUIRE(uniform.size() >= 2);
        for (const auto & a : uniform) {
            auto report = end_spec_division_check(a, spec);
            CHECK(report.size == spec.hom(a, a).size());
            if (! a->is_zero())
                CHECK(report.verdict);
            for (const auto & b : uniform)
                for (const auto & c : classes(spec, a, b))
                    if (! (c == spec.zero(a, b)))
                        CHECK(spec.is_invertible(c));
        }
    }
}

TEST_CASE("endomorphism monoids")
{
    const auto & ex = standard_examples();
    auto s3u = named_universe("s3-subgroups");
    auto spec = SpectralCategory::build(s3u);
    auto r = end_spec_division_check(ex.s3, spec);
    CHECK(r.size == 10);
    CHECK(r.invertible.size() == 6);
    CHECK_FALSE(r.verdict);
    for (std::size_t f = 0; f < r.size; ++f) {
        CHECK(r.table[r.zero][f] == r.zero);
        CHECK(r.table[f][r.zero] == r.zero);
    }

    auto z4u = named_universe("z4-chain");
    auto zr = end_spec_division_check(ex.ab_z4, SpectralCategory::build(z4u));
    CHECK(zr.size == 2);
    CHECK(zr.verdict);
}

TEST_CASE("export is deterministic")
{
    auto u = named_universe("z4-chain");
    auto a = SpectralCategory::build(u).export_json();
    auto b = SpectralCategory::build(u).export_json();
    CHECK(a.dump() == b.dump());
    CHECK(a["exact"] == true);
    std::size_t total = 0;
    for (const auto & h : a["homs"])
        total += h["classes"].size();
    CHECK(total == 13);
    for (const auto & t : a["composition"]) {
        REQUIRE(t.size() == 3);
        CHECK(t[2].get<std::size_t>() < total);
    }
}

TEST_CASE("construction preconditions")
{
    CHECK_THROWS_AS(SpectralCategory::build(named_universe("s4-subgroups"), MonoClassSpec::normal_monos()),
                    PreconditionViolation);
    auto p = SpectralCategory::build(named_universe("pointed-small"));
    CHECK_FALSE(p.exact());

    const auto & ex = standard_examples();
    auto spec = SpectralCategory::build(named_universe("s3-subgroups"));
    CHECK_THROWS_AS(spec.compose(spec.identity(ex.s3), spec.identity(ex.a3)), CompositionMismatch);
}
