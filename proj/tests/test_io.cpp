#include <doctest.h>

#include <fincat/builtin.hpp>
#include <fincat/errors.hpp>
#include <fincat/io.hpp>

using namespace fincat;
using nlohmann::json;

namespace {

const Backend grp{Kind::Group};
const Backend ab{Kind::AbelianGroup};
const Backend pset{Kind::PointedSet};

} // namespace

TEST_CASE("backend names")
{
    CHECK(parse_backend("grp") == Kind::Group);
    CHECK(parse_backend("ab") == Kind::AbelianGroup);
    CHECK(parse_backend("pset") == Kind::PointedSet);
    CHECK_THROWS_AS(parse_backend("rings"), InputError);
    for (auto k : {Kind::Group, Kind::AbelianGroup, Kind::PointedSet})
        CHECK(parse_backend(backend_name(k)) == k);
}

TEST_CASE("the three descriptor forms")
{
    auto s3 = parse_object_descriptor(
        json::parse(R"({"kind":"group","name":"S3","presentation":{"permutations":[[1,0,2],[1,2,0]],"degree":3}})"),
        grp);
    CHECK(s3.label == "S3");
    CHECK(same_object(s3.object, symmetric_group(3)));

    auto c4 = parse_object_descriptor(
        json::parse(R"({"kind":"abelian_group","cayley":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})"), ab);
    CHECK(c4.object->size() == 4);
    CHECK_FALSE(c4.label.empty());

    auto p3 = parse_object_descriptor(json::parse(R"({"kind":"pointed_set","name":"P3","size":3})"), pset);
    CHECK(p3.object->size() == 3);
    CHECK(p3.object->kind() == Kind::PointedSet);
}

TEST_CASE("descriptor round trip")
{
    for (const auto & g : builtin_groups()) {
        if (g.object->size() > 24)
            continue;
        auto d = object_descriptor(g.object, g.label);
        auto back = parse_object_descriptor(d, grp);
        CHECK(same_object(back.object, g.object));
        CHECK(back.label == g.label);
    }
}

TEST_CASE("strict descriptors")
{
    auto bad = [](const char * text, const Backend & b) { return parse_object_descriptor(json::parse(text), b); };
    CHECK_THROWS_AS(bad(R"({"kind":"group","size":3,"colour":1})", grp), InputError);
    CHECK_THROWS_AS(bad(R"({"name":"x","size":3})", pset), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"ring","size":3})", pset), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"pointed_set"})", pset), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"pointed_set","size":0})", pset), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"group","size":3})", grp), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"group","cayley":[[0,1],[1,1]]})", grp), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"group","cayley":[[0,1],[1]]})", grp), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"group","cayley":[[0,1],[1,0]],"size":2})", grp), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"group","presentation":{"permutations":[[0,0,1]],"degree":3}})", grp), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"group","presentation":{"permutations":[[1,0]],"degree":65}})", grp), InputError);
    CHECK_THROWS_AS(bad(R"({"kind":"group","cayley":[[0,1],[1,0]]})", ab), BackendMismatch);
    CHECK_THROWS_AS(bad(R"({"kind":"pointed_set","size":17})", pset), BoundExceeded);
    CHECK_THROWS_AS(
        bad(R"({"kind":"group","presentation":{"permutations":[[1,0,2,3,4],[1,2,3,4,0]],"degree":5}})", grp),
        BoundExceeded);

    try {
        bad(R"({"kind":"group","cayley":[[0,1],[1,"x"]]})", grp);
        FAIL("expected an input error");
    } catch (const InputError & e) {
        CHECK(e.path() == "/cayley/1/1");
    }
}

TEST_CASE("documents and syntax errors")
{
    auto doc = parse_input(R"([{"kind":"pointed_set","name":"A","size":2},{"kind":"pointed_set","name":"B","size":3}])",
                           pset);
    CHECK(doc.objects.size() == 2);

    auto with_maps = parse_input(R"({"objects":[{"kind":"pointed_set","name":"A","size":3},
                                               {"kind":"pointed_set","name":"B","size":2}],
                                    "morphisms":[{"name":"c","dom":"A","cod":"B","map":[0,1,1]}]})",
                                 pset);
    REQUIRE(with_maps.morphisms.size() == 1);
    CHECK(with_maps.morphisms[0].label == "c");
    CHECK_FALSE(is_mono(with_maps.morphisms[0].morphism));

    CHECK_THROWS_AS(parse_input(R"({"objects":[],"morphisms":[{"name":"c","dom":"A","cod":"B","map":[0]}]})", pset),
                    InputError);
    CHECK_THROWS_AS(parse_input(R"({"objects":[{"kind":"group","name":"Z2","cayley":[[0,1],[1,0]]}],
                                   "morphisms":[{"name":"c","dom":"Z2","cod":"Z2","map":[1,0]}]})",
                                grp),
                    Error);

    auto s3u = named_universe("s3-subgroups");
    auto known = parse_input(R"({"objects":[],"morphisms":[{"name":"i","dom":"A3","cod":"S3","map":[0,3,4]}]})", grp,
                             &s3u);
    REQUIRE(known.morphisms.size() == 1);
    CHECK(known.morphisms[0].morphism == standard_examples().a3_in_s3);

    try {
        parse_input(R"({"kind": "group", "size": })", grp);
        FAIL("expected a syntax error");
    } catch (const InputError & e) {
        REQUIRE(e.position().has_value());
        CHECK(*e.position() == 27);
    }
}

TEST_CASE("JSON writers")
{
    const auto & ex = standard_examples();
    auto u = named_universe("s3-subgroups");
    auto m = to_json(ex.a3_in_s3, u);
    CHECK(m.dump() == to_json(ex.a3_in_s3, u).dump());
    CHECK(m.contains("dom"));
    CHECK(m.contains("map"));

    auto d = universe_descriptor(u);
    CHECK(d.dump() == universe_descriptor(named_universe("s3-subgroups")).dump());

    auto law = closure_law_suite(named_universe("z4-chain")).results.front();
    auto lj = to_json(law, u);
    for (const char * key : {"law_id", "statement", "universe_descriptor", "status", "instances"})
        CHECK(lj.contains(key));

    auto report = classify(ex.a3_in_s3, MonoClassSpec::all_monos(), u);
    auto rj = to_json(report, u);
    CHECK(rj.dump() == to_json(classify(ex.a3_in_s3, MonoClassSpec::all_monos(), u), u).dump());
}
