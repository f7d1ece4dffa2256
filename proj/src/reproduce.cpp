#include <fincat/errors.hpp>
#include <fincat/reproduce.hpp>

#include <functional>

namespace fincat {

using nlohmann::json;

namespace {

template <typename Visit>
void for_sweep_monos(std::size_t max_order, Visit && visit)
{
    for (const auto & g : builtin_groups()) {
        if (g.object->size() > max_order)
            continue;
        auto universe = subgroup_universe(g.object, g.label + "-subgroups");
        for (const auto & m : universe.arrows())
            if (is_mono(m))
                visit(g.label, universe, m);
    }
}

std::size_t count_groups(std::size_t max_order)
{
    std::size_t n = 0;
    for (const auto & g : builtin_groups())
        n += g.object->size() <= max_order;
    return n;
}

std::string yes_no(bool b)
{
    return b ? "true" : "false";
}

Reproduction remark_6_8()
{
    Reproduction r{"remark-6.8", "A3 -> S3 is essential but neither subobject-essential nor stable", false, {}, {}, {}};
    const auto & ex = standard_examples();
    auto universe = named_universe("s3-subgroups");
    auto c = classify(ex.a3_in_s3, MonoClassSpec::all_monos(), universe);
    r.details = to_json(c, universe);
    r.lines.push_back("A3 -> S3: essential=" + yes_no(c.essential) + " subobject_essential="
                      + yes_no(c.subobject_essential) + " stable_essential=" + yes_no(c.stable_essential));

    bool pullback_ok = false;
    if (c.stable_witness) {
        const auto & w = *c.stable_witness;
        bool along_s2 = same_object(w.along.cod(), ex.s3) && w.along.dom()->size() == 2 && is_mono(w.along);
        bool apex_zero = w.pulled.dom()->is_zero();
        bool refutes = ! is_essential(w.pulled, MonoClassSpec::all_monos()).value;
        pullback_ok = along_s2 && apex_zero && refutes;
        r.lines.push_back("pullback along " + universe.label(w.along) + " has apex "
                          + universe.label(w.pulled.dom()) + "; the pulled mono " + universe.label(w.pulled)
                          + " is essential=" + yes_no(! refutes));
    }
    r.passed = c.essential && ! c.subobject_essential && ! c.stable_essential && pullback_ok;
    if (! r.passed)
        r.witness = r.details;
    return r;
}

Reproduction remark_6_7_search()
{
    Reproduction r{"remark-6.7-search", "essential monos lack weak left cancellation", false, {}, {}, {}};
    auto found = find_weak_left_cancellation_failure(builtin_groups());
    bool found_ok = false;
    if (found) {
        Universe u("search", Kind::Group);
        found_ok = is_weak_left_cancellation_failure(found->m_prime, found->m);
        r.details["search"] = {{"m_prime", to_json(found->m_prime, u)},
                               {"m", to_json(found->m, u)},
                               {"codomain", found->codomain_label},
                               {"validated", found_ok}};
        r.lines.push_back("search: " + identify(found->m_prime.dom()) + " <= " + identify(found->m.dom()) + " <= "
                          + found->codomain_label + " validated=" + yes_no(found_ok));
    } else {
        r.lines.push_back("search: no witness in the registry");
    }
    const auto & ex = standard_examples();
    bool family_ok = is_weak_left_cancellation_failure(ex.z2_in_s3a5, ex.s3_in_a5);
    r.details["family"] = {{"chain", "Z2 <= S3 <= A5"}, {"validated", family_ok}};
    r.lines.push_back("Z2 <= S3 <= A5: m and m m' essential, m' not: " + yes_no(family_ok));
    r.passed = found_ok && family_ok;
    if (! r.passed)
        r.witness = r.details;
    return r;
}

Reproduction thm_6_9_sweep()
{
    Reproduction r{"thm-6.9-sweep", "stable essential = subobject-essential on subgroups of groups of order <= 24",
                   false, {}, {}, {}};
    auto s = stable_essential_sweep(24);
    r.details = {{"groups", s.groups},
                 {"monos", s.monos},
                 {"subobject_essential", s.subobject_essential},
                 {"refuted", s.refuted}};
    r.lines.push_back(std::to_string(s.monos) + " monos over " + std::to_string(s.groups) + " groups: "
                      + std::to_string(s.subobject_essential) + " subobject-essential, " + std::to_string(s.refuted)
                      + " refuted by a pullback");
    r.passed = s.passed();
    if (! r.passed) {
        Universe u("sweep", Kind::Group);
        r.witness = {{"group", s.contradiction_group}, {"mono", to_json(*s.contradiction, u)}};
        r.lines.push_back("contradiction in " + s.contradiction_group + ": " + describe(*s.contradiction));
    }
    return r;
}

Reproduction thm_5_2_pullbacks()
{
    Reproduction r{"thm-5.2-pullbacks", "P preserves pullbacks", true, {}, json::object(), {}};
    for (const char * name : {"z4-chain", "s3-subgroups"}) {
        auto universe = named_universe(name);
        auto spec = SpectralCategory::build(universe);
        auto report = verify_limit_preservation(spec, universe_cospans(universe));
        r.details[name] = to_json(report, universe);
        r.lines.push_back(std::string(name) + ": " + std::to_string(report.cospans) + " cospans, "
                          + std::to_string(report.cones) + " cones, preserved=" + yes_no(report.passed()));
        if (! report.passed() && r.passed) {
            r.passed = false;
            r.witness = r.details[name]["witness"];
        }
    }
    return r;
}

Reproduction focal_suite()
{
    Reproduction r{"focal-suite", "focal conditions and the right calculus", true, {}, json::object(), {}};
    auto s4 = named_universe("s4-subgroups");
    json se = json::array();
    for (const auto & c : check_focal(MorphismClass::subobject_essential(), s4)) {
        se.push_back(to_json(c, s4));
        r.lines.push_back("Mono_SE on s4-subgroups: " + std::string(condition_name(c.id)) + " "
                          + (c.passed ? "pass" : "fail"));
        if (! c.passed && r.passed) {
            r.passed = false;
            r.witness = se.back();
        }
    }
    r.details["subobject_essential"] = se;

    const auto & ex = standard_examples();
    auto s3 = named_universe("s3-subgroups");
    auto reports = check_focal(MorphismClass::essential(MonoClassSpec::all_monos()), s3);
    json e = json::array();
    for (const auto & c : reports)
        e.push_back(to_json(c, s3));
    r.details["essential"] = e;
    const auto & f2 = reports[2];
    bool expected = false;
    if (! f2.passed && f2.witness.size() == 2) {
        const auto & s = f2.witness[0].second;
        const auto & f = f2.witness[1].second;
        expected = s == ex.a3_in_s3 && same_object(f.cod(), ex.s3) && f.dom()->size() == 2 && is_mono(f);
    }
    r.lines.push_back("Mono_E on s3-subgroups: F2 fails on the cospan A3 -> S3 <- S2: " + yes_no(expected));
    if (! expected && r.passed) {
        r.passed = false;
        r.witness = e[2];
    }
    return r;
}

Reproduction cor_7_3_uniform()
{
    Reproduction r{"cor-7.3-uniform", "uniform objects have division endomorphism monoids", true, {}, json::object(),
                   {}};
    struct Case
    {
        std::string label;
        Universe universe;
        ObjectRef object;
        bool uniform;
        std::size_t size;
    };
    auto z4u = named_universe("z4-chain");
    Universe z5u("z5", Kind::Group);
    z5u.add(cyclic_group(1), "0");
    auto z5 = z5u.add(cyclic_group(5), "Z5");
    auto s3u = named_universe("s3-subgroups");
    std::vector<Case> cases{
        {"Z4", z4u, z4u.find("Z4"), true, 2},
        {"Z5", z5u, z5, true, 5},
        {"S3", s3u, s3u.find("S3"), false, 10},
    };
    for (auto & c : cases) {
        auto spec = SpectralCategory::build(c.universe);
        auto uniform = is_uniform(c.object, spec.m_class(), &c.universe);
        auto division = end_spec_division_check(c.object, spec);
        json j{{"uniform", uniform.value}, {"end_spec", to_json(division)}};
        if (uniform.witness)
            j["uniform_witness"] = to_json(*uniform.witness, c.universe);
        r.details[c.label] = j;
        bool ok = uniform.value == c.uniform && division.verdict == c.uniform && division.size == c.size;
        r.lines.push_back(c.label + ": uniform=" + yes_no(uniform.value) + " |End_Spec|=" + std::to_string(division.size)
                          + " division_monoid=" + yes_no(division.verdict));
        if (! ok && r.passed) {
            r.passed = false;
            r.witness = j;
        }
    }
    return r;
}

const std::vector<std::pair<std::string, std::function<Reproduction()>>> & registry()
{
    static const std::vector<std::pair<std::string, std::function<Reproduction()>>> items{
        {"remark-6.8", remark_6_8},
        {"remark-6.7-search", remark_6_7_search},
        {"thm-6.9-sweep", thm_6_9_sweep},
        {"thm-5.2-pullbacks", thm_5_2_pullbacks},
        {"focal-suite", focal_suite},
        {"cor-7.3-uniform", cor_7_3_uniform},
    };
    return items;
}

} // namespace

StableSweepReport stable_essential_sweep(std::size_t max_order)
{
    StableSweepReport report;
    report.groups = count_groups(max_order);
    auto spec = MonoClassSpec::all_monos();
    for_sweep_monos(max_order, [&](const std::string & group, const Universe & universe, const Morphism & m) {
        ++report.monos;
        bool se = is_subobject_essential(m).value;
        bool refuted = refute_stable_essential(m, spec, universe).has_value();
        report.subobject_essential += se;
        report.refuted += refuted;
        if (se == refuted && ! report.contradiction) {
            report.contradiction = m;
            report.contradiction_group = group;
        }
    });
    return report;
}

AgreementSweepReport essential_conditions_sweep(std::size_t max_order)
{
    AgreementSweepReport report;
    report.groups = count_groups(max_order);
    for_sweep_monos(max_order, [&](const std::string & group, const Universe &, const Morphism & m) {
        ++report.monos;
        auto c = essential_conditions(m);
        report.essential += c.by_quotients;
        if (! c.agree() && ! report.disagreement) {
            report.disagreement = m;
            report.disagreement_group = group;
        }
    });
    return report;
}

const std::vector<std::string> & reproduction_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto & [id, run] : registry())
            out.push_back(id);
        return out;
    }();
    return ids;
}

Reproduction reproduce(std::string_view id)
{
    for (const auto & [name, run] : registry())
        if (name == id)
            return run();
    throw InputError("unknown reproduction id \"" + std::string(id) + "\"", std::nullopt, {});
}

} // namespace fincat
