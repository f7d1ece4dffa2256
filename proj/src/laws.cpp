#include <fincat/congruence.hpp>
#include <fincat/errors.hpp>
#include <fincat/laws.hpp>

#include <algorithm>

namespace fincat {

namespace {

using Witness = std::vector<std::pair<std::string, Morphism>>;

struct Check
{
    bool ok = true;
    std::size_t instances = 0;
    Witness witness;

    void fail(Witness w)
    {
        if (ok)
            witness = std::move(w);
        ok = false;
    }
};

/// The morphisms of a universe grouped for the law instances.
struct Arena
{
    std::vector<Morphism> arrows;
    std::vector<Morphism> monos;
    std::vector<std::vector<std::size_t>> monos_into;  // by universe index of the codomain
    std::vector<std::vector<std::size_t>> arrows_into; // by universe index of the codomain
    std::vector<std::size_t> dom_index;
    std::vector<std::size_t> cod_index;

    explicit Arena(const Universe & u)
    {
        arrows = u.arrows();
        monos_into.resize(u.size());
        arrows_into.resize(u.size());
        for (const auto & f : arrows) {
            dom_index.push_back(*u.index_of(f.dom()));
            cod_index.push_back(*u.index_of(f.cod()));
        }
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            arrows_into[cod_index[i]].push_back(i);
            if (is_mono(arrows[i])) {
                monos_into[cod_index[i]].push_back(i);
                monos.push_back(arrows[i]);
            }
        }
    }

    /// Calls body(m, m') for every arrow m and every mono m' into dom(m).
    template <class Body>
    void for_pairs(Body && body) const
    {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            for (auto j : monos_into[dom_index[i]])
                body(arrows[i], arrows[j]);
    }
};

using Cls = MorphismClass;

Check contains_isos(const Arena & arena, const Cls & cls)
{
    Check c;
    for (const auto & f : arena.arrows)
        if (is_iso(f)) {
            ++c.instances;
            if (! cls(f))
                c.fail({{"iso", f}});
        }
    return c;
}

Check composition_closed(const Arena & arena, const Cls & cls)
{
    Check c;
    arena.for_pairs([&](const Morphism & m, const Morphism & mp) {
        if (! cls(m) || ! cls(mp))
            return;
        ++c.instances;
        if (! cls(compose(m, mp)))
            c.fail({{"m", m}, {"m'", mp}});
    });
    return c;
}

/// (m m' in cls and side(m)) implies m in cls.
Check right_cancellation(const Arena & arena, const Cls & cls, const Cls & side)
{
    Check c;
    arena.for_pairs([&](const Morphism & m, const Morphism & mp) {
        if (! cls(compose(m, mp)) || ! side(m))
            return;
        ++c.instances;
        if (! cls(m))
            c.fail({{"m", m}, {"m'", mp}});
    });
    return c;
}

/// (m m' in cls and m' in cls) implies m in cls.
Check weak_right_cancellation(const Arena & arena, const Cls & cls)
{
    Check c;
    arena.for_pairs([&](const Morphism & m, const Morphism & mp) {
        if (! cls(mp) || ! cls(compose(m, mp)))
            return;
        ++c.instances;
        if (! cls(m))
            c.fail({{"m", m}, {"m'", mp}});
    });
    return c;
}

/// (m m' in cls and side(m)) implies m' in cls.
Check left_cancellation(const Arena & arena, const Cls & cls, const Cls & side)
{
    Check c;
    arena.for_pairs([&](const Morphism & m, const Morphism & mp) {
        if (! side(m) || ! cls(compose(m, mp)))
            return;
        ++c.instances;
        if (! cls(mp))
            c.fail({{"m", m}, {"m'", mp}});
    });
    return c;
}

/// Split monos in cls are isomorphisms; retractions are enumerated.
Check split_monos_are_isos(const Arena & arena, const Cls & cls)
{
    Check c;
    for (const auto & m : arena.monos) {
        if (! cls(m))
            continue;
        for (const auto & r : hom_set(m.cod(), m.dom()))
            if (compose(r, m).is_identity()) {
                ++c.instances;
                if (! is_iso(m))
                    c.fail({{"m", m}, {"retraction", r}});
                break;
            }
    }
    return c;
}

Check pullback_stable(const Arena & arena, const Cls & cls)
{
    Check c;
    for (const auto & m : arena.arrows) {
        if (! cls(m))
            continue;
        auto cod = arena.cod_index[static_cast<std::size_t>(&m - arena.arrows.data())];
        for (auto j : arena.arrows_into[cod]) {
            const auto & x = arena.arrows[j];
            ++c.instances;
            auto u = pulled_back(m, x);
            if (! cls(u))
                c.fail({{"m", m}, {"x", x}, {"pullback", u}});
        }
    }
    return c;
}

/// m' is the pullback of m m' along m, for composable monos.
Check pullback_of_composite(const Arena & arena)
{
    Check c;
    arena.for_pairs([&](const Morphism & m, const Morphism & mp) {
        if (! is_mono(m))
            return;
        ++c.instances;
        auto u = pulled_back(compose(m, mp), m);
        if (image_of(u) != image_of(mp))
            c.fail({{"m", m}, {"m'", mp}, {"pullback", u}});
    });
    return c;
}

Check same_members(const Arena & arena, const Cls & a, const Cls & b)
{
    Check c;
    for (const auto & m : arena.monos) {
        ++c.instances;
        if (a(m) != b(m))
            c.fail({{"m", m}});
    }
    return c;
}

Check both(Check a, const Check & b)
{
    a.instances += b.instances;
    if (! b.ok)
        a.fail(b.witness);
    return a;
}

} // namespace

std::string_view status_name(LawStatus status)
{
    switch (status) {
    case LawStatus::Pass:
        return "pass";
    case LawStatus::Fail:
        return "fail";
    case LawStatus::Vacuous:
        return "vacuous";
    }
    return {};
}

bool LawSuiteReport::passed() const
{
    return std::all_of(results.begin(), results.end(), [](const LawResult & r) { return r.status != LawStatus::Fail; });
}

const LawResult * LawSuiteReport::find(std::string_view law_id) const
{
    for (const auto & r : results)
        if (r.law_id == law_id)
            return &r;
    return nullptr;
}

std::vector<LawResult> check_s_axioms(const Universe & universe, const MonoClassSpec & spec)
{
    Arena arena(universe);
    auto s = Cls::from_spec(spec);
    auto any = Cls("any", [](const Morphism &) { return true; }, true, false);
    std::vector<LawResult> out;
    auto record = [&](std::string id, std::string statement, const Check & c) {
        out.push_back(LawResult{std::move(id), std::move(statement), universe.name(),
                                c.ok ? LawStatus::Pass : LawStatus::Fail, c.instances, c.witness});
    };
    record("S.pullback-stable", "S is pullback stable", pullback_stable(arena, s));
    record("S.isomorphisms", "S contains all isomorphisms", contains_isos(arena, s));
    record("S.composition", "S is closed under composition", composition_closed(arena, s));
    record("S.left-cancellation", "m m' in S implies m' in S", left_cancellation(arena, s, any));
    return out;
}

LawSuiteReport closure_law_suite(const Universe & universe, const LawSuiteOptions & options)
{
    Arena arena(universe);
    auto s = Cls::from_spec(options.s);
    auto e = Cls::essential(options.s, &universe);
    auto st = Cls::stabilized(e, universe);
    auto se = Cls::subobject_essential();
    auto monos = Cls::monos();

    LawSuiteReport report{universe.name(), {}};
    auto record = [&](std::string id, std::string statement, const Check & c) {
        report.results.push_back(LawResult{std::move(id), std::move(statement), universe.name(),
                                           c.ok ? LawStatus::Pass : LawStatus::Fail, c.instances, c.witness});
    };
    auto record_implication = [&](std::string id, std::string statement, const Check & hypothesis, auto conclusion) {
        if (! hypothesis.ok) {
            report.results.push_back(LawResult{std::move(id), std::move(statement), universe.name(),
                                               LawStatus::Vacuous, hypothesis.instances, hypothesis.witness});
            return;
        }
        record(std::move(id), std::move(statement), conclusion());
    };

    if (options.s_axioms) {
        auto axioms = check_s_axioms(universe, options.s);
        report.results.insert(report.results.end(), axioms.begin(), axioms.end());
    }

    record("2.1(a)", "St(M) is pullback stable", pullback_stable(arena, st));
    record_implication("2.1(b)", "M contains the isomorphisms, hence so does St(M)", contains_isos(arena, e),
                       [&] { return contains_isos(arena, st); });
    record_implication("2.1(c)", "M is closed under composition, hence so is St(M)", composition_closed(arena, e),
                       [&] { return composition_closed(arena, st); });
    record_implication("2.1(d)", "(m m' in M and m in Mono) implies m in M, and likewise for St(M)",
                       right_cancellation(arena, e, monos), [&] { return right_cancellation(arena, st, monos); });
    record_implication("2.1(e)", "(m m' in M and m' in M) implies m in M, and likewise for St(M)",
                       weak_right_cancellation(arena, e), [&] { return weak_right_cancellation(arena, st); });
    record("2.1(f)", "(m m' in St(M) and m mono) implies m' in St(M)", left_cancellation(arena, st, monos));

    record("3.1(a)", "Mono_E contains the isomorphisms", contains_isos(arena, e));
    record("3.1(b)", "Mono_E is closed under composition", composition_closed(arena, e));
    record("3.1(c)", "(m m' in Mono_E and m in S) implies m in Mono_E", right_cancellation(arena, e, s));
    record("3.1(d)", "(m m' in Mono_E and m' in Mono_E) implies m in Mono_E, split members are isomorphisms",
           both(weak_right_cancellation(arena, e), split_monos_are_isos(arena, e)));

    record("3.3(a)", "St(Mono_E) is pullback stable", pullback_stable(arena, st));
    record("3.3(b)", "St(Mono_E) contains the isomorphisms", contains_isos(arena, st));
    record("3.3(c)", "St(Mono_E) is closed under composition", composition_closed(arena, st));
    record("3.3(d)", "(m m' in St(Mono_E) and m in S) implies m in St(Mono_E)", right_cancellation(arena, st, s));
    record("3.3(e)", "(m m' in St(Mono_E) and m' in St(Mono_E)) implies m in St(Mono_E), split members are isomorphisms",
           both(weak_right_cancellation(arena, st), split_monos_are_isos(arena, st)));
    record("3.3(f)", "(m m' in St(Mono_E) and m mono) implies m' in St(Mono_E)", left_cancellation(arena, st, monos));

    record("6.5(a)", "Mono_SE contains the isomorphisms", contains_isos(arena, se));
    record("6.5(b)", "Mono_SE is closed under composition", composition_closed(arena, se));
    record("6.5(c)", "(m m' in Mono_SE and m mono) implies m in Mono_SE", right_cancellation(arena, se, monos));
    record("6.5(d)", "(m m' in Mono_SE and m' in Mono_SE) implies m in Mono_SE, split members are isomorphisms",
           both(weak_right_cancellation(arena, se), split_monos_are_isos(arena, se)));
    record("6.5(e)", "(m m' in Mono_SE and m mono) implies m' in Mono_SE", left_cancellation(arena, se, monos));
    record("6.5(f)", "Mono_SE is pullback stable", pullback_stable(arena, se));

    record("6.6", "m' is a pullback of m m' along m", pullback_of_composite(arena));
    if (options.s.type() == MonoClassSpec::Type::AllMonos)
        record("6.9", "St(Mono_E) and Mono_SE have the same members", same_members(arena, st, se));
    return report;
}

bool is_weak_left_cancellation_failure(const Morphism & m_prime, const Morphism & m)
{
    auto spec = MonoClassSpec::all_monos();
    if (! is_mono(m) || ! is_mono(m_prime))
        return false;
    auto mm = compose(m, m_prime);
    return is_essential(m, spec).value && is_essential(mm, spec).value && ! is_essential(m_prime, spec).value;
}

std::optional<WeakLeftWitness> find_weak_left_cancellation_failure(const std::vector<NamedObject> & registry,
                                                                   const WeakLeftSearchOptions & options)
{
    auto spec = MonoClassSpec::all_monos();
    for (const auto & entry : registry) {
        const auto & a = entry.object;
        if (! a->has_operation() || a->size() > options.max_order)
            continue;
        if (options.simple_codomain && congruences(a).size() != 2)
            continue;
        for (const auto & mid : subobjects(a)) {
            auto m = mid.inclusion();
            if (! is_essential(m, spec).value)
                continue;
            for (const auto & low : subobjects(mid.object)) {
                auto mp = low.inclusion();
                if (is_weak_left_cancellation_failure(mp, m))
                    return WeakLeftWitness{mp, m, entry.label};
            }
        }
    }
    return std::nullopt;
}

} // namespace fincat
