#include <fincat/errors.hpp>
#include <fincat/laws.hpp>
#include <fincat/spectral.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace fincat {

namespace {

struct PairHash
{
    std::size_t operator()(const std::pair<ObjectRef, ObjectRef> & p) const
    {
        std::size_t seed = p.first->hash();
        hash_combine(seed, p.second->hash());
        return seed;
    }
};

struct PairEqual
{
    bool operator()(const std::pair<ObjectRef, ObjectRef> & x, const std::pair<ObjectRef, ObjectRef> & y) const
    {
        return same_object(x.first, y.first) && same_object(x.second, y.second);
    }
};

std::vector<Element> to_vector(std::span<const Element> s)
{
    return {s.begin(), s.end()};
}

} // namespace

struct SpectralCategory::Impl
{
    Universe universe;
    MonoClassSpec s;
    MorphismClass m;
    bool exact;
    mutable std::mutex mutex;
    mutable std::unordered_map<std::pair<ObjectRef, ObjectRef>, std::unique_ptr<const HomTable>,
                               PairHash, PairEqual>
        homs;

    Impl(Universe u, MonoClassSpec spec, MorphismClass cls, bool is_exact)
        : universe(std::move(u)), s(std::move(spec)), m(std::move(cls)), exact(is_exact)
    {
    }
};

SpectralCategory::SpectralCategory(std::shared_ptr<Impl> impl) : impl_(std::move(impl))
{
}

SpectralCategory SpectralCategory::build(const Universe & universe, const MonoClassSpec & s)
{
    for (const auto & law : check_s_axioms(universe, s))
        if (law.status == LawStatus::Fail)
            throw PreconditionViolation(s.name() + " fails " + law.law_id + " (" + law.statement + ") on "
                                        + universe.name());
    bool normal = universe.kind() != Kind::PointedSet;
    if (normal && s.type() == MonoClassSpec::Type::AllMonos)
        return SpectralCategory(std::make_shared<Impl>(universe, s, MorphismClass::subobject_essential(), true));
    auto st = MorphismClass::stabilized(MorphismClass::essential(s, &universe), universe);
    return SpectralCategory(std::make_shared<Impl>(universe, s, st, false));
}

const Universe & SpectralCategory::universe() const
{
    return impl_->universe;
}

const MorphismClass & SpectralCategory::m_class() const
{
    return impl_->m;
}

const MonoClassSpec & SpectralCategory::s_class() const
{
    return impl_->s;
}

bool SpectralCategory::exact() const
{
    return impl_->exact;
}

const std::vector<FractionClass> & SpectralCategory::hom(const ObjectRef & a, const ObjectRef & b) const
{
    return table(a, b).classes;
}

const HomTable & SpectralCategory::table(const ObjectRef & a, const ObjectRef & b) const
{
    std::pair key{a, b};
    {
        std::lock_guard lock(impl_->mutex);
        if (auto it = impl_->homs.find(key); it != impl_->homs.end())
            return *it->second;
    }
    auto computed = std::make_unique<const HomTable>(poincare_hom_table(a, b, impl_->m));
    std::lock_guard lock(impl_->mutex);
    auto [it, inserted] = impl_->homs.emplace(key, std::move(computed));
    return *it->second;
}

const Span & SpectralCategory::representative(const ClassRef & c) const
{
    return hom(c.dom, c.cod).at(c.index).representative;
}

ClassRef SpectralCategory::classify(const Span & s) const
{
    return ClassRef{s.source(), s.target(), classify_span(s, table(s.source(), s.target()), impl_->m)};
}

ClassRef SpectralCategory::functor(const Morphism & f) const
{
    return classify(span_of(f));
}

ClassRef SpectralCategory::identity(const ObjectRef & a) const
{
    return functor(Morphism::identity(a));
}

ClassRef SpectralCategory::zero(const ObjectRef & a, const ObjectRef & b) const
{
    return functor(Morphism::zero(a, b));
}

ClassRef SpectralCategory::compose(const ClassRef & g, const ClassRef & f) const
{
    if (! same_object(f.cod, g.dom))
        throw CompositionMismatch("spectral classes " + describe(*f.cod) + " and " + describe(*g.dom)
                                  + " do not meet");
    return classify(span_compose(representative(g), representative(f)));
}

bool SpectralCategory::is_invertible(const ClassRef & c) const
{
    auto id_a = identity(c.dom);
    auto id_b = identity(c.cod);
    const auto & back = hom(c.cod, c.dom);
    for (std::size_t i = 0; i < back.size(); ++i) {
        ClassRef d{c.cod, c.dom, i};
        if (compose(d, c) == id_a && compose(c, d) == id_b)
            return true;
    }
    return false;
}

bool SpectralCategory::zero_class_well_defined(const ObjectRef & a, const ObjectRef & b) const
{
    auto z = zero(a, b);
    for (const auto & sub : subobjects(a)) {
        auto x = sub.inclusion();
        if (! impl_->m(x))
            continue;
        if (! (classify(Span(x, Morphism::zero(sub.object, b))) == z))
            return false;
    }
    return true;
}

nlohmann::json SpectralCategory::export_json() const
{
    using nlohmann::json;
    const auto & u = impl_->universe;
    const auto & objects = u.objects();
    std::size_t n = objects.size();

    json out;
    out["objects"] = json::array();
    for (const auto & o : objects)
        out["objects"].push_back({{"label", u.label(o)}, {"kind", kind_name(o->kind())}, {"size", o->size()}});

    std::vector<std::vector<std::size_t>> base(n, std::vector<std::size_t>(n));
    std::size_t next = 0;
    out["homs"] = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            base[i][j] = next;
            json classes = json::array();
            for (const auto & c : hom(objects[i], objects[j]))
                classes.push_back({{"id", next + c.index},
                                   {"rep_left", to_vector(c.representative.left.map())},
                                   {"rep_right", to_vector(c.representative.right.map())}});
            next += hom(objects[i], objects[j]).size();
            out["homs"].push_back({{"dom", u.label(objects[i])}, {"cod", u.label(objects[j])}, {"classes", classes}});
        }

    out["composition"] = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto & fs = hom(objects[i], objects[j]);
                const auto & gs = hom(objects[j], objects[k]);
                for (std::size_t fi = 0; fi < fs.size(); ++fi)
                    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                        auto r = compose(ClassRef{objects[j], objects[k], gi}, ClassRef{objects[i], objects[j], fi});
                        out["composition"].push_back(
                            json::array({base[j][k] + gi, base[i][j] + fi, base[i][k] + r.index}));
                    }
            }
    out["exact"] = impl_->exact;
    out["class"] = impl_->m.name();
    return out;
}

std::vector<std::pair<Morphism, Morphism>> universe_cospans(const Universe & universe)
{
    std::vector<std::pair<Morphism, Morphism>> out;
    for (const auto & a : universe.objects()) {
        auto into = universe.arrows_into(a);
        for (std::size_t i = 0; i < into.size(); ++i)
            for (std::size_t j = i; j < into.size(); ++j)
                out.emplace_back(into[i], into[j]);
    }
    return out;
}

LimitReport verify_limit_preservation(const SpectralCategory & spec,
                                      const std::vector<std::pair<Morphism, Morphism>> & cospans)
{
    LimitReport report;
    report.bounded = true;
    for (const auto & [f, g] : cospans) {
        ++report.cospans;
        auto pb = pullback(f, g);
        auto pf = spec.functor(f);
        auto pg = spec.functor(g);
        auto p1 = spec.functor(pb.proj_left);
        auto p2 = spec.functor(pb.proj_right);
        auto fail = [&](const ObjectRef & probe, std::string reason) {
            report.failure = LimitFailure{f, g, probe, std::move(reason)};
        };
        if (! (spec.compose(pf, p1) == spec.compose(pg, p2))) {
            fail(pb.apex, "image of the pullback square does not commute");
            return report;
        }
        for (const auto & t : spec.universe().objects()) {
            const auto & hx = spec.hom(t, f.dom());
            const auto & hy = spec.hom(t, g.dom());
            const auto & hp = spec.hom(t, pb.apex);

            std::vector<std::size_t> via_f(hx.size()), via_g(hy.size());
            for (std::size_t a = 0; a < hx.size(); ++a)
                via_f[a] = spec.compose(pf, ClassRef{t, f.dom(), a}).index;
            for (std::size_t b = 0; b < hy.size(); ++b)
                via_g[b] = spec.compose(pg, ClassRef{t, g.dom(), b}).index;
            std::set<std::pair<std::size_t, std::size_t>> cones;
            for (std::size_t a = 0; a < hx.size(); ++a)
                for (std::size_t b = 0; b < hy.size(); ++b)
                    if (via_f[a] == via_g[b])
                        cones.emplace(a, b);
            report.cones += cones.size();

            std::set<std::pair<std::size_t, std::size_t>> reached;
            for (std::size_t c = 0; c < hp.size(); ++c) {
                ClassRef cr{t, pb.apex, c};
                std::pair legs{spec.compose(p1, cr).index, spec.compose(p2, cr).index};
                if (! reached.insert(legs).second) {
                    fail(t, "two mediating classes for one cone");
                    return report;
                }
            }
            if (reached != cones) {
                fail(t, "a commuting cone has no mediating class");
                return report;
            }
        }
    }
    return report;
}

MinimalSubobject minimal_m_subobject(const ObjectRef & a, const SpectralCategory & spec)
{
    const auto & m = spec.m_class();
    std::vector<Element> meet;
    bool first = true;
    for (const auto & sub : subobjects(a)) {
        if (! m(sub.inclusion()))
            continue;
        if (first) {
            meet = sub.elements;
            first = false;
            continue;
        }
        std::vector<Element> next;
        std::set_intersection(meet.begin(), meet.end(), sub.elements.begin(), sub.elements.end(),
                              std::back_inserter(next));
        meet = std::move(next);
    }
    if (first)
        throw InvariantViolation(describe(*a) + " has no M-subobject");
    auto minimal = make_subobject(a, meet);
    if (! m(minimal.inclusion()))
        throw InvariantViolation("the intersection of the M-subobjects of " + describe(*a) + " is not in M");

    MinimalSubobject out{minimal, 0};
    for (const auto & b : spec.universe().objects()) {
        ++out.oracle_checks;
        auto spectral = spec.hom(a, b).size();
        auto plain = hom_set(minimal.object, b).size();
        if (spectral != plain)
            throw InvariantViolation("hom(" + describe(*a) + ", " + describe(*b) + ") has " + std::to_string(spectral)
                                     + " fraction classes but the minimal M-subobject has " + std::to_string(plain)
                                     + " maps");
    }
    return out;
}

Decision is_uniform(const ObjectRef & a, const MorphismClass & m, const Universe * universe)
{
    if (a->kind() != Kind::PointedSet) {
        for (const auto & sub : subobjects(a)) {
            if (sub.is_zero())
                continue;
            if (! m(sub.inclusion()))
                return Decision{false, true, sub.inclusion(), "non-zero subobject outside M"};
        }
        return Decision{true, true, std::nullopt, {}};
    }
    if (! universe)
        throw PreconditionViolation("uniformity of a pointed set needs a probe universe");
    for (const auto & x_obj : universe->objects()) {
        if (is_zero_object(*x_obj))
            continue;
        for (const auto & x : hom_set(x_obj, a))
            if (is_zero_object(*kernel(x).dom()) && ! m(x))
                return Decision{false, true, x, "zero-kernel map outside M"};
    }
    return Decision{true, false, std::nullopt, "bounded"};
}

DivisionMonoidReport end_spec_division_check(const ObjectRef & a, const SpectralCategory & spec)
{
    DivisionMonoidReport report;
    report.object = spec.universe().label(a);
    const auto & ends = spec.hom(a, a);
    report.size = ends.size();
    report.zero = spec.zero(a, a).index;
    report.table.assign(ends.size(), std::vector<std::size_t>(ends.size()));
    for (std::size_t g = 0; g < ends.size(); ++g)
        for (std::size_t f = 0; f < ends.size(); ++f)
            report.table[g][f] = spec.compose(ClassRef{a, a, g}, ClassRef{a, a, f}).index;

    auto id = spec.identity(a).index;
    for (std::size_t f = 0; f < ends.size(); ++f)
        for (std::size_t g = 0; g < ends.size(); ++g)
            if (report.table[g][f] == id && report.table[f][g] == id) {
                report.invertible.push_back(f);
                break;
            }

    std::vector<std::size_t> nonzero;
    for (std::size_t f = 0; f < ends.size(); ++f)
        if (f != report.zero)
            nonzero.push_back(f);
    report.verdict = report.size >= 2 && report.invertible == nonzero;
    return report;
}

} // namespace fincat
