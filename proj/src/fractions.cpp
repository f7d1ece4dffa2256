#include <fincat/errors.hpp>
#include <fincat/fractions.hpp>

#include <algorithm>

namespace fincat {

namespace {

bool lex_less(std::span<const Element> a, std::span<const Element> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Subobjects of the equalizer of (f, g), largest first, as inclusions into dom(f).
std::vector<Morphism> agreeing_subobjects(const Morphism & f, const Morphism & g)
{
    auto eq = equalizer(f, g);
    const auto & subs = subobjects(eq.apex);
    std::vector<Morphism> out;
    out.reserve(subs.size());
    for (auto it = subs.rbegin(); it != subs.rend(); ++it)
        out.push_back(compose(eq.inclusion, it->inclusion()));
    return out;
}

} // namespace

Span::Span(Morphism left_leg, Morphism right_leg) : left(std::move(left_leg)), right(std::move(right_leg))
{
    if (! same_object(left.dom(), right.dom()))
        throw PreconditionViolation("span legs " + describe(left) + " and " + describe(right)
                                    + " have different domains");
}

Span span_of(const Morphism & f)
{
    return Span(Morphism::identity(f.dom()), f);
}

Span normalize(const Span & s)
{
    if (! is_mono(s.left))
        throw PreconditionViolation("cannot normalize a span whose left leg " + describe(s.left) + " is not mono");
    auto image = image_subobject(s.left);
    std::vector<Element> right(image.size());
    for (Element e = 0; e < s.apex()->size(); ++e)
        right[image.position(s.left(e))] = s.right(e);
    return Span(image.inclusion(), Morphism::trusted(image.object, s.target(), std::move(right)));
}

bool canonical_less(const Span & a, const Span & b)
{
    auto ia = image_of(a.left);
    auto ib = image_of(b.left);
    if (ia.size() != ib.size())
        return ia.size() < ib.size();
    if (ia != ib)
        return ia < ib;
    if (lex_less(a.left.map(), b.left.map()))
        return true;
    if (lex_less(b.left.map(), a.left.map()))
        return false;
    return lex_less(a.right.map(), b.right.map());
}

Span span_compose(const Span & s2, const Span & s1)
{
    if (! same_object(s1.target(), s2.source()))
        throw CompositionMismatch("span ending at " + describe(*s1.target()) + " cannot be followed by a span from "
                                  + describe(*s2.source()));
    auto pb = pullback(s1.right, s2.left);
    return Span(compose(s1.left, pb.proj_left), compose(s2.right, pb.proj_right));
}

FractionEquality fraction_equal(const Span & s, const Span & t, const MorphismClass & m, bool restrict_to_m)
{
    if (! same_object(s.source(), t.source()) || ! same_object(s.target(), t.target()))
        throw PreconditionViolation("fraction comparison needs spans with common endpoints");
    if (! m(s.left) || ! m(t.left))
        throw PreconditionViolation("fraction comparison needs left legs in " + m.name());

    auto pb = pullback(s.left, t.left);
    auto fu = compose(s.right, pb.proj_left);
    auto fv = compose(t.right, pb.proj_right);
    for (const auto & incl : agreeing_subobjects(fu, fv)) {
        auto u = compose(pb.proj_left, incl);
        auto v = compose(pb.proj_right, incl);
        if (! m(compose(s.left, u)))
            continue;
        if (restrict_to_m && (! m(u) || ! m(v)))
            continue;
        return FractionEquality{true, Diamond{u, v}};
    }
    return FractionEquality{false, std::nullopt};
}

HomTable poincare_hom_table(const ObjectRef & a, const ObjectRef & b, const MorphismClass & m)
{
    HomTable table;
    std::vector<Morphism> legs;
    for (const auto & sub : subobjects(a)) {
        auto x = sub.inclusion();
        if (m(x))
            legs.push_back(x);
    }
    bool only_total = legs.size() == 1 && legs.front().dom()->size() == a->size();

    for (const auto & x : legs) {
        auto image = image_of(x);
        for (const auto & f : hom_set(x.dom(), b)) {
            std::vector<Element> right(f.map().begin(), f.map().end());
            Span s(x, Morphism::trusted(x.dom(), b, right));
            std::optional<std::size_t> known;
            if (! only_total)
                for (const auto & c : table.classes)
                    if (fraction_equal(s, c.representative, m).equal) {
                        known = c.index;
                        break;
                    }
            if (! known) {
                known = table.classes.size();
                table.classes.push_back(FractionClass{s, *known});
            }
            table.index.emplace(std::pair{image, std::move(right)}, *known);
        }
    }
    return table;
}

std::vector<FractionClass> poincare_hom(const ObjectRef & a, const ObjectRef & b, const MorphismClass & m)
{
    return poincare_hom_table(a, b, m).classes;
}

std::size_t classify_span(const Span & s, const std::vector<FractionClass> & classes, const MorphismClass & m)
{
    auto n = normalize(s);
    for (const auto & c : classes)
        if (fraction_equal(n, c.representative, m).equal)
            return c.index;
    throw InvariantViolation("span with left leg " + describe(s.left) + " matches no fraction class");
}

std::size_t classify_span(const Span & s, const HomTable & table, const MorphismClass & m)
{
    auto n = normalize(s);
    std::pair key{image_of(n.left), std::vector<Element>(n.right.map().begin(), n.right.map().end())};
    if (auto it = table.index.find(key); it != table.index.end())
        return it->second;
    return classify_span(n, table.classes, m);
}

std::string_view condition_name(ConditionId id)
{
    switch (id) {
    case ConditionId::F0:
        return "F0";
    case ConditionId::F1:
        return "F1";
    case ConditionId::F2:
        return "F2";
    case ConditionId::F3:
        return "F3";
    case ConditionId::OreD:
        return "Ore-d";
    }
    return {};
}

std::vector<ConditionReport> check_focal(const MorphismClass & m, const Universe & universe)
{
    const auto & objects = universe.objects();
    std::vector<std::vector<Morphism>> into(objects.size());
    std::vector<std::vector<Morphism>> members_into(objects.size());
    std::vector<std::vector<Morphism>> members_from(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            for (const auto & f : hom_set(objects[i], objects[j])) {
                into[j].push_back(f);
                if (m(f)) {
                    members_into[j].push_back(f);
                    members_from[i].push_back(f);
                }
            }
    auto index = [&](const ObjectRef & o) { return *universe.index_of(o); };

    ConditionReport f0;
    f0.id = ConditionId::F0;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        ++f0.instances;
        if (members_into[i].empty() && f0.passed) {
            f0.passed = false;
            f0.witness = {{"object", Morphism::identity(objects[i])}};
        }
    }

    ConditionReport f1;
    f1.id = ConditionId::F1;
    for (std::size_t z = 0; z < objects.size(); ++z)
        for (const auto & s1 : members_into[z])
            for (const auto & s0 : members_from[z]) {
                ++f1.instances;
                auto s = compose(s0, s1);
                bool found = std::any_of(into[index(s1.dom())].begin(), into[index(s1.dom())].end(),
                                         [&](const Morphism & f) { return m(compose(s, f)); });
                if (! found && f1.passed) {
                    f1.passed = false;
                    f1.witness = {{"s1", s1}, {"s0", s0}};
                }
            }

    ConditionReport f2;
    f2.id = ConditionId::F2;
    for (std::size_t x = 0; x < objects.size(); ++x)
        for (const auto & s : members_into[x])
            for (const auto & f : into[x]) {
                ++f2.instances;
                auto pb = pullback(s, f);
                bool found = false;
                const auto & subs = subobjects(pb.apex);
                for (auto it = subs.rbegin(); it != subs.rend() && ! found; ++it)
                    found = m(compose(pb.proj_right, it->inclusion()));
                if (! found && f2.passed) {
                    f2.passed = false;
                    f2.witness = {{"s", s}, {"f", f}};
                }
            }

    // F3 and the cancellability part of the right calculus coincide for these
    // classes: both ask for an equalizing member once a member coequalizes.
    ConditionReport f3;
    f3.id = ConditionId::F3;
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j) {
            const auto & outs = members_from[j];
            if (outs.empty())
                continue;
            bool all_mono = std::all_of(outs.begin(), outs.end(), [](const Morphism & s) { return is_mono(s); });
            const auto & maps = hom_set(objects[i], objects[j]);
            for (std::size_t a = 0; a < maps.size(); ++a)
                for (std::size_t b = a; b < maps.size(); ++b) {
                    const auto & f = maps[a];
                    const auto & g = maps[b];
                    bool coequalized = all_mono ? a == b : std::any_of(outs.begin(), outs.end(), [&](const Morphism & s) {
                        return compose(s, f) == compose(s, g);
                    });
                    if (! coequalized)
                        continue;
                    ++f3.instances;
                    bool found = false;
                    for (const auto & incl : agreeing_subobjects(f, g))
                        if (m(incl)) {
                            found = true;
                            break;
                        }
                    if (! found)
                        for (const auto & s : members_into[i])
                            if (compose(f, s) == compose(g, s)) {
                                found = true;
                                break;
                            }
                    if (! found && f3.passed) {
                        f3.passed = false;
                        f3.witness = {{"f", f}, {"g", g}};
                    }
                }
        }

    ConditionReport ore;
    ore.id = ConditionId::OreD;
    for (const auto & o : objects) {
        ++ore.instances;
        if (! m(Morphism::identity(o)) && ore.passed) {
            ore.passed = false;
            ore.witness = {{"identity", Morphism::identity(o)}};
        }
    }
    for (std::size_t z = 0; z < objects.size(); ++z)
        for (const auto & s1 : members_into[z])
            for (const auto & s0 : members_from[z]) {
                ++ore.instances;
                if (! m(compose(s0, s1)) && ore.passed) {
                    ore.passed = false;
                    ore.witness = {{"s1", s1}, {"s0", s0}};
                }
            }
    ore.instances += f3.instances;
    if (! f3.passed && ore.passed) {
        ore.passed = false;
        ore.witness = f3.witness;
    }

    return {f0, f1, f2, f3, ore};
}

} // namespace fincat
