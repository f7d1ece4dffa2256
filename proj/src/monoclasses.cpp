#include <fincat/congruence.hpp>
#include <fincat/errors.hpp>
#include <fincat/monoclasses.hpp>

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace fincat {

namespace {

struct ImageKey
{
    ObjectRef cod;
    std::vector<Element> image;

    bool operator==(const ImageKey & other) const { return image == other.image && same_object(cod, other.cod); }
};

struct ImageKeyHash
{
    std::size_t operator()(const ImageKey & key) const
    {
        std::size_t seed = key.cod->hash();
        for (auto e : key.image)
            hash_combine(seed, e);
        return seed;
    }
};

bool injective_modulo(const Congruence & e, const Morphism & m)
{
    std::vector<bool> hit(e.block_count(), false);
    for (auto y : m.map()) {
        auto b = e.block(y);
        if (hit[b])
            return false;
        hit[b] = true;
    }
    return true;
}

bool is_normal_kind(Kind kind)
{
    return kind != Kind::PointedSet;
}

} // namespace

MonoClassSpec MonoClassSpec::explicit_list(std::vector<Morphism> members)
{
    for (const auto & m : members)
        if (! is_mono(m))
            throw PreconditionViolation("explicit class member " + describe(m) + " is not a monomorphism");
    return MonoClassSpec(Type::Explicit, std::move(members));
}

bool MonoClassSpec::contains(const Morphism & m) const
{
    switch (type_) {
    case Type::AllMonos:
        return is_mono(m);
    case Type::NormalMonos:
        return is_normal_mono(m);
    case Type::Explicit:
        if (! is_mono(m))
            return false;
        for (const auto & member : members_)
            if (same_object(member.cod(), m.cod()) && image_of(member) == image_of(m))
                return true;
        return false;
    }
    return false;
}

std::string MonoClassSpec::name() const
{
    switch (type_) {
    case Type::AllMonos:
        return "all-monos";
    case Type::NormalMonos:
        return "normal-monos";
    case Type::Explicit:
        return "explicit(" + std::to_string(members_.size()) + ")";
    }
    return {};
}

struct MorphismClass::State
{
    std::string name;
    Predicate predicate;
    bool exact;
    bool mono_invariant;
    Tag tag;
    std::optional<MonoClassSpec::Type> essential_over;
    std::mutex mutex;
    std::unordered_map<ImageKey, bool, ImageKeyHash> memo;
};

MorphismClass::MorphismClass(std::string name, Predicate predicate, bool exact, bool mono_invariant, Tag tag)
    : state_(std::make_shared<State>())
{
    state_->name = std::move(name);
    state_->predicate = std::move(predicate);
    state_->exact = exact;
    state_->mono_invariant = mono_invariant;
    state_->tag = tag;
}

const std::string & MorphismClass::name() const
{
    return state_->name;
}

bool MorphismClass::exact() const
{
    return state_->exact;
}

MorphismClass::Tag MorphismClass::tag() const
{
    return state_->tag;
}

std::optional<MonoClassSpec::Type> MorphismClass::essential_over() const
{
    return state_->essential_over;
}

bool MorphismClass::contains(const Morphism & f) const
{
    if (! state_->mono_invariant || ! is_mono(f))
        return state_->predicate(f);
    ImageKey key{f.cod(), image_of(f)};
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->memo.find(key); it != state_->memo.end())
            return it->second;
    }
    bool value = state_->predicate(f);
    std::lock_guard lock(state_->mutex);
    state_->memo.emplace(std::move(key), value);
    return value;
}

MorphismClass MorphismClass::monos()
{
    return MorphismClass("monos", [](const Morphism & f) { return is_mono(f); }, true, true, Tag::Monos);
}

MorphismClass MorphismClass::normal_monos()
{
    return MorphismClass("normal-monos", [](const Morphism & f) { return is_normal_mono(f); }, true, true,
                         Tag::NormalMonos);
}

MorphismClass MorphismClass::isomorphisms()
{
    return MorphismClass("isomorphisms", [](const Morphism & f) { return is_iso(f); }, true, true, Tag::Isomorphisms);
}

MorphismClass MorphismClass::identities()
{
    return MorphismClass("identities", [](const Morphism & f) { return f.is_identity(); }, true, false,
                         Tag::Identities);
}

MorphismClass MorphismClass::from_spec(const MonoClassSpec & spec)
{
    return MorphismClass(spec.name(), [spec](const Morphism & f) { return spec.contains(f); }, true, true, Tag::Spec);
}

MorphismClass MorphismClass::essential(const MonoClassSpec & spec, const Universe * probes)
{
    std::shared_ptr<const Universe> kept = probes ? std::make_shared<Universe>(*probes) : nullptr;
    bool exact = spec.type() == MonoClassSpec::Type::AllMonos;
    MorphismClass cls(
        "essential[" + spec.name() + "]",
        [spec, kept](const Morphism & f) { return spec.contains(f) && is_essential(f, spec, kept.get()).value; },
        exact, true, Tag::Essential);
    cls.state_->essential_over = spec.type();
    return cls;
}

MorphismClass MorphismClass::subobject_essential()
{
    return MorphismClass("subobject-essential",
                         [](const Morphism & f) { return is_mono(f) && is_subobject_essential(f).value; }, true, true,
                         Tag::SubobjectEssential);
}

MorphismClass MorphismClass::stabilized(const MorphismClass & base, const Universe & universe)
{
    auto kept = std::make_shared<Universe>(universe);
    return MorphismClass(
        "St(" + base.name() + ")",
        [base, kept](const Morphism & f) {
            for (const auto & x_obj : kept->objects())
                for (const auto & x : hom_set(x_obj, f.cod()))
                    if (! base.contains(pulled_back(f, x)))
                        return false;
            return true;
        },
        false, base.state_->mono_invariant, Tag::Stabilized);
}

Morphism pulled_back(const Morphism & m, const Morphism & x)
{
    return pullback(m, x).proj_right;
}

Decision is_essential(const Morphism & m, const MonoClassSpec & spec, const Universe * probes)
{
    if (! spec.contains(m))
        throw PreconditionViolation(describe(m) + " is not in " + spec.name());
    const auto & a = m.cod();
    if (spec.type() == MonoClassSpec::Type::AllMonos) {
        for (const auto & e : congruences(a)) {
            if (e.is_discrete())
                continue;
            if (injective_modulo(e, m))
                return Decision{false, true, quotient(e).map, "quotient keeps the image injective"};
        }
        return Decision{true, true, std::nullopt, {}};
    }
    if (! probes)
        throw PreconditionViolation("essentiality relative to " + spec.name() + " needs a probe universe");
    for (const auto & b : probes->objects()) {
        if (b->kind() != a->kind())
            throw BackendMismatch("probe universe and morphism live in different backends");
        for (const auto & f : hom_set(a, b))
            if (spec.contains(compose(f, m)) && ! spec.contains(f))
                return Decision{false, true, f, "f ∘ m in S but f not in S"};
    }
    return Decision{true, false, std::nullopt, "bounded"};
}

Decision is_subobject_essential(const Morphism & m)
{
    if (! is_mono(m))
        throw PreconditionViolation(describe(m) + " is not a monomorphism");
    for (const auto & n : subobjects(m.cod())) {
        if (n.is_zero())
            continue;
        if (is_zero_object(*pullback(m, n.inclusion()).apex))
            return Decision{false, true, n.inclusion(), "non-zero subobject with zero pullback"};
    }
    return Decision{true, true, std::nullopt, {}};
}

std::optional<StableRefutation> refute_stable_essential(const Morphism & m, const MonoClassSpec & spec,
                                                        const Universe & universe)
{
    for (const auto & x_obj : universe.objects())
        for (const auto & x : hom_set(x_obj, m.cod())) {
            auto u = pulled_back(m, x);
            if (! spec.contains(u))
                return StableRefutation{x, u, std::nullopt};
            auto d = is_essential(u, spec, &universe);
            if (! d.value)
                return StableRefutation{x, u, d.witness};
        }
    return std::nullopt;
}

StableDecision is_stable_essential(const Morphism & m, const MonoClassSpec & spec, const Universe * universe)
{
    if (! spec.contains(m))
        throw PreconditionViolation(describe(m) + " is not in " + spec.name());

    if (spec.type() == MonoClassSpec::Type::AllMonos && is_normal_kind(m.cod()->kind())) {
        auto se = is_subobject_essential(m);
        if (se.value)
            return StableDecision{Decision{true, true, std::nullopt, {}}, std::nullopt};
        auto u = pulled_back(m, *se.witness);
        auto d = is_essential(u, spec, universe);
        if (d.value)
            throw InvariantViolation("pullback of " + describe(m) + " along a disjoint subobject is essential");
        return StableDecision{Decision{false, true, se.witness, "pullback along a disjoint subobject"},
                              StableRefutation{*se.witness, u, d.witness}};
    }

    auto self = is_essential(m, spec, universe);
    if (! self.value)
        return StableDecision{Decision{false, true, Morphism::identity(m.cod()), "not essential"},
                              StableRefutation{Morphism::identity(m.cod()), m, self.witness}};
    if (! universe)
        throw PreconditionViolation("bounded stable essentiality needs a universe");
    if (auto r = refute_stable_essential(m, spec, *universe))
        return StableDecision{Decision{false, true, r->along, "refuting pullback"}, r};
    return StableDecision{Decision{true, false, std::nullopt, "bounded"}, std::nullopt};
}

EssentialConditions essential_conditions(const Morphism & m)
{
    if (! is_mono(m))
        throw PreconditionViolation(describe(m) + " is not a monomorphism");
    const auto & a = m.cod();
    const auto & congs = congruences(a);
    EssentialConditions out{true, true, true, true};

    for (const auto & e : congs) {
        auto q = quotient(e).map;
        if (is_mono(compose(q, m)) && ! is_mono(q))
            out.by_quotients = false;
        if (is_zero_object(*kernel(compose(q, m)).dom()) && ! is_zero_object(*kernel(q).dom()))
            out.by_kernels = false;
    }

    auto mm = product_map(m, m);
    for (const auto & e : congs) {
        auto relation = e.as_relation();
        auto meet = pullback(mm, relation.inclusion());
        bool is_delta_m = meet.apex->size() == m.dom()->size();
        if (is_delta_m && ! e.is_discrete())
            out.by_congruences = false;
    }

    for (const auto & n : normal_subobjects(a))
        if (is_zero_object(*pullback(m, n.inclusion()).apex) && ! n.is_zero())
            out.by_normal_subobjects = false;
    return out;
}

ClassificationReport classify(const Morphism & m, const MonoClassSpec & spec, const Universe & universe)
{
    ClassificationReport r{.morphism = m, .essential_witness = {}, .subobject_witness = {}, .stable_witness = {}};
    r.in_s = spec.contains(m);
    if (is_mono(m)) {
        auto se = is_subobject_essential(m);
        r.subobject_essential = se.value;
        r.subobject_witness = se.witness;
    }
    if (! r.in_s)
        return r;
    auto ess = is_essential(m, spec, &universe);
    r.essential = ess.value;
    r.essential_exact = ess.exact;
    r.essential_witness = ess.witness;
    auto st = is_stable_essential(m, spec, &universe);
    r.stable_essential = st.decision.value;
    r.stable_exact = st.decision.exact;
    r.stable_witness = st.refutation;
    return r;
}

StabilizeResult stabilize(const std::vector<Morphism> & candidates, const MorphismClass & base,
                          const Universe & universe)
{
    auto st = MorphismClass::stabilized(base, universe);
    StabilizeResult result;
    for (const auto & m : candidates)
        if (st.contains(m))
            result.survivors.push_back(m);

    if (base.essential_over() == MonoClassSpec::Type::AllMonos && is_normal_kind(universe.kind())) {
        bool agree = true;
        for (const auto & m : candidates) {
            bool exact_member = is_mono(m) && is_subobject_essential(m).value;
            bool bounded_member = std::find(result.survivors.begin(), result.survivors.end(), m)
                                  != result.survivors.end();
            agree = agree && exact_member == bounded_member;
        }
        result.exact = agree;
    }
    return result;
}

} // namespace fincat
