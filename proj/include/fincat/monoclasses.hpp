#pragma once

#include <fincat/category.hpp>
#include <fincat/limits.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fincat {

/// A designated class of monomorphisms, playing the role of S.
class MonoClassSpec
{
public:
    enum class Type
    {
        AllMonos,
        NormalMonos,
        Explicit,
    };

    static MonoClassSpec all_monos() { return MonoClassSpec(Type::AllMonos, {}); }
    static MonoClassSpec normal_monos() { return MonoClassSpec(Type::NormalMonos, {}); }
    /// Members are matched up to canonical iso: same codomain and same image.
    /// Throws PreconditionViolation if a listed morphism is not mono.
    static MonoClassSpec explicit_list(std::vector<Morphism> members);

    Type type() const { return type_; }
    const std::vector<Morphism> & members() const { return members_; }
    bool contains(const Morphism & m) const;
    std::string name() const;

private:
    MonoClassSpec(Type type, std::vector<Morphism> members) : type_(type), members_(std::move(members)) {}

    Type type_;
    std::vector<Morphism> members_;
};

/// Outcome of a membership or property decision. `exact` is false when the
/// verdict only holds relative to a bounded probe universe.
struct Decision
{
    bool value = false;
    bool exact = true;
    std::optional<Morphism> witness;
    std::string note;

    explicit operator bool() const { return value; }
};

/// A predicate on morphisms with a name. Classes built from iso-invariant
/// conditions on monomorphisms memoize their verdicts by (codomain, image).
class MorphismClass
{
public:
    using Predicate = std::function<bool(const Morphism &)>;

    enum class Tag
    {
        Monos,
        NormalMonos,
        Isomorphisms,
        Identities,
        Spec,
        Essential,
        SubobjectEssential,
        Stabilized,
        Custom,
    };

    MorphismClass(std::string name, Predicate predicate, bool exact, bool mono_invariant, Tag tag = Tag::Custom);

    bool contains(const Morphism & f) const;
    bool operator()(const Morphism & f) const { return contains(f); }
    const std::string & name() const;
    bool exact() const;
    Tag tag() const;
    /// Set for Mono_E(C, S) classes.
    std::optional<MonoClassSpec::Type> essential_over() const;

    static MorphismClass monos();
    static MorphismClass normal_monos();
    static MorphismClass isomorphisms();
    static MorphismClass identities();
    static MorphismClass from_spec(const MonoClassSpec & spec);
    /// Mono_E(C, S). Exact for S = AllMonos; otherwise decided over `probes`.
    static MorphismClass essential(const MonoClassSpec & spec, const Universe * probes = nullptr);
    /// Mono_SE(C).
    static MorphismClass subobject_essential();
    /// St(M) relative to `universe`: m belongs when every pullback of m along a
    /// morphism X -> cod(m) with X in the universe lands in M.
    static MorphismClass stabilized(const MorphismClass & base, const Universe & universe);

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// The projection M ×_A X -> X of the pullback of m along x.
Morphism pulled_back(const Morphism & m, const Morphism & x);

/// m is S-essential: f ∘ m in S forces f in S.
///
/// For S = AllMonos the decision is exact: every f: A -> B factors as
/// i ∘ e with e a regular quotient A -> A/E and i mono, f is mono iff e is,
/// and f ∘ m is mono iff e ∘ m is. So m is essential iff no congruence
/// E != Δ_A makes q_E ∘ m injective; the first such q_E (smallest quotient
/// first) is the witness. For other S the quantifier runs over maps into the
/// objects of `probes` and the verdict is marked bounded.
/// Throws PreconditionViolation when m is not in S.
Decision is_essential(const Morphism & m, const MonoClassSpec & spec, const Universe * probes = nullptr);

/// m is subobject-essential: M ×_A N = 0 forces N = 0 for every subobject N
/// of A. Exact. The witness is the inclusion of the smallest offending N.
/// Throws PreconditionViolation when m is not mono.
Decision is_subobject_essential(const Morphism & m);

/// A pullback of m that falls outside the essential class.
struct StableRefutation
{
    Morphism along;       ///< x: X -> A
    Morphism pulled;      ///< u: M ×_A X -> X
    /// f with f ∘ u in S but f not in S; empty when u itself is not in S.
    std::optional<Morphism> not_essential;
};

/// Searches every x: X -> cod(m) with X in `universe` for a pullback of m
/// that is not S-essential.
std::optional<StableRefutation> refute_stable_essential(const Morphism & m, const MonoClassSpec & spec,
                                                        const Universe & universe);

/// m is a pullback-stable S-essential monomorphism. In a normal backend with
/// S = AllMonos this is decided exactly through subobject-essentiality, and a
/// negative answer comes with the pullback along the offending subobject.
/// Otherwise the bounded refuter runs over `universe`.
struct StableDecision
{
    Decision decision;
    std::optional<StableRefutation> refutation;
};

StableDecision is_stable_essential(const Morphism & m, const MonoClassSpec & spec, const Universe * universe);

/// The four conditions that characterize essential monos in a normal category,
/// each evaluated by its own method.
struct EssentialConditions
{
    bool by_quotients;        ///< f ∘ m mono forces f mono, over regular quotients f of A
    bool by_congruences;      ///< (M×M) ×_{A×A} E = Δ_M forces E = Δ_A
    bool by_normal_subobjects;///< M ×_A N = 0 forces N = 0 for normal N
    bool by_kernels;          ///< Ker(f ∘ m) = 0 forces Ker(f) = 0

    bool agree() const
    {
        return by_quotients == by_congruences && by_congruences == by_normal_subobjects
               && by_normal_subobjects == by_kernels;
    }
};

EssentialConditions essential_conditions(const Morphism & m);

struct ClassificationReport
{
    Morphism morphism;
    bool in_s = false;
    bool essential = false;
    bool subobject_essential = false;
    bool stable_essential = false;
    bool essential_exact = true;
    bool stable_exact = true;
    std::optional<Morphism> essential_witness;
    std::optional<Morphism> subobject_witness;
    std::optional<StableRefutation> stable_witness;
};

/// Classifies a morphism against S. The universe feeds the bounded parts;
/// the group backends count as normal, pointed sets do not.
ClassificationReport classify(const Morphism & m, const MonoClassSpec & spec, const Universe & universe);

struct StabilizeResult
{
    std::vector<Morphism> survivors;
    /// True when a backend theorem confirmed the bounded survivors.
    bool exact = false;
};

/// Keeps the candidates that lie in St(M) relative to `universe`.
StabilizeResult stabilize(const std::vector<Morphism> & candidates, const MorphismClass & base,
                          const Universe & universe);

} // namespace fincat
