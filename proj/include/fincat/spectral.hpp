#pragma once

#include <fincat/fractions.hpp>
#include <fincat/monoclasses.hpp>

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fincat {

/// A morphism of the spectral category: the class `index` in hom(dom, cod).
struct ClassRef
{
    ObjectRef dom;
    ObjectRef cod;
    std::size_t index = 0;

    friend bool operator==(const ClassRef & a, const ClassRef & b)
    {
        return a.index == b.index && same_object(a.dom, b.dom) && same_object(a.cod, b.cod);
    }
};

/// The category of fractions of C for M = St(Mono_E(C, S)), with hom-sets
/// computed on demand and cached. In a normal backend with S = AllMonos, M
/// is Mono_SE(C) and every result is exact; otherwise M is the stabilization
/// relative to the universe and results are bounded.
class SpectralCategory
{
public:
    /// Validates the axioms required of S over the universe; throws
    /// PreconditionViolation naming the failed axiom.
    static SpectralCategory build(const Universe & universe, const MonoClassSpec & s = MonoClassSpec::all_monos());

    const Universe & universe() const;
    const MorphismClass & m_class() const;
    const MonoClassSpec & s_class() const;
    bool exact() const;

    const std::vector<FractionClass> & hom(const ObjectRef & a, const ObjectRef & b) const;
    const HomTable & table(const ObjectRef & a, const ObjectRef & b) const;
    const Span & representative(const ClassRef & c) const;

    /// P(f) = cls(f, 1_A).
    ClassRef functor(const Morphism & f) const;
    ClassRef identity(const ObjectRef & a) const;
    /// The class of (0, 1_A).
    ClassRef zero(const ObjectRef & a, const ObjectRef & b) const;
    /// g ∘ f via span composition. Throws CompositionMismatch.
    ClassRef compose(const ClassRef & g, const ClassRef & f) const;
    ClassRef classify(const Span & s) const;

    bool is_invertible(const ClassRef & c) const;
    /// Every span (0, x) with x in M lands in the class of (0, 1_A).
    bool zero_class_well_defined(const ObjectRef & a, const ObjectRef & b) const;

    /// {objects, homs: [{dom, cod, classes: [{id, rep_left, rep_right}]}],
    ///  composition: [[g, f, g∘f], ...]} with global class ids.
    nlohmann::json export_json() const;

private:
    struct Impl;
    explicit SpectralCategory(std::shared_ptr<Impl> impl);
    std::shared_ptr<Impl> impl_;
};

struct LimitFailure
{
    Morphism f;
    Morphism g;
    ObjectRef probe;
    std::string reason;
};

struct LimitReport
{
    std::size_t cospans = 0;
    std::size_t cones = 0;
    /// Universe-relative: only probes from the universe are tested.
    bool bounded = true;
    std::optional<LimitFailure> failure;

    bool passed() const { return ! failure.has_value(); }
};

/// Checks that P sends the pullback of each cospan to a pullback in the
/// spectral category, testing existence and uniqueness of mediating classes
/// against every object of the universe.
LimitReport verify_limit_preservation(const SpectralCategory & spec,
                                      const std::vector<std::pair<Morphism, Morphism>> & cospans);

/// Every cospan (f, g) of universe morphisms with a common codomain, f <= g.
std::vector<std::pair<Morphism, Morphism>> universe_cospans(const Universe & universe);

struct MinimalSubobject
{
    Subobject subobject;
    std::size_t oracle_checks = 0;
};

/// The intersection of all M-subobjects of A. Asserts that it is itself an
/// M-subobject and that |hom(A, B)| in the spectral category equals
/// |hom(A_min, B)| in C for every B of the universe; throws
/// InvariantViolation otherwise.
MinimalSubobject minimal_m_subobject(const ObjectRef & a, const SpectralCategory & spec);

/// A is M-uniform: x: X -> A lies in M whenever X != 0 and Ker(x) = 0.
/// Group backends quantify over subobject inclusions; pointed sets quantify
/// literally over maps from the universe with zero kernel.
Decision is_uniform(const ObjectRef & a, const MorphismClass & m, const Universe * universe = nullptr);

struct DivisionMonoidReport
{
    std::string object;
    std::size_t size = 0;
    std::size_t zero = 0;
    std::vector<std::size_t> invertible;
    /// table[g][f] = g ∘ f
    std::vector<std::vector<std::size_t>> table;
    bool verdict = false;
};

DivisionMonoidReport end_spec_division_check(const ObjectRef & a, const SpectralCategory & spec);

} // namespace fincat
