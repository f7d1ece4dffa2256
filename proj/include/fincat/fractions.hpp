#pragma once

#include <fincat/monoclasses.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fincat {

/// A <-x- X -f-> B, written (f, x).
struct Span
{
    Morphism left;
    Morphism right;

    Span(Morphism left, Morphism right);

    const ObjectRef & source() const { return left.cod(); }
    const ObjectRef & target() const { return right.cod(); }
    const ObjectRef & apex() const { return left.dom(); }

    friend bool operator==(const Span & a, const Span & b) { return a.left == b.left && a.right == b.right; }
};

/// The span (f, 1_A).
Span span_of(const Morphism & f);

/// Replaces a mono left leg by the inclusion of its image subobject and
/// transports the right leg along the resulting iso.
/// Throws PreconditionViolation when the left leg is not mono.
Span normalize(const Span & s);

/// Canonical order: by left leg image size, then image, then right leg map.
bool canonical_less(const Span & a, const Span & b);

/// (g, y)(f, x) = (g q, x p) over the pullback X ×_B Y.
/// Throws CompositionMismatch when s1 does not end where s2 starts.
Span span_compose(const Span & s2, const Span & s1);

/// A commutative diamond X <-u- Y -v-> X' witnessing s ~ t.
struct Diamond
{
    Morphism u;
    Morphism v;
};

struct FractionEquality
{
    bool equal = false;
    std::optional<Diamond> diamond;
};

/// Searches for u: Y -> X, v: Y -> X' with x u = x' v, f u = f' v and x u in M.
/// Y ranges over subobjects of the part of X ×_A X' where the right legs
/// agree, largest first. With `restrict_to_m`, u and v must also lie in M.
/// Throws PreconditionViolation when the spans do not share endpoints or a
/// left leg is outside M.
FractionEquality fraction_equal(const Span & s, const Span & t, const MorphismClass & m, bool restrict_to_m = false);

struct FractionClass
{
    Span representative;
    std::size_t index = 0;
};

/// Hom-set of the category of fractions: spans (f, x) with x the inclusion of
/// an M-subobject of A, classified by fraction_equal. Each class is
/// represented by its smallest span in canonical order; classes are listed
/// in the order of their representatives.
std::vector<FractionClass> poincare_hom(const ObjectRef & a, const ObjectRef & b, const MorphismClass & m);

/// A hom-set together with the class of every normalized span enumerated
/// while building it, keyed by (image of the left leg, right leg map).
struct HomTable
{
    std::vector<FractionClass> classes;
    std::map<std::pair<std::vector<Element>, std::vector<Element>>, std::size_t> index;
};

/// poincare_hom with the span index. When A is its own only M-subobject the
/// classes are the plain maps A -> B and no fraction comparison is needed.
HomTable poincare_hom_table(const ObjectRef & a, const ObjectRef & b, const MorphismClass & m);

/// Index of the class of `s` among `classes` (spans normalized first).
/// Throws InvariantViolation when no class matches.
std::size_t classify_span(const Span & s, const std::vector<FractionClass> & classes, const MorphismClass & m);
std::size_t classify_span(const Span & s, const HomTable & table, const MorphismClass & m);

enum class ConditionId
{
    F0,
    F1,
    F2,
    F3,
    OreD,
};

std::string_view condition_name(ConditionId id);

struct ConditionReport
{
    ConditionId id = ConditionId::F0;
    bool passed = true;
    std::size_t instances = 0;
    std::vector<std::pair<std::string, Morphism>> witness;
};

/// Exhaustive check of F0–F3 and of the calculus of right fractions (identities
/// in M, composition closure, and cancellability: m f = m g with m in M
/// forces f n = g n for some n in M) over the universe.
std::vector<ConditionReport> check_focal(const MorphismClass & m, const Universe & universe);

} // namespace fincat
