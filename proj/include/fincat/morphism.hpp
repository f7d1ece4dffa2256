#pragma once

#include <fincat/object.hpp>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace fincat {

/// A total, basepoint-preserving map between two objects of one backend.
/// For group backends it is a homomorphism.
class Morphism
{
public:
    /// Validates the table; throws BackendMismatch or InvalidStructure.
    Morphism(ObjectRef dom, ObjectRef cod, std::vector<Element> map);

    /// No validation. For maps derived from valid ones (projections, inclusions, composites).
    static Morphism trusted(ObjectRef dom, ObjectRef cod, std::vector<Element> map);

    static Morphism identity(const ObjectRef & object);
    static Morphism zero(const ObjectRef & dom, const ObjectRef & cod);

    const ObjectRef & dom() const { return dom_; }
    const ObjectRef & cod() const { return cod_; }
    std::span<const Element> map() const { return map_; }
    Element operator()(Element x) const { return map_[x]; }

    bool is_identity() const;
    bool is_zero() const;

    /// Pointwise equality of tables between structurally equal endpoints.
    friend bool operator==(const Morphism & a, const Morphism & b);

    /// Canonical order inside a hom-set: lexicographic on the map table.
    friend std::strong_ordering operator<=>(const Morphism & a, const Morphism & b);

private:
    struct Unchecked
    {
    };
    Morphism(Unchecked, ObjectRef dom, ObjectRef cod, std::vector<Element> map);

    ObjectRef dom_;
    ObjectRef cod_;
    std::vector<Element> map_;
};

/// g ∘ f; throws CompositionMismatch when cod(f) != dom(g).
Morphism compose(const Morphism & g, const Morphism & f);

/// Checks that a table is a structure-preserving map dom -> cod.
bool is_structure_preserving(const Object & dom, const Object & cod, std::span<const Element> map);

bool is_mono(const Morphism & f);
bool is_epi(const Morphism & f);
bool is_iso(const Morphism & f);

/// Sorted image of f as a subset of cod(f).
std::vector<Element> image_of(const Morphism & f);

std::string describe(const Morphism & f);

struct MorphismHash
{
    std::size_t operator()(const Morphism & f) const;
};

} // namespace fincat
