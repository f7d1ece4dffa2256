#pragma once

#include <fincat/morphism.hpp>
#include <fincat/object.hpp>

#include <span>
#include <vector>

namespace fincat {

/// A canonical subobject: a sorted, operation-closed element subset of
/// `parent` (always containing the basepoint) together with the induced
/// structure. Element i of `object` is parent element `elements[i]`.
/// Equality of subobjects is equality of these subsets.
struct Subobject
{
    ObjectRef parent;
    std::vector<Element> elements;
    ObjectRef object;

    Morphism inclusion() const;
    std::size_t size() const { return elements.size(); }
    bool is_zero() const { return elements.size() == 1; }
    bool is_total() const { return elements.size() == parent->size(); }
    bool contains(Element x) const;
    /// Position of a parent element inside `object`; requires contains(x).
    Element position(Element x) const;

    friend bool operator==(const Subobject & a, const Subobject & b);
};

/// Builds the subobject on `elements` (sorted and deduplicated here). Throws
/// InvalidStructure when the subset is not closed.
Subobject make_subobject(const ObjectRef & parent, std::vector<Element> elements);

/// The subobject given by the image of a monomorphism (or any morphism).
Subobject image_subobject(const Morphism & f);

/// Every subobject of A, ordered by size and then lexicographically.
/// Memoized; the reference stays valid for the life of the process.
const std::vector<Subobject> & subobjects(const ObjectRef & object);

/// Subobjects that are kernels of some morphism: normal subgroups for the
/// group backends, every subobject for pointed sets.
std::vector<Subobject> normal_subobjects(const ObjectRef & object);
bool is_normal_subset(const Object & object, std::span<const Element> elements);

/// A monomorphism whose image is a normal subobject.
bool is_normal_mono(const Morphism & f);

struct ProductResult
{
    ObjectRef object;
    Morphism proj_left;
    Morphism proj_right;
    std::size_t right_size;

    Element pair_index(Element left, Element right) const { return static_cast<Element>(left * right_size + right); }
    Morphism pair(const Morphism & a, const Morphism & b) const;
};

/// A × B with elements ordered lexicographically by (left, right).
ProductResult product(const ObjectRef & a, const ObjectRef & b);

/// f × g : A × C -> B × D.
Morphism product_map(const Morphism & f, const Morphism & g);

/// Fiber product of a cospan X -f-> A <-g- Y. Apex elements are the pairs
/// (x, y) with f(x) = g(y), in lexicographic order.
struct PullbackResult
{
    ObjectRef apex;
    Morphism proj_left;
    Morphism proj_right;
    Morphism left_leg;
    Morphism right_leg;
    std::vector<std::pair<Element, Element>> pairs;

    /// Unique map T -> apex through which a commuting cone (a, b) factors.
    /// Throws PreconditionViolation if the cone does not commute.
    Morphism mediate(const Morphism & a, const Morphism & b) const;
};

PullbackResult pullback(const Morphism & f, const Morphism & g);

struct EqualizerResult
{
    ObjectRef apex;
    Morphism inclusion;

    Morphism mediate(const Morphism & h) const;
};

EqualizerResult equalizer(const Morphism & f, const Morphism & g);

/// Inclusion of the fiber over the basepoint.
Morphism kernel(const Morphism & f);

/// (regular epi, mono) factorization through the set-theoretic image.
struct Factorization
{
    Morphism regular_epi;
    Morphism mono;
    ObjectRef image;
};

Factorization factorize(const Morphism & f);

/// "X = 0" is decided by cardinality.
inline bool is_zero_object(const Object & object)
{
    return object.size() == 1;
}

} // namespace fincat
