#pragma once

#include <fincat/limits.hpp>
#include <fincat/morphism.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fincat {

/// An equivalence relation on the carrier of an object that is compatible
/// with its operations. Blocks are numbered by their smallest element, so
/// the block of the basepoint is block 0.
class Congruence
{
public:
    /// Normalizes an arbitrary block labelling; does not check compatibility.
    Congruence(ObjectRef on, std::vector<Element> block_of);

    const ObjectRef & on() const { return on_; }
    std::span<const Element> block_of() const { return block_of_; }
    Element block(Element x) const { return block_of_[x]; }
    std::size_t block_count() const { return block_count_; }
    std::vector<std::vector<Element>> blocks() const;

    bool is_discrete() const { return block_count_ == on_->size(); }
    bool is_total() const { return block_count_ == 1; }

    /// The block of the basepoint; a normal subobject in the group backends.
    std::vector<Element> zero_block() const;

    /// The relation as a subobject of A × A with its two projections.
    Subobject as_relation() const;

    friend bool operator==(const Congruence & a, const Congruence & b);

private:
    ObjectRef on_;
    std::vector<Element> block_of_;
    std::size_t block_count_;
};

/// Δ_A
Congruence discrete_congruence(const ObjectRef & object);
/// ∇_A
Congruence total_congruence(const ObjectRef & object);

/// Smallest congruence containing the given pairs, computed by
/// compatibility closure (independent of any normal-subgroup reasoning).
Congruence generated_congruence(const ObjectRef & object, std::span<const std::pair<Element, Element>> pairs);

/// Every congruence on A, ordered by number of blocks (smallest quotient
/// first) and then by block labelling. Contains Δ_A and ∇_A. Memoized.
const std::vector<Congruence> & congruences(const ObjectRef & object);

/// Partition of dom(f) into fibres of f.
Congruence kernel_pair(const Morphism & f);

bool is_compatible(const Congruence & c);

struct Quotient
{
    ObjectRef object;
    Morphism map;
};

/// A -> A/E; element i of the quotient is block i.
Quotient quotient(const Congruence & c);

/// Cokernel of k: B -> A. Groups: quotient of A by the normal closure of the
/// image. Pointed sets: the image collapses to the basepoint.
Morphism cokernel(const Morphism & k);

/// f is surjective and coincides, up to canonical iso, with the cokernel of its kernel.
bool is_normal_epi(const Morphism & f);

struct NormalityReport
{
    bool pointed = true;
    bool regular_images_stable = true;
    bool regular_epis_normal = true;
    std::size_t morphisms_checked = 0;
    std::optional<Morphism> non_pointed_witness;
    /// Cospan (f, g) whose pulled-back regular epi is not surjective.
    std::optional<std::pair<Morphism, Morphism>> unstable_witness;
    /// A regular epi that is not normal.
    std::optional<Morphism> non_normal_witness;

    bool passed() const { return pointed && regular_images_stable && regular_epis_normal; }
};

/// Checks pointedness, pullback stability of (regular epi, mono)
/// factorizations, and normality of regular epis over every morphism
/// between the given objects.
NormalityReport check_normal_backend(std::span<const ObjectRef> objects);

} // namespace fincat
