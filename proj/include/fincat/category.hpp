#pragma once

#include <fincat/morphism.hpp>
#include <fincat/object.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fincat {

struct HomOptions
{
    /// Worker threads for the generator-image search. Results are merged in
    /// canonical order, so the output does not depend on this value.
    unsigned threads = 1;
    /// Refuse to enumerate more candidate maps than this (pointed sets grow fast).
    std::size_t candidate_limit = 50'000'000;
};

/// Every structure-preserving, basepoint-preserving map A -> B, sorted by
/// map table. Throws BackendMismatch for objects of different backends.
std::vector<Morphism> enumerate_hom(const ObjectRef & a, const ObjectRef & b, const HomOptions & options = {});

/// Memoized enumerate_hom. The returned reference stays valid for the life of
/// the process.
const std::vector<Morphism> & hom_set(const ObjectRef & a, const ObjectRef & b);

/// Cancellation-based monomorphism test: f is mono relative to `probes` if
/// f∘g = f∘h implies g = h for all g, h: P -> dom(f), P in probes.
bool is_mono_by_cancellation(const Morphism & f, std::span<const ObjectRef> probes);

/// Dual of is_mono_by_cancellation, using maps cod(f) -> P.
bool is_epi_by_cancellation(const Morphism & f, std::span<const ObjectRef> probes);

inline constexpr std::size_t default_size_bound(Kind kind)
{
    switch (kind) {
    case Kind::Group:
        return 60;
    case Kind::AbelianGroup:
        return 64;
    case Kind::PointedSet:
        return 16;
    }
    return 0;
}

inline constexpr std::size_t default_probe_bound = 8;

/// A finite list of objects of one backend, deduplicated structurally, each
/// with a display label. Universes are the bounded worlds over which
/// quantified checks run; they span full subcategories.
class Universe
{
public:
    Universe(std::string name, Kind kind);

    /// Adds the object unless a structurally equal one is present; returns the stored copy.
    ObjectRef add(const ObjectRef & object, std::string label = {});

    const std::string & name() const { return name_; }
    Kind kind() const { return kind_; }
    const std::vector<ObjectRef> & objects() const { return objects_; }
    std::size_t size() const { return objects_.size(); }

    std::optional<std::size_t> index_of(const ObjectRef & object) const;
    bool contains(const ObjectRef & object) const { return index_of(object).has_value(); }
    ObjectRef find(std::string_view label) const;

    /// Registered label, or a synthesized one for objects outside the universe.
    std::string label(const ObjectRef & object) const;
    std::string label(const Morphism & f) const;

    /// All morphisms between members of the universe, in canonical order.
    std::vector<Morphism> arrows() const;
    std::vector<Morphism> arrows_into(const ObjectRef & cod) const;

private:
    std::string name_;
    Kind kind_;
    std::vector<ObjectRef> objects_;
    std::vector<std::string> labels_;
};

/// An ambient category: the backend kind, its bounds, and a registry of
/// named objects. The zero object is registered eagerly.
class Backend
{
public:
    explicit Backend(Kind kind, std::optional<std::size_t> size_bound = std::nullopt,
                     std::size_t probe_bound = default_probe_bound);

    Kind kind() const { return kind_; }
    std::size_t size_bound() const { return size_bound_; }
    std::size_t probe_bound() const { return probe_bound_; }
    const ObjectRef & zero() const { return zero_; }

    /// Throws BackendMismatch for a foreign kind and BoundExceeded above size_bound.
    const ObjectRef & admit(const ObjectRef & object) const;

    ObjectRef register_object(const ObjectRef & object, std::string label);
    const Universe & registry() const { return registry_; }

    /// Backends whose decision procedures may use the normal-category theorems.
    bool is_normal() const { return kind_ != Kind::PointedSet; }

private:
    Kind kind_;
    std::size_t size_bound_;
    std::size_t probe_bound_;
    ObjectRef zero_;
    Universe registry_;
};

} // namespace fincat
