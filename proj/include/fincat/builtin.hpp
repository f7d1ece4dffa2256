#pragma once

#include <fincat/category.hpp>
#include <fincat/limits.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fincat {

ObjectRef cyclic_group(std::size_t n, Kind kind = Kind::Group);
ObjectRef symmetric_group(std::size_t degree);
ObjectRef alternating_group(std::size_t degree);
/// Symmetries of the regular n-gon, order 2n.
ObjectRef dihedral_group(std::size_t n);
ObjectRef quaternion_group();
/// Z/m ⋊ Z/k where the generator of Z/k acts as multiplication by `twist` (mod m).
ObjectRef semidirect_cyclic(std::size_t m, std::size_t k, std::size_t twist, Kind kind = Kind::Group);
ObjectRef direct_product(const ObjectRef & a, const ObjectRef & b, std::string name = {});

struct NamedObject
{
    std::string label;
    ObjectRef object;
};

/// The built-in group registry, ordered by order; every group of order at
/// most 12 plus a selection up to order 24, and A5.
const std::vector<NamedObject> & builtin_groups();

/// Finite abelian groups of order at most 16 in the FinAb backend.
const std::vector<NamedObject> & builtin_abelian_groups();

/// Pointed sets of sizes 1..4.
const std::vector<NamedObject> & builtin_pointed_sets();

/// Labels a group by an isomorphic registry entry when one exists; used for reports only.
std::string identify(const ObjectRef & object);

/// The distinct subgroup objects of `group` (structurally deduplicated), as a universe.
Universe subgroup_universe(const ObjectRef & group, std::string name);

/// Named universes: zero, z4-chain, s3-subgroups, s4-subgroups, a5-subgroups,
/// groups-le-8, groups-le-12, groups-le-24, ab-small, pointed-small.
/// Throws PreconditionViolation for an unknown name.
Universe named_universe(std::string_view name);
std::vector<std::string> universe_names();
/// Backend kind of a named universe.
Kind universe_kind(std::string_view name);

/// The small cast of objects and morphisms used throughout the worked examples.
struct ExampleSet
{
    ObjectRef s3, a3, s2, z2, z3, z5, a5, s4;
    ObjectRef ab_z2, ab_z4;
    ObjectRef p1, p2, p3;

    Morphism a3_in_s3;   ///< alternating subgroup A3 -> S3
    Morphism s2_in_s3;   ///< transposition subgroup S2 = <(0 1)> -> S3
    Morphism s3_to_z2;   ///< sign quotient S3 -> S3/A3
    Morphism soc_z4;     ///< socle Z/2 -> Z/4 in FinAb
    Morphism s3_in_a5;   ///< <(0 1 2), (0 1)(3 4)> -> A5
    Morphism z2_in_s3a5; ///< <(0 1)(3 4)> -> that S3
    Morphism collapse;   ///< pointed {*,a,b} -> {*,c}, a,b |-> c
};

const ExampleSet & standard_examples();

} // namespace fincat
