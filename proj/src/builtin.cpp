#include <fincat/builtin.hpp>
#include <fincat/congruence.hpp>
#include <fincat/errors.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace fincat {

namespace {

using Perm = std::vector<std::uint32_t>;

Perm cycle(std::size_t degree, std::initializer_list<std::uint32_t> points)
{
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i)
        p[i] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> c(points);
    for (std::size_t i = 0; i < c.size(); ++i)
        p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

Perm times(const Perm & p, const Perm & q)
{
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

ObjectRef trivial(Kind kind)
{
    return Object::trusted(kind, 1, {0}, "0");
}

ObjectRef special_linear_2_3()
{
    // Action on the eight non-zero vectors of F_3^2.
    std::vector<std::array<int, 2>> vectors;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a || b)
                vectors.push_back({a, b});
    auto act = [&](std::array<int, 4> m) {
        Perm p(vectors.size());
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            std::array<int, 2> w{(m[0] * vectors[i][0] + m[1] * vectors[i][1]) % 3,
                                 (m[2] * vectors[i][0] + m[3] * vectors[i][1]) % 3};
            p[i] = static_cast<std::uint32_t>(std::find(vectors.begin(), vectors.end(), w) - vectors.begin());
        }
        return p;
    };
    return Object::from_permutations(Kind::Group, vectors.size(), {act({1, 1, 0, 1}), act({1, 0, 1, 1})}, "SL(2,3)");
}

bool isomorphic(const ObjectRef & a, const ObjectRef & b)
{
    if (a->kind() != b->kind() || a->size() != b->size())
        return false;
    if (! a->has_operation())
        return true;
    for (const auto & f : enumerate_hom(a, b))
        if (is_mono(f))
            return true;
    return false;
}

} // namespace

ObjectRef cyclic_group(std::size_t n, Kind kind)
{
    if (kind == Kind::PointedSet)
        throw PreconditionViolation("cyclic groups live in a group backend");
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = static_cast<Element>((i + j) % n);
    return Object::trusted(kind, n, std::move(table), n == 1 ? "0" : "Z" + std::to_string(n));
}

ObjectRef symmetric_group(std::size_t degree)
{
    if (degree < 2)
        return trivial(Kind::Group);
    std::vector<std::uint32_t> all(degree);
    for (std::size_t i = 0; i < degree; ++i)
        all[i] = static_cast<std::uint32_t>(i);
    Perm rotation(degree);
    for (std::size_t i = 0; i < degree; ++i)
        rotation[i] = static_cast<std::uint32_t>((i + 1) % degree);
    return Object::from_permutations(Kind::Group, degree, {cycle(degree, {0, 1}), rotation},
                                     "S" + std::to_string(degree));
}

ObjectRef alternating_group(std::size_t degree)
{
    if (degree < 3)
        return trivial(Kind::Group);
    std::vector<Perm> gens;
    for (std::uint32_t i = 2; i < degree; ++i)
        gens.push_back(cycle(degree, {0, 1, i}));
    return Object::from_permutations(Kind::Group, degree, gens, "A" + std::to_string(degree));
}

ObjectRef dihedral_group(std::size_t n)
{
    Perm rotation(n), reflection(n);
    for (std::size_t i = 0; i < n; ++i) {
        rotation[i] = static_cast<std::uint32_t>((i + 1) % n);
        reflection[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    return Object::from_permutations(Kind::Group, n, {rotation, reflection}, "D" + std::to_string(2 * n));
}

ObjectRef quaternion_group()
{
    // element index 2*u + s encodes (-1)^s * unit[u], unit = {1, i, j, k}
    static constexpr int unit_product[4][4][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    std::vector<Element> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto * p = unit_product[a / 2][b / 2];
            int sign = (a % 2 + b % 2 + p[1]) % 2;
            table[a * 8 + b] = static_cast<Element>(2 * p[0] + sign);
        }
    return Object::from_table(Kind::Group, 8, std::move(table), "Q8");
}

ObjectRef semidirect_cyclic(std::size_t m, std::size_t k, std::size_t twist, Kind kind)
{
    std::size_t n = m * k;
    std::vector<std::size_t> power(k, 1);
    for (std::size_t y = 1; y < k; ++y)
        power[y] = power[y - 1] * twist % m;
    std::vector<Element> table(n * n);
    for (std::size_t x1 = 0; x1 < m; ++x1)
        for (std::size_t y1 = 0; y1 < k; ++y1)
            for (std::size_t x2 = 0; x2 < m; ++x2)
                for (std::size_t y2 = 0; y2 < k; ++y2) {
                    std::size_t x = (x1 + power[y1] * x2) % m;
                    std::size_t y = (y1 + y2) % k;
                    table[(x1 * k + y1) * n + (x2 * k + y2)] = static_cast<Element>(x * k + y);
                }
    return Object::from_table(kind, n, std::move(table),
                              "Z" + std::to_string(m) + ":Z" + std::to_string(k));
}

ObjectRef direct_product(const ObjectRef & a, const ObjectRef & b, std::string name)
{
    auto p = product(a, b).object;
    return name.empty() ? p : p->renamed(std::move(name));
}

const std::vector<NamedObject> & builtin_groups()
{
    static const std::vector<NamedObject> groups = [] {
        auto z = [](std::size_t n) { return cyclic_group(n); };
        std::vector<NamedObject> g{
            {"0", trivial(Kind::Group)},
            {"Z2", z(2)},
            {"Z3", z(3)},
            {"Z4", z(4)},
            {"V4", direct_product(z(2), z(2), "V4")},
            {"Z5", z(5)},
            {"Z6", z(6)},
            {"S3", symmetric_group(3)},
            {"Z7", z(7)},
            {"Z8", z(8)},
            {"Z4xZ2", direct_product(z(4), z(2), "Z4xZ2")},
            {"Z2^3", direct_product(direct_product(z(2), z(2)), z(2), "Z2^3")},
            {"D8", dihedral_group(4)},
            {"Q8", quaternion_group()},
            {"Z9", z(9)},
            {"Z3xZ3", direct_product(z(3), z(3), "Z3xZ3")},
            {"Z10", z(10)},
            {"D10", dihedral_group(5)},
            {"Z11", z(11)},
            {"Z12", z(12)},
            {"Z2xZ6", direct_product(z(2), z(6), "Z2xZ6")},
            {"A4", alternating_group(4)},
            {"D12", dihedral_group(6)},
            {"Q12", semidirect_cyclic(3, 4, 2)->renamed("Q12")},
            {"D14", dihedral_group(7)},
            {"D16", dihedral_group(8)},
            {"Z3xS3", direct_product(z(3), symmetric_group(3), "Z3xS3")},
            {"D20", dihedral_group(10)},
            {"F21", semidirect_cyclic(7, 3, 2)->renamed("F21")},
            {"S4", symmetric_group(4)},
            {"SL(2,3)", special_linear_2_3()},
            {"Z2xA4", direct_product(z(2), alternating_group(4), "Z2xA4")},
            {"A5", alternating_group(5)},
        };
        std::stable_sort(g.begin(), g.end(),
                         [](const NamedObject & a, const NamedObject & b) { return a.object->size() < b.object->size(); });
        return g;
    }();
    return groups;
}

const std::vector<NamedObject> & builtin_abelian_groups()
{
    static const std::vector<NamedObject> groups = [] {
        auto z = [](std::size_t n) { return cyclic_group(n, Kind::AbelianGroup); };
        return std::vector<NamedObject>{
            {"0", trivial(Kind::AbelianGroup)},
            {"Z2", z(2)},
            {"Z3", z(3)},
            {"Z4", z(4)},
            {"V4", direct_product(z(2), z(2), "V4")},
            {"Z5", z(5)},
            {"Z6", z(6)},
            {"Z7", z(7)},
            {"Z8", z(8)},
            {"Z4xZ2", direct_product(z(4), z(2), "Z4xZ2")},
            {"Z2^3", direct_product(direct_product(z(2), z(2)), z(2), "Z2^3")},
            {"Z9", z(9)},
            {"Z3xZ3", direct_product(z(3), z(3), "Z3xZ3")},
            {"Z10", z(10)},
            {"Z12", z(12)},
            {"Z2xZ6", direct_product(z(2), z(6), "Z2xZ6")},
            {"Z16", z(16)},
            {"Z4xZ4", direct_product(z(4), z(4), "Z4xZ4")},
        };
    }();
    return groups;
}

const std::vector<NamedObject> & builtin_pointed_sets()
{
    static const std::vector<NamedObject> sets{
        {"0", Object::pointed_set(1, "0")},
        {"P2", Object::pointed_set(2, "P2")},
        {"P3", Object::pointed_set(3, "P3")},
        {"P4", Object::pointed_set(4, "P4")},
    };
    return sets;
}

std::string identify(const ObjectRef & object)
{
    if (object->size() == 1)
        return "0";
    if (object->kind() == Kind::PointedSet)
        return "P" + std::to_string(object->size());
    const auto & registry = object->kind() == Kind::Group ? builtin_groups() : builtin_abelian_groups();
    if (object->size() <= 60)
        for (const auto & entry : registry)
            if (entry.object->size() == object->size() && isomorphic(object, entry.object))
                return entry.label;
    return describe(*object);
}

Universe subgroup_universe(const ObjectRef & group, std::string name)
{
    Universe universe(std::move(name), group->kind());
    std::map<std::string, int> seen;
    for (const auto & sub : subobjects(group)) {
        if (universe.contains(sub.object))
            continue;
        std::string label = sub.is_total() && ! group->name().empty() ? group->name() : identify(sub.object);
        int copies = seen[label]++;
        if (copies > 0)
            label += std::string(static_cast<std::size_t>(copies), '\'');
        universe.add(sub.object, label);
    }
    return universe;
}

std::vector<std::string> universe_names()
{
    return {"zero", "z4-chain", "s3-subgroups", "s4-subgroups", "a5-subgroups", "groups-le-8",
            "groups-le-12", "groups-le-24", "ab-small", "pointed-small"};
}

Kind universe_kind(std::string_view name)
{
    if (name == "z4-chain" || name == "ab-small")
        return Kind::AbelianGroup;
    if (name == "pointed-small")
        return Kind::PointedSet;
    if (name == "zero" || name == "s3-subgroups" || name == "s4-subgroups" || name == "a5-subgroups"
        || name == "groups-le-8" || name == "groups-le-12" || name == "groups-le-24")
        return Kind::Group;
    throw PreconditionViolation("unknown universe '" + std::string(name) + "'");
}

Universe named_universe(std::string_view name)
{
    const auto & ex = standard_examples();
    std::string n(name);
    if (name == "zero") {
        Universe u(n, Kind::Group);
        u.add(trivial(Kind::Group), "0");
        return u;
    }
    if (name == "z4-chain") {
        Universe u(n, Kind::AbelianGroup);
        u.add(trivial(Kind::AbelianGroup), "0");
        u.add(ex.ab_z2, "Z2");
        u.add(ex.ab_z4, "Z4");
        return u;
    }
    if (name == "s3-subgroups") {
        Universe u(n, Kind::Group);
        u.add(trivial(Kind::Group), "0");
        u.add(ex.s2, "S2");
        u.add(ex.a3, "A3");
        u.add(ex.s3, "S3");
        return u;
    }
    if (name == "s4-subgroups")
        return subgroup_universe(ex.s4, n);
    if (name == "a5-subgroups")
        return subgroup_universe(ex.a5, n);
    auto by_order = [&](const std::vector<NamedObject> & list, Kind kind, std::size_t bound) {
        Universe u(n, kind);
        for (const auto & entry : list)
            if (entry.object->size() <= bound)
                u.add(entry.object, entry.label);
        return u;
    };
    if (name == "groups-le-8")
        return by_order(builtin_groups(), Kind::Group, 8);
    if (name == "groups-le-12")
        return by_order(builtin_groups(), Kind::Group, 12);
    if (name == "groups-le-24")
        return by_order(builtin_groups(), Kind::Group, 24);
    if (name == "ab-small")
        return by_order(builtin_abelian_groups(), Kind::AbelianGroup, 16);
    if (name == "pointed-small")
        return by_order(builtin_pointed_sets(), Kind::PointedSet, 4);
    throw PreconditionViolation("unknown universe '" + n + "'");
}

const ExampleSet & standard_examples()
{
    static const ExampleSet examples = [] {
        auto s3 = symmetric_group(3);
        auto a5 = alternating_group(5);
        auto a3_sub = make_subobject(s3, {0, 3, 4});
        auto s2_sub = make_subobject(s3, {0, 2});
        auto ab_z4 = cyclic_group(4, Kind::AbelianGroup);
        auto soc = make_subobject(ab_z4, {0, 2});

        // <(0 1 2), (0 1)(3 4)> inside A5, located through the permutation order of A5's elements
        auto perms_a5 = [] {
            std::vector<Perm> all;
            Perm p{0, 1, 2, 3, 4};
            do {
                int inversions = 0;
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j)
                        inversions += p[i] > p[j];
                if (inversions % 2 == 0)
                    all.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
            return all;
        }();
        auto index_in_a5 = [&](const Perm & p) {
            return static_cast<Element>(std::find(perms_a5.begin(), perms_a5.end(), p) - perms_a5.begin());
        };
        Perm three_cycle = cycle(5, {0, 1, 2});
        Perm involution = times(cycle(5, {0, 1}), cycle(5, {3, 4}));
        Element seeds[2] = {index_in_a5(three_cycle), index_in_a5(involution)};
        auto s3_in_a5 = make_subobject(a5, generated_subset(*a5, seeds));
        Element inv_seed[1] = {index_in_a5(involution)};
        auto z2_in_a5 = generated_subset(*a5, inv_seed);
        std::vector<Element> z2_positions;
        for (auto e : z2_in_a5)
            z2_positions.push_back(s3_in_a5.position(e));
        auto z2_in_s3a5 = make_subobject(s3_in_a5.object, z2_positions);

        auto p3 = Object::pointed_set(3, "P3");
        auto p2 = Object::pointed_set(2, "P2");

        return ExampleSet{
            s3->renamed("S3"),
            a3_sub.object,
            s2_sub.object,
            cyclic_group(2),
            cyclic_group(3),
            cyclic_group(5),
            a5,
            symmetric_group(4),
            cyclic_group(2, Kind::AbelianGroup),
            ab_z4,
            Object::pointed_set(1, "0"),
            p2,
            p3,
            a3_sub.inclusion(),
            s2_sub.inclusion(),
            cokernel(a3_sub.inclusion()),
            soc.inclusion(),
            s3_in_a5.inclusion(),
            z2_in_s3a5.inclusion(),
            Morphism(p3, p2, {0, 1, 1}),
        };
    }();
    return examples;
}

} // namespace fincat
