#include <fincat/errors.hpp>
#include <fincat/object.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace fincat {

std::string_view kind_name(Kind kind)
{
    switch (kind) {
    case Kind::PointedSet:
        return "pointed_set";
    case Kind::Group:
        return "group";
    case Kind::AbelianGroup:
        return "abelian_group";
    }
    return "unknown";
}

bool has_operation(Kind kind)
{
    return kind != Kind::PointedSet;
}

void hash_combine(std::size_t & seed, std::size_t value)
{
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

Object::Object(Token, Kind kind, std::size_t size, std::vector<Element> table, std::string name)
    : kind_(kind), size_(size), name_(std::move(name)), table_(std::move(table))
{
    hash_ = static_cast<std::size_t>(kind_);
    hash_combine(hash_, size_);
    for (auto v : table_)
        hash_combine(hash_, v);

    if (! table_.empty()) {
        inverse_.assign(size_, 0);
        for (Element a = 0; a < size_; ++a)
            for (Element b = 0; b < size_; ++b)
                if (op(a, b) == 0) {
                    inverse_[a] = b;
                    break;
                }
    }
}

ObjectRef Object::pointed_set(std::size_t size, std::string name)
{
    if (size == 0)
        throw InvalidStructure("a pointed set needs at least its basepoint");
    return std::make_shared<const Object>(Token{}, Kind::PointedSet, size, std::vector<Element>{}, std::move(name));
}

ObjectRef Object::trusted(Kind kind, std::size_t size, std::vector<Element> table, std::string name)
{
    if (kind == Kind::PointedSet)
        table.clear();
    return std::make_shared<const Object>(Token{}, kind, size, std::move(table), std::move(name));
}

ObjectRef Object::from_table(Kind kind, std::size_t size, std::vector<Element> table, std::string name)
{
    if (kind == Kind::PointedSet)
        throw InvalidStructure("pointed sets carry no operation table");
    if (size == 0)
        throw InvalidStructure("a group needs at least its identity");
    if (table.size() != size * size)
        throw InvalidStructure("operation table has " + std::to_string(table.size()) + " entries, expected "
                               + std::to_string(size * size));
    auto at = [&](Element a, Element b) { return table[a * size + b]; };
    for (auto v : table)
        if (v >= size)
            throw InvalidStructure("operation table is not closed: entry " + std::to_string(v));
    for (Element a = 0; a < size; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw InvalidStructure("element 0 is not a two-sided identity");
    for (Element a = 0; a < size; ++a) {
        bool found = false;
        for (Element b = 0; b < size && ! found; ++b)
            found = at(a, b) == 0 && at(b, a) == 0;
        if (! found)
            throw InvalidStructure("element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (Element a = 0; a < size; ++a)
        for (Element b = 0; b < size; ++b)
            for (Element c = 0; c < size; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw InvalidStructure("operation is not associative at (" + std::to_string(a) + ","
                                           + std::to_string(b) + "," + std::to_string(c) + ")");
    if (kind == Kind::AbelianGroup)
        for (Element a = 0; a < size; ++a)
            for (Element b = 0; b < a; ++b)
                if (at(a, b) != at(b, a))
                    throw InvalidStructure("operation is not commutative; not admissible as an abelian group");
    return std::make_shared<const Object>(Token{}, kind, size, std::move(table), std::move(name));
}

ObjectRef Object::from_permutations(
    Kind kind, std::size_t degree, const std::vector<std::vector<std::uint32_t>> & generators, std::string name,
    std::size_t max_order)
{
    using Perm = std::vector<std::uint32_t>;
    if (kind == Kind::PointedSet)
        throw InvalidStructure("permutation presentations describe groups");
    if (degree == 0)
        throw InvalidStructure("permutation degree must be positive");
    for (const auto & g : generators) {
        if (g.size() != degree)
            throw InvalidStructure("permutation of length " + std::to_string(g.size()) + " in degree "
                                   + std::to_string(degree));
        std::vector<bool> seen(degree, false);
        for (auto v : g) {
            if (v >= degree || seen[v])
                throw InvalidStructure("generator is not a permutation");
            seen[v] = true;
        }
    }

    auto mul = [&](const Perm & p, const Perm & q) {
        Perm r(degree);
        for (std::size_t i = 0; i < degree; ++i)
            r[i] = p[q[i]];
        return r;
    };

    Perm id(degree);
    for (std::size_t i = 0; i < degree; ++i)
        id[i] = static_cast<std::uint32_t>(i);

    std::map<Perm, Element> seen{{id, 0}};
    std::vector<Perm> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto & g : generators) {
            auto next = mul(queue[head], g);
            if (seen.emplace(next, 0).second) {
                if (queue.size() >= max_order)
                    throw BoundExceeded("permutation group has more than " + std::to_string(max_order)
                                        + " elements");
                queue.push_back(std::move(next));
            }
        }

    // std::map iterates lexicographically; the identity is the smallest permutation.
    std::vector<Perm> elements;
    elements.reserve(seen.size());
    for (auto & [perm, index] : seen) {
        index = static_cast<Element>(elements.size());
        elements.push_back(perm);
    }
    std::size_t n = elements.size();
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = seen.at(mul(elements[a], elements[b]));

    if (kind == Kind::AbelianGroup)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (table[a * n + b] != table[b * n + a])
                    throw InvalidStructure("generated group is not commutative; not admissible as an abelian group");

    return std::make_shared<const Object>(Token{}, kind, n, std::move(table), std::move(name));
}

std::vector<Element> generated_subset(const Object & object, std::span<const Element> seeds)
{
    std::vector<bool> in(object.size(), false);
    std::vector<Element> members{0};
    in[0] = true;
    if (! object.has_operation()) {
        for (auto s : seeds)
            if (! in[s]) {
                in[s] = true;
                members.push_back(s);
            }
        std::sort(members.begin(), members.end());
        return members;
    }
    for (std::size_t head = 0; head < members.size(); ++head)
        for (auto s : seeds) {
            auto next = object.op(members[head], s);
            if (! in[next]) {
                in[next] = true;
                members.push_back(next);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::span<const Element> Object::generators() const
{
    std::call_once(generators_once_, [this] {
        if (! has_operation() || size_ <= 1)
            return;
        for (Element a = 1; a < size_; ++a)
            if (order_of(a) == size_) {
                generators_ = {a};
                return;
            }
        if (size_ <= 128) {
            for (Element a = 1; a < size_; ++a)
                for (Element b = a + 1; b < size_; ++b) {
                    Element pair[2] = {a, b};
                    if (generated_subset(*this, pair).size() == size_) {
                        generators_ = {a, b};
                        return;
                    }
                }
        }
        std::vector<Element> gens;
        std::vector<Element> current{0};
        while (current.size() < size_) {
            std::vector<bool> in(size_, false);
            for (auto e : current)
                in[e] = true;
            Element next = 1;
            while (in[next])
                ++next;
            gens.push_back(next);
            current = generated_subset(*this, gens);
        }
        generators_ = std::move(gens);
    });
    return generators_;
}

std::size_t Object::order_of(Element a) const
{
    if (! has_operation())
        return 1;
    std::size_t order = 1;
    for (Element x = a; x != 0; x = op(x, a))
        ++order;
    return order;
}

bool operator==(const Object & a, const Object & b)
{
    return a.kind_ == b.kind_ && a.size_ == b.size_ && a.hash_ == b.hash_ && a.table_ == b.table_;
}

ObjectRef Object::renamed(std::string name) const
{
    return std::make_shared<const Object>(Token{}, kind_, size_, table_, std::move(name));
}

bool same_object(const ObjectRef & a, const ObjectRef & b)
{
    return a == b || *a == *b;
}

std::string describe(const Object & object)
{
    if (! object.name().empty())
        return object.name();
    std::ostringstream out;
    switch (object.kind()) {
    case Kind::PointedSet:
        out << "P";
        break;
    case Kind::Group:
        out << "G";
        break;
    case Kind::AbelianGroup:
        out << "Ab";
        break;
    }
    out << object.size();
    return out.str();
}

} // namespace fincat
