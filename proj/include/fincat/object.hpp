#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fincat {

using Element = std::uint32_t;

/// The three concrete backends. Each one is a pointed category whose zero
/// object is the one-element object.
enum class Kind : std::uint8_t
{
    PointedSet,
    Group,
    AbelianGroup,
};

std::string_view kind_name(Kind kind);
bool has_operation(Kind kind);

class Object;
using ObjectRef = std::shared_ptr<const Object>;

/// A finite pointed algebra on the carrier {0, ..., size-1}. Element 0 is the
/// basepoint (the identity for groups).
///
/// Objects compare structurally: two objects with the same kind and the same
/// tables are the same object of the category, whatever their names. Names
/// are labels for reports only.
class Object
{
public:
    static ObjectRef pointed_set(std::size_t size, std::string name = {});

    /// Validates closure, identity 0, associativity, inverses and (for
    /// AbelianGroup) commutativity. `table` is row-major, size*size.
    static ObjectRef from_table(Kind kind, std::size_t size, std::vector<Element> table, std::string name = {});

    /// Generates the permutation group on {0..degree-1} and orders its
    /// elements lexicographically by image list; the identity comes first.
    /// Throws BoundExceeded once more than `max_order` elements are generated.
    static ObjectRef from_permutations(Kind kind, std::size_t degree,
                                       const std::vector<std::vector<std::uint32_t>> & generators,
                                       std::string name = {}, std::size_t max_order = SIZE_MAX);

    /// Skips validation; for structures derived from already valid objects
    /// (subobjects, products, quotients).
    static ObjectRef trusted(Kind kind, std::size_t size, std::vector<Element> table, std::string name = {});

    Object(const Object &) = delete;
    Object & operator=(const Object &) = delete;

    Kind kind() const { return kind_; }
    std::size_t size() const { return size_; }
    const std::string & name() const { return name_; }
    bool has_operation() const { return ! table_.empty(); }
    bool is_zero() const { return size_ == 1; }

    Element op(Element a, Element b) const { return table_[a * size_ + b]; }
    Element inverse(Element a) const { return inverse_[a]; }
    std::span<const Element> table() const { return table_; }

    /// A small generating set, chosen deterministically (cyclic if possible,
    /// then the first generating pair, then greedy). Empty for the zero object
    /// and for pointed sets.
    std::span<const Element> generators() const;

    /// Order of an element (groups only).
    std::size_t order_of(Element a) const;

    std::size_t hash() const { return hash_; }

    friend bool operator==(const Object & a, const Object & b);

    /// Same structure, different label.
    ObjectRef renamed(std::string name) const;

private:
    struct Token
    {
    };

public:
    Object(Token, Kind kind, std::size_t size, std::vector<Element> table, std::string name);

private:
    Kind kind_;
    std::size_t size_;
    std::string name_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::size_t hash_;
    mutable std::once_flag generators_once_;
    mutable std::vector<Element> generators_;
};

bool same_object(const ObjectRef & a, const ObjectRef & b);

struct ObjectRefHash
{
    std::size_t operator()(const ObjectRef & o) const { return o->hash(); }
};

struct ObjectRefEqual
{
    bool operator()(const ObjectRef & a, const ObjectRef & b) const { return same_object(a, b); }
};

/// Subgroup (or sub-pointed-set) generated by `seeds`, as a sorted element list.
std::vector<Element> generated_subset(const Object & object, std::span<const Element> seeds);

std::string describe(const Object & object);

void hash_combine(std::size_t & seed, std::size_t value);

} // namespace fincat
