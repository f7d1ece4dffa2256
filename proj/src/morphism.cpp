#include <fincat/errors.hpp>
#include <fincat/morphism.hpp>

#include <algorithm>
#include <sstream>

namespace fincat {

bool is_structure_preserving(const Object & dom, const Object & cod, std::span<const Element> map)
{
    if (map.size() != dom.size() || map[0] != 0)
        return false;
    for (auto v : map)
        if (v >= cod.size())
            return false;
    if (! dom.has_operation())
        return true;
    for (Element a = 0; a < dom.size(); ++a)
        for (Element b = 0; b < dom.size(); ++b)
            if (map[dom.op(a, b)] != cod.op(map[a], map[b]))
                return false;
    return true;
}

Morphism::Morphism(Unchecked, ObjectRef dom, ObjectRef cod, std::vector<Element> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map))
{
}

Morphism::Morphism(ObjectRef dom, ObjectRef cod, std::vector<Element> map)
    : Morphism(Unchecked{}, std::move(dom), std::move(cod), std::move(map))
{
    if (dom_->kind() != cod_->kind())
        throw BackendMismatch(std::string("morphism from ") + std::string(kind_name(dom_->kind())) + " to "
                              + std::string(kind_name(cod_->kind())));
    if (map_.size() != dom_->size())
        throw InvalidStructure("map table has " + std::to_string(map_.size()) + " entries for a domain of size "
                               + std::to_string(dom_->size()));
    if (map_[0] != 0)
        throw InvalidStructure("map does not preserve the basepoint");
    if (! is_structure_preserving(*dom_, *cod_, map_))
        throw InvalidStructure("map is not a homomorphism " + describe(*dom_) + " -> " + describe(*cod_));
}

Morphism Morphism::trusted(ObjectRef dom, ObjectRef cod, std::vector<Element> map)
{
    return Morphism(Unchecked{}, std::move(dom), std::move(cod), std::move(map));
}

Morphism Morphism::identity(const ObjectRef & object)
{
    std::vector<Element> map(object->size());
    for (Element i = 0; i < map.size(); ++i)
        map[i] = i;
    return trusted(object, object, std::move(map));
}

Morphism Morphism::zero(const ObjectRef & dom, const ObjectRef & cod)
{
    if (dom->kind() != cod->kind())
        throw BackendMismatch("zero morphism across backends");
    return trusted(dom, cod, std::vector<Element>(dom->size(), 0));
}

bool Morphism::is_identity() const
{
    if (! same_object(dom_, cod_))
        return false;
    for (Element i = 0; i < map_.size(); ++i)
        if (map_[i] != i)
            return false;
    return true;
}

bool Morphism::is_zero() const
{
    return std::all_of(map_.begin(), map_.end(), [](Element v) { return v == 0; });
}

bool operator==(const Morphism & a, const Morphism & b)
{
    return a.map_ == b.map_ && same_object(a.dom_, b.dom_) && same_object(a.cod_, b.cod_);
}

std::strong_ordering operator<=>(const Morphism & a, const Morphism & b)
{
    if (auto c = a.dom_->size() <=> b.dom_->size(); c != 0)
        return c;
    if (auto c = a.cod_->size() <=> b.cod_->size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.map_.begin(), a.map_.end(), b.map_.begin(), b.map_.end());
}

Morphism compose(const Morphism & g, const Morphism & f)
{
    if (! same_object(f.cod(), g.dom()))
        throw CompositionMismatch("cannot compose " + describe(g) + " after " + describe(f));
    std::vector<Element> map(f.dom()->size());
    for (Element x = 0; x < map.size(); ++x)
        map[x] = g(f(x));
    return Morphism::trusted(f.dom(), g.cod(), std::move(map));
}

bool is_mono(const Morphism & f)
{
    std::vector<bool> hit(f.cod()->size(), false);
    for (auto v : f.map()) {
        if (hit[v])
            return false;
        hit[v] = true;
    }
    return true;
}

bool is_epi(const Morphism & f)
{
    std::vector<bool> hit(f.cod()->size(), false);
    std::size_t count = 0;
    for (auto v : f.map())
        if (! hit[v]) {
            hit[v] = true;
            ++count;
        }
    return count == f.cod()->size();
}

bool is_iso(const Morphism & f)
{
    return f.dom()->size() == f.cod()->size() && is_mono(f);
}

std::vector<Element> image_of(const Morphism & f)
{
    std::vector<bool> hit(f.cod()->size(), false);
    for (auto v : f.map())
        hit[v] = true;
    std::vector<Element> image;
    for (Element y = 0; y < hit.size(); ++y)
        if (hit[y])
            image.push_back(y);
    return image;
}

std::string describe(const Morphism & f)
{
    std::ostringstream out;
    out << describe(*f.dom()) << "->" << describe(*f.cod()) << "[";
    for (std::size_t i = 0; i < f.map().size(); ++i)
        out << (i ? "," : "") << f.map()[i];
    out << "]";
    return out.str();
}

std::size_t MorphismHash::operator()(const Morphism & f) const
{
    std::size_t seed = f.dom()->hash();
    hash_combine(seed, f.cod()->hash());
    for (auto v : f.map())
        hash_combine(seed, v);
    return seed;
}

} // namespace fincat
