#include <fincat/errors.hpp>
#include <fincat/limits.hpp>

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace fincat {

namespace {

constexpr Element absent = static_cast<Element>(-1);

void require_same_kind(const Object & a, const Object & b, const char * what)
{
    if (a.kind() != b.kind())
        throw BackendMismatch(std::string(what) + ": " + describe(a) + " and " + describe(b)
                              + " live in different backends");
}

} // namespace

Morphism Subobject::inclusion() const
{
    return Morphism::trusted(object, parent, elements);
}

bool Subobject::contains(Element x) const
{
    return std::binary_search(elements.begin(), elements.end(), x);
}

Element Subobject::position(Element x) const
{
    return static_cast<Element>(std::lower_bound(elements.begin(), elements.end(), x) - elements.begin());
}

bool operator==(const Subobject & a, const Subobject & b)
{
    return a.elements == b.elements && same_object(a.parent, b.parent);
}

Subobject make_subobject(const ObjectRef & parent, std::vector<Element> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != 0)
        throw InvalidStructure("a subobject must contain the basepoint");
    if (elements.back() >= parent->size())
        throw InvalidStructure("subobject element out of range");

    std::size_t k = elements.size();
    std::vector<Element> table;
    if (parent->has_operation()) {
        std::vector<Element> pos(parent->size(), absent);
        for (Element i = 0; i < k; ++i)
            pos[elements[i]] = i;
        table.resize(k * k);
        for (Element i = 0; i < k; ++i)
            for (Element j = 0; j < k; ++j) {
                Element p = pos[parent->op(elements[i], elements[j])];
                if (p == absent)
                    throw InvalidStructure("subset of " + describe(*parent) + " is not closed under the operation");
                table[i * k + j] = p;
            }
    }
    auto object = Object::trusted(parent->kind(), k, std::move(table));
    return Subobject{parent, std::move(elements), std::move(object)};
}

Subobject image_subobject(const Morphism & f)
{
    return make_subobject(f.cod(), image_of(f));
}

const std::vector<Subobject> & subobjects(const ObjectRef & object)
{
    static std::mutex mutex;
    static std::unordered_map<ObjectRef, std::unique_ptr<const std::vector<Subobject>>, ObjectRefHash, ObjectRefEqual>
        cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(object); it != cache.end())
            return *it->second;
    }

    std::set<std::vector<Element>> found;
    std::size_t n = object->size();
    if (! object->has_operation()) {
        if (n > 24)
            throw BoundExceeded("too many subsets of " + describe(*object) + " to enumerate");
        std::size_t free_points = n - 1;
        for (std::size_t mask = 0; mask < (std::size_t{1} << free_points); ++mask) {
            std::vector<Element> subset{0};
            for (std::size_t i = 0; i < free_points; ++i)
                if (mask & (std::size_t{1} << i))
                    subset.push_back(static_cast<Element>(i + 1));
            found.insert(std::move(subset));
        }
    }
    else {
        std::vector<std::vector<Element>> queue{{0}};
        found.insert({0});
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto current = queue[head];
            std::vector<bool> in(n, false);
            for (auto e : current)
                in[e] = true;
            for (Element g = 1; g < n; ++g) {
                if (in[g])
                    continue;
                auto seeds = current;
                seeds.push_back(g);
                auto next = generated_subset(*object, seeds);
                if (found.insert(next).second)
                    queue.push_back(std::move(next));
            }
        }
    }

    std::vector<std::vector<Element>> ordered(found.begin(), found.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto & a, const auto & b) { return a.size() < b.size(); });
    auto result = std::make_unique<std::vector<Subobject>>();
    for (auto & subset : ordered)
        result->push_back(make_subobject(object, std::move(subset)));

    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(object, std::move(result));
    return *it->second;
}

bool is_normal_subset(const Object & object, std::span<const Element> elements)
{
    if (! object.has_operation())
        return true;
    std::vector<bool> in(object.size(), false);
    for (auto e : elements)
        in[e] = true;
    for (Element g = 0; g < object.size(); ++g)
        for (auto h : elements)
            if (! in[object.op(object.op(g, h), object.inverse(g))])
                return false;
    return true;
}

std::vector<Subobject> normal_subobjects(const ObjectRef & object)
{
    std::vector<Subobject> result;
    for (const auto & s : subobjects(object))
        if (is_normal_subset(*object, s.elements))
            result.push_back(s);
    return result;
}

bool is_normal_mono(const Morphism & f)
{
    if (! is_mono(f))
        return false;
    auto image = image_of(f);
    return is_normal_subset(*f.cod(), image);
}

ProductResult product(const ObjectRef & a, const ObjectRef & b)
{
    require_same_kind(*a, *b, "product");
    std::size_t na = a->size(), nb = b->size(), n = na * nb;
    std::vector<Element> table;
    if (a->has_operation()) {
        table.resize(n * n);
        for (Element x1 = 0; x1 < na; ++x1)
            for (Element y1 = 0; y1 < nb; ++y1)
                for (Element x2 = 0; x2 < na; ++x2)
                    for (Element y2 = 0; y2 < nb; ++y2)
                        table[(x1 * nb + y1) * n + (x2 * nb + y2)]
                            = static_cast<Element>(a->op(x1, x2) * nb + b->op(y1, y2));
    }
    auto object = Object::trusted(a->kind(), n, std::move(table), describe(*a) + "x" + describe(*b));
    std::vector<Element> left(n), right(n);
    for (Element i = 0; i < n; ++i) {
        left[i] = static_cast<Element>(i / nb);
        right[i] = static_cast<Element>(i % nb);
    }
    return ProductResult{object, Morphism::trusted(object, a, std::move(left)),
                         Morphism::trusted(object, b, std::move(right)), nb};
}

Morphism ProductResult::pair(const Morphism & a, const Morphism & b) const
{
    if (! same_object(a.dom(), b.dom()))
        throw PreconditionViolation("pairing needs a common domain");
    std::vector<Element> map(a.dom()->size());
    for (Element t = 0; t < map.size(); ++t)
        map[t] = pair_index(a(t), b(t));
    return Morphism::trusted(a.dom(), object, std::move(map));
}

Morphism product_map(const Morphism & f, const Morphism & g)
{
    auto source = product(f.dom(), g.dom());
    auto target = product(f.cod(), g.cod());
    std::vector<Element> map(source.object->size());
    for (Element x = 0; x < f.dom()->size(); ++x)
        for (Element y = 0; y < g.dom()->size(); ++y)
            map[source.pair_index(x, y)] = target.pair_index(f(x), g(y));
    return Morphism::trusted(source.object, target.object, std::move(map));
}

PullbackResult pullback(const Morphism & f, const Morphism & g)
{
    require_same_kind(*f.dom(), *g.dom(), "pullback");
    if (! same_object(f.cod(), g.cod()))
        throw CospanMismatch("pullback of " + describe(f) + " and " + describe(g) + ": codomains differ");

    const auto & x_obj = f.dom();
    const auto & y_obj = g.dom();
    std::size_t nc = f.cod()->size();

    std::vector<std::vector<Element>> bucket(nc);
    std::vector<Element> slot(y_obj->size());
    for (Element y = 0; y < y_obj->size(); ++y) {
        slot[y] = static_cast<Element>(bucket[g(y)].size());
        bucket[g(y)].push_back(y);
    }

    std::vector<Element> start(x_obj->size());
    std::vector<std::pair<Element, Element>> pairs;
    for (Element x = 0; x < x_obj->size(); ++x) {
        start[x] = static_cast<Element>(pairs.size());
        for (auto y : bucket[f(x)])
            pairs.emplace_back(x, y);
    }
    auto index = [&](Element x, Element y) { return static_cast<Element>(start[x] + slot[y]); };

    std::size_t k = pairs.size();
    std::vector<Element> table;
    if (x_obj->has_operation()) {
        table.resize(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                table[i * k + j] = index(x_obj->op(pairs[i].first, pairs[j].first),
                                         y_obj->op(pairs[i].second, pairs[j].second));
    }
    auto apex = Object::trusted(x_obj->kind(), k, std::move(table));
    std::vector<Element> left(k), right(k);
    for (std::size_t i = 0; i < k; ++i) {
        left[i] = pairs[i].first;
        right[i] = pairs[i].second;
    }
    return PullbackResult{apex,
                          Morphism::trusted(apex, x_obj, std::move(left)),
                          Morphism::trusted(apex, y_obj, std::move(right)),
                          f,
                          g,
                          std::move(pairs)};
}

Morphism PullbackResult::mediate(const Morphism & a, const Morphism & b) const
{
    if (! same_object(a.dom(), b.dom()) || ! same_object(a.cod(), left_leg.dom())
        || ! same_object(b.cod(), right_leg.dom()))
        throw PreconditionViolation("cone does not match the pullback diagram");
    std::vector<Element> map(a.dom()->size());
    for (Element t = 0; t < map.size(); ++t) {
        auto key = std::pair{a(t), b(t)};
        auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
        if (it == pairs.end() || *it != key)
            throw PreconditionViolation("cone does not commute with the cospan");
        map[t] = static_cast<Element>(it - pairs.begin());
    }
    return Morphism::trusted(a.dom(), apex, std::move(map));
}

EqualizerResult equalizer(const Morphism & f, const Morphism & g)
{
    if (! same_object(f.dom(), g.dom()) || ! same_object(f.cod(), g.cod()))
        throw PreconditionViolation("equalizer needs a parallel pair");
    std::vector<Element> agree;
    for (Element x = 0; x < f.dom()->size(); ++x)
        if (f(x) == g(x))
            agree.push_back(x);
    auto sub = make_subobject(f.dom(), std::move(agree));
    return EqualizerResult{sub.object, sub.inclusion()};
}

Morphism EqualizerResult::mediate(const Morphism & h) const
{
    const auto & target = inclusion.map();
    std::vector<Element> map(h.dom()->size());
    for (Element t = 0; t < map.size(); ++t) {
        auto it = std::lower_bound(target.begin(), target.end(), h(t));
        if (it == target.end() || *it != h(t))
            throw PreconditionViolation("map does not equalize the pair");
        map[t] = static_cast<Element>(it - target.begin());
    }
    return Morphism::trusted(h.dom(), apex, std::move(map));
}

Morphism kernel(const Morphism & f)
{
    std::vector<Element> fiber;
    for (Element x = 0; x < f.dom()->size(); ++x)
        if (f(x) == 0)
            fiber.push_back(x);
    return make_subobject(f.dom(), std::move(fiber)).inclusion();
}

Factorization factorize(const Morphism & f)
{
    auto image = image_subobject(f);
    std::vector<Element> onto(f.dom()->size());
    for (Element x = 0; x < onto.size(); ++x)
        onto[x] = image.position(f(x));
    return Factorization{Morphism::trusted(f.dom(), image.object, std::move(onto)), image.inclusion(), image.object};
}

} // namespace fincat
