#include <fincat/category.hpp>
#include <fincat/errors.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace fincat {

namespace {

constexpr Element unset = static_cast<Element>(-1);

std::vector<Morphism> pointed_maps(const ObjectRef & a, const ObjectRef & b, const HomOptions & options)
{
    std::size_t free_points = a->size() - 1;
    double count = 1;
    for (std::size_t i = 0; i < free_points; ++i)
        count *= static_cast<double>(b->size());
    if (count > static_cast<double>(options.candidate_limit))
        throw BoundExceeded("hom(" + describe(*a) + "," + describe(*b) + ") has too many maps to enumerate");

    std::vector<Morphism> result;
    std::vector<Element> map(a->size(), 0);
    while (true) {
        result.push_back(Morphism::trusted(a, b, map));
        std::size_t i = a->size();
        // odometer over positions 1..n-1, last position fastest -> lexicographic order
        while (i > 1) {
            --i;
            if (++map[i] < b->size())
                break;
            map[i] = 0;
            if (i == 1)
                return result;
        }
        if (a->size() == 1)
            return result;
    }
}

// Extends generator images to a homomorphism by walking the right Cayley graph.
bool extend(const Object & a, const Object & b, std::span<const Element> gens, std::span<const Element> images,
            std::vector<Element> & map, std::vector<Element> & queue)
{
    std::fill(map.begin(), map.end(), unset);
    map[0] = 0;
    queue.clear();
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Element x = queue[head];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Element y = a.op(x, gens[i]);
            Element img = b.op(map[x], images[i]);
            if (map[y] == unset) {
                map[y] = img;
                queue.push_back(y);
            }
            else if (map[y] != img)
                return false;
        }
    }
    return queue.size() == a.size();
}

std::vector<Morphism> group_maps(const ObjectRef & a, const ObjectRef & b, const HomOptions & options)
{
    auto gens = a->generators();
    if (gens.empty())
        return {Morphism::zero(a, b)};

    std::vector<std::vector<Element>> candidates(gens.size());
    double total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto order = a->order_of(gens[i]);
        for (Element y = 0; y < b->size(); ++y)
            if (order % b->order_of(y) == 0)
                candidates[i].push_back(y);
        total *= static_cast<double>(candidates[i].size());
    }
    if (total > static_cast<double>(options.candidate_limit))
        throw BoundExceeded("hom(" + describe(*a) + "," + describe(*b) + ") search space too large");

    unsigned threads = std::max(1u, options.threads);
    std::vector<std::vector<Morphism>> partial(threads);

    auto work = [&](unsigned worker) {
        std::vector<Element> map(a->size());
        std::vector<Element> queue;
        std::vector<std::size_t> index(gens.size(), 0);
        std::vector<Element> images(gens.size());
        while (true) {
            if (index[0] % threads == worker) {
                for (std::size_t i = 0; i < gens.size(); ++i)
                    images[i] = candidates[i][index[i]];
                if (extend(*a, *b, gens, images, map, queue))
                    partial[worker].push_back(Morphism::trusted(a, b, map));
            }
            std::size_t i = gens.size();
            bool done = true;
            while (i > 0) {
                --i;
                if (++index[i] < candidates[i].size()) {
                    done = false;
                    break;
                }
                index[i] = 0;
            }
            if (done)
                return;
        }
    };

    if (threads == 1)
        work(0);
    else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
    }

    std::vector<Morphism> result;
    for (auto & p : partial)
        for (auto & m : p)
            result.push_back(std::move(m));
    std::sort(result.begin(), result.end());
    return result;
}

struct PairHash
{
    std::size_t operator()(const std::pair<ObjectRef, ObjectRef> & p) const
    {
        std::size_t seed = p.first->hash();
        hash_combine(seed, p.second->hash());
        return seed;
    }
};

struct PairEqual
{
    bool operator()(const std::pair<ObjectRef, ObjectRef> & x, const std::pair<ObjectRef, ObjectRef> & y) const
    {
        return same_object(x.first, y.first) && same_object(x.second, y.second);
    }
};

} // namespace

std::vector<Morphism> enumerate_hom(const ObjectRef & a, const ObjectRef & b, const HomOptions & options)
{
    if (a->kind() != b->kind())
        throw BackendMismatch("hom(" + describe(*a) + "," + describe(*b) + ") mixes " + std::string(kind_name(a->kind()))
                              + " and " + std::string(kind_name(b->kind())));
    if (a->kind() == Kind::PointedSet)
        return pointed_maps(a, b, options);
    return group_maps(a, b, options);
}

const std::vector<Morphism> & hom_set(const ObjectRef & a, const ObjectRef & b)
{
    static std::mutex mutex;
    static std::unordered_map<std::pair<ObjectRef, ObjectRef>, std::unique_ptr<const std::vector<Morphism>>, PairHash,
                              PairEqual>
        cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({a, b}); it != cache.end())
            return *it->second;
    }
    auto computed = std::make_unique<const std::vector<Morphism>>(enumerate_hom(a, b));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(std::pair{a, b}, std::move(computed));
    return *it->second;
}

bool is_mono_by_cancellation(const Morphism & f, std::span<const ObjectRef> probes)
{
    for (const auto & p : probes) {
        if (p->kind() != f.dom()->kind())
            continue;
        const auto & maps = hom_set(p, f.dom());
        std::map<std::vector<Element>, std::size_t> seen;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            auto composite = compose(f, maps[i]);
            std::vector<Element> key(composite.map().begin(), composite.map().end());
            if (! seen.emplace(std::move(key), i).second)
                return false;
        }
    }
    return true;
}

bool is_epi_by_cancellation(const Morphism & f, std::span<const ObjectRef> probes)
{
    for (const auto & p : probes) {
        if (p->kind() != f.cod()->kind())
            continue;
        const auto & maps = hom_set(f.cod(), p);
        std::map<std::vector<Element>, std::size_t> seen;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            auto composite = compose(maps[i], f);
            std::vector<Element> key(composite.map().begin(), composite.map().end());
            if (! seen.emplace(std::move(key), i).second)
                return false;
        }
    }
    return true;
}

Universe::Universe(std::string name, Kind kind) : name_(std::move(name)), kind_(kind)
{
}

ObjectRef Universe::add(const ObjectRef & object, std::string label)
{
    if (object->kind() != kind_)
        throw BackendMismatch("universe " + name_ + " holds " + std::string(kind_name(kind_)) + " objects, got "
                              + std::string(kind_name(object->kind())));
    if (auto i = index_of(object))
        return objects_[*i];
    objects_.push_back(object);
    labels_.push_back(label.empty() ? describe(*object) : std::move(label));
    return object;
}

std::optional<std::size_t> Universe::index_of(const ObjectRef & object) const
{
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (same_object(objects_[i], object))
            return i;
    return std::nullopt;
}

ObjectRef Universe::find(std::string_view label) const
{
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (labels_[i] == label)
            return objects_[i];
    return nullptr;
}

std::string Universe::label(const ObjectRef & object) const
{
    if (auto i = index_of(object))
        return labels_[*i];
    return describe(*object);
}

std::string Universe::label(const Morphism & f) const
{
    std::string out = label(f.dom()) + "->" + label(f.cod()) + "[";
    for (std::size_t i = 0; i < f.map().size(); ++i)
        out += (i ? "," : "") + std::to_string(f.map()[i]);
    return out + "]";
}

std::vector<Morphism> Universe::arrows() const
{
    std::vector<Morphism> out;
    for (const auto & a : objects_)
        for (const auto & b : objects_)
            for (const auto & f : hom_set(a, b))
                out.push_back(f);
    return out;
}

std::vector<Morphism> Universe::arrows_into(const ObjectRef & cod) const
{
    std::vector<Morphism> out;
    for (const auto & a : objects_)
        for (const auto & f : hom_set(a, cod))
            out.push_back(f);
    return out;
}

Backend::Backend(Kind kind, std::optional<std::size_t> size_bound, std::size_t probe_bound)
    : kind_(kind),
      size_bound_(size_bound.value_or(default_size_bound(kind))),
      probe_bound_(probe_bound),
      registry_("registry", kind)
{
    if (size_bound_ == 0 || probe_bound_ == 0)
        throw PreconditionViolation("bounds must be positive");
    zero_ = kind == Kind::PointedSet ? Object::pointed_set(1, "0") : Object::trusted(kind, 1, {0}, "0");
    registry_.add(zero_, "0");
}

const ObjectRef & Backend::admit(const ObjectRef & object) const
{
    if (object->kind() != kind_)
        throw BackendMismatch(describe(*object) + " is a " + std::string(kind_name(object->kind()))
                              + ", backend is " + std::string(kind_name(kind_)));
    if (object->size() > size_bound_)
        throw BoundExceeded(describe(*object) + " has " + std::to_string(object->size())
                            + " elements, above the size bound " + std::to_string(size_bound_));
    return object;
}

ObjectRef Backend::register_object(const ObjectRef & object, std::string label)
{
    admit(object);
    return registry_.add(object, std::move(label));
}

} // namespace fincat
