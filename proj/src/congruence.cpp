#include <fincat/category.hpp>
#include <fincat/congruence.hpp>
#include <fincat/errors.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

namespace fincat {

namespace {

class UnionFind
{
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }

    Element find(Element x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(Element a, Element b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<Element> parent_;
};

std::vector<std::pair<Element, Element>> spanning_pairs(const Congruence & c)
{
    std::vector<std::pair<Element, Element>> pairs;
    std::vector<Element> first(c.block_count(), static_cast<Element>(-1));
    for (Element x = 0; x < c.on()->size(); ++x) {
        auto b = c.block(x);
        if (first[b] == static_cast<Element>(-1))
            first[b] = x;
        else
            pairs.emplace_back(first[b], x);
    }
    return pairs;
}

} // namespace

Congruence::Congruence(ObjectRef on, std::vector<Element> block_of) : on_(std::move(on)), block_of_(std::move(block_of))
{
    if (block_of_.size() != on_->size())
        throw InvalidStructure("block labelling does not cover the carrier");
    std::map<Element, Element> renumber;
    for (auto & label : block_of_) {
        auto [it, inserted] = renumber.emplace(label, static_cast<Element>(renumber.size()));
        label = it->second;
    }
    block_count_ = renumber.size();
}

std::vector<std::vector<Element>> Congruence::blocks() const
{
    std::vector<std::vector<Element>> out(block_count_);
    for (Element x = 0; x < block_of_.size(); ++x)
        out[block_of_[x]].push_back(x);
    return out;
}

std::vector<Element> Congruence::zero_block() const
{
    std::vector<Element> out;
    for (Element x = 0; x < block_of_.size(); ++x)
        if (block_of_[x] == 0)
            out.push_back(x);
    return out;
}

Subobject Congruence::as_relation() const
{
    auto square = product(on_, on_);
    std::vector<Element> related;
    for (Element a = 0; a < on_->size(); ++a)
        for (Element b = 0; b < on_->size(); ++b)
            if (block_of_[a] == block_of_[b])
                related.push_back(square.pair_index(a, b));
    return make_subobject(square.object, std::move(related));
}

bool operator==(const Congruence & a, const Congruence & b)
{
    return a.block_of_ == b.block_of_ && same_object(a.on_, b.on_);
}

Congruence discrete_congruence(const ObjectRef & object)
{
    std::vector<Element> labels(object->size());
    std::iota(labels.begin(), labels.end(), Element{0});
    return Congruence(object, std::move(labels));
}

Congruence total_congruence(const ObjectRef & object)
{
    return Congruence(object, std::vector<Element>(object->size(), 0));
}

Congruence generated_congruence(const ObjectRef & object, std::span<const std::pair<Element, Element>> pairs)
{
    const auto & a = *object;
    UnionFind uf(a.size());
    std::vector<std::pair<Element, Element>> work(pairs.begin(), pairs.end());
    while (! work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (! uf.unite(x, y))
            continue;
        if (! a.has_operation())
            continue;
        work.emplace_back(a.inverse(x), a.inverse(y));
        for (Element z = 0; z < a.size(); ++z) {
            work.emplace_back(a.op(x, z), a.op(y, z));
            work.emplace_back(a.op(z, x), a.op(z, y));
        }
    }
    std::vector<Element> labels(a.size());
    for (Element x = 0; x < a.size(); ++x)
        labels[x] = uf.find(x);
    return Congruence(object, std::move(labels));
}

const std::vector<Congruence> & congruences(const ObjectRef & object)
{
    static std::mutex mutex;
    static std::unordered_map<ObjectRef, std::unique_ptr<const std::vector<Congruence>>, ObjectRefHash, ObjectRefEqual>
        cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(object); it != cache.end())
            return *it->second;
    }

    std::size_t n = object->size();
    if (! object->has_operation() && n > 10)
        throw BoundExceeded("too many partitions of " + describe(*object) + " to enumerate");

    auto result = std::make_unique<std::vector<Congruence>>();
    if (! object->has_operation()) {
        // every partition is a congruence; restricted growth strings list each once
        std::vector<Element> rgs(n, 0);
        std::vector<Element> high(n, 0);
        while (true) {
            result->emplace_back(object, rgs);
            bool advanced = false;
            for (std::size_t i = n; i-- > 1;) {
                if (rgs[i] <= high[i - 1]) {
                    ++rgs[i];
                    high[i] = std::max(high[i - 1], rgs[i]);
                    for (std::size_t j = i + 1; j < n; ++j) {
                        rgs[j] = 0;
                        high[j] = high[i];
                    }
                    advanced = true;
                    break;
                }
            }
            if (! advanced)
                break;
        }
        std::stable_sort(result->begin(), result->end(),
                         [](const Congruence & a, const Congruence & b) { return a.block_count() < b.block_count(); });
        std::lock_guard lock(mutex);
        auto [it, inserted] = cache.emplace(object, std::move(result));
        return *it->second;
    }

    std::vector<Congruence> principal;
    std::set<std::vector<Element>> principal_seen;
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y) {
            std::pair<Element, Element> seed{x, y};
            auto c = generated_congruence(object, std::span(&seed, 1));
            std::vector<Element> key(c.block_of().begin(), c.block_of().end());
            if (principal_seen.insert(std::move(key)).second)
                principal.push_back(std::move(c));
        }

    std::map<std::vector<Element>, Congruence> found;
    auto delta = discrete_congruence(object);
    std::vector<Congruence> queue{delta};
    found.emplace(std::vector<Element>(delta.block_of().begin(), delta.block_of().end()), delta);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto base = spanning_pairs(queue[head]);
        for (const auto & p : principal) {
            auto pairs = base;
            auto extra = spanning_pairs(p);
            pairs.insert(pairs.end(), extra.begin(), extra.end());
            auto joined = generated_congruence(object, pairs);
            std::vector<Element> key(joined.block_of().begin(), joined.block_of().end());
            if (found.emplace(key, joined).second)
                queue.push_back(joined);
        }
    }

    for (auto & [key, c] : found)
        result->push_back(c);
    std::stable_sort(result->begin(), result->end(),
                     [](const Congruence & a, const Congruence & b) { return a.block_count() < b.block_count(); });

    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(object, std::move(result));
    return *it->second;
}

Congruence kernel_pair(const Morphism & f)
{
    return Congruence(f.dom(), std::vector<Element>(f.map().begin(), f.map().end()));
}

bool is_compatible(const Congruence & c)
{
    const auto & a = *c.on();
    if (! a.has_operation())
        return true;
    for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y) {
            if (c.block(x) != c.block(y))
                continue;
            if (c.block(a.inverse(x)) != c.block(a.inverse(y)))
                return false;
            for (Element z = 0; z < a.size(); ++z)
                if (c.block(a.op(x, z)) != c.block(a.op(y, z)) || c.block(a.op(z, x)) != c.block(a.op(z, y)))
                    return false;
        }
    return true;
}

Quotient quotient(const Congruence & c)
{
    const auto & a = *c.on();
    std::size_t k = c.block_count();
    std::vector<Element> rep(k, static_cast<Element>(-1));
    for (Element x = 0; x < a.size(); ++x)
        if (rep[c.block(x)] == static_cast<Element>(-1))
            rep[c.block(x)] = x;
    std::vector<Element> table;
    if (a.has_operation()) {
        table.resize(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                table[i * k + j] = c.block(a.op(rep[i], rep[j]));
    }
    auto object = Object::trusted(a.kind(), k, std::move(table));
    return Quotient{object, Morphism::trusted(c.on(), object, std::vector<Element>(c.block_of().begin(),
                                                                                     c.block_of().end()))};
}

Morphism cokernel(const Morphism & k)
{
    const auto & a = *k.cod();
    auto image = image_of(k);
    std::vector<Element> labels(a.size());
    if (! a.has_operation()) {
        std::vector<bool> in(a.size(), false);
        for (auto e : image)
            in[e] = true;
        for (Element x = 0; x < a.size(); ++x)
            labels[x] = in[x] ? 0 : x;
        return quotient(Congruence(k.cod(), std::move(labels))).map;
    }
    std::vector<Element> conjugates;
    for (Element g = 0; g < a.size(); ++g)
        for (auto h : image)
            conjugates.push_back(a.op(a.op(g, h), a.inverse(g)));
    auto closure = generated_subset(a, conjugates);
    for (Element x = 0; x < a.size(); ++x) {
        Element smallest = x;
        for (auto n : closure)
            smallest = std::min(smallest, a.op(x, n));
        labels[x] = smallest;
    }
    return quotient(Congruence(k.cod(), std::move(labels))).map;
}

bool is_normal_epi(const Morphism & f)
{
    if (! is_epi(f))
        return false;
    auto q = cokernel(kernel(f));
    return kernel_pair(f) == kernel_pair(q);
}

NormalityReport check_normal_backend(std::span<const ObjectRef> objects)
{
    NormalityReport report;
    if (objects.empty())
        return report;
    auto kind = objects.front()->kind();
    auto zero = kind == Kind::PointedSet ? Object::pointed_set(1) : Object::trusted(kind, 1, {0});

    for (const auto & a : objects) {
        if (hom_set(zero, a).size() != 1 || hom_set(a, zero).size() != 1) {
            report.pointed = false;
            if (! report.non_pointed_witness)
                report.non_pointed_witness = Morphism::zero(zero, a);
        }
    }

    for (const auto & b : objects) {
        std::vector<Morphism> into_b;
        for (const auto & x : objects)
            if (x->size() <= default_probe_bound)
                for (const auto & f : hom_set(x, b))
                    into_b.push_back(f);
        for (const auto & f : into_b) {
            auto split = factorize(f);
            for (const auto & g : into_b) {
                ++report.morphisms_checked;
                auto whole = pullback(f, g);
                auto image_part = pullback(split.mono, g);
                auto comparison
                    = image_part.mediate(compose(split.regular_epi, whole.proj_left), whole.proj_right);
                if (! is_epi(comparison)) {
                    report.regular_images_stable = false;
                    if (! report.unstable_witness)
                        report.unstable_witness = std::pair{f, g};
                }
            }
        }
    }

    for (const auto & a : objects)
        for (const auto & b : objects)
            for (const auto & f : hom_set(a, b))
                if (is_epi(f) && ! is_normal_epi(f)) {
                    report.regular_epis_normal = false;
                    if (! report.non_normal_witness)
                        report.non_normal_witness = f;
                }
    return report;
}

} // namespace fincat
