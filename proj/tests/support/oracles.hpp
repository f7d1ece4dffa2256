#pragma once

// Brute-force reference computations for the test suite. Everything here
// works from raw Cayley tables and never calls the library's algorithms.

#include <fincat/object.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using fincat::Element;
using fincat::Object;

inline bool respects(const Object & a, const Object & b, const std::vector<Element> & f, const std::vector<Element> & dom)
{
    if (! a.has_operation())
        return true;
    for (auto x : dom)
        for (auto y : dom)
            if (f[a.op(x, y)] != b.op(f[x], f[y]))
                return false;
    return true;
}

/// Calls visit(map) for every basepoint-preserving map from `dom` (a subset
/// of a containing 0, closed under the operation) into b that preserves the
/// operation. Maps are full-length vectors; entries outside `dom` are 0.
inline void for_each_hom(const Object & a, const Object & b, const std::vector<Element> & dom,
                         const std::function<void(const std::vector<Element> &)> & visit)
{
    std::vector<Element> f(a.size(), 0);
    std::vector<Element> free;
    for (auto x : dom)
        if (x != 0)
            free.push_back(x);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == free.size()) {
            if (respects(a, b, f, dom))
                visit(f);
            return;
        }
        for (Element v = 0; v < b.size(); ++v) {
            f[free[i]] = v;
            go(i + 1);
        }
        f[free[i]] = 0;
    };
    go(0);
}

inline std::vector<Element> all_elements(const Object & a)
{
    std::vector<Element> out(a.size());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

/// |hom(A, B)| by trying every basepoint-preserving function.
inline std::size_t hom_count(const Object & a, const Object & b)
{
    std::size_t n = 0;
    for_each_hom(a, b, all_elements(a), [&](const std::vector<Element> &) { ++n; });
    return n;
}

inline std::size_t gcd(std::size_t a, std::size_t b)
{
    return std::gcd(a, b);
}

/// Every subset containing 0 and closed under the operation (for groups
/// finiteness makes this the subgroups), as sorted element lists.
inline std::vector<std::vector<Element>> closed_subsets(const Object & a)
{
    std::vector<std::vector<Element>> out;
    std::size_t n = a.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
        std::vector<Element> s{0};
        for (std::size_t i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1)
                s.push_back(static_cast<Element>(i));
        bool closed = true;
        if (a.has_operation())
            for (auto x : s)
                for (auto y : s)
                    closed = closed && std::binary_search(s.begin(), s.end(), a.op(x, y));
        if (closed)
            out.push_back(s);
    }
    return out;
}

inline bool is_normal(const Object & g, const std::vector<Element> & h)
{
    for (Element x = 0; x < g.size(); ++x)
        for (auto y : h)
            if (! std::binary_search(h.begin(), h.end(), g.op(g.op(x, y), g.inverse(x))))
                return false;
    return true;
}

inline std::vector<std::vector<Element>> normal_subgroups(const Object & g)
{
    std::vector<std::vector<Element>> out;
    for (auto & h : closed_subsets(g))
        if (is_normal(g, h))
            out.push_back(h);
    return out;
}

inline std::vector<Element> intersect(const std::vector<Element> & a, const std::vector<Element> & b)
{
    std::vector<Element> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Subobject-essential by definition: every subgroup meeting `m` trivially is trivial.
inline bool subobject_essential(const std::vector<std::vector<Element>> & subgroups, const std::vector<Element> & image)
{
    for (auto & n : subgroups)
        if (n.size() > 1 && intersect(n, image).size() == 1)
            return false;
    return true;
}

inline bool subobject_essential(const Object & a, const std::vector<Element> & image)
{
    return subobject_essential(closed_subsets(a), image);
}

/// Hom-set of the category of fractions by zigzag closure: spans (X, f) with
/// X an admissible subobject of A and f: X -> B, glued whenever one is the
/// restriction of the other to a smaller admissible subobject.
inline std::size_t zigzag_class_count(const Object & a, const Object & b,
                                      const std::function<bool(const std::vector<Element> &)> & admissible)
{
    std::vector<std::vector<Element>> subs;
    for (auto & s : closed_subsets(a))
        if (admissible(s))
            subs.push_back(s);

    std::map<std::pair<std::size_t, std::vector<Element>>, std::size_t> id;
    std::vector<std::pair<std::size_t, std::vector<Element>>> spans;
    for (std::size_t i = 0; i < subs.size(); ++i)
        for_each_hom(a, b, subs[i], [&](const std::vector<Element> & f) {
            id.emplace(std::pair{i, f}, spans.size());
            spans.emplace_back(i, f);
        });

    std::vector<std::size_t> parent(spans.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t k = 0; k < spans.size(); ++k) {
        const auto & [i, f] = spans[k];
        for (std::size_t j = 0; j < subs.size(); ++j) {
            if (j == i || ! std::includes(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end()))
                continue;
            std::vector<Element> g(a.size(), 0);
            for (auto x : subs[j])
                g[x] = f[x];
            parent[find(k)] = find(id.at({j, g}));
        }
    }
    std::size_t roots = 0;
    for (std::size_t k = 0; k < spans.size(); ++k)
        roots += find(k) == k;
    return roots;
}

} // namespace oracle
