#pragma once

#include <fincat/builtin.hpp>
#include <fincat/monoclasses.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

enum class LawStatus
{
    Pass,
    Fail,
    /// The law is an implication whose hypothesis failed on the universe.
    Vacuous,
};

std::string_view status_name(LawStatus status);

struct LawResult
{
    std::string law_id;
    std::string statement;
    std::string universe;
    LawStatus status = LawStatus::Pass;
    std::size_t instances = 0;
    /// Named morphisms making up the counterexample (or the failed hypothesis).
    std::vector<std::pair<std::string, Morphism>> witness;
};

struct LawSuiteReport
{
    std::string universe;
    std::vector<LawResult> results;

    bool passed() const;
    const LawResult * find(std::string_view law_id) const;
};

struct LawSuiteOptions
{
    MonoClassSpec s = MonoClassSpec::all_monos();
    /// Also check that S itself is pullback stable, contains the isos, is
    /// composition closed and has strong left cancellation.
    bool s_axioms = true;
};

/// The axioms required of S: pullback stability, isomorphisms, composition
/// closure and strong left cancellation, over the universe.
std::vector<LawResult> check_s_axioms(const Universe & universe, const MonoClassSpec & s);

/// Instantiates every law over all morphisms, composable pairs and cospans
/// of the universe. Classes: S, E = Mono_E(C, S), St = St(E) relative to the
/// universe, SE = Mono_SE(C). The stabilization laws take M = E.
LawSuiteReport closure_law_suite(const Universe & universe, const LawSuiteOptions & options = {});

/// A composable pair m': M' -> M, m: M -> A with m and m ∘ m' essential but m' not.
struct WeakLeftWitness
{
    Morphism m_prime;
    Morphism m;
    std::string codomain_label;
};

struct WeakLeftSearchOptions
{
    std::size_t max_order = 60;
    /// Only consider codomains with exactly two congruences.
    bool simple_codomain = true;
};

/// Searches subobject chains M' <= M <= A over the registry, smallest A first.
std::optional<WeakLeftWitness> find_weak_left_cancellation_failure(const std::vector<NamedObject> & registry,
                                                                   const WeakLeftSearchOptions & options = {});

/// Checks a candidate pair with the exact essentiality oracle.
bool is_weak_left_cancellation_failure(const Morphism & m_prime, const Morphism & m);

} // namespace fincat
