#pragma once

#include <fincat/io.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fincat {

/// Every mono between the subgroup objects of each registry group of order
/// at most `max_order`, decided twice: exactly by subobject-essentiality and
/// by the bounded pullback refuter over the subgroup universe.
struct StableSweepReport
{
    std::size_t groups = 0;
    std::size_t monos = 0;
    std::size_t subobject_essential = 0;
    std::size_t refuted = 0;
    /// First mono on which the two methods disagree.
    std::optional<Morphism> contradiction;
    std::string contradiction_group;

    bool passed() const { return ! contradiction.has_value(); }
};

StableSweepReport stable_essential_sweep(std::size_t max_order = 24);

/// The four characterizations of essential monos over the same set of monos.
struct AgreementSweepReport
{
    std::size_t groups = 0;
    std::size_t monos = 0;
    std::size_t essential = 0;
    std::optional<Morphism> disagreement;
    std::string disagreement_group;

    bool passed() const { return ! disagreement.has_value(); }
};

AgreementSweepReport essential_conditions_sweep(std::size_t max_order = 24);

struct Reproduction
{
    std::string id;
    std::string title;
    bool passed = false;
    /// Human readable summary, one finding per line.
    std::vector<std::string> lines;
    nlohmann::json details;
    /// Counterexample to the expected outcome; null on pass.
    nlohmann::json witness;
};

/// remark-6.8, remark-6.7-search, thm-6.9-sweep, thm-5.2-pullbacks, focal-suite, cor-7.3-uniform
const std::vector<std::string> & reproduction_ids();

/// Runs a scripted check from the built-in registry. Throws InputError for an unknown id.
Reproduction reproduce(std::string_view id);

} // namespace fincat
