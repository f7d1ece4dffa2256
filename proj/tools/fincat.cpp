#include <fincat/errors.hpp>
#include <fincat/io.hpp>
#include <fincat/reproduce.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fincat;
using nlohmann::json;

namespace {

enum Exit
{
    pass = 0,
    property_failure = 1,
    input_error = 2,
    bound_exceeded = 3,
};

struct RunConfig
{
    std::string command;
    std::string backend;
    std::string universe;
    std::vector<std::string> inputs;
    std::optional<std::size_t> size_bound;
    std::size_t probe_bound = default_probe_bound;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    std::string item;
    std::string mono_class = "all";
};

struct Workspace
{
    Universe universe;
    Universe probes;
    std::vector<NamedMorphism> morphisms;
};

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("cannot read " + path, std::nullopt, {});
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Workspace load(const RunConfig & config)
{
    std::optional<Kind> kind;
    if (! config.backend.empty())
        kind = parse_backend(config.backend);
    if (! config.universe.empty()) {
        Kind named = universe_kind(config.universe);
        if (kind && *kind != named)
            throw InputError("universe " + config.universe + " belongs to the " + std::string(backend_name(named))
                                 + " backend, not " + config.backend,
                             std::nullopt, {});
        kind = named;
    }
    Backend backend(kind.value_or(Kind::Group), config.size_bound, config.probe_bound);

    Universe universe = config.universe.empty() ? Universe("input", backend.kind()) : named_universe(config.universe);
    if (config.universe.empty())
        universe.add(backend.zero(), "0");
    for (const auto & o : universe.objects())
        backend.admit(o);

    std::vector<NamedMorphism> morphisms;
    for (const auto & path : config.inputs) {
        auto text = read_file(path);
        InputDocument doc;
        try {
            doc = parse_input(text, backend, &universe);
        } catch (const InputError & e) {
            throw InputError(path + ": " + e.what(), e.position(), e.path());
        }
        for (const auto & o : doc.objects)
            universe.add(o.object, o.label);
        for (auto & m : doc.morphisms)
            morphisms.push_back(std::move(m));
    }

    Universe probes(universe.name(), universe.kind());
    for (const auto & o : universe.objects())
        if (o->size() <= config.probe_bound || o->is_zero())
            probes.add(o, universe.label(o));
    return Workspace{std::move(universe), std::move(probes), std::move(morphisms)};
}

struct Outcome
{
    int code = pass;
    json report;
    std::string text;
    json witness;
};

void emit(const RunConfig & config, const Outcome & outcome)
{
    json report = outcome.report;
    if (outcome.code == property_failure)
        report["witness"] = outcome.witness;
    std::string body = config.format == "json" ? report.dump(2) + "\n" : outcome.text;
    if (config.out.empty()) {
        std::cout << body;
        if (outcome.code == property_failure && config.format != "json")
            std::cout << outcome.witness.dump(2) << "\n";
        return;
    }
    std::ofstream out(config.out, std::ios::binary);
    if (! out)
        throw InputError("cannot write " + config.out, std::nullopt, {});
    out << body;
    if (outcome.code == property_failure)
        std::cout << outcome.witness.dump(2) << "\n";
}

json header(const RunConfig & config, const Universe & universe)
{
    return {{"command", config.command},
            {"universe", universe_descriptor(universe)},
            {"backend", backend_name(universe.kind())},
            {"seed", config.seed}};
}

std::string flag(bool b)
{
    return b ? "1" : "0";
}

Outcome cmd_classify(const RunConfig & config)
{
    auto ws = load(config);
    std::vector<NamedMorphism> targets = ws.morphisms;
    if (targets.empty())
        for (const auto & m : ws.universe.arrows())
            if (is_mono(m))
                targets.push_back(NamedMorphism{ws.universe.label(m), m});

    auto spec = MonoClassSpec::all_monos();
    Outcome outcome;
    outcome.report = header(config, ws.universe);
    outcome.report["class"] = spec.name();
    json reports = json::array();
    std::ostringstream text;
    text << "classify over " << ws.universe.name() << " (S = " << spec.name() << ")\n";
    for (const auto & [label, m] : targets) {
        auto r = classify(m, spec, ws.probes);
        auto j = to_json(r, ws.universe);
        j["label"] = label;
        reports.push_back(j);
        text << label << "  in_S=" << flag(r.in_s) << " essential=" << flag(r.essential)
             << (r.essential_exact ? "" : "(bounded)") << " subobject_essential=" << flag(r.subobject_essential)
             << " stable_essential=" << flag(r.stable_essential) << (r.stable_exact ? "" : "(bounded)") << "\n";
    }
    outcome.report["reports"] = reports;
    outcome.text = text.str();
    return outcome;
}

Outcome cmd_spec(const RunConfig & config)
{
    auto ws = load(config);
    auto spec = SpectralCategory::build(ws.universe);
    const auto & objects = ws.universe.objects();

    Outcome outcome;
    outcome.report = header(config, ws.universe);
    std::ostringstream text;
    text << "spectral category over " << ws.universe.name() << " (M = " << spec.m_class().name()
         << (spec.exact() ? ", exact" : ", bounded") << ")\n";

    json sizes = json::array();
    text << "hom-set sizes:\n";
    for (const auto & a : objects) {
        json row = json::array();
        text << "  " << ws.universe.label(a) << ":";
        for (const auto & b : objects) {
            row.push_back(spec.hom(a, b).size());
            text << " " << spec.hom(a, b).size();
        }
        text << "\n";
        sizes.push_back(row);
    }

    json uniform = json::array();
    json division = json::array();
    text << "objects:\n";
    for (const auto & a : objects) {
        auto u = is_uniform(a, spec.m_class(), &ws.probes);
        auto d = end_spec_division_check(a, spec);
        d.object = ws.universe.label(a);
        if (u.value)
            uniform.push_back(ws.universe.label(a));
        division.push_back(to_json(d));
        text << "  " << ws.universe.label(a) << ": uniform=" << flag(u.value) << " |End|=" << d.size
             << " division_monoid=" << flag(d.verdict) << "\n";
    }

    json limit_json;
    std::optional<std::string> limit_bound;
    bool limits_passed = true;
    try {
        auto limits = verify_limit_preservation(spec, universe_cospans(ws.universe));
        limits_passed = limits.passed();
        limit_json = to_json(limits, ws.universe);
        text << "pullbacks preserved: " << flag(limits.passed()) << " (" << limits.cospans << " cospans, bounded)\n";
    } catch (const BoundExceeded & e) {
        limit_bound = e.what();
        limit_json = {{"bound_exceeded", e.what()}};
        text << "pullbacks preserved: not decided (" << e.what() << ")\n";
    }

    outcome.report["summary"] = {{"class", spec.m_class().name()},
                                 {"exact", spec.exact()},
                                 {"hom_sizes", sizes},
                                 {"uniform", uniform},
                                 {"end_spec", division},
                                 {"limit_preservation", limit_json}};
    outcome.report["export"] = spec.export_json();
    outcome.text = text.str();
    if (! limits_passed) {
        outcome.code = property_failure;
        outcome.witness = limit_json["witness"];
    } else if (limit_bound) {
        outcome.code = bound_exceeded;
    }
    return outcome;
}

Outcome cmd_laws(const RunConfig & config)
{
    auto ws = load(config);
    LawSuiteOptions options;
    if (config.mono_class == "normal")
        options.s = MonoClassSpec::normal_monos();
    auto suite = closure_law_suite(ws.universe, options);
    Outcome outcome;
    outcome.report = header(config, ws.universe);
    outcome.report["class"] = options.s.name();
    json results = json::array();
    std::ostringstream text;
    for (const auto & r : suite.results) {
        results.push_back(to_json(r, ws.universe));
        text << r.law_id << "  " << status_name(r.status) << "  (" << r.instances << " instances)  " << r.statement
             << "\n";
        if (r.status == LawStatus::Fail && outcome.code == pass) {
            outcome.code = property_failure;
            outcome.witness = results.back();
        }
    }
    outcome.report["results"] = results;
    outcome.text = text.str();
    return outcome;
}

Outcome cmd_reproduce(const RunConfig & config)
{
    auto r = reproduce(config.item);
    Outcome outcome;
    outcome.report = {{"command", "reproduce"},
                      {"id", r.id},
                      {"title", r.title},
                      {"status", r.passed ? "pass" : "fail"},
                      {"details", r.details},
                      {"seed", config.seed}};
    if (! r.passed)
        outcome.report["witness"] = r.witness;
    std::ostringstream text;
    text << "[" << r.id << "] " << r.title << "\n";
    for (const auto & line : r.lines)
        text << "  " << line << "\n";
    text << (r.passed ? "pass" : "fail") << "\n";
    outcome.text = text.str();
    if (! r.passed) {
        outcome.code = property_failure;
        outcome.witness = r.witness;
    }
    return outcome;
}

void add_common(CLI::App * app, RunConfig & config)
{
    app->add_option("--backend", config.backend, "Ambient category")->check(CLI::IsMember({"grp", "ab", "pset"}));
    app->add_option("--universe", config.universe, "Named universe")->check(CLI::IsMember(universe_names()));
    app->add_option("--input", config.inputs, "JSON descriptor files")->check(CLI::ExistingFile);
    app->add_option("--bound-size", config.size_bound, "Largest admitted object")->check(CLI::PositiveNumber);
    app->add_option("--bound-probe", config.probe_bound, "Largest probe object for bounded checks")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char ** argv)
{
    RunConfig config;
    CLI::App app{"Essential monomorphisms and spectral categories of finite algebras"};
    app.require_subcommand(1);
    app.add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", config.out, "Write the report to a file");
    app.add_option("--seed", config.seed, "Seed for probe ordering; 0 keeps canonical order");

    auto * classify = app.add_subcommand("classify", "Classify monomorphisms");
    add_common(classify, config);
    auto * spec = app.add_subcommand("spec", "Build the spectral category and summarize it");
    add_common(spec, config);
    auto * laws = app.add_subcommand("laws", "Run the closure-law suite");
    add_common(laws, config);
    laws->add_option("--mono-class", config.mono_class, "The class S of monos: all or normal")
        ->check(CLI::IsMember({"all", "normal"}));
    auto * repro = app.add_subcommand("reproduce", "Run a built-in scripted check");
    repro->add_option("id", config.item, "One of: " + [] {
        std::string ids;
        for (const auto & id : reproduction_ids())
            ids += (ids.empty() ? "" : ", ") + id;
        return ids;
    }())->required();
    for (auto * sub : {classify, spec, laws, repro}) {
        sub->add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", config.out, "Write the report to a file");
        sub->add_option("--seed", config.seed, "Seed for probe ordering; 0 keeps canonical order");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? pass : input_error;
    }

    try {
        Outcome outcome;
        if (*classify) {
            config.command = "classify";
            outcome = cmd_classify(config);
        } else if (*spec) {
            config.command = "spec";
            outcome = cmd_spec(config);
        } else if (*laws) {
            config.command = "laws";
            outcome = cmd_laws(config);
        } else {
            config.command = "reproduce";
            outcome = cmd_reproduce(config);
        }
        emit(config, outcome);
        if (outcome.code == bound_exceeded)
            std::cerr << "bound exceeded: part of the report could not be decided\n";
        return outcome.code;
    } catch (const InputError & e) {
        std::cerr << "input error";
        if (e.position())
            std::cerr << " at byte " << *e.position();
        std::cerr << ": " << e.what() << "\n";
        return input_error;
    } catch (const BoundExceeded & e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return bound_exceeded;
    } catch (const InvariantViolation & e) {
        std::cout << json{{"error", "invariant violation"}, {"message", e.what()}}.dump(2) << "\n";
        return property_failure;
    } catch (const PreconditionViolation & e) {
        std::cout << json{{"error", "precondition violation"}, {"message", e.what()}}.dump(2) << "\n";
        return property_failure;
    } catch (const Error & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    }
}
