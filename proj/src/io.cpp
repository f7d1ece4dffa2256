#include <fincat/errors.hpp>
#include <fincat/io.hpp>

#include <set>

namespace fincat {

using nlohmann::json;

InputError::InputError(const std::string & message, std::optional<std::size_t> position, std::string path)
    : Error(message), position_(position), path_(std::move(path))
{
}

namespace {

[[noreturn]] void fail(const std::string & path, const std::string & message)
{
    throw InputError((path.empty() ? std::string("/") : path) + ": " + message, std::nullopt, path);
}

void require_fields(const json & j, const std::string & path, std::initializer_list<std::string_view> allowed)
{
    if (! j.is_object())
        fail(path, "expected an object");
    for (const auto & [key, value] : j.items()) {
        bool known = false;
        for (auto a : allowed)
            known = known || key == a;
        if (! known)
            fail(path, "unknown field \"" + key + "\"");
    }
}

const json & field(const json & j, const std::string & path, const char * key)
{
    auto it = j.find(key);
    if (it == j.end())
        fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

std::uint64_t natural(const json & j, const std::string & path)
{
    if (! j.is_number_unsigned())
        fail(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

std::vector<std::uint32_t> natural_list(const json & j, const std::string & path, std::uint64_t limit)
{
    if (! j.is_array())
        fail(path, "expected an array of integers");
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto v = natural(j[i], path + "/" + std::to_string(i));
        if (v >= limit)
            fail(path + "/" + std::to_string(i), "element id " + std::to_string(v) + " out of range");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

Kind descriptor_kind(const json & j, const std::string & path)
{
    if (! j.is_string())
        fail(path, "expected a string");
    auto s = j.get<std::string>();
    if (s == "group")
        return Kind::Group;
    if (s == "abelian_group")
        return Kind::AbelianGroup;
    if (s == "pointed_set")
        return Kind::PointedSet;
    fail(path, "unknown kind \"" + s + "\"");
}

template <typename F>
auto structural(const std::string & path, F && build)
{
    try {
        return build();
    } catch (const InvalidStructure & e) {
        fail(path, e.what());
    }
}

} // namespace

Kind parse_backend(std::string_view name)
{
    if (name == "grp")
        return Kind::Group;
    if (name == "ab")
        return Kind::AbelianGroup;
    if (name == "pset")
        return Kind::PointedSet;
    throw InputError("unknown backend \"" + std::string(name) + "\"", std::nullopt, {});
}

std::string_view backend_name(Kind kind)
{
    switch (kind) {
    case Kind::Group:
        return "grp";
    case Kind::AbelianGroup:
        return "ab";
    case Kind::PointedSet:
        return "pset";
    }
    return {};
}

NamedObject parse_object_descriptor(const json & d, const Backend & backend, const std::string & path)
{
    require_fields(d, path, {"kind", "name", "presentation", "cayley", "size"});
    Kind kind = descriptor_kind(field(d, path, "kind"), path + "/kind");
    std::string name;
    if (auto it = d.find("name"); it != d.end()) {
        if (! it->is_string())
            fail(path + "/name", "expected a string");
        name = it->get<std::string>();
    }
    if (kind != backend.kind())
        throw BackendMismatch(path + ": a " + std::string(kind_name(kind)) + " descriptor in the "
                              + std::string(kind_name(backend.kind())) + " backend");

    bool has_presentation = d.contains("presentation");
    bool has_cayley = d.contains("cayley");
    bool has_size = d.contains("size");
    if (int(has_presentation) + int(has_cayley) + int(has_size) != 1)
        fail(path, "exactly one of \"presentation\", \"cayley\" or \"size\" is required");

    ObjectRef object;
    if (has_size) {
        if (kind != Kind::PointedSet)
            fail(path + "/size", "\"size\" describes pointed sets only");
        auto n = natural(d["size"], path + "/size");
        if (n == 0)
            fail(path + "/size", "a pointed set has at least its basepoint");
        if (n > backend.size_bound())
            throw BoundExceeded(path + ": pointed set of size " + std::to_string(n) + " above the size bound "
                                + std::to_string(backend.size_bound()));
        object = Object::pointed_set(n, name);
    } else if (kind == Kind::PointedSet) {
        fail(path, "pointed sets are given by \"size\"");
    } else if (has_presentation) {
        std::string p = path + "/presentation";
        const auto & pres = d["presentation"];
        require_fields(pres, p, {"permutations", "degree"});
        auto degree = natural(field(pres, p, "degree"), p + "/degree");
        if (degree == 0 || degree > 64)
            fail(p + "/degree", "degree must lie in 1..64");
        const auto & perms = field(pres, p, "permutations");
        if (! perms.is_array())
            fail(p + "/permutations", "expected an array of permutations");
        std::vector<std::vector<std::uint32_t>> gens;
        for (std::size_t i = 0; i < perms.size(); ++i)
            gens.push_back(natural_list(perms[i], p + "/permutations/" + std::to_string(i), degree));
        object = structural(p, [&] { return Object::from_permutations(kind, degree, gens, name, backend.size_bound()); });
    } else {
        std::string p = path + "/cayley";
        const auto & rows = d["cayley"];
        if (! rows.is_array() || rows.empty())
            fail(p, "expected a non-empty array of rows");
        std::size_t n = rows.size();
        if (n > backend.size_bound())
            throw BoundExceeded(path + ": Cayley table of order " + std::to_string(n) + " above the size bound "
                                + std::to_string(backend.size_bound()));
        std::vector<Element> table;
        table.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            auto row = natural_list(rows[i], p + "/" + std::to_string(i), n);
            if (row.size() != n)
                fail(p + "/" + std::to_string(i), "row has " + std::to_string(row.size()) + " entries, expected "
                                                      + std::to_string(n));
            table.insert(table.end(), row.begin(), row.end());
        }
        object = structural(p, [&] { return Object::from_table(kind, n, std::move(table), name); });
    }
    backend.admit(object);
    if (name.empty())
        name = identify(object);
    return NamedObject{name, object};
}

InputDocument parse_input(std::string_view text, const Backend & backend, const Universe * known)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error & e) {
        throw InputError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte,
                         {});
    }

    InputDocument out;
    auto add_objects = [&](const json & list, const std::string & path) {
        if (! list.is_array())
            fail(path, "expected an array of descriptors");
        for (std::size_t i = 0; i < list.size(); ++i)
            out.objects.push_back(parse_object_descriptor(list[i], backend, path + "/" + std::to_string(i)));
    };

    if (doc.is_array()) {
        add_objects(doc, "");
        return out;
    }
    if (doc.is_object() && doc.contains("kind")) {
        out.objects.push_back(parse_object_descriptor(doc, backend, ""));
        return out;
    }
    require_fields(doc, "", {"objects", "morphisms"});
    if (doc.contains("objects"))
        add_objects(doc["objects"], "/objects");

    std::set<std::string> names;
    for (const auto & o : out.objects)
        if (! names.insert(o.label).second)
            fail("/objects", "duplicate object name \"" + o.label + "\"");

    auto lookup = [&](const json & j, const std::string & path) -> ObjectRef {
        if (! j.is_string())
            fail(path, "expected an object name");
        auto label = j.get<std::string>();
        for (const auto & o : out.objects)
            if (o.label == label)
                return o.object;
        if (known)
            if (auto o = known->find(label))
                return o;
        fail(path, "unknown object \"" + label + "\"");
    };

    if (doc.contains("morphisms")) {
        const auto & list = doc["morphisms"];
        if (! list.is_array())
            fail("/morphisms", "expected an array of morphisms");
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string p = "/morphisms/" + std::to_string(i);
            const auto & m = list[i];
            require_fields(m, p, {"name", "dom", "cod", "map"});
            std::string label;
            if (auto it = m.find("name"); it != m.end()) {
                if (! it->is_string())
                    fail(p + "/name", "expected a string");
                label = it->get<std::string>();
            }
            auto dom = lookup(field(m, p, "dom"), p + "/dom");
            auto cod = lookup(field(m, p, "cod"), p + "/cod");
            auto map = natural_list(field(m, p, "map"), p + "/map", cod->size());
            std::vector<Element> table(map.begin(), map.end());
            auto f = structural(p, [&] { return Morphism(dom, cod, std::move(table)); });
            out.morphisms.push_back(NamedMorphism{label.empty() ? "m" + std::to_string(i) : label, f});
        }
    }
    return out;
}

json object_descriptor(const ObjectRef & object, const std::string & name)
{
    json d{{"name", name}};
    switch (object->kind()) {
    case Kind::PointedSet:
        d["kind"] = "pointed_set";
        d["size"] = object->size();
        return d;
    case Kind::Group:
        d["kind"] = "group";
        break;
    case Kind::AbelianGroup:
        d["kind"] = "abelian_group";
        break;
    }
    json rows = json::array();
    auto table = object->table();
    for (std::size_t i = 0; i < object->size(); ++i)
        rows.push_back(std::vector<Element>(table.begin() + i * object->size(), table.begin() + (i + 1) * object->size()));
    d["cayley"] = rows;
    return d;
}

json universe_descriptor(const Universe & universe)
{
    json objects = json::array();
    for (const auto & o : universe.objects())
        objects.push_back({{"label", universe.label(o)}, {"size", o->size()}});
    return {{"name", universe.name()}, {"kind", kind_name(universe.kind())}, {"objects", objects}};
}

json to_json(const Morphism & f, const Universe & universe)
{
    return {{"dom", universe.label(f.dom())},
            {"cod", universe.label(f.cod())},
            {"map", std::vector<Element>(f.map().begin(), f.map().end())}};
}

json to_json(const ClassificationReport & r, const Universe & universe)
{
    json j{{"morphism", to_json(r.morphism, universe)},
           {"in_S", r.in_s},
           {"essential", r.essential},
           {"subobject_essential", r.subobject_essential},
           {"stable_essential", r.stable_essential},
           {"essential_exact", r.essential_exact},
           {"stable_exact", r.stable_exact}};
    json w = json::object();
    if (r.essential_witness)
        w["essential"] = to_json(*r.essential_witness, universe);
    if (r.subobject_witness)
        w["subobject_essential"] = to_json(*r.subobject_witness, universe);
    if (r.stable_witness) {
        json s{{"along", to_json(r.stable_witness->along, universe)},
               {"pulled", to_json(r.stable_witness->pulled, universe)}};
        if (r.stable_witness->not_essential)
            s["not_essential"] = to_json(*r.stable_witness->not_essential, universe);
        w["stable_essential"] = s;
    }
    if (! w.empty())
        j["witness"] = w;
    return j;
}

json to_json(const LawResult & r, const Universe & universe)
{
    json j{{"law_id", r.law_id},
           {"statement", r.statement},
           {"universe_descriptor", universe_descriptor(universe)},
           {"status", status_name(r.status)},
           {"instances", r.instances}};
    if (! r.witness.empty()) {
        json w = json::object();
        for (const auto & [name, f] : r.witness)
            w[name] = to_json(f, universe);
        j["witness"] = w;
    }
    return j;
}

json to_json(const ConditionReport & r, const Universe & universe)
{
    json j{{"condition", condition_name(r.id)}, {"passed", r.passed}, {"instances", r.instances}};
    if (! r.witness.empty()) {
        json w = json::object();
        for (const auto & [name, f] : r.witness)
            w[name] = to_json(f, universe);
        j["witness"] = w;
    }
    return j;
}

json to_json(const DivisionMonoidReport & r)
{
    return {{"object", r.object},       {"size", r.size},    {"zero", r.zero},
            {"invertible", r.invertible}, {"table", r.table}, {"division_monoid", r.verdict}};
}

json to_json(const LimitReport & r, const Universe & universe)
{
    json j{{"cospans", r.cospans}, {"cones", r.cones}, {"bounded", r.bounded}, {"passed", r.passed()}};
    if (r.failure)
        j["witness"] = {{"f", to_json(r.failure->f, universe)},
                        {"g", to_json(r.failure->g, universe)},
                        {"probe", universe.label(r.failure->probe)},
                        {"reason", r.failure->reason}};
    return j;
}

} // namespace fincat
