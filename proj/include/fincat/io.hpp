#pragma once

#include <fincat/builtin.hpp>
#include <fincat/fractions.hpp>
#include <fincat/laws.hpp>
#include <fincat/monoclasses.hpp>
#include <fincat/spectral.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fincat {

/// Malformed input. `position` is a byte offset for syntax errors; `path` is
/// a JSON pointer for structural ones.
class InputError : public Error
{
public:
    InputError(const std::string & message, std::optional<std::size_t> position, std::string path);

    const std::optional<std::size_t> & position() const { return position_; }
    const std::string & path() const { return path_; }

private:
    std::optional<std::size_t> position_;
    std::string path_;
};

/// "grp", "ab" or "pset". Throws InputError otherwise.
Kind parse_backend(std::string_view name);
std::string_view backend_name(Kind kind);

struct NamedMorphism
{
    std::string label;
    Morphism morphism;
};

struct InputDocument
{
    std::vector<NamedObject> objects;
    std::vector<NamedMorphism> morphisms;
};

/// One object descriptor:
///   {"kind":"group","name":"S3","presentation":{"permutations":[[1,0,2],[1,2,0]],"degree":3}}
///   {"kind":"group","name":"C4","cayley":[[0,1,2,3],...]}
///   {"kind":"pointed_set","name":"P3","size":3}
/// Kinds: group, abelian_group, pointed_set. Unknown fields are rejected.
/// Objects are admitted by `backend` (BackendMismatch, BoundExceeded).
NamedObject parse_object_descriptor(const nlohmann::json & descriptor, const Backend & backend,
                                    const std::string & path = "");

/// An input document is a single descriptor, an array of descriptors, or
///   {"objects":[...], "morphisms":[{"name":..., "dom":..., "cod":..., "map":[...]}]}
/// where dom and cod name objects of the document or of `known`.
InputDocument parse_input(std::string_view text, const Backend & backend, const Universe * known = nullptr);

/// Cayley-table descriptor of an object.
nlohmann::json object_descriptor(const ObjectRef & object, const std::string & name);

nlohmann::json universe_descriptor(const Universe & universe);
nlohmann::json to_json(const Morphism & f, const Universe & universe);
nlohmann::json to_json(const ClassificationReport & report, const Universe & universe);
/// {law_id, universe_descriptor, status, witness?}
nlohmann::json to_json(const LawResult & result, const Universe & universe);
nlohmann::json to_json(const ConditionReport & report, const Universe & universe);
nlohmann::json to_json(const DivisionMonoidReport & report);
nlohmann::json to_json(const LimitReport & report, const Universe & universe);

} // namespace fincat
