#pragma once

// Fixture files: one JSON document per object, with a top-level "kind".
//
//   algebra    {"kind", "name", "basis": [..], "brackets": [{"x", "y", "value"}]}
//   action     {"kind", "name", "actor", "acted", "left": [{"actor", "acted", "value"}],
//                                                 "right": [{"acted", "actor", "value"}]}
//   xmod       {"kind", "name", "top", "base", "delta": {top elt: value}, "action"}
//   hom        {"kind", "name", "source", "target", "map"}            (algebras)
//              {"kind", "name", "source", "target", "top_map", "base_map"}  (xmods)
//   extension  {"kind", "name", "total", "quotient", "top_map", "base_map"}
//
// A value is a sparse vector {basis name: rational}, rationals are strings
// "p/q" or "n". A reference to another object is either its name (looked up
// among the files of the same directory) or an inline object. The "action"
// of an xmod may also be "adjoint" or "trivial".

#include "leibxmod/extensions.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace leibxmod::io {

using Json = nlohmann::ordered_json;

/// Unreadable input: bad syntax, unknown names, mismatched dimensions.
class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ActionFixture {
    std::string name;
    LeibnizAlgebra actor;
    LeibnizAlgebra acted;
    LeibnizAction action;
};

struct HomFixture {
    std::string name;
    bool between_xmods = false;
    AlgebraHom algebra_hom;
    XModHom xmod_hom;
};

/// An extension as written in a file; validity is checked by make_extension.
struct ExtensionFixture {
    std::string name;
    CrossedModule total;
    CrossedModule quotient;
    Matrix top_map;
    Matrix base_map;
};

class Workspace {
public:
    explicit Workspace(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    LeibnizAlgebra algebra(const Json& ref);
    ActionFixture action(const Json& ref);
    CrossedModule xmod(const Json& ref);
    HomFixture hom(const Json& ref);
    ExtensionFixture extension(const Json& ref);

private:
    Json resolve(const Json& ref, const std::string& kind);

    std::filesystem::path dir_;
    bool indexed_ = false;
    std::map<std::pair<std::string, std::string>, Json> index_;  // (kind, name) -> document
};

/// Parses one file. Throws FixtureError when it cannot be read or parsed.
Json read_document(const std::filesystem::path& path);
std::string kind_of(const Json& doc);

Json to_json(const LeibnizAlgebra& a);
Json to_json(const ActionFixture& a);
/// Inline algebras and explicit action tables, so the output stands alone.
Json to_json(const CrossedModule& xm);
Json to_json(const ExtensionFixture& e);

/// Canonical text: two-space indent and a trailing newline.
std::string dump(const Json& doc);

}  // namespace leibxmod::io
