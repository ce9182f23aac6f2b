#pragma once
// JSON definition files (format_version 1) and report serialization.
//
// A file describes one structure, possibly with several parameter strata:
//
//   { "format_version": 1, "id": "...", "multiplicative": true,
//     "parameters": [{"name": "a4", "invertible": false}, ...],
//     "substitutions": {"a1": "s^2"},            // optional
//     "variants": [{"label": "+", "substitutions": {"a5": "s"}}, ...],
//     "basis": [{"label": "e1", "parity": "even"}, ...],
//     "alpha": [["1","0"],["0","a4"]],           // row-major; column j = alpha(e_j)
//     "bracket": [["e1","e2","e2","b4"], ...],   // [x,y] has coefficient on z
//     "cobracket": [["e2","e1","e2","c2"], ...], // Delta(x) has coefficient on y(x)z
//     "tensors": {"r": [["e1","e2","1"], ...]},
//     "morphisms": {"beta": [[...]]},
//     "representations": {"rho": {"module": [...], "A": [[...]],
//                                 "rho": {"e1": [[...]], ...}}} }
//
// A bracket pair listed in one order only is completed by skew-symmetry.
// Names used only as substitution keys are eliminated from the result.

#include "hlsb/constructions.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlsb {

// pointer is a JSON pointer to the offending field
struct ParseError : std::runtime_error {
  ParseError(const std::string& pointer, const std::string& message);
  std::string pointer;
};

struct Definition {
  std::string id;
  std::string variant;  // empty when the file has no variants
  std::string description;
  bool multiplicative = false;
  SpacePtr space;
  HomSuperBialgebra structure;
  std::map<std::string, Tensor2> tensors;
  std::map<std::string, EvenMap> morphisms;
  std::map<std::string, Representation> representations;

  std::string name() const { return variant.empty() ? id : id + "[" + variant + "]"; }
};

struct DefinitionFile {
  std::string id;
  std::string description;
  std::string expected = "bialgebra";
  bool multiplicative = false;
  std::vector<Definition> instances;  // one per variant
};

DefinitionFile parse_definition(std::string_view json_text);
DefinitionFile read_definition_file(const std::string& path);

// Serializes one instance back to the schema (no variants; all bracket
// entries written explicitly).
std::string write_definition(const Definition& d, int indent = 2);

std::string report_to_json(const CheckReport& r, int indent = -1);

}  // namespace hlsb
