#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dgm/cochain.hpp"

namespace dgm::dsl {

// Text format for `.dgm` files:
//
//   field Q                     | field GF <p>
//   module <id> { basis <id> : <int> (, <id> : <int>)* ; }
//   map <id> degree <int> { (<src> -> <term> ((+|-) <term>)* ;)* }
//   deformation { order <k> : <map> ; ... }
//
// with <term> := [-] [<scalar> *] <basis-id>, `#` comments to end of line.

struct NamedMap {
  std::string name;
  GradedMap map;

  friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

struct DeformationEntry {
  int order = 0;
  std::string map;

  friend bool operator==(const DeformationEntry&, const DeformationEntry&) = default;
};

struct Document {
  FieldSpec field;
  ModulePtr module;
  std::vector<NamedMap> maps;
  bool has_deformation = false;
  std::vector<DeformationEntry> deformation;  ///< ascending order

  const GradedMap* find_map(std::string_view name) const;

  friend bool operator==(const Document& a, const Document& b);
};

/// Throws ParseError carrying line and column: SyntaxError, UnknownBasisName,
/// DegreeMismatch, NonPrimeModulus, DuplicateName, UnknownName.
Document parse(std::string_view text);

/// Canonical rendering; parse(print(doc)) == doc.
std::string print(const Document& doc);

struct LoadedComplex {
  DgModule complex;
  std::vector<NamedMap> maps;
  /// d_1..d_m from the deformation block; missing orders are zero.
  std::vector<GradedMap> lifts;
};

/// Throws MissingDifferential, NotADifferential, BadDegree, UnknownName, DegreeMismatch.
LoadedComplex load_complex(const Document& doc);

/// Document with maps `d`, `d1`..`dm` and a deformation block listing the lifts.
Document make_document(const DgModule& v, const std::vector<GradedMap>& lifts);

Document read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Document& doc);

}  // namespace dgm::dsl
