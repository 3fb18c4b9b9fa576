#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cpd/computad.hpp"

namespace cpd {

// A set of named definitions read from `.cpd` sources: 2-computads, 3-computad
// presentations over a named base, and 2-computad morphisms.  Names are unique
// across the three kinds.  Referenced names (a com3's base, a morphism's
// endpoints) are kept so documents serialize faithfully.
struct Com3Entry {
  std::string base_name;
  Com3Object object;
};

struct MorphismEntry {
  std::string src_name;
  std::string dst_name;
  Computad2Morphism morphism;
};

struct DslDocument {
  std::vector<std::string> order;  // definition order, for serialization
  std::unordered_map<std::string, Computad2> computads;
  std::unordered_map<std::string, Com3Entry> com3s;
  std::unordered_map<std::string, MorphismEntry> morphisms;

  bool has(const std::string& name) const;
  const Computad2* find_computad(const std::string& name) const;
  const Com3Object* find_com3(const std::string& name) const;
  const Computad2Morphism* find_morphism(const std::string& name) const;
};

// Parses and semantically validates a source.  References (morphism endpoints,
// com3 bases) resolve against earlier definitions in the same source, then
// against `fallback` when given.  Throws ParseError (with line/column) for
// syntax problems and the usual validation errors otherwise.
DslDocument parse_dsl(const std::string& source,
                      const DslDocument* fallback = nullptr);

DslDocument parse_dsl_file(const std::string& path,
                           const DslDocument* fallback = nullptr);

// Predefined objects: the computads paper_A, paper_B, paper_C and the
// morphisms paper_alpha : paper_A -> paper_C, paper_beta : paper_B -> paper_C.
const DslDocument& builtin_document();

// Loads files in order on top of the built-ins.  A file may redefine a
// built-in name; defining the same name in two files is an error.
DslDocument load_documents(const std::vector<std::string>& paths);

// Serializes a document; parse_dsl(print_dsl(doc)) reproduces it (3-indet
// boundaries reappear as their canonical expansions).
std::string print_dsl(const DslDocument& doc);

// Parses a standalone cell expression (id/v/h/generator syntax) over K.
TermPtr parse_cell_term(const std::string& source, const Computad2& K);

// Same definitions under the same names, compared by presentation (definition
// order is ignored).
bool documents_equal(const DslDocument& a, const DslDocument& b);

}  // namespace cpd
