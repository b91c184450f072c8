#ifndef PRESTAB_IO_HPP_
#define PRESTAB_IO_HPP_

// JSON documents for preorders, morphisms and partial morphisms; DOT export;
// suite report serialization.
//
//   preorder          {"kind": "preorder", "n": 3, "pairs": [[0, 1]],
//                      "labels": ["a", "b", "c"]}
//   morphism          {"kind": "morphism", "dom": <preorder>,
//                      "cod": <preorder>, "map": [1, 2]}
//   partial_morphism  a morphism plus "domain": [0, 2]; "map" then lists the
//                      images of the domain elements in the order given.
//
// "kind" is optional on input; without it the kind follows from the keys.
// "pairs" lists pairs beyond the diagonal. The reader adds the diagonal and
// rejects non-transitive input unless asked to close it. Writers emit pairs
// sorted and without the diagonal, and domains in increasing order.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "prestab/lab.hpp"
#include "prestab/preord.hpp"
#include "prestab/stab.hpp"

namespace prestab::io {

  using Document = std::variant<Preorder, Morphism, PartialMorphism>;

  struct ReadOptions {
    // Take the reflexive transitive closure of the listed pairs instead of
    // rejecting a non-transitive relation.
    bool close = false;
  };

  // Throws parse_error (malformed JSON with line and column, or a schema
  // violation with a JSON pointer) and validation_error (well-formed input
  // that breaks an invariant: transitivity, monotonicity, clopen domain).
  Document parse_document(std::string_view text,
                          ReadOptions      options = {},
                          std::string_view source  = "<input>");
  Document read_document(std::filesystem::path const& path,
                         ReadOptions                  options = {});

  std::string_view kind_name(Document const& doc);

  // Single-line JSON followed by a newline.
  std::string emit(Preorder const& a);
  std::string emit(Morphism const& f);
  std::string emit(PartialMorphism const& p);
  std::string emit(Document const& doc);

  // Directed graph of rho minus the diagonal, one cluster per clopen
  // component.
  std::string to_dot(Preorder const& a);

  // With timing = false the elapsed time is left out, so that the output
  // only depends on the inputs.
  std::string report_json(SuiteReport const& report, bool timing = false);
  std::string report_text(SuiteReport const& report, bool timing = false);

}  // namespace prestab::io

#endif  // PRESTAB_IO_HPP_
