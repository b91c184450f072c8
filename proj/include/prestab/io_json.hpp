#ifndef PRESTAB_IO_JSON_HPP_
#define PRESTAB_IO_JSON_HPP_

// The JSON values behind io.hpp, for callers that assemble larger documents.

#include <string>

#include "json.hpp"
#include "prestab/io.hpp"

namespace prestab::io {

  // Keys keep insertion order, so "kind" comes first.
  using json = nlohmann::ordered_json;

  json to_json(Preorder const& a);
  json to_json(Morphism const& f);
  json to_json(PartialMorphism const& p);
  json to_json(Document const& doc);
  json to_json(SuiteReport const& report, bool timing);

  // `pointer` is the JSON pointer of `value` inside the enclosing document,
  // used in error messages.
  Document from_json(json const&        value,
                     ReadOptions        options,
                     std::string const& pointer = "");

  json subset_json(Subset const& s);

}  // namespace prestab::io

#endif  // PRESTAB_IO_JSON_HPP_
