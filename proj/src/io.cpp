#include "prestab/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "prestab/io_json.hpp"

namespace prestab::io {

  namespace {
    constexpr std::size_t max_carrier = 4096;

    [[noreturn]] void schema(std::string const& pointer, std::string const& what) {
      throw parse_error((pointer.empty() ? std::string("/") : pointer) + ": "
                        + what);
    }

    void require_keys(json const& j, std::string const& pointer,
                      std::initializer_list<char const*> allowed,
                      std::initializer_list<char const*> required) {
      if (!j.is_object()) {
        schema(pointer, "expected an object");
      }
      for (auto const& [key, value] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&](char const* k) { return key == k; })) {
          schema(pointer + "/" + key, "unexpected key");
        }
      }
      for (auto const* key : required) {
        if (!j.contains(key)) {
          schema(pointer, std::string("missing key \"") + key + "\"");
        }
      }
    }

    std::size_t index(json const& j, std::string const& pointer,
                      std::size_t bound) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        schema(pointer, "expected a non-negative integer");
      }
      auto const v = j.get<std::uint64_t>();
      if (v >= bound) {
        schema(pointer, std::to_string(v) + " is out of range (must be below "
                            + std::to_string(bound) + ")");
      }
      return static_cast<std::size_t>(v);
    }

    json::array_t const& array(json const& j, std::string const& pointer) {
      if (!j.is_array()) {
        schema(pointer, "expected an array");
      }
      return j.get_ref<json::array_t const&>();
    }

    Preorder preorder_from(json const& j, ReadOptions options,
                           std::string const& pointer) {
      require_keys(j, pointer, {"kind", "n", "pairs", "labels"}, {"n"});
      auto const n = index(j.at("n"), pointer + "/n", max_carrier + 1);
      Rel        r = delta(n);
      if (j.contains("pairs")) {
        auto const& pairs = array(j.at("pairs"), pointer + "/pairs");
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          auto const at = pointer + "/pairs/" + std::to_string(k);
          auto const& p = array(pairs[k], at);
          if (p.size() != 2) {
            schema(at, "expected a pair [i, j]");
          }
          r.set(index(p[0], at + "/0", n), index(p[1], at + "/1", n));
        }
      }
      Carrier carrier(n);
      if (j.contains("labels")) {
        auto const& ls = array(j.at("labels"), pointer + "/labels");
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < ls.size(); ++k) {
          if (!ls[k].is_string()) {
            schema(pointer + "/labels/" + std::to_string(k),
                   "expected a string");
          }
          labels.push_back(ls[k].get<std::string>());
        }
        carrier = Carrier(n, std::move(labels));
      }
      if (options.close) {
        r = transitive_closure(r);
      } else if (!is_transitive(r)) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
              if (r.test(a, b) && r.test(b, c) && !r.test(a, c)) {
                throw validation_error(
                    (pointer.empty() ? std::string("/") : pointer)
                    + ": relation is not transitive: " + std::to_string(a)
                    + "->" + std::to_string(b) + " and " + std::to_string(b)
                    + "->" + std::to_string(c) + " but not "
                    + std::to_string(a) + "->" + std::to_string(c)
                    + " (use --close to take the closure)");
              }
            }
          }
        }
      }
      return Preorder(std::move(carrier), std::move(r));
    }

    void check_kind(json const& j, std::string const& pointer,
                    std::string_view expected) {
      if (j.contains("kind")) {
        auto const& k = j.at("kind");
        if (!k.is_string() || k.get<std::string>() != expected) {
          schema(pointer + "/kind", "expected \"" + std::string(expected)
                                        + "\"");
        }
      }
    }

    std::string where(std::string const& pointer) {
      return pointer.empty() ? std::string("/") : pointer;
    }

    std::string escape_dot(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Reading
  ////////////////////////////////////////////////////////////////////////

  Document from_json(json const& value, ReadOptions options,
                     std::string const& pointer) {
    if (!value.is_object()) {
      schema(pointer, "expected an object");
    }
    std::string kind;
    if (value.contains("kind")) {
      if (!value.at("kind").is_string()) {
        schema(pointer + "/kind", "expected a string");
      }
      kind = value.at("kind").get<std::string>();
    } else if (value.contains("domain")) {
      kind = "partial_morphism";
    } else if (value.contains("map")) {
      kind = "morphism";
    } else if (value.contains("n")) {
      kind = "preorder";
    } else {
      schema(pointer, "cannot tell the document kind (no \"n\", \"map\" or "
                      "\"domain\")");
    }

    if (kind == "preorder") {
      return preorder_from(value, options, pointer);
    }
    if (kind != "morphism" && kind != "partial_morphism") {
      schema(pointer + "/kind", "unknown kind \"" + kind + "\"");
    }
    bool const partial = kind == "partial_morphism";
    if (partial) {
      require_keys(value, pointer, {"kind", "dom", "cod", "map", "domain"},
                   {"dom", "cod", "map", "domain"});
    } else {
      require_keys(value, pointer, {"kind", "dom", "cod", "map"},
                   {"dom", "cod", "map"});
    }
    check_kind(value.at("dom"), pointer + "/dom", "preorder");
    check_kind(value.at("cod"), pointer + "/cod", "preorder");
    auto dom = preorder_from(value.at("dom"), options, pointer + "/dom");
    auto cod = preorder_from(value.at("cod"), options, pointer + "/cod");
    auto const& map = array(value.at("map"), pointer + "/map");

    if (!partial) {
      if (map.size() != dom.size()) {
        schema(pointer + "/map", "expected " + std::to_string(dom.size())
                                     + " entries, got "
                                     + std::to_string(map.size()));
      }
      std::vector<std::size_t> targets;
      for (std::size_t k = 0; k < map.size(); ++k) {
        targets.push_back(
            index(map[k], pointer + "/map/" + std::to_string(k), cod.size()));
      }
      FinMap f(dom.size(), cod.size(), std::move(targets));
      if (!is_monotone(dom, cod, f)) {
        throw validation_error(where(pointer) + ": map is not monotone");
      }
      return Morphism(std::move(dom), std::move(cod), std::move(f));
    }

    auto const& domain = array(value.at("domain"), pointer + "/domain");
    if (map.size() != domain.size()) {
      schema(pointer + "/map", "expected one entry per domain element ("
                                   + std::to_string(domain.size()) + "), got "
                                   + std::to_string(map.size()));
    }
    std::vector<std::size_t> values(dom.size(), PartialMorphism::undefined);
    for (std::size_t k = 0; k < domain.size(); ++k) {
      auto const at = pointer + "/domain/" + std::to_string(k);
      auto const a  = index(domain[k], at, dom.size());
      if (values[a] != PartialMorphism::undefined) {
        schema(at, "duplicate element " + std::to_string(a));
      }
      values[a] =
          index(map[k], pointer + "/map/" + std::to_string(k), cod.size());
    }
    Subset defined(dom.size());
    for (std::size_t a = 0; a < values.size(); ++a) {
      if (values[a] != PartialMorphism::undefined) {
        defined.insert(a);
      }
    }
    if (!is_clopen(dom, defined)) {
      throw validation_error(where(pointer) + ": domain "
                             + value.at("domain").dump()
                             + " is not clopen");
    }
    try {
      return partial_from_values(dom, cod, values);
    } catch (validation_error const& e) {
      throw validation_error(where(pointer) + ": " + e.what());
    }
  }

  Document parse_document(std::string_view text, ReadOptions options,
                          std::string_view source) {
    json value;
    try {
      value = json::parse(text);
    } catch (json::parse_error const& e) {
      std::size_t line = 1, column = 1;
      auto const  end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1,
                                              text.size());
      for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      std::string what = e.what();
      // drop the library's "[json.exception.parse_error.101] " prefix
      if (auto const p = what.find("] "); p != std::string::npos) {
        what = what.substr(p + 2);
      }
      throw parse_error(std::string(source) + ":" + std::to_string(line) + ":"
                        + std::to_string(column) + ": " + what);
    }
    try {
      return from_json(value, options, "");
    } catch (parse_error const& e) {
      throw parse_error(std::string(source) + ": " + e.what());
    } catch (validation_error const& e) {
      throw validation_error(std::string(source) + ": " + e.what());
    } catch (dimension_error const& e) {
      throw validation_error(std::string(source) + ": " + e.what());
    }
  }

  Document read_document(std::filesystem::path const& path,
                         ReadOptions                  options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw parse_error(path.string() + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), options, path.string());
  }

  std::string_view kind_name(Document const& doc) {
    switch (doc.index()) {
      case 0:
        return "preorder";
      case 1:
        return "morphism";
      default:
        return "partial_morphism";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Writing
  ////////////////////////////////////////////////////////////////////////

  json subset_json(Subset const& s) {
    json out = json::array();
    for (auto i : s.members()) {
      out.push_back(i);
    }
    return out;
  }

  json to_json(Preorder const& a) {
    json out;
    out["kind"] = "preorder";
    out["n"]    = a.size();
    json pairs  = json::array();
    for (auto [i, j] : a.rel().pairs()) {
      if (i != j) {
        pairs.push_back(json::array({i, j}));
      }
    }
    out["pairs"] = std::move(pairs);
    if (a.carrier().has_labels()) {
      out["labels"] = *a.carrier().labels();
    }
    return out;
  }

  json to_json(Morphism const& f) {
    json out;
    out["kind"] = "morphism";
    out["dom"]  = to_json(f.dom());
    out["cod"]  = to_json(f.cod());
    out["map"]  = std::vector<std::size_t>(f.map().targets().begin(),
                                          f.map().targets().end());
    return out;
  }

  json to_json(PartialMorphism const& p) {
    json out;
    out["kind"]   = "partial_morphism";
    out["dom"]    = to_json(p.dom());
    out["cod"]    = to_json(p.cod());
    out["domain"] = subset_json(p.domain());
    out["map"]    = std::vector<std::size_t>(p.map().targets().begin(),
                                          p.map().targets().end());
    return out;
  }

  json to_json(Document const& doc) {
    return std::visit([](auto const& x) { return to_json(x); }, doc);
  }

  json to_json(SuiteReport const& report, bool timing) {
    json out;
    out["kind"]             = "suite_report";
    out["suite"]            = report.suite;
    out["max_size"]         = report.max_size;
    out["passed"]           = report.passed();
    out["instances"]        = report.instances;
    out["random_instances"] = report.random_instances;
    out["failure_count"]    = report.failure_count;
    out["failures"]         = report.failures;
    if (timing) {
      out["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(report.elapsed).count();
    }
    return out;
  }

  std::string emit(Preorder const& a) {
    return to_json(a).dump() + "\n";
  }
  std::string emit(Morphism const& f) {
    return to_json(f).dump() + "\n";
  }
  std::string emit(PartialMorphism const& p) {
    return to_json(p).dump() + "\n";
  }
  std::string emit(Document const& doc) {
    return to_json(doc).dump() + "\n";
  }

  std::string to_dot(Preorder const& a) {
    std::ostringstream out;
    out << "digraph preorder {\n";
    auto const comps = a.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
      out << "  subgraph cluster_" << c << " {\n";
      out << "    label=\"component " << c << "\";\n";
      for (auto i : comps[c].members()) {
        out << "    n" << i << " [label=\"" << escape_dot(a.carrier().label(i))
            << "\"];\n";
      }
      out << "  }\n";
    }
    for (auto [i, j] : a.rel().pairs()) {
      if (i != j) {
        out << "  n" << i << " -> n" << j << ";\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string report_json(SuiteReport const& report, bool timing) {
    return to_json(report, timing).dump(2) + "\n";
  }

  std::string report_text(SuiteReport const& report, bool timing) {
    std::ostringstream out;
    out << report.suite << " (max size " << report.max_size << "): "
        << (report.passed() ? "PASS" : "FAIL") << ", " << report.instances
        << " instances";
    if (report.random_instances > 0) {
      out << ", " << report.random_instances << " random";
    }
    if (!report.passed()) {
      out << ", " << report.failure_count << " failures";
    }
    out << "\n";
    for (auto const& f : report.failures) {
      out << "  " << f << "\n";
    }
    if (report.failures.size() < report.failure_count) {
      out << "  ... " << report.failure_count - report.failures.size()
          << " more\n";
    }
    if (timing) {
      out << "  elapsed "
          << std::chrono::duration<double>(report.elapsed).count() << " s\n";
    }
    return out.str();
  }

}  // namespace prestab::io
