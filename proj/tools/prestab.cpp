// prestab: compute with finite preorders, run verification suites, export DOT.
//
//   prestab compute <task> <file>... [--close] [--format json|text|dot]
//   prestab verify <suite>|all [--max-size N] [--format json|text] [--timing]
//   prestab export-dot <file> [--close]
//
// Every subcommand takes --out <path>. Exit status: 0 success (or all suites
// pass), 1 a suite failed, 2 usage, parse or validation error.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "prestab/io.hpp"
#include "prestab/io_json.hpp"
#include "prestab/lab.hpp"

namespace {

  using namespace prestab;
  using io::json;

  constexpr int exit_fail  = 1;
  constexpr int exit_usage = 2;

  struct ComputeArgs {
    std::string              task;
    std::vector<std::string> inputs;
    bool                     close = false;
    std::string              format = "json";
    std::string              out;
  };

  struct VerifyArgs {
    std::string suite;
    std::size_t max_size = 3;
    std::string format   = "json";
    bool        timing   = false;
    std::string out;
  };

  struct DotArgs {
    std::string input;
    bool        close = false;
    std::string out;
  };

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw usage_error("cannot write " + path);
    }
    file << text;
  }

  std::vector<io::Document> read_all(std::vector<std::string> const& paths,
                                     bool                            close) {
    std::vector<io::Document> docs;
    for (auto const& p : paths) {
      docs.push_back(io::read_document(p, {close}));
    }
    return docs;
  }

  template <typename T>
  T const& expect(io::Document const& doc, std::string const& task,
                  char const* what) {
    if (auto const* x = std::get_if<T>(&doc)) {
      return *x;
    }
    throw usage_error("task " + task + " expects a " + what + ", got a "
                      + std::string(io::kind_name(doc)));
  }

  // A morphism or a partial morphism, as a partial morphism.
  PartialMorphism as_partial(io::Document const& doc, std::string const& task) {
    if (auto const* f = std::get_if<Morphism>(&doc)) {
      return embed(*f);
    }
    return expect<PartialMorphism>(doc, task, "morphism or partial morphism");
  }

  std::string blocks_text(std::span<Subset const> blocks) {
    std::string out;
    for (auto const& b : blocks) {
      out += out.empty() ? "{" : " {";
      bool first = true;
      for (auto i : b.members()) {
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
      }
      out += "}";
    }
    return out;
  }

  std::string morphism_text(Morphism const& f) {
    std::string map;
    for (auto t : f.map().targets()) {
      map += (map.empty() ? "" : ",") + std::to_string(t);
    }
    return to_string(f.dom()) + " -[" + map + "]-> " + to_string(f.cod());
  }

  std::string run_compute(ComputeArgs const& args) {
    static std::map<std::string, std::size_t> const arity = {
        {"closure", 1}, {"components", 1}, {"classify", 1},
        {"torsion", 1}, {"zkernel", 1},    {"zcokernel", 1},
        {"stabeq", 2},  {"compose", 0},    {"cokernel", 1},
    };
    auto const& task = args.task;
    auto const  it   = arity.find(task);
    if (it == arity.end()) {
      throw usage_error("unknown task '" + task + "'");
    }
    if (it->second != 0 && args.inputs.size() != it->second) {
      throw usage_error("task " + task + " takes "
                        + std::to_string(it->second) + " input(s), got "
                        + std::to_string(args.inputs.size()));
    }
    if (task == "compose" && args.inputs.size() < 2) {
      throw usage_error("task compose takes at least 2 inputs");
    }
    if (args.format == "dot" && task != "closure" && task != "components") {
      throw usage_error("--format dot is available for closure and "
                        "components only");
    }
    bool const json_out = args.format == "json";
    // closure always closes its input
    auto const docs = read_all(args.inputs, args.close || task == "closure");

    if (task == "closure" || task == "components" || task == "classify"
        || task == "torsion") {
      auto const& a = expect<Preorder>(docs[0], task, "preorder");
      if (args.format == "dot") {
        return io::to_dot(a);
      }
      if (task == "closure") {
        return json_out ? io::emit(a) : to_string(a) + "\n";
      }
      if (task == "components") {
        if (!json_out) {
          return blocks_text(a.components()) + "\n";
        }
        json blocks = json::array();
        for (auto const& b : a.components()) {
          blocks.push_back(io::subset_json(b));
        }
        return json{{"kind", "components"}, {"blocks", blocks}}.dump() + "\n";
      }
      if (task == "classify") {
        auto const c = classify(a);
        if (!json_out) {
          return std::string("equivalence relation: ")
                 + (c.is_equivalence_object ? "yes" : "no")
                 + "\npartial order: " + (c.is_partial_order_object ? "yes" : "no")
                 + "\ndiscrete: " + (c.is_discrete ? "yes" : "no") + "\n";
        }
        return json{{"kind", "classification"},
                    {"equivalence", c.is_equivalence_object},
                    {"partial_order", c.is_partial_order_object},
                    {"discrete", c.is_discrete}}
                   .dump()
               + "\n";
      }
      auto const seq = torsion_sequence(a);
      if (!json_out) {
        return "kernel part: " + morphism_text(seq.kernel_part)
               + "\nquotient part: " + morphism_text(seq.quotient_part) + "\n";
      }
      return json{{"kind", "torsion_sequence"},
                  {"kernel_part", io::to_json(seq.kernel_part)},
                  {"quotient_part", io::to_json(seq.quotient_part)}}
                 .dump()
             + "\n";
    }

    if (task == "zkernel" || task == "zcokernel") {
      auto const& f = expect<Morphism>(docs[0], task, "morphism");
      auto const  r = task == "zkernel" ? z_kernel(f) : z_cokernel(f);
      return json_out ? io::emit(r) : morphism_text(r) + "\n";
    }

    if (task == "stabeq") {
      auto const p1 = as_partial(docs[0], task);
      auto const p2 = as_partial(docs[1], task);
      auto const r  = congruence(p1, p2);
      if (r.witness) {
        auto const& w = *r.witness;
        if (!json_out) {
          return "congruent: A0 = " + blocks_text(std::span(&w.a0, 1))
                 + ", complements " + blocks_text(std::span(&w.complements.first, 1))
                 + " " + blocks_text(std::span(&w.complements.second, 1)) + "\n";
        }
        return json{{"kind", "congruence"},
                    {"congruent", true},
                    {"a0", io::subset_json(w.a0)},
                    {"complements",
                     json::array({io::subset_json(w.complements.first),
                                  io::subset_json(w.complements.second)})}}
                   .dump()
               + "\n";
      }
      auto const  c     = *r.offending_component;
      auto const& block = p1.dom().components()[c];
      if (!json_out) {
        return "not congruent: component " + std::to_string(c) + " "
               + blocks_text(std::span(&block, 1)) + "\n";
      }
      return json{{"kind", "congruence"},
                  {"congruent", false},
                  {"offending_component", c},
                  {"component", io::subset_json(block)}}
                 .dump()
             + "\n";
    }

    if (task == "compose") {
      bool const total = std::all_of(docs.begin(), docs.end(), [](auto const& d) {
        return std::holds_alternative<Morphism>(d);
      });
      if (total) {
        auto acc = std::get<Morphism>(docs[0]);
        for (std::size_t k = 1; k < docs.size(); ++k) {
          acc = compose(std::get<Morphism>(docs[k]), acc);
        }
        return json_out ? io::emit(acc) : morphism_text(acc) + "\n";
      }
      auto acc = as_partial(docs[0], task);
      for (std::size_t k = 1; k < docs.size(); ++k) {
        acc = compose_partial(as_partial(docs[k], task), acc);
      }
      return json_out ? io::emit(acc) : to_string(acc) + "\n";
    }

    // cokernel in the stable category
    auto const s = canonicalize(as_partial(docs[0], task));
    auto const c = stab_cokernel(s);
    return json_out ? io::emit(c.underlying()) : to_string(c) + "\n";
  }

  int run_verify(VerifyArgs const& args) {
    std::vector<std::string_view> suites;
    if (args.suite == "all") {
      auto const names = suite_names();
      suites.assign(names.begin(), names.end());
    } else {
      suites.push_back(args.suite);
    }
    std::vector<SuiteReport> reports;
    for (auto name : suites) {
      reports.push_back(run_suite(name, args.max_size));
    }
    bool const passed = std::all_of(reports.begin(), reports.end(),
                                    [](auto const& r) { return r.passed(); });
    std::string text;
    if (args.format == "text") {
      for (auto const& r : reports) {
        text += io::report_text(r, args.timing);
      }
    } else if (reports.size() == 1) {
      text = io::report_json(reports[0], args.timing);
    } else {
      json all = json::array();
      for (auto const& r : reports) {
        all.push_back(io::to_json(r, args.timing));
      }
      text = json{{"kind", "suite_reports"}, {"passed", passed}, {"reports", all}}
                 .dump(2)
             + "\n";
    }
    write_output(args.out, text);
    return passed ? 0 : exit_fail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite preorders, their stable category, and verification "
               "suites"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto*       compute = app.add_subcommand("compute", "Run one computation");
  compute
      ->add_option("task", compute_args.task,
                   "closure, components, classify, torsion, zkernel, "
                   "zcokernel, stabeq, compose or cokernel")
      ->required();
  compute
      ->add_option("inputs", compute_args.inputs,
                   "Input documents (compose: in application order)")
      ->required();
  compute->add_flag("--close", compute_args.close,
                    "Close non-transitive preorders instead of rejecting them");
  compute->add_option("--format", compute_args.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  compute->add_option("--out", compute_args.out, "Write output here");

  VerifyArgs verify_args;
  auto*      verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_help = "Suite name or 'all':";
  for (auto name : suite_names()) {
    suite_help += " " + std::string(name);
  }
  verify->add_option("suite", verify_args.suite, suite_help)->required();
  verify->add_option("--max-size", verify_args.max_size,
                     "Largest carrier enumerated (default 3)");
  verify->add_option("--format", verify_args.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", verify_args.timing,
                   "Include elapsed time in the report");
  verify->add_option("--out", verify_args.out, "Write the report here");

  DotArgs dot_args;
  auto*   dot = app.add_subcommand("export-dot", "Render a preorder as DOT");
  dot->add_option("input", dot_args.input, "Preorder document")->required();
  dot->add_flag("--close", dot_args.close,
                "Close a non-transitive relation instead of rejecting it");
  dot->add_option("--out", dot_args.out, "Write output here");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*compute) {
      write_output(compute_args.out, run_compute(compute_args));
      return 0;
    }
    if (*verify) {
      return run_verify(verify_args);
    }
    auto const doc = io::read_document(dot_args.input, {dot_args.close});
    auto const* a  = std::get_if<Preorder>(&doc);
    if (a == nullptr) {
      throw usage_error("export-dot expects a preorder, got a "
                        + std::string(io::kind_name(doc)));
    }
    write_output(dot_args.out, io::to_dot(*a));
    return 0;
  } catch (usage_error const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (parse_error const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (validation_error const& e) {
    std::cerr << "validation error: " << e.what() << "\n";
  } catch (dimension_error const& e) {
    std::cerr << "validation error: " << e.what() << "\n";
  } catch (composition_error const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (resource_error const& e) {
    std::cerr << "resource error: " << e.what() << "\n";
  }
  return exit_usage;
}
