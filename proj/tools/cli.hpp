#pragma once

// `snf` command line. run() is kept free of process state so tests can drive
// it in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "snf/snf.hpp"

namespace snf::cli {

enum Exit : int { ok = 0, negative = 1, bad_input = 2, usage = 3 };

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw input_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_target(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw input_error("cannot write '" + path + "'");
}

inline std::string slice_listing(const FractalSpec& spec, bool closed) {
  std::ostringstream os;
  if (closed) {
    const auto cs = closed_slices(spec);
    for (std::size_t s = 0; s < cs.size(); ++s) {
      os << "slice " << s + 1;
      for (auto i : cs[s]) os << ' ' << i;
      os << '\n';
    }
    return os.str();
  }
  const auto s = slices(spec);
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << "cell " << i << ' ';
    if (s[i] == central_slice)
      os << "central";
    else
      os << s[i];
    os << '\n';
  }
  return os.str();
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple nested fractals: validation, good labeling property, generators"};
  app.name("snf");
  app.require_subcommand(1);

  std::string file, method = "general", svg_path, out_path, kind, name;
  int level = 2, k = 0, cells = 0;
  std::uint64_t seed = 0;
  bool closed = false, symmetrize = false, show_classes = false, show_slices = false;
  std::vector<int> indices;

  auto* validate_cmd = app.add_subcommand("validate", "Check the nested-fractal axioms");
  validate_cmd->add_option("file", file, "Spec file, - for stdin")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide the good labeling property");
  decide_cmd->add_option("file", file, "Spec file, - for stdin")->required();
  decide_cmd->add_option("--method", method, "Decision procedure")
      ->check(CLI::IsMember({"general", "even", "odd", "slices"}));

  auto* label_cmd = app.add_subcommand("label", "Decide and draw the labelled configuration");
  label_cmd->add_option("file", file, "Spec file, - for stdin")->required();
  label_cmd->add_option("--svg", svg_path, "SVG output path, - for stdout")->required();
  label_cmd->add_flag("--classes", show_classes, "Mark bipartition classes (even k)");
  label_cmd->add_flag("--slices", show_slices, "Draw slice axes");

  auto* slices_cmd = app.add_subcommand("slices", "Slice assignment or slice sub-configuration");
  slices_cmd->add_option("file", file, "Spec file, - for stdin")->required();
  slices_cmd->add_flag("--closed", closed, "Use closed slices");
  slices_cmd->add_option("--index", indices, "Slice ids to extract (1..k)");

  auto* expand_cmd = app.add_subcommand("expand", "Substitute the configuration into itself");
  expand_cmd->add_option("file", file, "Spec file, - for stdin")->required();
  expand_cmd->add_option("--level", level, "Level M (1..3)")->required();

  auto* generate_cmd = app.add_subcommand("generate", "Constructive example or counterexample");
  generate_cmd->add_option("--k", k, "Number of essential fixed points")->required();
  generate_cmd->add_option("--kind", kind, "glp or noglp")->required()->check(CLI::IsMember({"glp", "noglp"}));
  generate_cmd->add_option("--out", out_path, "Output path (default stdout)");

  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a named example; lists names when none is given");
  catalog_cmd->add_option("--name,name", name, "Catalog entry");

  auto* random_cmd = app.add_subcommand("random", "Seeded random valid configuration");
  random_cmd->add_option("--k", k, "Number of essential fixed points")->required();
  random_cmd->add_option("--cells", cells, "Target number of cells")->required();
  random_cmd->add_option("--seed", seed, "Random seed")->required();
  random_cmd->add_flag("--symmetrize", symmetrize, "Produce a full symmetric configuration");

  auto* classify_cmd = app.add_subcommand("classify", "Whether every configuration with this k has GLP");
  classify_cmd->add_option("--k", k, "Number of essential fixed points")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "snf: " << e.what() << '\n';
    return usage;
  }

  try {
    auto load = [&] { return parse(read_source(file, in)); };

    if (validate_cmd->parsed()) {
      const auto report = validate(load());
      out << format_report(report);
      return report.valid() ? ok : negative;
    }
    if (decide_cmd->parsed()) {
      const auto spec = load();
      if (method == "general") {
        const auto v = decide_glp(spec);
        out << serialize_verdict(v);
        return v.has_glp() ? ok : negative;
      }
      if (method == "even") {
        if (spec.k() % 2 != 0) throw input_error("--method even needs even k");
        const auto v = decide_glp_even(spec).verdict;
        out << serialize_verdict(v);
        return v.has_glp() ? ok : negative;
      }
      if (method == "odd") {
        if (spec.k() % 2 == 0) throw input_error("--method odd needs odd k");
        const auto v = decide_glp_odd(spec);
        out << serialize_verdict(v);
        return v.has_glp() ? ok : negative;
      }
      if (!validate(spec).valid()) throw input_error("--method slices needs a valid configuration");
      const auto sv = glp_via_slices(spec);
      out << serialize_verdict(sv.verdict, &sv.examined.origin);
      return sv.verdict.has_glp() ? ok : negative;
    }
    if (label_cmd->parsed()) {
      const auto spec = load();
      const auto v = decide_glp(spec);
      RenderOptions options;
      options.show_labels = true;
      options.show_classes = show_classes;
      options.show_slices = show_slices;
      write_target(svg_path, render_svg(spec, &v, options), out);
      if (svg_path != "-") out << serialize_verdict(v);
      return v.has_glp() ? ok : negative;
    }
    if (slices_cmd->parsed()) {
      const auto spec = load();
      if (indices.empty()) {
        out << slice_listing(spec, closed);
        return ok;
      }
      const auto sub = slice_subspec(spec, indices, closed);
      std::string origin = "origin";
      for (auto i : sub.origin) origin += ' ' + std::to_string(i);
      out << serialize(sub.spec, {origin});
      return ok;
    }
    if (expand_cmd->parsed()) {
      const auto spec = load();
      out << serialize(expand(spec, level), {"expand level=" + std::to_string(level)});
      return ok;
    }
    if (generate_cmd->parsed()) {
      std::string text;
      if (kind == "glp") {
        const auto recipe = example_recipe(k);
        text = serialize(generate_glp_example(k),
                         {"generate k=" + std::to_string(k) + " kind=glp ring_cells=" + std::to_string(recipe.ring_cells)});
      } else {
        const auto recipe = counterexample_recipe(k);
        text = serialize(generate_counterexample(k), {"generate k=" + std::to_string(k) + " kind=noglp n=" +
                                                       std::to_string(recipe.n) + " r=" + std::to_string(recipe.r)});
      }
      write_target(out_path, text, out);
      return ok;
    }
    if (catalog_cmd->parsed()) {
      if (name.empty()) {
        for (auto n : catalog_names) out << n << '\n';
        return ok;
      }
      out << serialize(catalog(name), {"catalog " + name});
      return ok;
    }
    if (random_cmd->parsed()) {
      const auto spec = random_valid_spec(k, cells, seed, symmetrize);
      out << serialize(spec, {"random k=" + std::to_string(k) + " cells=" + std::to_string(cells) +
                                  " seed=" + std::to_string(seed) + (symmetrize ? " symmetrize" : "")});
      return ok;
    }
    if (classify_cmd->parsed()) {
      out << to_string(classify_k(k)) << '\n';
      return ok;
    }
  } catch (const std::exception& e) {
    err << "snf: " << e.what() << '\n';
    return bad_input;
  }
  return usage;
}

}  // namespace snf::cli
