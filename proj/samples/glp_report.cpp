// Reads a spec file, reports validity and the labeling verdict by every
// applicable route, and writes a labelled drawing next to it.
//
//   glp_report samples/specs/sierpinski-hexagon.snf

#include <fstream>
#include <iostream>
#include <sstream>

#include "snf/snf.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: glp_report <spec.snf>\n";
    return 3;
  }
  std::ifstream file(argv[1]);
  if (!file) {
    std::cerr << "cannot read " << argv[1] << '\n';
    return 2;
  }
  std::stringstream text;
  text << file.rdbuf();

  try {
    const auto spec = snf::parse(text.str());
    const auto report = snf::validate(spec);
    std::cout << "k=" << spec.k() << " cells=" << spec.size() << (spec.partial() ? " partial" : "") << '\n';
    std::cout << "k class: " << snf::to_string(snf::classify_k(spec.k())) << '\n';
    std::cout << "valid: " << (report.valid() ? "yes" : "no") << '\n';

    const auto verdict = snf::decide_glp(spec);
    std::cout << "general: " << (verdict.has_glp() ? "GLP" : "no GLP") << '\n';
    if (!verdict.has_glp()) {
      std::cout << "  witness cycle:";
      for (auto i : verdict.cycle()) std::cout << ' ' << i;
      std::cout << '\n';
    }

    if (spec.k() % 2 == 0) {
      const auto bv = snf::decide_glp_even(spec);
      std::cout << "two-colouring: " << (bv.verdict.has_glp() ? "found" : "odd cycle") << '\n';
    } else {
      std::cout << "rotation-count check: " << (snf::decide_glp_odd(spec).has_glp() ? "GLP" : "no GLP") << '\n';
    }

    if (report.valid() && !spec.partial()) {
      const auto sv = snf::glp_via_slices(spec);
      std::cout << "slices (" << snf::to_string(sv.route) << ", " << sv.examined.spec.size()
                << " cells examined): " << (sv.verdict.has_glp() ? "GLP" : "no GLP") << '\n';
    }

    snf::RenderOptions options;
    options.show_labels = true;
    options.show_classes = spec.k() % 2 == 0;
    const std::string out = std::string(argv[1]) + ".svg";
    std::ofstream(out) << snf::render_svg(spec, &verdict, options);
    std::cout << "drawing: " << out << '\n';
    return verdict.has_glp() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
