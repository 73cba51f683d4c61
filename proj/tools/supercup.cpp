// supercup -- command-line front end for the GL(m|n) cup-diagram engine.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "supercup/json_io.hpp"
#include "supercup/parse.hpp"
#include "supercup/render.hpp"

namespace {

using namespace supercup;

struct Options {
  bool as_json = false;
  std::string style = "unicode";

  RenderStyle render_style() const {
    return style == "ascii" ? RenderStyle::Ascii : RenderStyle::Unicode;
  }
};

void print_decomposition(const SignedDecomposition& dec, const Options& opt) {
  if (opt.as_json) {
    std::cout << to_json(dec).dump(2) << '\n';
    return;
  }
  if (dec.summands.empty()) {
    std::cout << "0 (negligible)\n";
    return;
  }
  for (const SignedSummand& s : dec.summands) {
    std::cout << "par^" << s.parity_shift << " L(" << s.weight.to_string() << ") x"
              << s.multiplicity << '\n';
  }
}

void print_fusion(const FusionResult& r, const Options& opt) {
  if (opt.as_json) {
    std::cout << to_json(r).dump(2) << '\n';
    return;
  }
  if (!r.warning.empty()) std::cout << "warning: " << r.warning << '\n';
  for (const FusionSummand& s : r.summands) {
    std::cout << "block " << s.classical.to_string();
    if (std::holds_alternative<SuperWeight>(s.principal))
      std::cout << " : L(" << std::get<SuperWeight>(s.principal).to_string() << ")";
    else if (std::holds_alternative<GroupRepLabel>(s.principal)) {
      const auto& lab = std::get<GroupRepLabel>(s.principal);
      std::cout << " (x) " << lab.name << "[dim " << lab.dim << ", twist " << lab.twist << "]";
    }
    std::cout << " x" << s.multiplicity << '\n';
  }
  std::cout << "total multiplicity: " << r.total_multiplicity() << '\n';
}

std::pair<PrincipalFusionSpec, PrincipalFusionSpec> load_specs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open fusion spec file: " + path);
  json j = json::parse(in);
  if (j.contains("first") || j.contains("second"))
    return {fusion_spec_from_json(j.at("first")), fusion_spec_from_json(j.at("second"))};
  PrincipalFusionSpec spec = fusion_spec_from_json(j);
  return {spec, spec};
}

int run(int argc, char** argv) {
  CLI::App app{"supercup: exact cup-diagram combinatorics for GL(m|n)"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_option("--style", opt.style, "diagram style")
      ->check(CLI::IsMember({"ascii", "unicode"}))
      ->capture_default_str();

  std::string warg, warg2, fusion_file;
  int power = 1;
  bool paths = false, ground = false;

  auto* cmd_diagram = app.add_subcommand("diagram", "weight and cup diagram");
  cmd_diagram->add_option("weight", warg)->required();

  auto* cmd_ds = app.add_subcommand("ds", "Duflo-Serganova functor");
  cmd_ds->add_option("weight", warg)->required();
  cmd_ds->add_option("--power", power, "apply DS^k");
  cmd_ds->add_flag("--paths", paths, "report the path count m(lambda) and sign");

  auto* cmd_dual = app.add_subcommand("dual", "dual weight");
  cmd_dual->add_option("weight", warg)->required();

  auto* cmd_stab = app.add_subcommand("stabilize", "smallest negatively stable Pi-shift");
  cmd_stab->add_option("weight", warg)->required();

  auto* cmd_splice = app.add_subcommand("splice", "classical x principal factorization");
  cmd_splice->add_option("weight", warg)->required();

  auto* cmd_image = app.add_subcommand("image", "image in the semisimplification");
  cmd_image->add_option("weight", warg)->required();

  auto* cmd_sdim = app.add_subcommand("sdim", "superdimension");
  cmd_sdim->add_option("weight", warg)->required();

  auto* cmd_blocks = app.add_subcommand("blocks", "blockwise tensor decomposition");
  cmd_blocks->add_option("weight1", warg)->required();
  cmd_blocks->add_option("weight2", warg2)->required();

  auto* cmd_tensor = app.add_subcommand("tensor", "tensor decomposition modulo negligibles");
  cmd_tensor->add_option("weight1", warg)->required();
  cmd_tensor->add_option("weight2", warg2)->required();
  cmd_tensor->add_option("--fusion", fusion_file, "principal fusion spec (JSON)");
  cmd_tensor->add_flag("--ground-state", ground, "use the autonomous ground-state route");

  auto* cmd_kac = app.add_subcommand("kac", "Kac module composition factors");
  cmd_kac->add_option("weight", warg)->required();

  auto* cmd_det = app.add_subcommand("det", "determinant of the image");
  cmd_det->add_option("weight", warg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are validation errors
  }

  if (cmd_diagram->parsed()) {
    SuperWeight w = parse_weight(warg);
    if (opt.as_json) {
      WeightDiagram d = weight_to_diagram(w);
      CupDiagram c = cup_diagram(d);
      json arcs = json::array();
      for (const Arc& a : c.arcs) arcs.push_back(json::array({a.left, a.right}));
      std::cout << json{{"weight", to_json(w)},
                        {"diagram", to_json(d)},
                        {"arcs", std::move(arcs)},
                        {"sectors", sectors(c).size()}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << render_diagram(w, opt.render_style());
    }
  } else if (cmd_ds->parsed()) {
    SuperWeight w = parse_weight(warg);
    SignedDecomposition dec = power == 1 ? ds(w) : ds_power(w, power);
    if (paths) {
      DsPaths p = ds_paths(w);
      if (opt.as_json) {
        json j = to_json(dec);
        j["paths"] = json{{"m", p.path_count},
                          {"sign", p.sign},
                          {"core", p.core.entries}};
        std::cout << j.dump(2) << '\n';
      } else {
        print_decomposition(dec, opt);
        std::cout << "m(lambda) = " << p.path_count << ", sign = " << (p.sign > 0 ? "+1" : "-1")
                  << ", core " << p.core.to_string() << '\n';
      }
    } else {
      print_decomposition(dec, opt);
    }
  } else if (cmd_dual->parsed()) {
    SuperWeight w = dual(parse_weight(warg));
    if (opt.as_json)
      std::cout << to_json(w).dump(2) << '\n';
    else
      std::cout << w.to_string() << '\n';
  } else if (cmd_stab->parsed()) {
    auto [st, steps] = stabilize(parse_weight(warg));
    if (opt.as_json)
      std::cout << json{{"weight", to_json(st)}, {"pi_power", steps}}.dump(2) << '\n';
    else
      std::cout << st.to_string() << "  (N = " << steps << ")\n";
  } else if (cmd_splice->parsed()) {
    SplitWeight s = splice(parse_weight(warg));
    if (opt.as_json)
      std::cout << to_json(s).dump(2) << '\n';
    else
      std::cout << "classical " << s.classical.to_string() << "\nprincipal L("
                << s.principal.to_string() << ")\npi_power " << s.pi_power << '\n';
  } else if (cmd_image->parsed()) {
    SemisimpleImage im = image(parse_weight(warg));
    if (opt.as_json)
      std::cout << to_json(im).dump(2) << '\n';
    else if (im.zero)
      std::cout << "0 (negligible)\n";
    else
      std::cout << "L" << im.classical.to_string() << " (x) L(" << im.principal.to_string()
                << "), parity " << im.parity << ", Ber_core^" << im.ber_core_power << '\n';
  } else if (cmd_sdim->parsed()) {
    std::cout << sdim(parse_weight(warg)) << '\n';
  } else if (cmd_blocks->parsed()) {
    print_fusion(tensor_blockwise(parse_weight(warg), parse_weight(warg2)), opt);
  } else if (cmd_tensor->parsed()) {
    SuperWeight w1 = parse_weight(warg), w2 = parse_weight(warg2);
    if (!fusion_file.empty()) {
      auto [s1, s2] = load_specs(fusion_file);
      print_fusion(tensor_mod_negligible(w1, w2, s1, s2), opt);
    } else if (ground || (is_ground_state(w1) && is_ground_state(w2))) {
      print_fusion(tensor_ground_states(w1, w2), opt);
    } else {
      throw ExternalFusionRequired(
          "inputs are not ground states: pass --fusion with the principal fusion data");
    }
  } else if (cmd_kac->parsed()) {
    SuperWeight w = parse_weight(warg);
    auto factors = kac_composition_factors(w);
    if (opt.as_json) {
      json arr = json::array();
      for (const SuperWeight& f : factors) arr.push_back(to_json(f));
      std::cout << json{{"factors", std::move(arr)}}.dump(2) << '\n';
    } else {
      for (const SuperWeight& f : factors) std::cout << "L(" << f.to_string() << ")\n";
    }
  } else if (cmd_det->parsed()) {
    DeterminantExpr d = determinant(parse_weight(warg));
    if (opt.as_json)
      std::cout << to_json(d).dump(2) << '\n';
    else
      std::cout << d.to_string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ExternalFusionRequired& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
