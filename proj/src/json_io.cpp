#include "supercup/json_io.hpp"

namespace supercup {

namespace {

json set_to_json(const std::set<Int>& s) { return json(std::vector<Int>(s.begin(), s.end())); }

std::string bigint_str(const BigInt& x) { return x.str(); }

}  // namespace

json to_json(const SuperWeight& w) {
  return json{{"m", w.m}, {"n", w.n}, {"top", w.top}, {"bottom", w.bottom}};
}

SuperWeight weight_from_json(const json& j) {
  return SuperWeight(j.at("m").get<int>(), j.at("n").get<int>(),
                     j.at("top").get<std::vector<Int>>(), j.at("bottom").get<std::vector<Int>>());
}

json to_json(const WeightDiagram& d) {
  return json{{"m", d.m},
              {"n", d.n},
              {"vees", set_to_json(d.vees)},
              {"crosses", set_to_json(d.crosses)},
              {"circles", set_to_json(d.circles)}};
}

WeightDiagram diagram_from_json(const json& j) {
  auto as_set = [&](const char* key) {
    auto v = j.at(key).get<std::vector<Int>>();
    return std::set<Int>(v.begin(), v.end());
  };
  return WeightDiagram(as_set("vees"), as_set("crosses"), as_set("circles"),
                       j.at("m").get<int>(), j.at("n").get<int>());
}

json to_json(const SignedDecomposition& dec) {
  json summands = json::array();
  for (const SignedSummand& s : dec.summands) {
    json entry{{"weight", to_json(s.weight)},
               {"parity", s.parity_shift},
               {"multiplicity", s.multiplicity}};
    if (is_maximal_atypical(s.weight)) {
      entry["classical"] =
          classical_core_weight(block_label(s.weight), s.weight.m - s.weight.n).entries;
      entry["principal"] = to_json(eta0_reduce(s.weight));
    }
    summands.push_back(std::move(entry));
  }
  return json{{"summands", std::move(summands)}, {"negligible_dropped", dec.dropped_negligible}};
}

SignedDecomposition decomposition_from_json(const json& j) {
  SignedDecomposition dec;
  dec.dropped_negligible = j.at("negligible_dropped").get<bool>();
  for (const json& e : j.at("summands"))
    dec.summands.push_back({weight_from_json(e.at("weight")), e.at("parity").get<int>(),
                            e.at("multiplicity").get<long long>()});
  return dec;
}

json to_json(const PrincipalFusionSpec& spec) {
  return json{{"family", PrincipalFusionSpec::family_to_string(spec.family)},
              {"degree", spec.degree},
              {"twist", spec.twist},
              {"realization", spec.dual_realization ? "dual-standard" : "standard"}};
}

PrincipalFusionSpec fusion_spec_from_json(const json& j) {
  PrincipalFusionSpec spec;
  spec.family = PrincipalFusionSpec::family_from_string(j.at("family").get<std::string>());
  spec.degree = j.at("degree").get<int>();
  spec.twist = j.value("twist", 0LL);
  std::string real = j.value("realization", std::string("standard"));
  if (real != "standard" && real != "dual-standard")
    throw ValidationError("fusion spec: unknown realization '" + real + "'");
  spec.dual_realization = real == "dual-standard";
  return spec;
}

json to_json(const SplitWeight& s) {
  return json{{"classical", s.classical.entries},
              {"principal", to_json(s.principal)},
              {"pi_power", s.pi_power}};
}

json to_json(const SemisimpleImage& im) {
  if (im.zero) return json{{"zero", true}};
  return json{{"classical", im.classical.entries},
              {"principal", to_json(im.principal)},
              {"parity", im.parity},
              {"ber_core_power", im.ber_core_power}};
}

json to_json(const FusionResult& r) {
  json summands = json::array();
  for (const FusionSummand& s : r.summands) {
    json entry{{"classical", s.classical.entries}, {"multiplicity", s.multiplicity}};
    if (std::holds_alternative<SuperWeight>(s.principal)) {
      const auto& w = std::get<SuperWeight>(s.principal);
      entry["weight"] = to_json(w);
      entry["parity"] = parity(w);
    } else if (std::holds_alternative<GroupRepLabel>(s.principal)) {
      const auto& lab = std::get<GroupRepLabel>(s.principal);
      entry["label"] = json{{"name", lab.name}, {"dim", bigint_str(lab.dim)}, {"twist", lab.twist}};
    }
    summands.push_back(std::move(entry));
  }
  json out{{"level", r.level == FusionResult::Level::Blockwise ? "blockwise" : "full"},
           {"summands", std::move(summands)},
           {"negligible_dropped", r.negligible_dropped}};
  if (!r.warning.empty()) out["warning"] = r.warning;
  return out;
}

FusionResult fusion_result_from_json(const json& j) {
  FusionResult r;
  r.level = j.at("level").get<std::string>() == "blockwise" ? FusionResult::Level::Blockwise
                                                            : FusionResult::Level::Full;
  r.negligible_dropped = j.at("negligible_dropped").get<bool>();
  r.warning = j.value("warning", std::string());
  for (const json& e : j.at("summands")) {
    FusionSummand s;
    s.classical = ClassicalWeight(e.at("classical").get<std::vector<Int>>());
    s.multiplicity = e.at("multiplicity").get<long long>();
    if (e.contains("weight")) {
      s.principal = weight_from_json(e.at("weight"));
    } else if (e.contains("label")) {
      const json& lab = e.at("label");
      s.principal = GroupRepLabel{lab.at("name").get<std::string>(),
                                  BigInt(lab.at("dim").get<std::string>()),
                                  lab.at("twist").get<Int>()};
    }
    r.summands.push_back(std::move(s));
  }
  return r;
}

json to_json(const DeterminantExpr& d) {
  json out{{"classical_det_power", bigint_str(d.classical_det_power)},
           {"principal_resolved", d.principal_resolved},
           {"display", d.to_string()}};
  if (d.principal_resolved) {
    out["principal_ber_power"] = bigint_str(d.principal_ber_power);
  } else {
    out["principal_multiplier"] = bigint_str(d.principal_multiplier);
    out["principal_weight"] = to_json(d.principal_weight);
  }
  return out;
}

json to_json(const KacBijectionReport& r) {
  json pairs = json::array();
  for (const auto& [reduced, full] : r.pairs)
    pairs.push_back(json{{"reduced", to_json(reduced)}, {"full", to_json(full)}});
  return json{{"reduced_kac", to_json(r.reduced)},
              {"pairs", std::move(pairs)},
              {"full_factor_count", r.full_factor_count}};
}

}  // namespace supercup
