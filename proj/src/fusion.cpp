#include "supercup/fusion.hpp"

#include <algorithm>
#include <sstream>

namespace supercup {

namespace {

struct SummandOrder {
  bool operator()(const FusionSummand& a, const FusionSummand& b) const {
    if (!(a.classical == b.classical)) return a.classical < b.classical;
    if (a.principal.index() != b.principal.index())
      return a.principal.index() < b.principal.index();
    if (std::holds_alternative<SuperWeight>(a.principal))
      return std::get<SuperWeight>(a.principal) < std::get<SuperWeight>(b.principal);
    if (std::holds_alternative<GroupRepLabel>(a.principal)) {
      const auto& la = std::get<GroupRepLabel>(a.principal);
      const auto& lb = std::get<GroupRepLabel>(b.principal);
      if (la.name != lb.name) return la.name < lb.name;
      return la.twist < lb.twist;
    }
    return false;
  }
};

void sort_summands(FusionResult& r) {
  std::sort(r.summands.begin(), r.summands.end(), SummandOrder{});
}

void require_same_category(const SuperWeight& w1, const SuperWeight& w2) {
  if (w1.m != w2.m || w1.n != w2.n)
    throw ValidationError("tensor: weights live in different GL(m|n)");
}

void require_max_atypical(const SuperWeight& w, const char* op) {
  if (!is_maximal_atypical(w))
    throw ValidationError(std::string(op) + ": weight is not maximal atypical");
}

}  // namespace

long long FusionResult::total_multiplicity() const {
  long long t = 0;
  for (const auto& s : summands) t += s.multiplicity;
  return t;
}

bool is_negligible_irreducible(const SuperWeight& w) { return atypicality(w) < w.n; }

SplitWeight splice(const SuperWeight& w) {
  require_max_atypical(w, "splice");
  auto [st, steps] = stabilize(w);
  const int r = w.m - w.n;
  SplitWeight out;
  out.classical = ClassicalWeight(std::vector<Int>(st.top.begin(), st.top.begin() + r));
  std::vector<Int> mu(st.top.begin() + r, st.top.end());
  std::vector<Int> neg(mu.rbegin(), mu.rend());
  for (Int& x : neg) x = -x;
  out.principal = SuperWeight(w.n, w.n, std::move(mu), std::move(neg));
  out.pi_power = steps;
  return out;
}

SemisimpleImage image(const SuperWeight& w) {
  SemisimpleImage out;
  if (is_negligible_irreducible(w)) {
    out.zero = true;
    return out;
  }
  SplitWeight sp = splice(w);
  out.classical = sp.classical;
  // undoing the N left shifts multiplies the principal part by Ber_{n|n}^N
  out.principal = berezin_twist(sp.principal, sp.pi_power);
  out.parity = parity(w);
  out.ber_core_power = sp.pi_power;
  return out;
}

BigInt sdim(const SuperWeight& w) {
  if (is_negligible_irreducible(w)) return 0;
  DsPaths p = ds_paths(w);
  return BigInt(p.sign) * p.path_count * weyl_dim(p.core);
}

FusionResult tensor_blockwise(const SuperWeight& w1, const SuperWeight& w2) {
  require_same_category(w1, w2);
  require_max_atypical(w1, "tensor_blockwise");
  require_max_atypical(w2, "tensor_blockwise");
  const int r = w1.m - w1.n;
  ClassicalWeight c1 = classical_core_weight(block_label(w1), r);
  ClassicalWeight c2 = classical_core_weight(block_label(w2), r);
  FusionResult out;
  out.level = FusionResult::Level::Blockwise;
  for (const auto& [nu, mult] : lr_coefficients(c1, c2))
    out.summands.push_back({nu, std::monostate{}, mult});
  sort_summands(out);
  return out;
}

namespace {

// Ground-state normal form: w = Pi^N (x) Ber^b (x) S_mu(V) with mu_r = 0.
struct GroundStateForm {
  std::vector<Int> mu;  // partition, at most r parts, mu_r = 0
  Int ber = 0;          // b
  long long shifts = 0; // N
};

GroundStateForm ground_state_form(const SuperWeight& w) {
  if (!is_ground_state(w))
    throw ValidationError("tensor_ground_states: " + w.to_string() + " is not a ground state");
  const int r = w.m - w.n;
  GroundStateForm out;
  if (r == 0) {
    // [c,...,c] = Ber^c; Pi degenerates to Ber^{-1}, no shift needed
    out.ber = w.n > 0 ? w.top[0] : 0;
    return out;
  }
  Int lr = w.top[r - 1];
  out.shifts = lr - w.top[r];
  out.ber = lr;
  for (int i = 0; i < r; ++i) out.mu.push_back(w.top[i] - lr);
  return out;
}

}  // namespace

FusionResult tensor_ground_states(const SuperWeight& w1, const SuperWeight& w2) {
  require_same_category(w1, w2);
  GroundStateForm g1 = ground_state_form(w1), g2 = ground_state_form(w2);
  const int r = w1.m - w1.n, m = w1.m, n = w1.n;

  FusionResult out;
  out.level = FusionResult::Level::Full;
  const Int ber = g1.ber + g2.ber;
  const long long shifts = g1.shifts + g2.shifts;
  for (const auto& [nu, mult] : lr_partition_product(g1.mu, g2.mu, m)) {
    if (!is_covariant_max_atypical(nu, r)) continue;  // negligible summand
    std::vector<Int> top(m, ber);
    for (size_t i = 0; i < nu.size(); ++i) top[i] += nu[i];
    SuperWeight summand(m, n, std::move(top), std::vector<Int>(n, -ber));
    for (long long s = 0; s < shifts; ++s) summand = pi_shift_any_rank(summand);
    ClassicalWeight block = classical_core_weight(block_label(summand), r);
    out.summands.push_back({std::move(block), std::move(summand), mult});
  }
  sort_summands(out);
  return out;
}

FusionResult tensor_mod_negligible(const SuperWeight& w1, const SuperWeight& w2,
                                   const PrincipalFusionSpec& spec1,
                                   const PrincipalFusionSpec& spec2) {
  require_same_category(w1, w2);
  require_max_atypical(w1, "tensor_mod_negligible");
  require_max_atypical(w2, "tensor_mod_negligible");
  FusionResult blocks = tensor_blockwise(w1, w2);

  using Family = PrincipalFusionSpec::Family;
  if (spec1.family == Family::Opaque || spec2.family == Family::Opaque)
    throw FusionNeedsExternalTable("opaque group family: requires external fusion table",
                                   blocks);

  // fusion spec degrees must match the superdimension of the principal part
  for (const auto& [w, spec] : {std::pair{&w1, &spec1}, std::pair{&w2, &spec2}}) {
    long long mw = ds_paths(*w).path_count;
    if (spec->degree != mw)
      throw ValidationError("fusion spec degree " + std::to_string(spec->degree) +
                            " does not match the principal superdimension " +
                            std::to_string(mw) + " of " + w->to_string());
  }

  FusionResult out;
  out.level = FusionResult::Level::Full;
  const bool same_group = spec1.family == spec2.family && spec1.degree == spec2.degree;
  if (same_group) {
    RepLabel a{spec1.dual_realization, spec1.twist};
    RepLabel b{spec2.dual_realization, spec2.twist};
    std::vector<GroupRepLabel> labels = group_fusion(spec1, a, b);
    if (spec1.family == Family::SL)
      out.warning = "SL family passed through GL tables; exceptional (SD) cases unresolved";
    for (const auto& blk : blocks.summands)
      for (const auto& lab : labels) out.summands.push_back({blk.classical, lab, blk.multiplicity});
  } else {
    // inequivalent principal parts: the external product stays indecomposable
    GroupRepLabel external{"external", BigInt(spec1.degree) * spec2.degree,
                           spec1.twist + spec2.twist};
    for (const auto& blk : blocks.summands)
      out.summands.push_back({blk.classical, external, blk.multiplicity});
  }
  sort_summands(out);
  return out;
}

std::string DeterminantExpr::to_string() const {
  std::ostringstream os;
  os << "det^" << classical_det_power << " (x) ";
  if (principal_resolved) {
    os << "Ber^" << principal_ber_power;
  } else {
    os << "Ber^(" << principal_multiplier << "*l(" << principal_weight.to_string() << "))";
  }
  return os.str();
}

DeterminantExpr determinant(const SuperWeight& w) {
  require_max_atypical(w, "determinant");
  SemisimpleImage im = image(w);
  DsPaths paths = ds_paths(w);
  const BigInt a = paths.path_count;        // |sdim| of the principal part
  const BigInt b = weyl_dim(im.classical);  // dim of the classical part

  DeterminantExpr out;
  out.classical_det_power = a * det_exponent(im.classical);
  out.principal_weight = im.principal;
  out.principal_multiplier = b;
  if (paths.path_count == 1) {
    // one-dimensional principal part [c,...,c] = Ber^c; det is the object itself
    Int c = w.n > 0 ? im.principal.top[0] : 0;
    for (Int x : im.principal.top)
      if (x != c)
        throw InternalInconsistency("determinant: m(lambda)=1 but principal part not nested");
    out.principal_resolved = true;
    out.principal_ber_power = b * c;
  }
  return out;
}

}  // namespace supercup
