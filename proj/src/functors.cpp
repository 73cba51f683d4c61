#include "supercup/functors.hpp"

#include <algorithm>
#include <map>

namespace supercup {

namespace {

int parity_shift_between(const SuperWeight& from, const SuperWeight& to) {
  return ((parity(from) - parity(to)) % 2 + 2) % 2;
}

void sort_canonically(SignedDecomposition& dec) {
  std::sort(dec.summands.begin(), dec.summands.end(),
            [](const SignedSummand& a, const SignedSummand& b) { return a.weight < b.weight; });
}

// Remove one outer cup together with its v; the result lives in T_{m-1|n-1}
// in the block of the same crosses and circles.
WeightDiagram remove_outer_cup(const WeightDiagram& d, Int vee) {
  std::set<Int> vees = d.vees;
  vees.erase(vee);
  return WeightDiagram(std::move(vees), d.crosses, d.circles, d.m - 1, d.n - 1);
}

}  // namespace

SignedDecomposition ds(const SuperWeight& w) {
  if (w.m == 0 || w.n == 0)
    throw ValidationError("ds: GL(m|n) needs m >= 1 and n >= 1");
  SignedDecomposition out;
  WeightDiagram d = weight_to_diagram(w);
  if (atypicality(d) == 0) return out;  // projective, killed modulo negligibles

  for (const Sector& s : sectors(cup_diagram(d))) {
    SuperWeight part = diagram_to_weight(remove_outer_cup(d, s.outer.left));
    int shift = parity_shift_between(w, part);
    out.summands.push_back({std::move(part), shift, 1});
  }
  sort_canonically(out);
  return out;
}

SignedDecomposition ds_power(const SuperWeight& w, int k) {
  if (k < 0) throw ValidationError("ds_power: negative power");
  std::map<SuperWeight, long long> level{{w, 1}};
  for (int step = 0; step < k; ++step) {
    std::map<SuperWeight, long long> next;
    for (const auto& [cur, mult] : level)
      for (const SignedSummand& s : ds(cur).summands) next[s.weight] += mult;
    level = std::move(next);
  }
  SignedDecomposition out;
  for (const auto& [end, mult] : level)
    out.summands.push_back({end, parity_shift_between(w, end), mult});
  sort_canonically(out);
  return out;
}

namespace {

struct PathInfo {
  long long count = 0;
  ClassicalWeight core;
};

PathInfo count_paths(const WeightDiagram& d, std::map<std::string, PathInfo>& memo) {
  auto it = memo.find(d.key());
  if (it != memo.end()) return it->second;

  PathInfo info;
  if (d.vees.empty()) {
    info.count = 1;
    info.core = classical_core_weight(block_label(d), d.m);
  } else {
    bool first = true;
    for (const Sector& s : sectors(cup_diagram(d))) {
      PathInfo sub = count_paths(remove_outer_cup(d, s.outer.left), memo);
      if (first) {
        info.core = sub.core;
        first = false;
      } else if (!(info.core == sub.core)) {
        throw InternalInconsistency("ds_paths: removal paths reach different classical cores");
      }
      info.count += sub.count;
    }
  }
  memo.emplace(d.key(), info);
  return info;
}

}  // namespace

DsPaths ds_paths(const SuperWeight& w) {
  if (!is_maximal_atypical(w))
    throw ValidationError("ds_paths: weight is not maximal atypical");
  std::map<std::string, PathInfo> memo;
  PathInfo info = count_paths(weight_to_diagram(w), memo);
  DsPaths out;
  out.path_count = info.count;
  out.sign = parity(w) % 2 == 0 ? 1 : -1;
  out.core = info.core;
  return out;
}

SuperWeight dual(const SuperWeight& w) {
  return diagram_to_weight(dual_diagram(cup_diagram(weight_to_diagram(w))));
}

namespace {

TranslationOutcome relabel(const WeightDiagram& d, Int i, Symbol left, Symbol right) {
  std::set<Int> vees = d.vees, crosses = d.crosses, circles = d.circles;
  for (auto* s : {&vees, &crosses, &circles}) {
    s->erase(i);
    s->erase(i + 1);
  }
  auto put = [&](Int pos, Symbol sym) {
    switch (sym) {
      case Symbol::Vee: vees.insert(pos); break;
      case Symbol::Cross: crosses.insert(pos); break;
      case Symbol::Circle: circles.insert(pos); break;
      case Symbol::Wedge: break;
    }
  };
  put(i, left);
  put(i + 1, right);
  TranslationOutcome out;
  out.kind = TranslationOutcome::Kind::Irreducible;
  out.weight = diagram_to_weight(
      WeightDiagram(std::move(vees), std::move(crosses), std::move(circles), d.m, d.n));
  return out;
}

TranslationOutcome non_irreducible() {
  TranslationOutcome out;
  out.kind = TranslationOutcome::Kind::NonIrreducible;
  return out;
}

}  // namespace

TranslationOutcome translate_F(Int i, const SuperWeight& w) {
  WeightDiagram d = weight_to_diagram(w);
  Symbol a = d.label(i), b = d.label(i + 1);
  using S = Symbol;
  if (a == S::Cross && b == S::Vee) return relabel(d, i, S::Vee, S::Cross);      // (i)
  if (a == S::Cross && b == S::Wedge) return relabel(d, i, S::Wedge, S::Cross);  // (ii)
  if (a == S::Vee && b == S::Circle) return relabel(d, i, S::Circle, S::Vee);    // (iii)
  if (a == S::Wedge && b == S::Circle) return relabel(d, i, S::Circle, S::Wedge);// (iv)
  if (a == S::Cross && b == S::Circle) return non_irreducible();                 // (v)
  if (a == S::Vee && b == S::Wedge) return relabel(d, i, S::Circle, S::Cross);   // (vi)
  return TranslationOutcome{};  // Zero
}

TranslationOutcome translate_E(Int i, const SuperWeight& w) {
  WeightDiagram d = weight_to_diagram(w);
  Symbol a = d.label(i), b = d.label(i + 1);
  using S = Symbol;
  if (a == S::Vee && b == S::Cross) return relabel(d, i, S::Cross, S::Vee);      // (i)
  if (a == S::Wedge && b == S::Cross) return relabel(d, i, S::Cross, S::Wedge);  // (ii)
  if (a == S::Circle && b == S::Vee) return relabel(d, i, S::Vee, S::Circle);    // (iii)
  if (a == S::Circle && b == S::Wedge) return relabel(d, i, S::Wedge, S::Circle);// (iv)
  if (a == S::Circle && b == S::Cross) return non_irreducible();                 // (v)
  return TranslationOutcome{};  // Zero
}

namespace {

SuperWeight pi_shift_impl(const SuperWeight& w) {
  if (!is_maximal_atypical(w))
    throw ValidationError("pi_shift: weight is not maximal atypical");
  WeightDiagram d = weight_to_diagram(w);
  std::set<Int> cores = d.cores();
  std::set<Int> moved;
  std::set<Int> pending = d.vees;  // not yet processed
  for (Int v : d.vees) {
    pending.erase(v);
    Int p = v - 1;
    while (cores.count(p) || moved.count(p) || pending.count(p)) --p;
    moved.insert(p);
  }
  return diagram_to_weight(WeightDiagram(std::move(moved), d.crosses, d.circles, d.m, d.n));
}

SuperWeight pi_unshift_impl(const SuperWeight& w) {
  if (!is_maximal_atypical(w))
    throw ValidationError("pi_shift inverse: weight is not maximal atypical");
  WeightDiagram d = weight_to_diagram(w);
  std::set<Int> cores = d.cores();
  std::set<Int> moved;
  std::set<Int> pending = d.vees;
  for (auto it = d.vees.rbegin(); it != d.vees.rend(); ++it) {
    Int v = *it;
    pending.erase(v);
    Int p = v + 1;
    while (cores.count(p) || moved.count(p) || pending.count(p)) ++p;
    moved.insert(p);
  }
  return diagram_to_weight(WeightDiagram(std::move(moved), d.crosses, d.circles, d.m, d.n));
}

}  // namespace

SuperWeight pi_shift(const SuperWeight& w) {
  if (w.m - w.n < 1) throw ValidationError("pi_shift: requires r = m - n >= 1");
  return pi_shift_impl(w);
}

SuperWeight pi_shift_any_rank(const SuperWeight& w) { return pi_shift_impl(w); }

SuperWeight pi_unshift_any_rank(const SuperWeight& w) { return pi_unshift_impl(w); }

std::pair<SuperWeight, long long> stabilize(const SuperWeight& w) {
  if (!is_maximal_atypical(w))
    throw ValidationError("stabilize: weight is not maximal atypical");
  SuperWeight cur = w;
  long long steps = 0;
  while (!is_negatively_stable(cur)) {
    cur = pi_shift_impl(cur);
    ++steps;
  }
  return {cur, steps};
}

SuperWeight ground_state(const BlockLabel& b, long long N, int m, int n) {
  if (N < 0) throw ValidationError("ground_state: N must be non-negative");
  if (!b.circles.empty())
    throw ValidationError("ground_state: block has circles, not maximal atypical");
  if (static_cast<int>(b.crosses.size()) != m - n)
    throw ValidationError("ground_state: block has the wrong number of crosses for GL(m|n)");
  Int j = b.crosses.empty() ? 1 : *b.crosses.begin();
  std::set<Int> vees;
  for (int i = 1; i <= n; ++i) vees.insert(j - i - N);
  return diagram_to_weight(WeightDiagram(std::move(vees), b.crosses, b.circles, m, n));
}

bool is_ground_state(const SuperWeight& w) {
  if (!is_maximal_atypical(w)) return false;
  WeightDiagram d = weight_to_diagram(w);
  if (d.vees.empty()) return true;  // n = 0: nothing to pack
  Int lo = *d.vees.begin(), hi = *d.vees.rbegin();
  if (hi - lo + 1 != static_cast<Int>(d.vees.size())) return false;  // packed
  if (d.crosses.empty()) return true;  // principal-type block: any Berezin power
  return hi < *d.crosses.begin();
}

SuperWeight eta0_reduce(const SuperWeight& w) {
  if (!is_maximal_atypical(w))
    throw ValidationError("eta0_reduce: weight is not maximal atypical");
  WeightDiagram d = weight_to_diagram(w);
  int k = atypicality(d);
  return diagram_to_weight(WeightDiagram(compacted_vees(d), {}, {}, k, k));
}

SuperWeight berezin_twist(const SuperWeight& w, Int k) {
  std::vector<Int> top = w.top, bottom = w.bottom;
  for (Int& x : top) x += k;
  for (Int& x : bottom) x -= k;
  return SuperWeight(w.m, w.n, std::move(top), std::move(bottom));
}

}  // namespace supercup
