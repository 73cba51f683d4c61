#include "supercup/kac.hpp"

#include <algorithm>
#include <functional>

namespace supercup {

std::vector<SuperWeight> kac_composition_factors(const SuperWeight& lambda, int window_scale) {
  if (window_scale < 1) throw ValidationError("kac: window scale must be >= 1");
  WeightDiagram d = weight_to_diagram(lambda);
  const int a = atypicality(d);
  if (a == 0) return {lambda};  // typical Kac modules are irreducible

  const Int left = *d.vees.begin(), right = *d.vees.rbegin();
  const Int cores = static_cast<Int>(d.crosses.size() + d.circles.size());
  // conservative bound: each arc of nu holds one lambda-v and nests at most
  // a-1 arcs plus core symbols; robustness is enforced by the doubling test
  const Int margin = (2 * a + cores + 2) * window_scale;
  std::vector<Int> free_positions;
  for (Int p = left - margin; p <= right; ++p)
    if (!d.is_core(p)) free_positions.push_back(p);

  std::vector<SuperWeight> out;
  std::vector<Int> chosen;
  std::function<void(size_t)> pick = [&](size_t from) {
    if (static_cast<int>(chosen.size()) == a) {
      WeightDiagram nu(std::set<Int>(chosen.begin(), chosen.end()), d.crosses, d.circles, d.m,
                       d.n);
      if (is_oriented(cup_diagram(nu), d)) out.push_back(diagram_to_weight(nu));
      return;
    }
    for (size_t i = from; i < free_positions.size(); ++i) {
      chosen.push_back(free_positions[i]);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  std::sort(out.begin(), out.end());
  return out;
}

KacBijectionReport kac_restriction_bijection(const SuperWeight& lambda) {
  if (lambda.m != lambda.n)
    throw ValidationError("kac restriction: expects a GL(n|n) weight");
  if (!is_maximal_atypical(lambda))
    throw ValidationError("kac restriction: weight is not maximal atypical");
  const int n = lambda.n;

  KacBijectionReport report;
  // lambda = (lambda_1, mu | -mu, -lambda_1)  ->  tilde = (mu | -mu, -lambda_1)
  std::vector<Int> mu(lambda.top.begin() + 1, lambda.top.end());
  report.reduced = SuperWeight(n - 1, n, std::move(mu), lambda.bottom);

  std::vector<SuperWeight> full = kac_composition_factors(lambda);
  report.full_factor_count = full.size();
  std::vector<SuperWeight> reduced_factors = kac_composition_factors(report.reduced);

  std::vector<SuperWeight> selected;  // factors of V(lambda) with nu_1 = lambda_1
  for (const SuperWeight& nu : full)
    if (nu.top[0] == lambda.top[0]) selected.push_back(nu);

  for (const SuperWeight& nu : reduced_factors) {
    std::vector<Int> top = nu.top;
    top.insert(top.begin(), lambda.top[0]);
    report.pairs.emplace_back(nu, SuperWeight(n, n, std::move(top), nu.bottom));
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  std::vector<SuperWeight> mapped;
  for (const auto& p : report.pairs) mapped.push_back(p.second);
  if (mapped != selected)
    throw InternalInconsistency("kac restriction: factor lists do not match 1:1");
  return report;
}

}  // namespace supercup
