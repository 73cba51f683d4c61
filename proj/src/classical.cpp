#include "supercup/classical.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace supercup {

ClassicalWeight::ClassicalWeight(std::vector<Int> e) : entries(std::move(e)) {
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1] < entries[i])
      throw ValidationError("classical weight not weakly decreasing at index " +
                            std::to_string(i + 1));
}

std::string ClassicalWeight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  os << ')';
  return os.str();
}

bool operator<(const ClassicalWeight& a, const ClassicalWeight& b) {
  if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
  return a.entries < b.entries;
}

PrincipalFusionSpec::Family PrincipalFusionSpec::family_from_string(const std::string& s) {
  if (s == "GL") return Family::GL;
  if (s == "SL") return Family::SL;
  if (s == "SO") return Family::SO;
  if (s == "Sp") return Family::Sp;
  if (s == "GSp") return Family::GSp;
  if (s == "GOrth") return Family::GOrth;
  if (s == "Opaque") return Family::Opaque;
  throw ValidationError("unknown group family: " + s);
}

std::string PrincipalFusionSpec::family_to_string(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::SO: return "SO";
    case Family::Sp: return "Sp";
    case Family::GSp: return "GSp";
    case Family::GOrth: return "GOrth";
    case Family::Opaque: return "Opaque";
  }
  return "?";
}

namespace {

std::vector<Int> strip_zeros(std::vector<Int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

// Strip-by-strip enumeration: entry k of the LR filling forms a horizontal
// strip, and the reverse reading word must be a lattice word, which for
// strips amounts to  #k in rows <= j  >=  #(k+1) in rows <= j+1.
std::map<std::vector<Int>, long long> lr_partition_product(const std::vector<Int>& lambda,
                                                           const std::vector<Int>& mu,
                                                           int max_rows) {
  std::vector<Int> mu_parts = strip_zeros(mu);
  std::map<std::vector<Int>, long long> out;

  std::vector<Int> shape(lambda.begin(), lambda.end());
  shape.resize(max_rows, 0);
  // placed[k][i]: number of entries k+1 put into row i+1
  std::vector<std::vector<Int>> placed(mu_parts.size(), std::vector<Int>(max_rows, 0));

  std::function<void(size_t)> place_strip = [&](size_t k) {
    if (k == mu_parts.size()) {
      std::vector<Int> nu = strip_zeros(shape);
      out[nu] += 1;
      return;
    }
    std::vector<Int> before = shape;
    // distribute mu_parts[k] cells over rows, top row first
    std::function<void(int, Int)> go = [&](int row, Int remaining) {
      if (row == max_rows) {
        if (remaining == 0) place_strip(k + 1);
        return;
      }
      Int hi = remaining;
      if (row > 0) hi = std::min(hi, before[row - 1] - shape[row]);  // horizontal strip
      if (k > 0) {  // lattice condition against entry k
        Int prev_above = 0, cur_upto = 0;
        for (int i = 0; i < row; ++i) prev_above += placed[k - 1][i];
        for (int i = 0; i <= row; ++i) cur_upto += placed[k][i];
        hi = std::min(hi, prev_above - cur_upto);
      }
      for (Int x = 0; x <= hi; ++x) {
        shape[row] += x;
        placed[k][row] += x;
        go(row + 1, remaining - x);
        shape[row] -= x;
        placed[k][row] -= x;
      }
    };
    go(0, mu_parts[k]);
  };
  place_strip(0);
  return out;
}

std::map<ClassicalWeight, long long> lr_coefficients(const ClassicalWeight& lambda,
                                                     const ClassicalWeight& mu) {
  const int r = lambda.rank();
  if (mu.rank() != r)
    throw ValidationError("lr_coefficients: ranks differ (" + std::to_string(r) + " vs " +
                          std::to_string(mu.rank()) + ")");
  if (r == 0) return {{ClassicalWeight{}, 1}};

  // det-twist both factors to partitions, compute, untwist every output
  Int ka = std::max<Int>(0, -lambda.entries.back());
  Int kb = std::max<Int>(0, -mu.entries.back());
  std::vector<Int> la = lambda.entries, mb = mu.entries;
  for (Int& x : la) x += ka;
  for (Int& x : mb) x += kb;

  std::map<ClassicalWeight, long long> out;
  for (auto& [nu, c] : lr_partition_product(la, mb, r)) {
    std::vector<Int> w = nu;
    w.resize(r, 0);
    for (Int& x : w) x -= ka + kb;
    out[ClassicalWeight(std::move(w))] = c;
  }
  return out;
}

BigInt weyl_dim(const ClassicalWeight& lambda) {
  const int r = lambda.rank();
  BigInt num = 1, den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      num *= lambda.entries[i] - lambda.entries[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

BigInt det_exponent(const ClassicalWeight& lambda) {
  const int r = lambda.rank();
  if (r == 0) return 0;
  BigInt total = 0;
  for (Int x : lambda.entries) total += x;
  BigInt num = total * weyl_dim(lambda);
  if (num % r != 0)
    throw InternalInconsistency("det_exponent: |lambda|*dim not divisible by rank");
  return num / r;
}

namespace {

// All semistandard tableaux of shape nu with entries in 1..r, as the
// monomial expansion of the Schur polynomial s_nu(x_1,...,x_r).
std::map<std::vector<int>, BigInt> schur_polynomial(const std::vector<Int>& nu, int r) {
  std::map<std::vector<int>, BigInt> poly;
  std::vector<Int> shape = strip_zeros(nu);
  if (static_cast<int>(shape.size()) > r) return poly;  // zero polynomial
  if (shape.empty()) {
    poly[std::vector<int>(r, 0)] = 1;
    return poly;
  }
  const int rows = static_cast<int>(shape.size());
  std::vector<std::vector<int>> t(rows);
  for (int i = 0; i < rows; ++i) t[i].assign(shape[i], 0);
  std::vector<int> content(r, 0);

  std::function<void(int, int)> fill = [&](int row, int col) {
    if (row == rows) {
      poly[content] += 1;
      return;
    }
    int nrow = row, ncol = col + 1;
    if (ncol == static_cast<int>(shape[row])) {
      nrow = row + 1;
      ncol = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);               // rows weakly increase
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);           // columns strictly increase
    for (int v = lo; v <= r; ++v) {
      t[row][col] = v;
      ++content[v - 1];
      fill(nrow, ncol);
      --content[v - 1];
    }
  };
  fill(0, 0);
  return poly;
}

}  // namespace

std::map<ClassicalWeight, long long> schur_product_oracle(const ClassicalWeight& lambda,
                                                          const ClassicalWeight& mu, int r,
                                                          Int max_degree) {
  if (lambda.rank() != r || mu.rank() != r)
    throw ValidationError("schur_product_oracle: weights must have rank r");
  if (r == 0) return {{ClassicalWeight{}, 1}};

  Int ka = std::max<Int>(0, -lambda.entries.back());
  Int kb = std::max<Int>(0, -mu.entries.back());
  std::vector<Int> la = lambda.entries, mb = mu.entries;
  for (Int& x : la) x += ka;
  for (Int& x : mb) x += kb;

  Int degree = 0;
  for (Int x : la) degree += x;
  for (Int x : mb) degree += x;
  if (degree > max_degree || r > 4)
    throw ValidationError("schur_product_oracle: input beyond the oracle's desk-scale domain");

  auto pa = schur_polynomial(la, r);
  auto pb = schur_polynomial(mb, r);
  std::map<std::vector<int>, BigInt> prod;
  for (auto& [ea, ca] : pa)
    for (auto& [eb, cb] : pb) {
      std::vector<int> e(r);
      for (int i = 0; i < r; ++i) e[i] = ea[i] + eb[i];
      prod[e] += ca * cb;
    }

  // peel off Schur polynomials by their lex-leading monomials
  std::map<ClassicalWeight, long long> out;
  while (!prod.empty()) {
    auto lead = std::max_element(prod.begin(), prod.end(),
                                 [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<int> e = lead->first;
    BigInt c = lead->second;
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i - 1] < e[i])
        throw InternalInconsistency("oracle: leading monomial of a symmetric poly not dominant");
    if (c <= 0) throw InternalInconsistency("oracle: negative leading coefficient");
    std::vector<Int> nu(e.begin(), e.end());
    auto s = schur_polynomial(nu, r);
    for (auto& [em, cm] : s) {
      auto it = prod.find(em);
      BigInt nv = (it == prod.end() ? BigInt(0) : it->second) - c * cm;
      if (nv == 0) {
        if (it != prod.end()) prod.erase(it);
      } else {
        prod[em] = nv;
      }
    }
    std::vector<Int> w(e.begin(), e.end());
    for (Int& x : w) x -= ka + kb;
    out[ClassicalWeight(std::move(w))] = static_cast<long long>(c);
  }
  return out;
}

bool is_covariant_max_atypical(const std::vector<Int>& mu, int r) {
  for (size_t i = 1; i < mu.size(); ++i)
    if (mu[i - 1] < mu[i]) throw ValidationError("is_covariant_max_atypical: not a partition");
  for (Int x : mu)
    if (x < 0) throw ValidationError("is_covariant_max_atypical: not a partition");
  return static_cast<int>(strip_zeros(mu).size()) <= r;
}

std::vector<GroupRepLabel> group_fusion(const PrincipalFusionSpec& spec, const RepLabel& a,
                                        const RepLabel& b) {
  using Family = PrincipalFusionSpec::Family;
  if (spec.family == Family::Opaque)
    throw ExternalFusionRequired("opaque group family: requires external fusion table");
  const BigInt d = spec.degree;
  if (spec.degree <= 0) throw ValidationError("group_fusion: degree must be positive");
  if ((spec.family == Family::Sp || spec.family == Family::GSp) && spec.degree % 2 != 0)
    throw ValidationError("group_fusion: symplectic degree must be even");

  const Int tw = a.twist + b.twist;
  std::vector<GroupRepLabel> out;
  switch (spec.family) {
    case Family::GL:
    case Family::SL: {
      // SL passes through the GL tables; callers see the warning flag upstream
      if (a.dual == b.dual) {
        std::string suffix = a.dual ? "_dual" : "";
        out = {{"lambda2" + suffix, d * (d - 1) / 2, tw}, {"sym2" + suffix, d * (d + 1) / 2, tw}};
      } else {
        out = {{"adjoint", d * d - 1, tw}, {"trivial", 1, tw}};
      }
      break;
    }
    case Family::SO:
    case Family::GOrth:
      // std is self-dual up to the similitude character
      out = {{"lambda2", d * (d - 1) / 2, tw},
             {"sym2_0", d * (d + 1) / 2 - 1, tw},
             {"trivial", 1, tw}};
      break;
    case Family::Sp:
    case Family::GSp:
      out = {{"lambda2_0", d * (d - 1) / 2 - 1, tw},
             {"sym2", d * (d + 1) / 2, tw},
             {"trivial", 1, tw}};
      break;
    default:
      throw ExternalFusionRequired("unsupported label pair: requires external fusion table");
  }
  // degenerate small degrees: Lambda^2 of a line or the adjoint of GL(1)
  // vanish and are not summands
  std::erase_if(out, [](const GroupRepLabel& lab) { return lab.dim == 0; });
  return out;
}

}  // namespace supercup
