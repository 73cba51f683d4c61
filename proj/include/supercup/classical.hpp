// classical.hpp -- exact GL(r) combinatorics: Littlewood-Richardson
// coefficients, Weyl dimensions, determinant exponents and the small
// fusion tables for the classical group families.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "supercup/errors.hpp"

namespace supercup {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;

// Highest weight of GL(r): a weakly decreasing integer sequence of length r.
// r = 0 (the empty weight) is allowed and denotes the trivial group.
struct ClassicalWeight {
  std::vector<Int> entries;

  ClassicalWeight() = default;
  explicit ClassicalWeight(std::vector<Int> e);

  int rank() const { return static_cast<int>(entries.size()); }
  bool operator==(const ClassicalWeight&) const = default;
  std::string to_string() const;
};

bool operator<(const ClassicalWeight& a, const ClassicalWeight& b);

// Classification datum for the principal-part fusion group H_mu.  The
// classification itself lives outside this engine; callers pass it in.
struct PrincipalFusionSpec {
  enum class Family { GL, SL, SO, Sp, GSp, GOrth, Opaque };

  Family family = Family::Opaque;
  int degree = 0;      // d, with d = |sdim| of the principal part
  Int twist = 0;       // character-twist exponent of the realization
  bool dual_realization = false;  // realization: standard vs dual-standard

  static Family family_from_string(const std::string& s);
  static std::string family_to_string(Family f);
};

// Representation label inside the small fusion tables.
struct RepLabel {
  bool dual = false;  // standard vs dual-standard
  Int twist = 0;
};

struct GroupRepLabel {
  std::string name;  // "lambda2", "sym2_0", "adjoint", "trivial", ...
  BigInt dim;
  Int twist = 0;

  bool operator==(const GroupRepLabel&) const = default;
};

// c^nu_{lambda,mu} for GL(r) by enumeration of Littlewood-Richardson skew
// tableaux.  General integral weights are handled by a determinant twist
// to partitions and back; output weights have exactly r entries.
std::map<ClassicalWeight, long long> lr_coefficients(const ClassicalWeight& lambda,
                                                     const ClassicalWeight& mu);

// LR product of two partitions (weakly decreasing, non-negative), with the
// output restricted to partitions of at most max_rows rows.
std::map<std::vector<Int>, long long> lr_partition_product(const std::vector<Int>& lambda,
                                                           const std::vector<Int>& mu,
                                                           int max_rows);

// Weyl dimension formula for GL(r), exact.
BigInt weyl_dim(const ClassicalWeight& lambda);

// Exponent k with det(L(lambda)) = det^k, i.e. |lambda| * dim / r.
BigInt det_exponent(const ClassicalWeight& lambda);

// Independent brute-force oracle: multiplies Schur polynomials in r
// variables and decomposes the product by leading-term subtraction.
// Intentionally restricted to desk-scale inputs; max_degree bounds the
// total degree after the determinant twist.
std::map<ClassicalWeight, long long> schur_product_oracle(const ClassicalWeight& lambda,
                                                          const ClassicalWeight& mu, int r,
                                                          Int max_degree = 12);

// Covariance criterion: S_mu(V) is maximal atypical iff mu_{r+1} = 0.
bool is_covariant_max_atypical(const std::vector<Int>& mu, int r);

// Fusion of two small representation labels in the group named by spec.
// Covers exactly the label pairs the splicing examples need; anything
// else raises ExternalFusionRequired instead of guessing.
std::vector<GroupRepLabel> group_fusion(const PrincipalFusionSpec& spec, const RepLabel& a,
                                        const RepLabel& b);

}  // namespace supercup
