#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dlchar/qpoly.hpp"
#include "dlchar/smith.hpp"
#include "dlchar/weyl.hpp"

namespace dlchar::rootdata {

// Character lattice X = Z^r with the W-action and phi0 (F acts on X as q*phi0).
struct RootDatum {
  std::string name;
  int rank = 0;
  weyl::CartanType type;          // twist selects sigma on S
  std::vector<IntMatrix> gens;    // simple reflections on X, Bourbaki order
  IntMatrix phi0;
  bool connected_centre = false;
  int dim_centre = 0;             // dim Z°, a split torus for every built-in

  int num_positive() const { return weyl::num_positive_roots(type); }
};

RootDatum builtin(const std::string& name);  // SL2, GL2, SL3, GL3, Sp4, SU3 (case-insensitive)
std::vector<std::string> builtin_names();

// W of a datum, enumerated once. Element i carries its permutation (from the
// weyl module), reduced word, length and matrix on X.
class DatumWeyl {
 public:
  explicit DatumWeyl(const RootDatum& d);

  const RootDatum& datum() const { return d_; }
  const weyl::WeylGroup& group() const { return g_; }
  const weyl::ElementStore& store() const { return store_; }
  std::size_t size() const { return store_.size(); }
  const weyl::WeylElement& element(std::size_t i) const { return store_.elements[i]; }
  int length(std::size_t i) const { return store_.lengths[i]; }
  const IntMatrix& matrix(std::size_t i) const { return mats_[i]; }
  std::size_t index_of(const weyl::WeylElement& w) const { return store_.find(g_.key(w)); }
  std::size_t identity_index() const { return index_of(g_.identity()); }
  // Index of the element with the given reduced word (0-based generators).
  std::size_t index_of_word(const std::vector<int>& word) const { return index_of(g_.from_word(word)); }
  IntMatrix matrix_of(const weyl::WeylElement& w) const;
  // sigma(w) = phi0^{-1} w phi0, as an element index.
  std::size_t sigma_index(std::size_t i) const;
  std::vector<std::size_t> sigma_fixed() const;
  const IntMatrix& phi0_inverse() const { return phi0_inv_; }
  // Checks braid relations on X and the compatibility w phi0 = phi0 sigma(w).
  bool consistent() const;

 private:
  RootDatum d_;
  weyl::WeylGroup g_;
  weyl::ElementStore store_;
  std::vector<IntMatrix> mats_;
  IntMatrix phi0_inv_;
};

QPoly torus_order_poly(const DatumWeyl& dw, std::size_t w);  // det(q - phi0^{-1} w)
QPoly group_order_poly(const DatumWeyl& dw);                  // q^N |T_1| sum_{W^sigma} q^l(w)
QPoly centre_order_poly(const RootDatum& d);                  // (q-1)^{dim Z°}
bool steinberg_identity_check(const DatumWeyl& dw);
bool t1_factorization_check(const DatumWeyl& dw);

struct FiniteTorusStructure {
  std::size_t w = 0;
  std::int64_t q0 = 0;
  IntVector invariant_factors;  // nontrivial d_1 | d_2 | ... (empty for the trivial group)
  IntMatrix coordinates;        // row i: lambda -> residue mod invariant_factors[i]
  IntMatrix generators;         // column-wise lattice vectors generating X/(F'-1)X
  std::int64_t order() const;
};

// X/(F'-1)X with F' = q0 phi0 w^{-1}, via Smith normal form.
FiniteTorusStructure finite_torus_structure(const DatumWeyl& dw, std::size_t w, std::int64_t q0);

using ThetaIndex = IntVector;  // residues modulo the invariant factors
ThetaIndex theta_from_lambda(const FiniteTorusStructure& s, const IntVector& lambda);
std::int64_t theta_order(const FiniteTorusStructure& s, const ThetaIndex& t);

struct ZEntry {
  std::size_t w;
  IntVector lambda_w;
};
// w in Z iff q0 phi0(lambda) - w(lambda) lies in nX; lambda_w is the quotient.
std::vector<ZEntry> compute_Z(const DatumWeyl& dw, const IntVector& lambda, std::int64_t n, std::int64_t q0);

// With connected centre, Z = w1 W' with w1 the unique shortest element and
// W' a reflection subgroup. Returns false with a reason when it fails.
struct CosetReport {
  bool ok = false;
  std::size_t w1 = 0;
  std::vector<std::size_t> subgroup;
  std::string reason;
};
CosetReport reflection_coset_check(const DatumWeyl& dw, const std::vector<ZEntry>& z);

struct DegreeInfo {
  QPoly D;
  int a = 0;
  int A = 0;
  mpz_class n;
  bool clubsuit = false;
  bool n_divides_W = false;
};
// mults: per W-element index, the sum over theta of <R_w^theta, rho>.
DegreeInfo degree_polynomial(const DatumWeyl& dw, const std::vector<std::int64_t>& mult_sum_per_w);
// Convenience overload keyed by (w, theta).
DegreeInfo degree_polynomial(const DatumWeyl& dw, const std::map<std::pair<std::size_t, ThetaIndex>, std::int64_t>& mults);

}  // namespace dlchar::rootdata
