#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dlchar/cyclotomic.hpp"
#include "dlchar/rootdata.hpp"

namespace dlchar::dl {

using ClassFunction = std::vector<CycNum>;

struct FiniteClassData {
  std::vector<std::string> labels;
  std::vector<std::int64_t> sizes;
  std::vector<char> unipotent;
  std::vector<char> central;
  std::vector<int> grouping;                 // id of the F-stable G-class containing it
  std::vector<std::size_t> semisimple_part;  // class of s in the Jordan decomposition g = su
  std::vector<std::size_t> unipotent_part;   // class of u
  std::int64_t group_order = 0;

  std::size_t size() const { return labels.size(); }
  std::size_t index(const std::string& label) const;  // throws std::out_of_range
  int group_count() const;
};

struct CharTable {
  std::vector<std::string> labels;
  std::vector<ClassFunction> rows;

  std::size_t size() const { return rows.size(); }
  std::size_t index(const std::string& label) const;
  std::int64_t degree(std::size_t i) const { return rows[i][0].to_rational().get_num().get_si(); }
};

// One R_w^theta. theta is given in the natural cyclic coordinates of T0[w]
// (see GroupData::torus_orders) and by a lattice vector lambda restricting to it.
struct DLCharacter {
  std::size_t w = 0;  // DatumWeyl index
  IntVector theta;
  IntVector lambda;
  std::vector<int> mult;  // decomposition over CharTable rows
};

enum class GroupKind { SL2, GL2 };

struct GroupData {
  GroupKind kind = GroupKind::SL2;
  std::string name;
  std::int64_t q = 0;
  FiniteClassData classes;
  CharTable table;
  std::vector<DLCharacter> family;  // every (w, theta), duplicates included
  std::shared_ptr<const rootdata::DatumWeyl> datum;
  std::vector<std::size_t> w_indices;          // datum indices of 1 and s
  std::vector<IntVector> torus_orders;         // natural cyclic factors of T0[w], per w_indices entry
  std::vector<std::size_t> regular_unipotent;  // G^F-classes inside O_reg
  std::int64_t component_group_order = 1;      // |A(u)| for u regular unipotent, F acting trivially

  std::size_t w_slot(std::size_t w) const;  // position of a datum index in w_indices
  // theta(t) for t in T0[w] written in natural coordinates.
  CycNum theta_value(std::size_t w, const IntVector& theta, const IntVector& t) const;
  // G^F-class of the torus element t of T0[w].
  std::size_t torus_class(std::size_t w, const IntVector& t) const;
  // Every (w, t) with t in T0[w] lying in the given semisimple class.
  std::vector<std::pair<std::size_t, IntVector>> torus_points(std::size_t cls) const;
  ClassFunction dl_character(const DLCharacter& r) const;
};

// Odd prime powers 3 <= q <= 49.
GroupData build_sl2(std::int64_t q);
GroupData build_gl2(std::int64_t q);
GroupData build_group(const std::string& name, std::int64_t q);

CycNum inner_product(const FiniteClassData& c, const ClassFunction& f, const ClassFunction& g);
ClassFunction indicator(const FiniteClassData& c, const std::vector<std::size_t>& classes);
ClassFunction combine(const CharTable& t, const std::vector<CycNum>& coeffs);

// Orthogonal projection onto the span of the R_w^theta.
class UniformProjector {
 public:
  explicit UniformProjector(const GroupData& g);

  // (1/|W|) sum_w sum_theta <f, R_w^theta> R_w^theta
  ClassFunction apply(const ClassFunction& f) const;
  // Solve the Gram system on the distinct R_w^theta.
  ClassFunction apply_gram(const ClassFunction& f) const;
  // Sum over sigma-classes of W weighted by 1/|N_{W,sigma}(w,w)|.
  ClassFunction apply_class_sum(const ClassFunction& f) const;
  Rational rank() const;  // trace of the projector
  std::size_t distinct_count() const { return distinct_.size(); }

 private:
  const GroupData& g_;
  std::vector<ClassFunction> all_;
  std::vector<std::size_t> distinct_;  // positions in family of pairwise distinct R's
};

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool ok() const;
  void add(std::string name, bool ok, std::string detail = {});
  void merge(const Report& other);
};

// Names accepted by run_checks; "all" expands to every applicable one.
std::vector<std::string> check_names();
Report run_checks(const GroupData& g, const std::vector<std::string>& names);

Report check_tables(const GroupData& g);
Report verify_dl_identities(const GroupData& g);
Report projector_check(const GroupData& g);
Report luconj_check(const GroupData& g);
Report orthocomplement_check(const GroupData& g);
Report lemma_app3_check(const GroupData& g, const std::string& s0);
Report lemma_app3_all(const GroupData& g);
Report degree_checks(const GroupData& g);
Report semisimple_and_depth(const GroupData& g);
Report restriction_suite(std::int64_t q);

struct RowDegree {
  std::string label;
  rootdata::DegreeInfo info;
};
std::vector<RowDegree> degree_polynomials(const GroupData& g);

// Connected components of the graph on Irr joined by common R_w^theta constituents.
std::vector<std::vector<std::size_t>> dl_graph_components(const GroupData& g);

// Average value on the regular unipotent class, weights |A(u):A(u)^F| = 1.
CycNum regular_average(const GroupData& g, std::size_t row);

// Count of x in N_{W,sigma}(w, w') matching theta against theta'.
std::int64_t scalar_product_count(const GroupData& g, const DLCharacter& a, const DLCharacter& b);

}  // namespace dlchar::dl
