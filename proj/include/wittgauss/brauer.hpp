// Copyright 2026 The wittgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wittgauss/cyclo.hpp"

/// Character theory of small finite groups: induction and restriction,
/// double cosets, Mackey decomposition, Frobenius determinants on induced
/// representations, Euler-factor inductivity and the epsilon sign ledger.
namespace wittgauss::brauer {

using cyclo::CyclotomicInt;
using Perm = std::vector<std::uint32_t>;

/// Elements are dense ids 0..N-1 with 0 the identity.
class FiniteGroup {
 public:
  /// Closure of the generators under composition, (a * b)(x) = a(b(x)).
  /// Elements are numbered in breadth-first order from the identity.
  static FiniteGroup from_permutations(const std::vector<Perm>& gens, std::string name = "");
  /// table[a][b] = a * b on ids 0..N-1; the identity is renumbered to 0.
  static FiniteGroup from_cayley(const std::vector<std::vector<std::uint32_t>>& table, std::string name = "");

  const std::string& name() const { return name_; }
  std::uint32_t order() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t pow(std::uint32_t a, std::int64_t k) const;
  std::uint32_t elem_order(std::uint32_t a) const { return elem_order_[a]; }
  /// g^{-1} x g.
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const { return mul(inv(g), mul(x, g)); }
  /// Conjugacy classes, each sorted, ordered by least element id.
  const std::vector<std::vector<std::uint32_t>>& classes() const { return classes_; }
  std::uint32_t class_of(std::uint32_t x) const { return class_of_[x]; }
  /// Permutation image when built from generators; empty otherwise.
  const std::vector<Perm>& permutations() const { return perms_; }
  /// Group axioms on the table. Run at construction for order <= 64.
  bool verify_axioms() const;

 private:
  FiniteGroup() = default;
  void finish(std::string name);
  std::uint32_t n_ = 0;
  std::string name_;
  std::vector<std::uint32_t> mul_, inv_, elem_order_, class_of_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<Perm> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr symmetric_group(unsigned n);
GroupPtr alternating_group(unsigned n);
/// Symmetries of the regular n-gon, order 2n.
GroupPtr dihedral_group(unsigned n);
GroupPtr quaternion_group();
GroupPtr cyclic_group(unsigned n);
/// "S3", "S4", "A4", "D4", "Q8", "C<n>", "D<n>".
GroupPtr named_group(const std::string& name);

class Subgroup {
 public:
  Subgroup() = default;
  /// Sorted element ids; throws std::invalid_argument if not a subgroup.
  Subgroup(const FiniteGroup& g, std::vector<std::uint32_t> elems);
  static Subgroup generated(const FiniteGroup& g, const std::vector<std::uint32_t>& gens);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  const std::vector<std::uint32_t>& elements() const { return elems_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  bool contains(std::uint32_t x) const { return pos_[x] >= 0; }
  /// Position of x in elements(), or -1.
  std::int32_t position(std::uint32_t x) const { return pos_[x]; }
  bool is_subgroup_of(const Subgroup& o) const;
  /// Minimal generating list, greedy by element id.
  std::vector<std::uint32_t> generators(const FiniteGroup& g) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<std::uint32_t> elems_;
  std::vector<std::int32_t> pos_;
};

/// g^{-1} H g.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, std::uint32_t x);
Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
/// Every subgroup, built from cyclic subgroups by joins; sorted by (size, elements).
std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g);

/// A function on the elements of a subgroup with values in Z[zeta_m].
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr g, Subgroup domain, std::vector<CyclotomicInt> values);
  static ClassFunction constant(GroupPtr g, Subgroup domain, std::int64_t c);
  /// Value |H| at the identity, 0 elsewhere.
  static ClassFunction regular(GroupPtr g, Subgroup domain);

  const GroupPtr& group() const { return g_; }
  const Subgroup& domain() const { return dom_; }
  unsigned order() const { return m_; }
  const CyclotomicInt& at(std::uint32_t x) const;
  CyclotomicInt degree() const { return at(0); }
  /// Constant on conjugacy classes of the domain.
  bool is_class_function() const;
  ClassFunction conj() const;

  ClassFunction& operator+=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(std::int64_t s, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }
  /// One value per conjugacy class of the domain, in class order.
  std::vector<CyclotomicInt> class_values() const;

 private:
  GroupPtr g_;
  Subgroup dom_;
  unsigned m_ = 1;
  std::vector<CyclotomicInt> vals_;
};

/// Homomorphisms H -> mu_m, m = exponent of H, ordered by the exponent
/// vector on H's generators with the first generator fastest.
std::vector<ClassFunction> linear_characters(const GroupPtr& g, const Subgroup& h);
/// The linear character sending generator gens[i] to zeta_m^{exps[i]}.
/// Throws std::invalid_argument if the assignment does not extend.
ClassFunction linear_character(const GroupPtr& g, const Subgroup& h, const std::vector<std::uint32_t>& gens,
                               unsigned m, const std::vector<std::int64_t>& exps);

/// (1/|H|) sum_{g in G} psi(g^{-1} x g) on the whole group.
ClassFunction induce(const ClassFunction& psi);
/// Induction to an intermediate subgroup containing the domain.
ClassFunction induce(const ClassFunction& psi, const Subgroup& to);
ClassFunction restrict(const ClassFunction& chi, const Subgroup& to);
/// (1/|H|) sum a(x) conj(b(x)); throws std::domain_error if not integral.
CyclotomicInt inner_product(const ClassFunction& a, const ClassFunction& b);

/// Representatives (least id) of the double cosets H g D, ordered by id.
std::vector<std::uint32_t> double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& d);

/// psi^x(y) = psi(x y x^{-1}) on x^{-1} H x.
ClassFunction conjugate_character(const ClassFunction& psi, std::uint32_t x);

struct MackeyResult {
  ClassFunction lhs;  // Res_D Ind_H^G psi
  ClassFunction rhs;  // sum over [g] of Ind_{H^g cap D}^D psi^g
  std::vector<std::uint32_t> reps;
  bool pass = false;
};
MackeyResult mackey_check(const ClassFunction& psi, const Subgroup& d);

struct MackeySweep {
  std::uint64_t triples = 0, failures = 0;
  bool pass() const { return failures == 0; }
};
/// Every (H, linear psi, D) over the subgroup lattice.
MackeySweep mackey_sweep(const GroupPtr& g, unsigned workers = 1);

struct ReciprocitySweep {
  std::uint64_t pairs = 0, failures = 0;
  bool pass() const { return failures == 0; }
};
/// <Ind psi, chi>_G = <psi, Res chi>_H for every linear psi of every subgroup
/// against every character of G induced from a linear character.
ReciprocitySweep reciprocity_sweep(const GroupPtr& g, unsigned workers = 1);

/// Dense square matrix over Z[zeta_m].
class CycloMatrix {
 public:
  CycloMatrix(unsigned dim, unsigned m);
  unsigned dim() const { return n_; }
  CyclotomicInt& at(unsigned r, unsigned c) { return a_[r * n_ + c]; }
  const CyclotomicInt& at(unsigned r, unsigned c) const { return a_[r * n_ + c]; }
  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix pow(unsigned e) const;
  /// Laplace expansion memoized over column subsets; dim <= 20.
  CyclotomicInt det() const;

 private:
  unsigned n_, m_;
  std::vector<CyclotomicInt> a_;
};

/// The f x f matrix with c in the top-right corner and I_{f-1} below the
/// diagonal; c = psi(Frob^f).
CycloMatrix frob_matrix(unsigned f, const CyclotomicInt& c);
/// det(M^e) for the matrix above with psi(Frob^f) = zeta_m^a, where psi is a
/// character of <Frob^f> inside a cyclic group of order N.
/// Throws std::invalid_argument if f does not divide N or psi is not a
/// character of the order-N/f group.
CyclotomicInt frob_det_induced(unsigned N, unsigned f, unsigned m, std::int64_t a, unsigned e);
/// ((-1)^{f-1} zeta_m^a)^e.
CyclotomicInt frob_det_formula(unsigned f, unsigned m, std::int64_t a, unsigned e);

/// Polynomial in T with coefficients in Z[zeta_m].
class EulerPoly {
 public:
  explicit EulerPoly(unsigned m = 1);
  /// 1 - c T^f.
  static EulerPoly binomial(const CyclotomicInt& c, unsigned f);
  /// Lowest degree first; trailing zeros dropped.
  static EulerPoly from_coeffs(std::vector<CyclotomicInt> c);
  unsigned order() const { return m_; }
  const std::vector<CyclotomicInt>& coeffs() const { return c_; }
  unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
  EulerPoly embed(unsigned m) const;
  EulerPoly truncate(unsigned deg) const;
  EulerPoly operator*(const EulerPoly& o) const;
  EulerPoly pow(unsigned e) const;
  friend bool operator==(const EulerPoly& a, const EulerPoly& b);
  std::string to_string() const;

 private:
  void trim();
  unsigned m_;
  std::vector<CyclotomicInt> c_;
};

/// det(1 - M T) from the power traces p_k = tr(M^k), k = 1..d (Newton).
EulerPoly det_one_minus(const std::vector<CyclotomicInt>& power_traces);

struct InductionTerm {
  std::int64_t a = 1;
  Subgroup h;
  ClassFunction psi;  // linear character of h
};

/// target = sum_j a_j Ind_{H_j}^G psi_j with psi_j linear.
struct VirtualInductionRecord {
  std::string name;
  GroupPtr group;
  std::vector<InductionTerm> terms;
  ClassFunction target;

  /// The virtual sum equals the target exactly.
  bool consistent() const;
  /// target(1) = sum_j a_j (G : H_j).
  bool degree_identity() const;
  /// sum_j a_j sum_[g] f_g = target(1) with D = <frob>.
  bool place_degree_identity(std::uint32_t frob) const;
};

/// One place of H_j above v: the double coset H_j g D, D = <frob>.
struct PlaceData {
  std::size_t term = 0;
  std::uint32_t rep = 0;
  unsigned f = 1;         // (D : H_j^g cap D)
  CyclotomicInt psi_frob; // psi_j^g(Frob^f)
};
std::vector<PlaceData> places(const VirtualInductionRecord& rec, std::uint32_t frob);

struct EulerFactor {
  EulerPoly poly;
  std::int64_t exponent = 1;
};
struct EulerCheck {
  /// prod_j prod_[g] (1 - psi_j^g(Frob^{f_g}) T^{f_g})^{a_j}.
  std::vector<EulerFactor> lhs;
  /// prod_j det(1 - Frob T | Ind_{H_j}^G psi_j)^{a_j}, from coset monomial matrices.
  std::vector<EulerFactor> rhs;
  /// Both products equal as rational functions.
  bool factored_equal = false;
  /// lhs agrees with the power series det(1 - Frob T | V_target) from the
  /// target character values on powers of Frob.
  bool target_equal = false;
  bool pass() const { return factored_equal && target_equal; }
};
/// Throws std::invalid_argument if the record is inconsistent.
EulerCheck euler_inductivity_check(const VirtualInductionRecord& rec, std::uint32_t frob);

struct SignLedger {
  /// (-1)^{sum_j a_j sum_[g] e (f_g - 1)}: the Davenport-Hasse sign.
  int dh_sign = 1;
  /// prod over places of det(Frob^e | Ind) / psi^g(Frob^f)^e, from matrices.
  int frob_sign = 1;
  /// det(Frob^e | V_target) = frob_sign prod psi_j^g(Frob^{f_g})^{e a_j}.
  bool total_identity = false;
  std::vector<unsigned> f_list;
  bool agree() const { return dh_sign == frob_sign && total_identity; }
};
SignLedger sign_ledger(const VirtualInductionRecord& rec, std::uint32_t frob, unsigned e);

/// Fixed records over S3, D4 and Q8 with independently specified targets.
std::vector<VirtualInductionRecord> record_corpus();
struct RandomCase {
  VirtualInductionRecord record;
  std::uint32_t frob = 0;
  unsigned e = 1;
};
/// Signed record on one of S3, D4, Q8, A4 with target the virtual sum, a
/// random Frobenius and a conductor exponent in 1..4.
RandomCase random_case(std::uint64_t seed);

}  // namespace wittgauss::brauer
