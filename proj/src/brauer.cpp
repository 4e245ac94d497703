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

#include "wittgauss/brauer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "wittgauss/parallel.hpp"

namespace wittgauss::brauer {

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm identity_perm(std::size_t d) {
  Perm r(d);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

int perm_sign(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::uint32_t find_perm(const FiniteGroup& g, const Perm& p) {
  const auto& ps = g.permutations();
  auto it = std::find(ps.begin(), ps.end(), p);
  if (it == ps.end()) throw std::invalid_argument("permutation not in group");
  return static_cast<std::uint32_t>(it - ps.begin());
}

std::uint32_t subgroup_exponent(const FiniteGroup& g, const Subgroup& h) {
  std::uint32_t m = 1;
  for (auto x : h.elements()) m = std::lcm(m, g.elem_order(x));
  return m;
}

/// Exponents of a linear character, or nullopt if the generator images do
/// not extend to a homomorphism.
std::optional<std::vector<std::int64_t>> extend_linear(const FiniteGroup& g, const Subgroup& h,
                                                       const std::vector<std::uint32_t>& gens, unsigned m,
                                                       const std::vector<std::int64_t>& exps) {
  std::vector<std::int64_t> val(h.size(), -1);
  val[h.position(0)] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint32_t x = queue[qi];
    const std::int64_t vx = val[h.position(x)];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::uint32_t y = g.mul(gens[i], x);
      const std::int32_t py = h.position(y);
      if (py < 0) throw std::invalid_argument("generator outside subgroup");
      const std::int64_t vy = mod_floor(vx + exps[i], m);
      if (val[py] < 0) {
        val[py] = vy;
        queue.push_back(y);
      } else if (val[py] != vy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != h.size()) throw std::invalid_argument("generators do not generate the subgroup");
  return val;
}

ClassFunction from_exponents(const GroupPtr& g, const Subgroup& h, unsigned m, const std::vector<std::int64_t>& e) {
  std::vector<CyclotomicInt> vals;
  vals.reserve(e.size());
  for (auto v : e) vals.push_back(CyclotomicInt::zeta(m, v));
  return ClassFunction(g, h, std::move(vals));
}

/// Frobenius acting on left cosets tH of Ind_H^G psi: perm[i] = k and
/// val[i] = psi(h) where frob * t_i = t_k h.
struct MonomialAction {
  std::vector<std::uint32_t> perm;
  std::vector<CyclotomicInt> val;
};

MonomialAction coset_action(const ClassFunction& psi, std::uint32_t frob) {
  const FiniteGroup& G = *psi.group();
  const Subgroup& H = psi.domain();
  std::vector<std::int32_t> coset(G.order(), -1);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    if (coset[x] >= 0) continue;
    for (auto h : H.elements()) coset[G.mul(x, h)] = static_cast<std::int32_t>(reps.size());
    reps.push_back(x);
  }
  MonomialAction act;
  for (auto t : reps) {
    const std::uint32_t y = G.mul(frob, t);
    const auto k = static_cast<std::uint32_t>(coset[y]);
    act.perm.push_back(k);
    act.val.push_back(psi.at(G.mul(G.inv(reps[k]), y)));
  }
  return act;
}

/// tr(M^k) for k = 1..len from the cycles of a monomial matrix.
std::vector<CyclotomicInt> monomial_power_traces(const MonomialAction& act, unsigned len) {
  const std::size_t d = act.perm.size();
  std::vector<CyclotomicInt> tr(len, CyclotomicInt::zero(1));
  std::vector<bool> seen(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    if (seen[i]) continue;
    CyclotomicInt prod = CyclotomicInt::from_int(1, 1);
    unsigned l = 0;
    for (std::size_t j = i; !seen[j]; j = act.perm[j]) {
      seen[j] = true;
      prod *= act.val[j];
      ++l;
    }
    for (unsigned k = l; k <= len; k += l) tr[k - 1] += BigInt(l) * prod.pow(k / l);
  }
  return tr;
}

CyclotomicInt monomial_det(const MonomialAction& act) {
  Perm p(act.perm.begin(), act.perm.end());
  CyclotomicInt d = CyclotomicInt::from_int(1, perm_sign(p));
  for (const auto& v : act.val) d *= v;
  return d;
}

/// x^a for a root of unity x and any integer a.
CyclotomicInt root_pow(const CyclotomicInt& x, std::int64_t a) {
  return a >= 0 ? x.pow(static_cast<std::uint64_t>(a)) : x.conj().pow(static_cast<std::uint64_t>(-a));
}

}  // namespace

// FiniteGroup

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens, std::string name) {
  if (gens.empty()) throw std::invalid_argument("from_permutations: no generators");
  const std::size_t deg = gens[0].size();
  for (const auto& p : gens) {
    if (p.size() != deg) throw std::invalid_argument("from_permutations: mixed degrees");
    Perm s = p;
    std::sort(s.begin(), s.end());
    if (s != identity_perm(deg)) throw std::invalid_argument("from_permutations: not a permutation");
  }
  FiniteGroup g;
  std::map<Perm, std::uint32_t> id;
  g.perms_.push_back(identity_perm(deg));
  id[g.perms_[0]] = 0;
  for (std::size_t i = 0; i < g.perms_.size(); ++i) {
    for (const auto& s : gens) {
      Perm y = compose(s, g.perms_[i]);
      if (id.emplace(y, static_cast<std::uint32_t>(g.perms_.size())).second) g.perms_.push_back(std::move(y));
    }
  }
  g.n_ = static_cast<std::uint32_t>(g.perms_.size());
  g.mul_.resize(std::size_t(g.n_) * g.n_);
  for (std::uint32_t a = 0; a < g.n_; ++a)
    for (std::uint32_t b = 0; b < g.n_; ++b) g.mul_[a * g.n_ + b] = id.at(compose(g.perms_[a], g.perms_[b]));
  g.finish(std::move(name));
  return g;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<std::uint32_t>>& table, std::string name) {
  const auto n = static_cast<std::uint32_t>(table.size());
  if (n == 0) throw std::invalid_argument("from_cayley: empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("from_cayley: table is not square");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("from_cayley: entry out of range");
  }
  std::optional<std::uint32_t> e;
  for (std::uint32_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::uint32_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw std::invalid_argument("from_cayley: no identity");
  // Swap ids 0 and e.
  auto relabel = [&](std::uint32_t x) { return x == 0 ? *e : x == *e ? 0u : x; };
  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize(std::size_t(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) g.mul_[a * n + b] = relabel(table[relabel(a)][relabel(b)]);
  g.finish(std::move(name));
  return g;
}

void FiniteGroup::finish(std::string name) {
  name_ = std::move(name);
  if (n_ <= 64 && !verify_axioms()) throw std::invalid_argument("group axioms fail");
  inv_.assign(n_, 0);
  elem_order_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
    std::uint32_t x = a, k = 1;
    while (x != 0) x = mul(x, a), ++k;
    elem_order_[a] = k;
  }
  class_of_.assign(n_, UINT32_MAX);
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (class_of_[x] != UINT32_MAX) continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t g = 0; g < n_; ++g) cls.insert(conjugate(g, x));
    for (auto y : cls) class_of_[y] = static_cast<std::uint32_t>(classes_.size());
    classes_.emplace_back(cls.begin(), cls.end());
  }
}

bool FiniteGroup::verify_axioms() const {
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) return false;
    bool has_inv = false;
    for (std::uint32_t b = 0; b < n_ && !has_inv; ++b) has_inv = mul(a, b) == 0 && mul(b, a) == 0;
    if (!has_inv) return false;
    for (std::uint32_t b = 0; b < n_; ++b)
      for (std::uint32_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, std::int64_t k) const {
  const std::int64_t r = mod_floor(k, elem_order(a));
  std::uint32_t x = 0;
  for (std::int64_t i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

GroupPtr symmetric_group(unsigned n) {
  if (n < 2) throw std::invalid_argument("symmetric_group: n >= 2");
  Perm t = identity_perm(n), c(n);
  std::swap(t[0], t[1]);
  for (unsigned i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations({t, c}, "S" + std::to_string(n)));
}

GroupPtr alternating_group(unsigned n) {
  if (n < 3) throw std::invalid_argument("alternating_group: n >= 3");
  std::vector<Perm> gens;
  for (unsigned i = 2; i < n; ++i) {
    Perm c = identity_perm(n);
    c[0] = 1, c[1] = i, c[i] = 0;
    gens.push_back(c);
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(gens, "A" + std::to_string(n)));
}

GroupPtr dihedral_group(unsigned n) {
  if (n < 2) throw std::invalid_argument("dihedral_group: n >= 2");
  Perm r(n), s(n);
  for (unsigned i = 0; i < n; ++i) r[i] = (i + 1) % n, s[i] = (n - i) % n;
  if (n == 2) {
    // Klein four group acting on four points.
    r = {1, 0, 3, 2};
    s = {2, 3, 0, 1};
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations({r, s}, "D" + std::to_string(n)));
}

GroupPtr quaternion_group() {
  // Left regular action on {+-1, +-i, +-j, +-k}; id 4s + u with u in {1,i,j,k}.
  static const int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto left = [](unsigned u) {
    Perm p(8);
    for (unsigned s = 0; s < 2; ++s)
      for (unsigned v = 0; v < 4; ++v) {
        const unsigned sign = (s + (kSign[u][v] < 0 ? 1u : 0u)) % 2;
        p[4 * s + v] = 4 * sign + kUnit[u][v];
      }
    return p;
  };
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations({left(1), left(2)}, "Q8"));
}

GroupPtr cyclic_group(unsigned n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n >= 1");
  Perm c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations({c}, "C" + std::to_string(n)));
}

GroupPtr named_group(const std::string& name) {
  auto number = [&](std::size_t from) -> unsigned {
    const std::string tail = name.substr(from);
    if (tail.empty() || tail.size() > 3 || !std::all_of(tail.begin(), tail.end(), ::isdigit))
      throw std::invalid_argument("unknown group: " + name);
    return static_cast<unsigned>(std::stoul(tail));
  };
  if (name == "Q8") return quaternion_group();
  if (name.empty()) throw std::invalid_argument("unknown group: empty name");
  switch (name[0]) {
    case 'S': return symmetric_group(number(1));
    case 'A': return alternating_group(number(1));
    case 'D': return dihedral_group(number(1));
    case 'C': return cyclic_group(number(1));
    default: throw std::invalid_argument("unknown group: " + name);
  }
}

// Subgroup

Subgroup::Subgroup(const FiniteGroup& g, std::vector<std::uint32_t> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  pos_.assign(g.order(), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] >= g.order()) throw std::invalid_argument("subgroup: element out of range");
    pos_[elems_[i]] = static_cast<std::int32_t>(i);
  }
  if (elems_.empty() || elems_[0] != 0) throw std::invalid_argument("subgroup: missing identity");
  for (auto a : elems_)
    for (auto b : elems_)
      if (!contains(g.mul(a, b))) throw std::invalid_argument("subgroup: not closed");
}

Subgroup Subgroup::generated(const FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint32_t> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      const std::uint32_t y = g.mul(s, elems[i]);
      if (!in[y]) in[y] = true, elems.push_back(y);
    }
  return Subgroup(g, std::move(elems));
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<std::uint32_t> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {0}); }

bool Subgroup::is_subgroup_of(const Subgroup& o) const {
  return std::all_of(elems_.begin(), elems_.end(), [&](std::uint32_t x) { return o.contains(x); });
}

std::vector<std::uint32_t> Subgroup::generators(const FiniteGroup& g) const {
  std::vector<std::uint32_t> gens;
  Subgroup span = trivial(g);
  for (auto x : elems_) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generated(g, gens);
    if (span.size() == size()) break;
  }
  return gens;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, std::uint32_t x) {
  std::vector<std::uint32_t> e;
  for (auto y : h.elements()) e.push_back(g.conjugate(x, y));
  return Subgroup(g, std::move(e));
}

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<std::uint32_t> e;
  for (auto y : a.elements())
    if (b.contains(y)) e.push_back(y);
  return Subgroup(g, std::move(e));
}

std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g) {
  std::map<std::vector<std::uint32_t>, Subgroup> found;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    Subgroup c = Subgroup::generated(g, {x});
    found.emplace(c.elements(), c);
  }
  // Close under joins; every subgroup is a join of cyclic ones.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Subgroup> cur;
    for (auto& kv : found) cur.push_back(kv.second);
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i].is_subgroup_of(cur[j]) || cur[j].is_subgroup_of(cur[i])) continue;
        std::vector<std::uint32_t> gens = cur[i].generators(g);
        for (auto y : cur[j].generators(g)) gens.push_back(y);
        Subgroup s = Subgroup::generated(g, gens);
        if (found.emplace(s.elements(), s).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  for (auto& kv : found) out.push_back(kv.second);
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements() < b.elements();
  });
  return out;
}

// ClassFunction

ClassFunction::ClassFunction(GroupPtr g, Subgroup domain, std::vector<CyclotomicInt> values)
    : g_(std::move(g)), dom_(std::move(domain)), vals_(std::move(values)) {
  if (!g_) throw std::invalid_argument("ClassFunction: null group");
  if (vals_.size() != dom_.size()) throw std::invalid_argument("ClassFunction: one value per domain element");
  for (const auto& v : vals_) m_ = std::lcm(m_, v.order());
  for (auto& v : vals_) v = v.embed(m_);
}

ClassFunction ClassFunction::constant(GroupPtr g, Subgroup domain, std::int64_t c) {
  std::vector<CyclotomicInt> v(domain.size(), CyclotomicInt::from_int(1, c));
  return ClassFunction(std::move(g), std::move(domain), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr g, Subgroup domain) {
  std::vector<CyclotomicInt> v(domain.size(), CyclotomicInt::zero(1));
  v[0] = CyclotomicInt::from_int(1, domain.size());
  return ClassFunction(std::move(g), std::move(domain), std::move(v));
}

const CyclotomicInt& ClassFunction::at(std::uint32_t x) const {
  const std::int32_t p = x < g_->order() ? dom_.position(x) : -1;
  if (p < 0) throw std::out_of_range("ClassFunction: element outside domain");
  return vals_[p];
}

bool ClassFunction::is_class_function() const {
  for (auto x : dom_.elements())
    for (auto h : dom_.elements())
      if (at(g_->conjugate(h, x)) != at(x)) return false;
  return true;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.vals_) v = v.conj();
  return r;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (g_ != o.g_ || !(dom_ == o.dom_)) throw std::invalid_argument("ClassFunction: domains differ");
  m_ = std::lcm(m_, o.m_);
  for (std::size_t i = 0; i < vals_.size(); ++i) vals_[i] = (vals_[i] + o.vals_[i]).embed(m_);
  return *this;
}

ClassFunction operator*(std::int64_t s, const ClassFunction& a) {
  ClassFunction r = a;
  for (auto& v : r.vals_) v = BigInt(s) * v;
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (a.g_ != b.g_ || !(a.dom_ == b.dom_)) return false;
  for (std::size_t i = 0; i < a.vals_.size(); ++i)
    if (a.vals_[i] != b.vals_[i]) return false;
  return true;
}

std::vector<CyclotomicInt> ClassFunction::class_values() const {
  std::vector<CyclotomicInt> out;
  std::vector<bool> seen(dom_.size(), false);
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (seen[i]) continue;
    const std::uint32_t x = dom_.elements()[i];
    for (auto h : dom_.elements()) seen[dom_.position(g_->conjugate(h, x))] = true;
    out.push_back(vals_[i]);
  }
  return out;
}

// Characters

ClassFunction linear_character(const GroupPtr& g, const Subgroup& h, const std::vector<std::uint32_t>& gens,
                               unsigned m, const std::vector<std::int64_t>& exps) {
  if (gens.size() != exps.size() || m == 0) throw std::invalid_argument("linear_character: bad arguments");
  auto e = extend_linear(*g, h, gens, m, exps);
  if (!e) throw std::invalid_argument("linear_character: not a homomorphism");
  return from_exponents(g, h, m, *e);
}

std::vector<ClassFunction> linear_characters(const GroupPtr& g, const Subgroup& h) {
  const std::vector<std::uint32_t> gens = h.generators(*g);
  const unsigned m = subgroup_exponent(*g, h);
  std::vector<ClassFunction> out;
  std::vector<std::int64_t> a(gens.size(), 0);
  while (true) {
    bool orders_ok = true;
    for (std::size_t i = 0; i < gens.size() && orders_ok; ++i)
      orders_ok = (a[i] * g->elem_order(gens[i])) % m == 0;
    if (orders_ok)
      if (auto e = extend_linear(*g, h, gens, m, a)) out.push_back(from_exponents(g, h, m, *e));
    std::size_t i = 0;
    while (i < a.size() && ++a[i] == static_cast<std::int64_t>(m)) a[i++] = 0;
    if (i == a.size()) break;
  }
  return out;
}

ClassFunction induce(const ClassFunction& psi, const Subgroup& to) {
  const FiniteGroup& G = *psi.group();
  const Subgroup& H = psi.domain();
  if (!H.is_subgroup_of(to)) throw std::invalid_argument("induce: domain is not a subgroup of the target");
  std::vector<CyclotomicInt> vals;
  for (auto x : to.elements()) {
    CyclotomicInt s = CyclotomicInt::zero(psi.order());
    for (auto k : to.elements()) {
      const std::uint32_t y = G.conjugate(k, x);
      if (H.contains(y)) s += psi.at(y);
    }
    vals.push_back(s.exact_div(H.size()));
  }
  return ClassFunction(psi.group(), to, std::move(vals));
}

ClassFunction induce(const ClassFunction& psi) { return induce(psi, Subgroup::whole(*psi.group())); }

ClassFunction restrict(const ClassFunction& chi, const Subgroup& to) {
  if (!to.is_subgroup_of(chi.domain())) throw std::invalid_argument("restrict: not a subgroup of the domain");
  std::vector<CyclotomicInt> vals;
  for (auto x : to.elements()) vals.push_back(chi.at(x));
  return ClassFunction(chi.group(), to, std::move(vals));
}

CyclotomicInt inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group() || !(a.domain() == b.domain()))
    throw std::invalid_argument("inner_product: domains differ");
  CyclotomicInt s = CyclotomicInt::zero(std::lcm(a.order(), b.order()));
  for (auto x : a.domain().elements()) s += a.at(x) * b.at(x).conj();
  return s.exact_div(a.domain().size());
}

std::vector<std::uint32_t> double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& d) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto a : h.elements())
      for (auto b : d.elements()) seen[g.mul(g.mul(a, x), b)] = true;
  }
  return reps;
}

ClassFunction conjugate_character(const ClassFunction& psi, std::uint32_t x) {
  const FiniteGroup& G = *psi.group();
  Subgroup hx = conjugate_subgroup(G, psi.domain(), x);
  std::vector<CyclotomicInt> vals;
  for (auto y : hx.elements()) vals.push_back(psi.at(G.mul(x, G.mul(y, G.inv(x)))));
  return ClassFunction(psi.group(), std::move(hx), std::move(vals));
}

MackeyResult mackey_check(const ClassFunction& psi, const Subgroup& d) {
  const FiniteGroup& G = *psi.group();
  MackeyResult r{restrict(induce(psi), d), ClassFunction::constant(psi.group(), d, 0), {}, false};
  r.reps = double_cosets(G, psi.domain(), d);
  for (auto x : r.reps) {
    const ClassFunction px = conjugate_character(psi, x);
    r.rhs += induce(restrict(px, intersect(G, px.domain(), d)), d);
  }
  r.pass = r.lhs == r.rhs;
  return r;
}

MackeySweep mackey_sweep(const GroupPtr& g, unsigned workers) {
  const std::vector<Subgroup> lat = subgroup_lattice(*g);
  std::vector<std::vector<ClassFunction>> chars;
  for (const auto& h : lat) chars.push_back(linear_characters(g, h));
  const std::size_t n = lat.size();
  std::vector<MackeySweep> slot(n * n);
  parallel_for(n * n, workers, [&](std::size_t idx) {
    const std::size_t hi = idx / n, di = idx % n;
    for (const auto& psi : chars[hi]) {
      ++slot[idx].triples;
      if (!mackey_check(psi, lat[di]).pass) ++slot[idx].failures;
    }
  });
  MackeySweep total;
  for (const auto& s : slot) total.triples += s.triples, total.failures += s.failures;
  return total;
}

ReciprocitySweep reciprocity_sweep(const GroupPtr& g, unsigned workers) {
  const std::vector<Subgroup> lat = subgroup_lattice(*g);
  std::vector<ClassFunction> linear;
  std::vector<ClassFunction> induced;
  for (const auto& h : lat)
    for (auto& psi : linear_characters(g, h)) {
      ClassFunction ind = induce(psi);
      if (std::find(induced.begin(), induced.end(), ind) == induced.end()) induced.push_back(ind);
      linear.push_back(std::move(psi));
    }
  std::vector<ReciprocitySweep> slot(linear.size());
  parallel_for(linear.size(), workers, [&](std::size_t i) {
    const ClassFunction ind = induce(linear[i]);
    for (const auto& chi : induced) {
      ++slot[i].pairs;
      if (inner_product(ind, chi) != inner_product(linear[i], restrict(chi, linear[i].domain()))) ++slot[i].failures;
    }
  });
  ReciprocitySweep total;
  for (const auto& s : slot) total.pairs += s.pairs, total.failures += s.failures;
  return total;
}

// Matrices and determinants

CycloMatrix::CycloMatrix(unsigned dim, unsigned m) : n_(dim), m_(m), a_(std::size_t(dim) * dim, CyclotomicInt::zero(m)) {}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("CycloMatrix: dimension mismatch");
  CycloMatrix r(n_, std::lcm(m_, o.m_));
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

CycloMatrix CycloMatrix::pow(unsigned e) const {
  CycloMatrix r(n_, m_);
  for (unsigned i = 0; i < n_; ++i) r.at(i, i) = CyclotomicInt::from_int(m_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

CyclotomicInt CycloMatrix::det() const {
  if (n_ > 20) throw std::invalid_argument("CycloMatrix::det: dimension above 20");
  // minor[mask]: determinant of rows 0..|mask|-1 against the columns in mask.
  std::vector<CyclotomicInt> minor(std::size_t(1) << n_, CyclotomicInt::zero(m_));
  minor[0] = CyclotomicInt::from_int(m_, 1);
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    const unsigned row = static_cast<unsigned>(__builtin_popcountll(mask)) - 1;
    CyclotomicInt s = CyclotomicInt::zero(m_);
    unsigned idx = 0;
    for (unsigned c = 0; c < n_; ++c) {
      if (!(mask >> c & 1)) continue;
      const CyclotomicInt& a = at(row, c);
      const CyclotomicInt& sub = minor[mask & ~(std::size_t(1) << c)];
      if (!a.is_zero() && !sub.is_zero()) {
        CyclotomicInt t = a * sub;
        if ((row + idx) % 2) s -= t;
        else s += t;
      }
      ++idx;
    }
    minor[mask] = s;
  }
  return minor.back();
}

CycloMatrix frob_matrix(unsigned f, const CyclotomicInt& c) {
  if (f == 0) throw std::invalid_argument("frob_matrix: f >= 1");
  CycloMatrix m(f, c.order());
  m.at(0, f - 1) = c;
  for (unsigned i = 1; i < f; ++i) m.at(i, i - 1) = CyclotomicInt::from_int(c.order(), 1);
  return m;
}

CyclotomicInt frob_det_induced(unsigned N, unsigned f, unsigned m, std::int64_t a, unsigned e) {
  if (f == 0 || N % f != 0) throw std::invalid_argument("frob_det_induced: f must divide N");
  if (m == 0 || (static_cast<std::int64_t>(N / f) * a) % m != 0)
    throw std::invalid_argument("frob_det_induced: psi is not a character of <Frob^f>");
  return frob_matrix(f, CyclotomicInt::zeta(m, a)).pow(e).det();
}

CyclotomicInt frob_det_formula(unsigned f, unsigned m, std::int64_t a, unsigned e) {
  CyclotomicInt v = CyclotomicInt::zeta(m, a);
  if ((f - 1) % 2) v = -v;
  return v.pow(e);
}

// Euler polynomials

EulerPoly::EulerPoly(unsigned m) : m_(m), c_{CyclotomicInt::from_int(m, 1)} {}

EulerPoly EulerPoly::binomial(const CyclotomicInt& c, unsigned f) {
  if (f == 0) throw std::invalid_argument("EulerPoly::binomial: f >= 1");
  EulerPoly p(c.order());
  p.c_.resize(f + 1, CyclotomicInt::zero(c.order()));
  p.c_[f] = -c;
  p.trim();
  return p;
}

void EulerPoly::trim() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

EulerPoly EulerPoly::embed(unsigned m) const {
  EulerPoly r = *this;
  r.m_ = m;
  for (auto& v : r.c_) v = v.embed(m);
  return r;
}

EulerPoly EulerPoly::truncate(unsigned deg) const {
  EulerPoly r = *this;
  if (r.c_.size() > deg + 1) r.c_.resize(deg + 1);
  r.trim();
  return r;
}

EulerPoly EulerPoly::operator*(const EulerPoly& o) const {
  const unsigned m = std::lcm(m_, o.m_);
  EulerPoly r(m);
  r.c_.assign(c_.size() + o.c_.size() - 1, CyclotomicInt::zero(m));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
  }
  for (auto& v : r.c_) v = v.embed(m);
  r.trim();
  return r;
}

EulerPoly EulerPoly::pow(unsigned e) const {
  EulerPoly r(m_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool operator==(const EulerPoly& a, const EulerPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

EulerPoly EulerPoly::from_coeffs(std::vector<CyclotomicInt> c) {
  if (c.empty()) throw std::invalid_argument("EulerPoly::from_coeffs: empty");
  unsigned m = 1;
  for (const auto& v : c) m = std::lcm(m, v.order());
  EulerPoly p(m);
  p.c_ = std::move(c);
  for (auto& v : p.c_) v = v.embed(m);
  p.trim();
  return p;
}

std::string EulerPoly::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")";
    if (i >= 1) s += "T";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

EulerPoly det_one_minus(const std::vector<CyclotomicInt>& power_traces) {
  unsigned m = 1;
  for (const auto& p : power_traces) m = std::lcm(m, p.order());
  // k s_k = -sum_{i=1}^k p_i s_{k-i}: logarithmic derivative of det(1 - M T).
  std::vector<CyclotomicInt> s{CyclotomicInt::from_int(m, 1)};
  for (std::size_t k = 1; k <= power_traces.size(); ++k) {
    CyclotomicInt acc = CyclotomicInt::zero(m);
    for (std::size_t i = 1; i <= k; ++i) acc += power_traces[i - 1] * s[k - i];
    s.push_back((-acc).exact_div(BigInt(k)).embed(m));
  }
  return EulerPoly::from_coeffs(std::move(s));
}

// Records

bool VirtualInductionRecord::consistent() const {
  ClassFunction sum = ClassFunction::constant(group, Subgroup::whole(*group), 0);
  for (const auto& t : terms) sum += t.a * induce(t.psi);
  return sum == target;
}

bool VirtualInductionRecord::degree_identity() const {
  std::int64_t d = 0;
  for (const auto& t : terms) d += t.a * static_cast<std::int64_t>(group->order() / t.h.size());
  return target.degree() == CyclotomicInt::from_int(1, d);
}

bool VirtualInductionRecord::place_degree_identity(std::uint32_t frob) const {
  std::int64_t d = 0;
  for (const auto& pl : places(*this, frob)) d += terms[pl.term].a * static_cast<std::int64_t>(pl.f);
  return target.degree() == CyclotomicInt::from_int(1, d);
}

std::vector<PlaceData> places(const VirtualInductionRecord& rec, std::uint32_t frob) {
  const FiniteGroup& G = *rec.group;
  const Subgroup D = Subgroup::generated(G, {frob});
  std::vector<PlaceData> out;
  for (std::size_t j = 0; j < rec.terms.size(); ++j) {
    const InductionTerm& t = rec.terms[j];
    for (auto g : double_cosets(G, t.h, D)) {
      const Subgroup k = intersect(G, conjugate_subgroup(G, t.h, g), D);
      PlaceData pl;
      pl.term = j;
      pl.rep = g;
      pl.f = D.size() / k.size();
      const std::uint32_t ff = G.pow(frob, pl.f);
      pl.psi_frob = t.psi.at(G.mul(g, G.mul(ff, G.inv(g))));
      out.push_back(std::move(pl));
    }
  }
  return out;
}

namespace {

/// prod P^a over the factors, split into numerator (a > 0) and denominator.
std::pair<EulerPoly, EulerPoly> expand(const std::vector<EulerFactor>& fs) {
  EulerPoly num, den;
  for (const auto& f : fs) {
    if (f.exponent >= 0) num = num * f.poly.pow(static_cast<unsigned>(f.exponent));
    else den = den * f.poly.pow(static_cast<unsigned>(-f.exponent));
  }
  return {num, den};
}

}  // namespace

EulerCheck euler_inductivity_check(const VirtualInductionRecord& rec, std::uint32_t frob) {
  if (!rec.consistent()) throw std::invalid_argument("euler_inductivity_check: inconsistent record");
  const FiniteGroup& G = *rec.group;
  EulerCheck out;
  for (const auto& pl : places(rec, frob))
    out.lhs.push_back({EulerPoly::binomial(pl.psi_frob, pl.f), rec.terms[pl.term].a});
  unsigned bound = 0;
  for (const auto& t : rec.terms) {
    const unsigned d = G.order() / t.h.size();
    bound += static_cast<unsigned>(std::abs(t.a)) * d;
    out.rhs.push_back({det_one_minus(monomial_power_traces(coset_action(t.psi, frob), d)), t.a});
  }
  const auto [ln, ld] = expand(out.lhs);
  const auto [rn, rd] = expand(out.rhs);
  out.factored_equal = ln * rd == rn * ld;
  // Power series of det(1 - Frob T | V_target) to a degree past both sides.
  const unsigned len = ln.degree() + ld.degree() + bound + 1;
  std::vector<CyclotomicInt> traces;
  for (unsigned k = 1; k <= len; ++k) traces.push_back(rec.target.at(G.pow(frob, k)));
  const EulerPoly series = det_one_minus(traces);
  out.target_equal = ln == (series * ld).truncate(len);
  return out;
}

SignLedger sign_ledger(const VirtualInductionRecord& rec, std::uint32_t frob, unsigned e) {
  SignLedger out;
  std::int64_t dh_exp = 0;
  CyclotomicInt predicted = CyclotomicInt::from_int(1, 1);
  for (const auto& pl : places(rec, frob)) {
    const std::int64_t a = rec.terms[pl.term].a;
    out.f_list.push_back(pl.f);
    dh_exp += a * static_cast<std::int64_t>(e) * (pl.f - 1);
    const CyclotomicInt det = frob_matrix(pl.f, pl.psi_frob).pow(e).det();
    const CyclotomicInt c = pl.psi_frob.pow(e);
    int s;
    if (det == c) s = 1;
    else if (det == -c) s = -1;
    else throw std::logic_error("sign_ledger: determinant is not +-psi(Frob^f)^e");
    if (s < 0 && a % 2) out.frob_sign = -out.frob_sign;
    predicted *= root_pow(c, a);
  }
  out.dh_sign = dh_exp % 2 ? -1 : 1;
  // det(Frob^e | sum_j a_j Ind psi_j) from the coset monomial matrices.
  CyclotomicInt total = CyclotomicInt::from_int(1, 1);
  for (const auto& t : rec.terms) total *= root_pow(monomial_det(coset_action(t.psi, frob)).pow(e), t.a);
  out.total_identity = total == BigInt(out.frob_sign) * predicted;
  return out;
}

// Corpus

namespace {

ClassFunction from_element_fn(const GroupPtr& g, const std::function<std::int64_t(std::uint32_t)>& f) {
  std::vector<CyclotomicInt> vals;
  for (std::uint32_t x = 0; x < g->order(); ++x) vals.push_back(CyclotomicInt::from_int(1, f(x)));
  return ClassFunction(g, Subgroup::whole(*g), std::move(vals));
}

std::int64_t fixed_points(const Perm& p) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] == i;
  return c;
}

InductionTerm trivial_term(const GroupPtr& g, const Subgroup& h, std::int64_t a) {
  return {a, h, ClassFunction::constant(g, h, 1)};
}

std::uint32_t central_involution(const FiniteGroup& g) {
  for (std::uint32_t z = 1; z < g.order(); ++z)
    if (g.elem_order(z) == 2 && g.classes()[g.class_of(z)].size() == 1) return z;
  throw std::logic_error("no central involution");
}

}  // namespace

std::vector<VirtualInductionRecord> record_corpus() {
  std::vector<VirtualInductionRecord> out;
  {
    const GroupPtr g = symmetric_group(3);
    const Subgroup G = Subgroup::whole(*g), E = Subgroup::trivial(*g);
    const std::uint32_t c3 = find_perm(*g, {1, 2, 0}), t = find_perm(*g, {1, 0, 2});
    const Subgroup A3 = Subgroup::generated(*g, {c3}), C2 = Subgroup::generated(*g, {t});
    const auto perm = [&](std::uint32_t x) { return fixed_points(g->permutations()[x]); };
    const ClassFunction std2 = from_element_fn(g, [&](std::uint32_t x) { return perm(x) - 1; });
    const ClassFunction sgn = from_element_fn(g, [&](std::uint32_t x) { return perm_sign(g->permutations()[x]); });
    out.push_back({"S3 trivial", g, {trivial_term(g, G, 1)}, ClassFunction::constant(g, G, 1)});
    out.push_back({"S3 regular", g, {trivial_term(g, E, 1)}, ClassFunction::regular(g, G)});
    out.push_back({"S3 permutation", g, {trivial_term(g, C2, 1)}, from_element_fn(g, perm)});
    out.push_back({"S3 standard via A3", g, {{1, A3, linear_character(g, A3, {c3}, 3, {1})}}, std2});
    out.push_back({"S3 standard via C2", g, {trivial_term(g, C2, 1), trivial_term(g, G, -1)}, std2});
    out.push_back({"S3 sign", g, {trivial_term(g, A3, 1), trivial_term(g, G, -1)}, sgn});
    // Ind_C2 sgn = sgn + std, so sgn = Ind_C2 sgn - Ind_A3 psi.
    out.push_back({"S3 sign via C2", g,
                   {{1, C2, linear_character(g, C2, {t}, 2, {1})}, {-1, A3, linear_character(g, A3, {c3}, 3, {1})}},
                   sgn});
  }
  {
    const GroupPtr g = dihedral_group(4);
    const Subgroup G = Subgroup::whole(*g), E = Subgroup::trivial(*g);
    const std::uint32_t r = find_perm(*g, {1, 2, 3, 0}), s = find_perm(*g, {0, 3, 2, 1});
    const std::uint32_t z = central_involution(*g);
    const Subgroup C4 = Subgroup::generated(*g, {r}), Z = Subgroup::generated(*g, {z});
    const Subgroup S = Subgroup::generated(*g, {s}), V = Subgroup::generated(*g, {s, z});
    const ClassFunction two = from_element_fn(g, [&](std::uint32_t x) { return x == 0 ? 2 : x == z ? -2 : 0; });
    const auto perm = [&](std::uint32_t x) { return fixed_points(g->permutations()[x]); };
    out.push_back({"D4 regular", g, {trivial_term(g, E, 1)}, ClassFunction::regular(g, G)});
    out.push_back({"D4 two-dim via C4", g, {{1, C4, linear_character(g, C4, {r}, 4, {1})}}, two});
    out.push_back({"D4 two-dim via V", g, {{1, V, linear_character(g, V, {s, z}, 2, {0, 1})}}, two});
    out.push_back({"D4 twice two-dim via Z", g, {{1, Z, linear_character(g, Z, {z}, 2, {1})}}, 2 * two});
    out.push_back({"D4 vertex permutation", g, {trivial_term(g, S, 1)}, from_element_fn(g, perm)});
    out.push_back({"D4 two-dim virtual", g,
                   {trivial_term(g, S, 1), trivial_term(g, V, -1)}, two});
  }
  {
    const GroupPtr g = quaternion_group();
    const Subgroup G = Subgroup::whole(*g), E = Subgroup::trivial(*g);
    const std::uint32_t i = 1, j = 2, z = central_involution(*g);
    const Subgroup Ci = Subgroup::generated(*g, {i}), Z = Subgroup::generated(*g, {z});
    const ClassFunction two = from_element_fn(g, [&](std::uint32_t x) { return x == 0 ? 2 : x == z ? -2 : 0; });
    const ClassFunction lin = from_element_fn(g, [&](std::uint32_t x) { return Ci.contains(x) ? 1 : -1; });
    out.push_back({"Q8 regular", g, {trivial_term(g, E, 1)}, ClassFunction::regular(g, G)});
    out.push_back({"Q8 two-dim via <i>", g, {{1, Ci, linear_character(g, Ci, {i}, 4, {1})}}, two});
    out.push_back({"Q8 two-dim via <j>", g,
                   {{1, Subgroup::generated(*g, {j}), linear_character(g, Subgroup::generated(*g, {j}), {j}, 4, {3})}},
                   two});
    out.push_back({"Q8 twice two-dim via Z", g, {{1, Z, linear_character(g, Z, {z}, 2, {1})}}, 2 * two});
    out.push_back({"Q8 linear", g, {trivial_term(g, Ci, 1), trivial_term(g, G, -1)}, lin});
  }
  return out;
}

RandomCase random_case(std::uint64_t seed) {
  static const char* const kGroups[] = {"S3", "D4", "Q8", "A4"};
  std::mt19937_64 rng(seed);
  const GroupPtr g = named_group(kGroups[rng() % 4]);
  const std::vector<Subgroup> lat = subgroup_lattice(*g);
  RandomCase rc;
  rc.record.name = "random " + g->name() + " seed " + std::to_string(seed);
  rc.record.group = g;
  ClassFunction target = ClassFunction::constant(g, Subgroup::whole(*g), 0);
  const unsigned nterms = 1 + static_cast<unsigned>(rng() % 4);
  for (unsigned t = 0; t < nterms; ++t) {
    const Subgroup& h = lat[rng() % lat.size()];
    std::vector<ClassFunction> lc = linear_characters(g, h);
    static const std::int64_t kCoeff[] = {-2, -1, 1, 2};
    InductionTerm term{kCoeff[rng() % 4], h, lc[rng() % lc.size()]};
    target += term.a * induce(term.psi);
    rc.record.terms.push_back(std::move(term));
  }
  rc.record.target = std::move(target);
  rc.frob = static_cast<std::uint32_t>(rng() % g->order());
  rc.e = 1 + static_cast<unsigned>(rng() % 4);
  return rc;
}

}  // namespace wittgauss::brauer
