/* Copyright 2026 The affstan Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "affstan/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace affstan {

Basis Basis::affine_schur(int n) {
  if (n < 3) throw std::invalid_argument("affine bases need rank n >= 3");
  return {BasisKind::affine_schur, n};
}

Basis Basis::k_schur(int n) {
  if (n < 3) throw std::invalid_argument("affine bases need rank n >= 3");
  return {BasisKind::k_schur, n};
}

std::string to_string(const Basis& b) {
  switch (b.kind) {
    case BasisKind::monomial: return "m";
    case BasisKind::homogeneous: return "h";
    case BasisKind::elementary: return "e";
    case BasisKind::schur: return "s";
    case BasisKind::affine_schur: return "affine_schur";
    case BasisKind::k_schur: return "kschur";
  }
  return "?";
}

Basis parse_basis(const std::string& name, int n) {
  if (name == "m") return Basis::m();
  if (name == "h") return Basis::h();
  if (name == "e") return Basis::e();
  if (name == "s") return Basis::s();
  if (name == "affine_schur") return Basis::affine_schur(n);
  if (name == "kschur") return Basis::k_schur(n);
  throw std::invalid_argument("unknown basis '" + name + "'");
}

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda) {
  SymFunc f(lambda.size(), basis);
  f.add(lambda, 1);
  return f;
}

Integer SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Integer& c) {
  if (lambda.size() != degree_)
    throw std::invalid_argument("partition " + to_string(lambda) +
                                " does not have size " +
                                std::to_string(degree_));
  if (basis_.is_affine() && !is_bounded(lambda, basis_.n))
    throw std::invalid_argument("partition " + to_string(lambda) +
                                " is not " + std::to_string(basis_.n - 1) +
                                "-bounded");
  if (c == 0) return;
  Integer& slot = terms_[lambda];
  slot += c;
  if (slot == 0) terms_.erase(lambda);
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  if (o.degree_ != degree_ || !(o.basis_ == basis_))
    throw std::invalid_argument("adding symmetric functions of different "
                                "degree or basis");
  SymFunc r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + o * -1; }

SymFunc SymFunc::operator*(const Integer& c) const {
  SymFunc r(degree_, basis_);
  for (const auto& [p, x] : terms_) r.add(p, x * c);
  return r;
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string name = to_string(f.basis());
  if (f.basis().is_affine()) name += "^(" + std::to_string(f.basis().n) + ")";
  std::string out;
  for (const auto& [p, c] : f.terms()) {
    std::string cs = c.str();
    if (out.empty()) {
      if (cs == "-1") cs = "-";
      else if (cs == "1") cs = "";
    } else if (c < 0) {
      out += " - ";
      cs = cs.substr(1);
      if (cs == "1") cs = "";
    } else {
      out += " + ";
      if (cs == "1") cs = "";
    }
    out += cs + name + to_string(p);
  }
  return out;
}

namespace {

std::mutex kostka_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> kostka_memo;

// Removes a horizontal strip of size k from shape in every possible way.
void strips(const std::vector<int>& shape, std::size_t row, int k,
            std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (row == shape.size()) {
    if (k == 0) out.push_back(cur);
    return;
  }
  const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
  for (int take = 0; take <= std::min(k, shape[row] - below); ++take) {
    cur[row] = shape[row] - take;
    strips(shape, row + 1, k - take, cur, out);
  }
  cur[row] = shape[row];
}

Integer kostka_rec(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<int> s = shape;
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (content.empty()) return s.empty() ? 1 : 0;
  const auto key = std::make_pair(s, content);
  {
    std::lock_guard<std::mutex> lock(kostka_mutex);
    auto it = kostka_memo.find(key);
    if (it != kostka_memo.end()) return it->second;
  }
  std::vector<std::vector<int>> smaller;
  std::vector<int> cur = s;
  strips(s, 0, content.back(), cur, smaller);
  const std::vector<int> rest(content.begin(), content.end() - 1);
  Integer total = 0;
  for (const auto& t : smaller) total += kostka_rec(t, rest);
  std::lock_guard<std::mutex> lock(kostka_mutex);
  kostka_memo.emplace(key, total);
  return total;
}

// h_mu (x) ... as a product of single-row factors: the partition with all
// parts of a and b.
Terms expand_determinant(const std::vector<int>& diag) {
  // det( x_{diag_i - i + j} ) with x_0 = 1, x_k = 0 for k < 0, expanded
  // into monomials x_{k_1} x_{k_2} ... recorded as partitions.
  Terms out;
  const int l = static_cast<int>(diag.size());
  std::vector<int> parts;
  std::vector<bool> used(l, false);
  std::function<void(int, int)> rec = [&](int i, int sign) {
    if (i == l) {
      out[Partition::from_composition(parts)] += sign;
      return;
    }
    // sign of the partial permutation tracked by counting inversions
    for (int j = 0; j < l; ++j) {
      if (used[j]) continue;
      const int idx = diag[i] - i + j;
      if (idx < 0) continue;
      int inv = 0;
      for (int k = j + 1; k < l; ++k)
        if (used[k]) ++inv;
      used[j] = true;
      parts.push_back(idx);
      rec(i + 1, (inv % 2) ? -sign : sign);
      parts.pop_back();
      used[j] = false;
    }
  };
  rec(0, 1);
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

void add_into(Terms& t, const Partition& p, const Integer& c) {
  if (c == 0) return;
  Integer& slot = t[p];
  slot += c;
  if (slot == 0) t.erase(p);
}

Terms to_schur(const SymFunc& f);
SymFunc from_schur(const Terms& s, int degree, Basis target);

Terms m_to_schur(const Terms& m, int degree) {
  Terms rem = m;
  Terms out;
  const auto parts = partitions(degree);  // largest first
  for (const auto& lam : parts) {
    auto it = rem.find(lam);
    if (it == rem.end()) continue;
    const Integer a = it->second;
    out[lam] = a;
    for (const auto& mu : parts)
      if (mu <= lam) add_into(rem, mu, -a * kostka(lam, mu));
  }
  return out;
}

Terms schur_to_m(const Terms& s, int degree) {
  Terms out;
  for (const auto& [lam, a] : s)
    for (const auto& mu : partitions(degree))
      add_into(out, mu, a * kostka(lam, mu));
  return out;
}

Terms to_schur(const SymFunc& f) {
  const int d = f.degree();
  Terms out;
  switch (f.basis().kind) {
    case BasisKind::schur:
      return f.terms();
    case BasisKind::monomial:
      return m_to_schur(f.terms(), d);
    case BasisKind::homogeneous:
    case BasisKind::elementary: {
      const bool elem = f.basis().kind == BasisKind::elementary;
      for (const auto& [mu, c] : f.terms())
        for (const auto& lam : partitions(d)) {
          const Integer k = kostka(lam, mu);
          if (k != 0) add_into(out, elem ? conjugate(lam) : lam, c * k);
        }
      return out;
    }
    case BasisKind::affine_schur: {
      Terms m;
      for (const auto& [lam, c] : f.terms()) {
        const SymFunc fl = affine_schur(f.basis().n, lam);
        for (const auto& [mu, x] : fl.terms()) add_into(m, mu, c * x);
      }
      return m_to_schur(m, d);
    }
    case BasisKind::k_schur: {
      SymFunc h(d, Basis::h());
      for (const auto& [lam, c] : f.terms())
        h = h + k_schur(f.basis().n, lam) * c;
      return to_schur(h);
    }
  }
  return out;
}

SymFunc from_schur(const Terms& s, int degree, Basis target) {
  SymFunc out(degree, target);
  switch (target.kind) {
    case BasisKind::schur:
      for (const auto& [p, c] : s) out.add(p, c);
      return out;
    case BasisKind::monomial:
      for (const auto& [p, c] : schur_to_m(s, degree)) out.add(p, c);
      return out;
    case BasisKind::homogeneous:
      for (const auto& [lam, c] : s)
        for (const auto& [mu, x] : expand_determinant(lam.parts()))
          out.add(mu, c * x);
      return out;
    case BasisKind::elementary:
      for (const auto& [lam, c] : s)
        for (const auto& [mu, x] : expand_determinant(conjugate(lam).parts()))
          out.add(mu, c * x);
      return out;
    case BasisKind::affine_schur: {
      const int n = target.n;
      Terms rem;
      for (const auto& [p, c] : schur_to_m(s, degree))
        if (is_bounded(p, n)) rem[p] = c;
      for (const auto& lam : bounded_partitions(n, degree)) {
        auto it = rem.find(lam);
        if (it == rem.end()) continue;
        const Integer a = it->second;
        out.add(lam, a);
        const SymFunc fl = affine_schur(n, lam);
        for (const auto& [mu, x] : fl.terms()) add_into(rem, mu, -a * x);
      }
      return out;
    }
    case BasisKind::k_schur: {
      const int n = target.n;
      const SymFunc h = from_schur(s, degree, Basis::h());
      for (const auto& [mu, c] : h.terms())
        if (!is_bounded(mu, n))
          throw std::domain_error(
              "not in the subring generated by h_1..h_" +
              std::to_string(n - 1) + ": coefficient " + c.str() + " of h" +
              to_string(mu));
      for (const auto& lam : bounded_partitions(n, degree)) {
        Integer a = 0;
        const SymFunc fl = affine_schur(n, lam);
        for (const auto& [mu, c] : h.terms()) a += c * fl.coeff(mu);
        out.add(lam, a);
      }
      return out;
    }
  }
  return out;
}

}  // namespace

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  return kostka_rec(lambda.parts(), mu.parts());
}

SymFunc change_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return from_schur(to_schur(f), f.degree(), target);
}

Integer hall_inner_product(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("inner product of different degrees");
  const SymFunc fh = change_basis(f, Basis::h());
  const SymFunc gm = change_basis(g, Basis::m());
  Integer total = 0;
  for (const auto& [p, c] : fh.terms()) total += c * gm.coeff(p);
  return total;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  const SymFunc fh = change_basis(f, Basis::h());
  const SymFunc gh = change_basis(g, Basis::h());
  SymFunc prod(f.degree() + g.degree(), Basis::h());
  for (const auto& [a, x] : fh.terms())
    for (const auto& [b, y] : gh.terms()) prod.add(join(a, b), x * y);
  if (f.basis().kind == BasisKind::affine_schur)
    return change_basis(reduce_bounded(prod, f.basis().n), f.basis());
  return change_basis(prod, f.basis());
}

SymFunc reduce_bounded(const SymFunc& f, int n) {
  const SymFunc m = change_basis(f, Basis::m());
  SymFunc out(f.degree(), Basis::m());
  for (const auto& [p, c] : m.terms())
    if (is_bounded(p, n)) out.add(p, c);
  return out;
}

namespace {

// All ways to split the multiset of parts of lambda into two.
std::vector<std::pair<Partition, Partition>> splits(const Partition& lambda) {
  std::map<int, int, std::greater<>> mult;
  for (int p : lambda.parts()) ++mult[p];
  std::vector<std::pair<std::vector<int>, std::vector<int>>> acc{{{}, {}}};
  for (const auto& [part, count] : mult) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> next;
    for (const auto& [a, b] : acc)
      for (int j = 0; j <= count; ++j) {
        auto na = a;
        auto nb = b;
        na.insert(na.end(), j, part);
        nb.insert(nb.end(), count - j, part);
        next.emplace_back(std::move(na), std::move(nb));
      }
    acc = std::move(next);
  }
  std::vector<std::pair<Partition, Partition>> out;
  for (auto& [a, b] : acc) out.emplace_back(Partition(a), Partition(b));
  return out;
}

void add_tensor(SymTensor& t, const Partition& a, const Partition& b,
                const Integer& c) {
  if (c == 0) return;
  Integer& slot = t.terms[{a, b}];
  slot += c;
  if (slot == 0) t.terms.erase({a, b});
}

// Delta of a multiplicative basis element, given Delta of its one-part
// generators: sum over j of g_j (x) g_{k-j}.
SymTensor multiplicative_coproduct(const SymFunc& f) {
  SymTensor out{f.basis(), f.degree(), {}};
  for (const auto& [mu, c] : f.terms()) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> acc{
        {{{}, {}}, Integer(1)}};
    for (int k : mu.parts()) {
      std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> next;
      for (const auto& [ab, x] : acc)
        for (int j = 0; j <= k; ++j) {
          auto a = ab.first;
          auto b = ab.second;
          if (j > 0) a.push_back(j);
          if (k - j > 0) b.push_back(k - j);
          next[{a, b}] += x;
        }
      acc = std::move(next);
    }
    for (const auto& [ab, x] : acc)
      add_tensor(out, Partition::from_composition(ab.first),
                 Partition::from_composition(ab.second), c * x);
  }
  return out;
}

}  // namespace

SymTensor coproduct(const SymFunc& f) {
  switch (f.basis().kind) {
    case BasisKind::homogeneous:
    case BasisKind::elementary:
      return multiplicative_coproduct(f);
    case BasisKind::k_schur:
      return multiplicative_coproduct(change_basis(f, Basis::h()));
    default:
      break;
  }
  const SymFunc m = change_basis(f, Basis::m());
  SymTensor out{Basis::m(), f.degree(), {}};
  for (const auto& [lam, c] : m.terms())
    for (const auto& [a, b] : splits(lam)) add_tensor(out, a, b, c);
  if (f.basis().kind == BasisKind::schur)
    return tensor_change_basis(out, Basis::s());
  return out;
}

SymTensor coproduct_via_h(const SymFunc& f) {
  return multiplicative_coproduct(change_basis(f, Basis::h()));
}

SymTensor tensor_change_basis(const SymTensor& t, Basis target) {
  if (t.basis == target) return t;
  std::map<Partition, SymFunc> cache;
  auto conv = [&](const Partition& p) -> const SymFunc& {
    auto it = cache.find(p);
    if (it == cache.end())
      it = cache
               .emplace(p, change_basis(SymFunc::basis_element(t.basis, p),
                                        target))
               .first;
    return it->second;
  };
  SymTensor out{target, t.degree, {}};
  for (const auto& [ab, c] : t.terms) {
    const SymFunc& fa = conv(ab.first);
    const SymFunc& fb = conv(ab.second);
    for (const auto& [p, x] : fa.terms())
      for (const auto& [q, y] : fb.terms()) add_tensor(out, p, q, c * x * y);
  }
  return out;
}

Integer tensor_pairing(const SymTensor& t, const SymFunc& g, const SymFunc& h) {
  Integer total = 0;
  for (const auto& [ab, c] : t.terms) {
    if (ab.first.size() != g.degree() || ab.second.size() != h.degree())
      continue;
    total += c *
             hall_inner_product(SymFunc::basis_element(t.basis, ab.first), g) *
             hall_inner_product(SymFunc::basis_element(t.basis, ab.second), h);
  }
  return total;
}

SymTensor tensor_product(const SymFunc& f, const SymFunc& g) {
  const SymFunc gb = change_basis(g, f.basis());
  SymTensor out{f.basis(), f.degree() + g.degree(), {}};
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : gb.terms()) add_tensor(out, a, b, x * y);
  return out;
}

std::vector<Composition> compositions(int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= rem; ++k) {
      cur.push_back(k);
      rec(rem - k);
      cur.pop_back();
    }
  };
  rec(d);
  return out;
}

namespace {

Composition strip_zeros(const Composition& a) {
  Composition out;
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("negative composition entry");
    if (x > 0) out.push_back(x);
  }
  return out;
}

}  // namespace

Integer QuasiSymFunc::coeff(const Composition& alpha) const {
  auto it = terms_.find(strip_zeros(alpha));
  return it == terms_.end() ? Integer(0) : it->second;
}

void QuasiSymFunc::add(const Composition& alpha, const Integer& c) {
  Composition a = strip_zeros(alpha);
  int sum = 0;
  for (int x : a) sum += x;
  if (sum != degree_)
    throw std::invalid_argument("composition size does not match degree");
  if (c == 0) return;
  Integer& slot = terms_[a];
  slot += c;
  if (slot == 0) terms_.erase(a);
}

QuasiSymFunc QuasiSymFunc::operator+(const QuasiSymFunc& o) const {
  if (o.degree_ != degree_)
    throw std::invalid_argument("adding quasi-symmetric functions of "
                                "different degree");
  QuasiSymFunc r = *this;
  for (const auto& [a, c] : o.terms_) r.add(a, c);
  return r;
}

std::optional<SymFunc> QuasiSymFunc::to_symmetric() const {
  SymFunc out(degree_, Basis::m());
  for (const auto& alpha : compositions(degree_)) {
    const Partition p = Partition::from_composition(alpha);
    if (coeff(alpha) != coeff(p.parts())) return std::nullopt;
  }
  for (const auto& p : partitions(degree_)) out.add(p, coeff(p.parts()));
  return out;
}

QuasiSymFunc QuasiSymFunc::from_symmetric(const SymFunc& f) {
  const SymFunc m = change_basis(f, Basis::m());
  QuasiSymFunc out(f.degree());
  for (const auto& [p, c] : m.terms()) {
    std::vector<int> a = p.parts();
    std::sort(a.begin(), a.end());
    do {
      out.add(a, c);
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return out;
}

QuasiSymFunc fundamental_quasisym(const std::vector<int>& descents, int degree) {
  for (int d : descents)
    if (d < 1 || d >= degree)
      throw std::invalid_argument("descent " + std::to_string(d) +
                                  " outside [1, degree-1]");
  QuasiSymFunc out(degree);
  for (const auto& alpha : compositions(degree)) {
    std::vector<bool> cut(degree + 1, false);
    int s = 0;
    for (int a : alpha) cut[s += a] = true;
    const bool contains = std::all_of(descents.begin(), descents.end(),
                                      [&](int d) { return cut[d]; });
    if (contains) out.add(alpha, 1);
  }
  return out;
}

}  // namespace affstan
