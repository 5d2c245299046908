#include "orbsym/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbsym {

Tensor Tensor::scalar(const Q& q) {
  Tensor t(0);
  if (sgn(q) != 0) t.terms[{}] = q;
  return t;
}

bool Tensor::is_zero() const {
  for (const auto& [k, c] : terms)
    if (sgn(c) != 0) return false;
  return true;
}

Tensor& Tensor::add(const Tensor& o, const Q& c) {
  if (o.terms.empty()) return *this;
  if (arity != o.arity && terms.empty()) arity = o.arity;
  if (arity != o.arity) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [k, v] : o.terms) {
    Q& slot = terms[k];
    slot += v * c;
    if (sgn(slot) == 0) terms.erase(k);
  }
  return *this;
}

Tensor& Tensor::scale(const Q& c) {
  if (sgn(c) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor t = *this;
  t.add(o);
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor t = *this;
  t.add(o, Q(-1));
  return t;
}

bool Tensor::operator==(const Tensor& o) const {
  Tensor diff = *this - o;
  return diff.terms.empty();
}

Tensor Tensor::concat(const Tensor& o) const {
  Tensor r(arity + o.arity);
  for (const auto& [ka, ca] : terms)
    for (const auto& [kb, cb] : o.terms) {
      std::vector<uint8_t> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.terms[k] = ca * cb;
    }
  return r;
}

int koszul_sign(const std::vector<uint8_t>& key, const std::vector<int>& perm,
                const std::vector<int>& parities) {
  int inv = 0;
  const int k = static_cast<int>(key.size());
  for (int i = 0; i < k; ++i) {
    if (!parities[key[i]]) continue;
    for (int j = i + 1; j < k; ++j)
      if (parities[key[j]] && perm[i] > perm[j]) ++inv;
  }
  return (inv & 1) ? -1 : 1;
}

void Algebra::set_mult(int i, int j, int k, const Q& c) {
  if (sgn(c) == 0) return;
  auto& row = mult_[{i, j}];
  for (auto& [kk, cc] : row)
    if (kk == k) {
      cc += c;
      return;
    }
  row.emplace_back(k, c);
}

const std::vector<std::pair<int, Q>>& Algebra::mult_row(int i, int j) const {
  static const std::vector<std::pair<int, Q>> empty;
  auto it = mult_.find({i, j});
  return it == mult_.end() ? empty : it->second;
}

Elem Algebra::basis_elem(int i) const {
  Elem e = zero();
  e[i] = 1;
  return e;
}

Elem Algebra::mul(const Elem& x, const Elem& y) const {
  Elem r = zero();
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& [k, c] : mult_row(i, j)) r[k] += x[i] * y[j] * c;
    }
  }
  return r;
}

Q Algebra::integrate(const Elem& x) const {
  Q s(0);
  for (int i = 0; i < dim(); ++i) s += x[i] * integral[i];
  return s;
}

Q Algebra::pairing(const Elem& x, const Elem& y) const {
  return integrate(mul(x, y));
}

std::optional<int> Algebra::elem_degree(const Elem& x) const {
  std::optional<int> deg;
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    if (!deg)
      deg = degrees[i];
    else if (*deg != degrees[i])
      return std::nullopt;
  }
  return deg;
}

int Algebra::elem_parity_checked(const Elem& x) const {
  int par = -1;
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    if (par < 0)
      par = parities[i];
    else if (par != parities[i])
      throw std::runtime_error("element of mixed parity");
  }
  return par < 0 ? 0 : par;
}

namespace {

// Exact inverse by Gauss-Jordan; throws if singular.
std::vector<std::vector<Q>> invert(std::vector<std::vector<Q>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(m[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("pairing Gram matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Q d = m[col][col];
    for (int c = 0; c < n; ++c) {
      m[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Q f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

void Algebra::finalize(const std::optional<Elem>& supplied_euler) {
  const int N = dim();
  if (N == 0) throw std::runtime_error("empty basis");
  if (d < 0 || d % 2 != 0)
    throw std::runtime_error("complex dimension must be even (0 for a point)");
  if (static_cast<int>(degrees.size()) != N ||
      static_cast<int>(integral.size()) != N)
    throw std::runtime_error("basis/degree/integral size mismatch");
  parities.resize(N);
  for (int i = 0; i < N; ++i) {
    if (degrees[i] < 0 || degrees[i] > 2 * d)
      throw std::runtime_error("degree out of range for " + labels[i]);
    parities[i] = degrees[i] % 2;
  }
  if (unit < 0 || unit >= N || degrees[unit] != 0)
    throw std::runtime_error("unit must be a degree-0 basis element");

  // Grading of the structure constants.
  for (const auto& [ij, row] : mult_)
    for (const auto& [k, c] : row)
      if (degrees[k] != degrees[ij.first] + degrees[ij.second])
        throw std::runtime_error("structure constant violates grading");

  // Unit law, super-commutativity, associativity.
  for (int i = 0; i < N; ++i) {
    if (mul(unit_elem(), basis_elem(i)) != basis_elem(i) ||
        mul(basis_elem(i), unit_elem()) != basis_elem(i))
      throw std::runtime_error("unit law fails at " + labels[i]);
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Elem xy = mul(basis_elem(i), basis_elem(j));
      Elem yx = mul(basis_elem(j), basis_elem(i));
      int s = (parities[i] && parities[j]) ? -1 : 1;
      for (int k = 0; k < N; ++k)
        if (xy[k] != s * yx[k])
          throw std::runtime_error("super-commutativity fails at " +
                                   labels[i] + "," + labels[j]);
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        Elem a = mul(mul(basis_elem(i), basis_elem(j)), basis_elem(k));
        Elem b = mul(basis_elem(i), mul(basis_elem(j), basis_elem(k)));
        if (a != b)
          throw std::runtime_error("associativity fails at " + labels[i] +
                                   "," + labels[j] + "," + labels[k]);
      }

  // The integral is concentrated in top degree.
  for (int i = 0; i < N; ++i)
    if (sgn(integral[i]) != 0 && degrees[i] != 2 * d)
      throw std::runtime_error("integral supported outside degree 2d");

  gram_.assign(N, std::vector<Q>(N, Q(0)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      gram_[i][j] = pairing(basis_elem(i), basis_elem(j));
  auto ginv = invert(gram_);  // throws when degenerate
  dual_.clear();
  for (int i = 0; i < N; ++i) dual_.push_back(ginv[i]);

  tau_cache_.clear();
  Tensor t2 = tau(2, unit_elem());
  Elem e = zero();
  for (const auto& [k, c] : t2.terms) {
    Elem prod = mul(basis_elem(k[0]), basis_elem(k[1]));
    for (int i = 0; i < N; ++i) e[i] += c * prod[i];
  }
  euler_elem = e;
  if (d > 0) {
    if (elem_degree(euler_elem) && *elem_degree(euler_elem) != 2 * d)
      throw std::runtime_error("euler class not of top degree");
    if (mul(euler_elem, euler_elem) != zero())
      throw std::runtime_error("e*e != 0 with d > 0");
  }
  if (supplied_euler && *supplied_euler != euler_elem)
    throw std::runtime_error("supplied euler class differs from derived one");
}

Tensor Algebra::tau_basis(int k, int i) const {
  auto it = tau_cache_.find({k, i});
  if (it != tau_cache_.end()) return it->second;
  Tensor t;
  if (k == 1) {
    t = Tensor(1);
    t.terms[{static_cast<uint8_t>(i)}] = 1;
  } else if (k == 2) {
    t = Tensor(2);
    for (int j = 0; j < dim(); ++j) {
      Elem prod = mul(basis_elem(i), basis_elem(j));
      for (int a = 0; a < dim(); ++a) {
        if (sgn(prod[a]) == 0) continue;
        for (int b = 0; b < dim(); ++b) {
          if (sgn(dual_[j][b]) == 0) continue;
          Q& slot = t.terms[{static_cast<uint8_t>(a), static_cast<uint8_t>(b)}];
          slot += prod[a] * dual_[j][b];
          if (sgn(slot) == 0)
            t.terms.erase({static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
        }
      }
    }
  } else {
    t = expand_slot(tau_basis(k - 1, i), 0, 2);
  }
  tau_cache_[{k, i}] = t;
  return t;
}

Tensor Algebra::tau(int k, const Elem& x) const {
  if (k < 1) throw std::invalid_argument("tau arity must be >= 1");
  Tensor t(k);
  for (int i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) t.add(tau_basis(k, i), x[i]);
  return t;
}

Q Algebra::tensor_pairing(const Tensor& u, const Tensor& v) const {
  if (u.arity != v.arity) throw std::invalid_argument("arity mismatch");
  Q s(0);
  for (const auto& [ku, cu] : u.terms)
    for (const auto& [kv, cv] : v.terms) {
      Q p = cu * cv;
      int exp = 0;
      for (int j = 0; j < u.arity; ++j) {
        p *= gram_[ku[j]][kv[j]];
        if (sgn(p) == 0) break;
        if (parities[ku[j]])
          for (int i = 0; i < j; ++i)
            if (parities[kv[i]]) ++exp;
      }
      if (sgn(p) == 0) continue;
      s += (exp & 1) ? -p : p;
    }
  return s;
}

Tensor Algebra::kunneth_mult(const Tensor& u, const Tensor& v) const {
  if (u.arity != v.arity) throw std::invalid_argument("arity mismatch");
  Tensor r(u.arity);
  for (const auto& [ku, cu] : u.terms)
    for (const auto& [kv, cv] : v.terms) {
      int exp = 0;
      for (int j = 0; j < u.arity; ++j)
        if (parities[kv[j]])
          for (int i = j + 1; i < u.arity; ++i)
            if (parities[ku[i]]) ++exp;
      Q base = cu * cv;
      if (exp & 1) base = -base;
      // componentwise multiplication, expanding each slot product
      std::vector<std::pair<std::vector<uint8_t>, Q>> acc{{{}, base}};
      for (int j = 0; j < u.arity; ++j) {
        std::vector<std::pair<std::vector<uint8_t>, Q>> next;
        for (const auto& [key, c] : acc)
          for (const auto& [k, w] : mult_row(ku[j], kv[j])) {
            auto key2 = key;
            key2.push_back(static_cast<uint8_t>(k));
            next.emplace_back(std::move(key2), c * w);
          }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (auto& [key, c] : acc) {
        Q& slot = r.terms[key];
        slot += c;
        if (sgn(slot) == 0) r.terms.erase(key);
      }
    }
  return r;
}

Tensor Algebra::slot_permute(const Tensor& t, const std::vector<int>& perm) const {
  Tensor r(t.arity);
  for (const auto& [k, c] : t.terms) {
    std::vector<uint8_t> nk(k.size());
    for (size_t i = 0; i < k.size(); ++i) nk[perm[i]] = k[i];
    int s = koszul_sign(k, perm, parities);
    Q& slot = r.terms[nk];
    slot += s > 0 ? c : -c;
    if (sgn(slot) == 0) r.terms.erase(nk);
  }
  return r;
}

Tensor Algebra::contract_front(const Elem& x, const Tensor& t) const {
  Tensor r(t.arity - 1);
  for (const auto& [k, c] : t.terms) {
    Q p = pairing(x, basis_elem(k[0]));
    if (sgn(p) == 0) continue;
    std::vector<uint8_t> nk(k.begin() + 1, k.end());
    Q& slot = r.terms[nk];
    slot += p * c;
    if (sgn(slot) == 0) r.terms.erase(nk);
  }
  return r;
}

Tensor Algebra::expand_slot(const Tensor& t, int slot, int k) const {
  Tensor r(t.arity + k - 1);
  for (const auto& [key, c] : t.terms) {
    Tensor block = tau_basis(k, key[slot]);
    for (const auto& [bk, bc] : block.terms) {
      std::vector<uint8_t> nk;
      nk.reserve(key.size() + k - 1);
      nk.insert(nk.end(), key.begin(), key.begin() + slot);
      nk.insert(nk.end(), bk.begin(), bk.end());
      nk.insert(nk.end(), key.begin() + slot + 1, key.end());
      Q& s = r.terms[nk];
      s += c * bc;
      if (sgn(s) == 0) r.terms.erase(nk);
    }
  }
  return r;
}

std::optional<int> Algebra::tensor_degree(const Tensor& t) const {
  std::optional<int> deg;
  for (const auto& [k, c] : t.terms) {
    int dsum = 0;
    for (uint8_t i : k) dsum += degrees[i];
    if (!deg)
      deg = dsum;
    else if (*deg != dsum)
      return std::nullopt;
  }
  return deg;
}

}  // namespace orbsym
