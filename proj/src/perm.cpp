#include "orbsym/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbsym {

Perm Perm::identity(int n) {
  Perm p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<uint8_t>(i);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img[a], p.img[b]);
  return p;
}

Perm Perm::cycle(int n, int m) {
  Perm p = identity(n);
  for (int i = 0; i < m; ++i) p.img[i] = static_cast<uint8_t>((i + 1) % m);
  return p;
}

Perm Perm::compose(const Perm& o) const {
  Perm r;
  r.n = n;
  for (int i = 0; i < n; ++i) r.img[i] = img[o.img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.n = n;
  for (int i = 0; i < n; ++i) r.img[img[i]] = static_cast<uint8_t>(i);
  return r;
}

Perm Perm::conjugate_by(const Perm& g) const {
  return g.compose(*this).compose(g.inverse());
}

bool Perm::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::block_sum(const Perm& o) const {
  Perm r;
  r.n = n + o.n;
  for (int i = 0; i < n; ++i) r.img[i] = img[i];
  for (int i = 0; i < o.n; ++i) r.img[n + i] = static_cast<uint8_t>(n + o.img[i]);
  return r;
}

bool Perm::fixes_prefix_block(int k) const {
  for (int i = 0; i < k; ++i)
    if (img[i] >= k) return false;
  return true;
}

Perm Perm::restrict_prefix(int k) const {
  Perm r;
  r.n = k;
  for (int i = 0; i < k; ++i) r.img[i] = img[i];
  return r;
}

Perm Perm::restrict_suffix(int k) const {
  Perm r;
  r.n = n - k;
  for (int i = k; i < n; ++i) r.img[i - k] = static_cast<uint8_t>(img[i] - k);
  return r;
}

std::vector<std::vector<int>> orbits_of(const Perm& p) {
  std::vector<std::vector<int>> res;
  std::array<bool, kMaxN> seen{};
  for (int i = 0; i < p.n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    do {
      seen[j] = true;
      orb.push_back(j);
      j = p.img[j];
    } while (j != i);
    std::sort(orb.begin(), orb.end());
    res.push_back(std::move(orb));
  }
  // Orbit construction scans minima in increasing order already.
  return res;
}

std::vector<std::vector<int>> joint_orbits(const Perm& a, const Perm& b) {
  std::array<int, kMaxN> parent{};
  std::iota(parent.begin(), parent.begin() + a.n, 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x); y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (int i = 0; i < a.n; ++i) {
    unite(i, a.img[i]);
    unite(i, b.img[i]);
  }
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < a.n; ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<int>> res;
  for (auto& [root, v] : buckets) res.push_back(std::move(v));
  return res;
}

CycleType cycle_type(const Perm& p) {
  CycleType t;
  for (const auto& o : orbits_of(p)) t.push_back(static_cast<int>(o.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int defect(const Perm& p) { return p.n - static_cast<int>(orbits_of(p).size()); }

Perm class_rep(int n, const CycleType& t) {
  Perm p = Perm::identity(n);
  int pos = 0;
  for (int part : t) {
    for (int i = 0; i < part; ++i)
      p.img[pos + i] = static_cast<uint8_t>(pos + (i + 1) % part);
    pos += part;
  }
  if (pos != n) throw std::invalid_argument("cycle type does not sum to n");
  return p;
}

Perm conjugator_to_rep(const Perm& p) {
  // Sort cycles by (length desc, min elt asc), lay them out consecutively.
  std::vector<std::vector<int>> cyc;
  std::array<bool, kMaxN> seen{};
  for (int i = 0; i < p.n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = i;
    do {
      seen[j] = true;
      c.push_back(j);
      j = p.img[j];
    } while (j != i);
    cyc.push_back(std::move(c));
  }
  std::stable_sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a[0] < b[0];
  });
  Perm h;
  h.n = p.n;
  int pos = 0;
  for (const auto& c : cyc)
    for (int x : c) h.img[x] = static_cast<uint8_t>(pos++);
  return h;
}

long centralizer_order(const CycleType& t) {
  long z = 1;
  int run = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    ++run;
    z *= t[i];
    if (i + 1 == t.size() || t[i + 1] != t[i]) {
      for (int k = 2; k <= run; ++k) z *= k;
      run = 0;
    }
  }
  return z;
}

long class_size(int n, const CycleType& t) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f / centralizer_order(t);
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<std::vector<int>> partitions_of_length(int n, int len) {
  std::vector<std::vector<int>> out;
  for (auto& p : partitions_of(n))
    if (static_cast<int>(p.size()) == len) out.push_back(p);
  return out;
}

std::vector<CycleType> cycle_types(int n) {
  if (n == 0) return {CycleType{}};
  return partitions_of(n);
}

std::vector<Perm> all_perms(int n) {
  if (n > 8) throw std::domain_error("full S_n enumeration capped at n = 8");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Perm> out;
  do {
    Perm p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.img[i] = static_cast<uint8_t>(idx[i]);
    out.push_back(p);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<Perm> class_members(int n, const CycleType& t) {
  std::vector<Perm> out;
  Perm rep = class_rep(n, t);
  std::map<Perm, bool> seen;
  for (const auto& g : all_perms(n)) {
    Perm c = rep.conjugate_by(g);
    if (!seen.emplace(c, true).second) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace orbsym
