#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace orbsym {

// Permutations of {0..n-1} in one-line notation. n never exceeds kMaxN
// anywhere in the engine (creation chains on level-5 vectors top out at 11).
constexpr int kMaxN = 12;

struct Perm {
  int n = 0;
  std::array<uint8_t, kMaxN> img{};

  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);
  // Canonical m-cycle 0 -> 1 -> ... -> m-1 -> 0 inside S_n.
  static Perm cycle(int n, int m);

  int operator()(int i) const { return img[i]; }

  Perm compose(const Perm& o) const;  // (this ∘ o)(i) = this(o(i))
  Perm inverse() const;
  Perm conjugate_by(const Perm& g) const;  // g ∘ this ∘ g^{-1}

  bool is_identity() const;
  // Block sum: this on {0..n-1}, o shifted onto {n..n+o.n-1}.
  Perm block_sum(const Perm& o) const;
  // True iff {0..k-1} is stable under the permutation.
  bool fixes_prefix_block(int k) const;
  Perm restrict_prefix(int k) const;  // requires fixes_prefix_block(k)
  Perm restrict_suffix(int k) const;  // the complementary block, re-indexed

  auto operator<=>(const Perm& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    for (int i = 0; i < n; ++i)
      if (auto c = img[i] <=> o.img[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  bool operator==(const Perm& o) const = default;
};

// Orbits as sorted-by-minimum lists of sorted elements; this fixed order is
// the slot order of every tensor payload.
std::vector<std::vector<int>> orbits_of(const Perm& p);
std::vector<std::vector<int>> joint_orbits(const Perm& a, const Perm& b);

// Cycle type, parts descending.
using CycleType = std::vector<int>;
CycleType cycle_type(const Perm& p);
inline int defect(const CycleType& t, int n) {
  return n - static_cast<int>(t.size());
}
int defect(const Perm& p);  // d(sigma) = n - #cycles

// Canonical class representative: consecutive cycles, parts descending.
Perm class_rep(int n, const CycleType& t);
// h with h * p * h^{-1} = class_rep(type(p)).
Perm conjugator_to_rep(const Perm& p);

// |Z(sigma)| = prod r^{m_r} m_r!, and n!/z.
long centralizer_order(const CycleType& t);
long class_size(int n, const CycleType& t);

std::vector<CycleType> cycle_types(int n);  // all types, deterministic order
std::vector<Perm> all_perms(int n);         // n <= 8 guard
std::vector<Perm> class_members(int n, const CycleType& t);

// Partitions of n (parts descending), optionally with bounded part count.
std::vector<std::vector<int>> partitions_of(int n);
std::vector<std::vector<int>> partitions_of_length(int n, int len);

}  // namespace orbsym
