#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbsym/rational.hpp"

namespace orbsym {

// Dense coefficient vector over the algebra basis.
using Elem = std::vector<Q>;

// Sparse element of A^{\otimes arity}: basis-index tuples -> coefficients.
// Arity 0 keys are the empty tuple (scalars).
struct Tensor {
  int arity = 0;
  std::map<std::vector<uint8_t>, Q> terms;

  Tensor() = default;
  explicit Tensor(int a) : arity(a) {}
  static Tensor scalar(const Q& q);

  bool is_zero() const;
  Tensor& add(const Tensor& o, const Q& c = Q(1));
  Tensor& scale(const Q& c);
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  bool operator==(const Tensor& o) const;

  // Concatenation u (x) v; no sign.
  Tensor concat(const Tensor& o) const;
};

// Koszul sign (-1)^{#{i<j : perm(i)>perm(j), par[key[i]] and par[key[j]] odd}}.
int koszul_sign(const std::vector<uint8_t>& key, const std::vector<int>& perm,
                const std::vector<int>& parities);

// Finite-dimensional graded super-commutative Frobenius algebra, the model of
// H*(X) for a closed complex manifold of even complex dimension d.
class Algebra {
 public:
  std::string name;
  int d = 0;  // complex dimension; even (0 for the point)
  std::vector<std::string> labels;
  std::vector<int> degrees;   // 0 <= deg <= 2d
  std::vector<int> parities;  // deg mod 2
  int unit = 0;
  std::vector<Q> integral;  // ∫ b_i
  Elem euler_elem;          // e = m(tau_2(1))

  int dim() const { return static_cast<int>(labels.size()); }

  // Construction: set fields, fill mult entries, then finalize().
  void set_mult(int i, int j, int k, const Q& c);
  const std::vector<std::pair<int, Q>>& mult_row(int i, int j) const;

  // Validates all structure axioms, derives Gram/dual data and the Euler
  // class; throws std::runtime_error with a description on any violation.
  // If supplied_euler is set it must match the derived class.
  void finalize(const std::optional<Elem>& supplied_euler = std::nullopt);

  // -- element arithmetic ----------------------------------------------
  Elem zero() const { return Elem(dim(), Q(0)); }
  Elem basis_elem(int i) const;
  Elem unit_elem() const { return basis_elem(unit); }
  Elem mul(const Elem& x, const Elem& y) const;
  Q integrate(const Elem& x) const;
  Q pairing(const Elem& x, const Elem& y) const;  // (x,y) = ∫ xy
  std::optional<int> elem_degree(const Elem& x) const;  // homogeneous degree
  int elem_parity_checked(const Elem& x) const;  // throws if mixed parity

  // -- transfers ---------------------------------------------------------
  // tau_k(x): the adjoint of k-fold multiplication,
  //   <tau_k(x), y_1 (x) ... (x) y_k> = (x, y_1...y_k),
  // computed as the iterated coproduct and cached per basis element.
  Tensor tau(int k, const Elem& x) const;

  // Tensor pairing with Koszul signs; u, v of equal arity.
  Q tensor_pairing(const Tensor& u, const Tensor& v) const;

  // Componentwise product on A^{(x)k} with Koszul signs.
  Tensor kunneth_mult(const Tensor& u, const Tensor& v) const;

  // Slot permutation with Koszul signs: slot i moves to perm[i].
  Tensor slot_permute(const Tensor& t, const std::vector<int>& perm) const;

  // Pair off the front factor: (x, first slot) * rest.
  Tensor contract_front(const Elem& x, const Tensor& t) const;

  // Apply tau_k to one slot, expanding arity by k-1. Remaining slots keep
  // their order; the expanded block sits where the slot was.
  Tensor expand_slot(const Tensor& t, int slot, int k) const;

  // Multiply the listed slots (in the given order) into a single A value,
  // then place it as one slot at out_pos among the kept slots. Returns the
  // signed result; used by the orbit-block convolution.
  // (Implemented via gather + per-monomial folding in product.cpp.)

  std::optional<int> tensor_degree(const Tensor& t) const;

  const std::vector<Elem>& dual_basis() const { return dual_; }

 private:
  std::map<std::pair<int, int>, std::vector<std::pair<int, Q>>> mult_;
  std::vector<std::vector<Q>> gram_;
  std::vector<Elem> dual_;  // dual_[i] with (dual_[i], b_j) = delta_ij
  mutable std::map<std::pair<int, int>, Tensor> tau_cache_;  // (k, basis idx)

  Tensor tau_basis(int k, int i) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace orbsym
