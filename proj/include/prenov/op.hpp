#pragma once

#include <array>
#include <map>
#include <stdexcept>

#include "prenov/scalar.hpp"
#include "prenov/space.hpp"
#include "prenov/tensor.hpp"

namespace prenov {

/// A bilinear operation given by exact structure constants
/// e_i · e_j = Σ_k c_{ij}^k e_k. Absent entries are zero.
class BilinearOp {
 public:
  using Key = std::array<int, 3>;  // (i, j, k)

  BilinearOp() = default;
  explicit BilinearOp(BasisSpace space) : space_(std::move(space)) {}

  const BasisSpace& space() const { return space_; }
  const std::map<Key, Rational>& constants() const { return constants_; }

  void add(int i, int j, int k, const Rational& c) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (c == 0) return;
    auto [it, inserted] = constants_.try_emplace(Key{i, j, k}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) constants_.erase(it);
    }
  }

  /// e_i · e_j as a sparse vector.
  Tensor1 of_basis(int i, int j) const {
    Tensor1 r;
    auto lo = constants_.lower_bound(Key{i, j, 0});
    for (auto it = lo; it != constants_.end() && (*it).first[0] == i && (*it).first[1] == j; ++it)
      r.add({it->first[2]}, it->second);
    return r;
  }

  /// Bilinear extension to sparse vectors.
  Tensor1 apply(const Tensor1& u, const Tensor1& v) const {
    Tensor1 r;
    for (const auto& [ku, cu] : u.entries()) {
      check_index(ku[0]);
      for (const auto& [kv, cv] : v.entries()) {
        check_index(kv[0]);
        auto lo = constants_.lower_bound(Key{ku[0], kv[0], 0});
        for (auto it = lo;
             it != constants_.end() && it->first[0] == ku[0] && it->first[1] == kv[0]; ++it)
          r.add({it->first[2]}, cu * cv * it->second);
      }
    }
    return r;
  }

  BilinearOp& operator+=(const BilinearOp& o) {
    if (o.space_.dim() != space_.dim())
      throw std::invalid_argument("dimension mismatch in operation sum");
    for (const auto& [k, c] : o.constants_) add(k[0], k[1], k[2], c);
    return *this;
  }
  friend BilinearOp operator+(BilinearOp a, const BilinearOp& b) {
    a += b;
    return a;
  }

  bool zero() const { return constants_.empty(); }
  bool same_constants(const BilinearOp& o) const { return constants_ == o.constants_; }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= space_.dim())
      throw std::invalid_argument("dimension mismatch: index out of range for '" +
                                  space_.name() + "'");
  }

  BasisSpace space_;
  std::map<Key, Rational> constants_;
};

/// A linear map A → A⊗A given by structure constants
/// Δ(e_i) = Σ c_i^{jk} e_j⊗e_k.
class CoOp {
 public:
  using Key = std::array<int, 3>;  // (i, j, k)

  CoOp() = default;
  explicit CoOp(BasisSpace space) : space_(std::move(space)) {}

  const BasisSpace& space() const { return space_; }
  const std::map<Key, Rational>& constants() const { return constants_; }

  void add(int i, int j, int k, const Rational& c) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (c == 0) return;
    auto [it, inserted] = constants_.try_emplace(Key{i, j, k}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) constants_.erase(it);
    }
  }

  void add_image(int i, const Tensor2& t) {
    for (const auto& [k, c] : t.entries()) add(i, k[0], k[1], c);
  }

  Tensor2 image(int i) const {
    Tensor2 r;
    auto lo = constants_.lower_bound(Key{i, 0, 0});
    for (auto it = lo; it != constants_.end() && it->first[0] == i; ++it)
      r.add({it->first[1], it->first[2]}, it->second);
    return r;
  }

  Tensor2 apply(const Tensor1& u) const {
    Tensor2 r;
    for (const auto& [ku, cu] : u.entries()) {
      check_index(ku[0]);
      auto lo = constants_.lower_bound(Key{ku[0], 0, 0});
      for (auto it = lo; it != constants_.end() && it->first[0] == ku[0]; ++it)
        r.add({it->first[1], it->first[2]}, cu * it->second);
    }
    return r;
  }

  bool zero() const { return constants_.empty(); }
  bool same_constants(const CoOp& o) const { return constants_ == o.constants_; }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= space_.dim())
      throw std::invalid_argument("dimension mismatch: index out of range for '" +
                                  space_.name() + "'");
  }

  BasisSpace space_;
  std::map<Key, Rational> constants_;
};

/// Structure-constant transpose pinned by ⟨φ*(f), v⟩ = ⟨f, φ(v)⟩:
/// an operation m dualizes to the cooperation Δ(e_k*) = Σ c_{ij}^k e_i*⊗e_j*,
/// and a cooperation dualizes back to e_j*·e_k* = Σ c_i^{jk} e_i*.
inline CoOp dualize_op(const BilinearOp& m) {
  CoOp d(dual_space(m.space()));
  for (const auto& [k, c] : m.constants()) d.add(k[2], k[0], k[1], c);
  return d;
}

inline BilinearOp dualize_coop(const CoOp& c) {
  BilinearOp d(dual_space(c.space()));
  for (const auto& [k, v] : c.constants()) d.add(k[1], k[2], k[0], v);
  return d;
}

/// Multiplies one tensor leg by a fixed element: with elem_left,
/// leg value x becomes m(elem, x), otherwise m(x, elem).
template <int Arity>
SparseTensor<Arity> apply_op_leg(const BilinearOp& m, const Tensor1& elem,
                                 bool elem_left, const SparseTensor<Arity>& t,
                                 int leg) {
  SparseTensor<Arity> r;
  for (const auto& [k, c] : t.entries()) {
    Tensor1 x = basis_vec(k[static_cast<size_t>(leg)]);
    Tensor1 y = elem_left ? m.apply(elem, x) : m.apply(x, elem);
    for (const auto& [ky, cy] : y.entries()) {
      auto nk = k;
      nk[static_cast<size_t>(leg)] = ky[0];
      r.add(nk, c * cy);
    }
  }
  return r;
}

/// Expands one leg of a 2-tensor through a cooperation, e.g. leg 0 gives
/// (Δ⊗id)t and leg 1 gives (id⊗Δ)t.
inline Tensor3 apply_coop_leg(const CoOp& d, const Tensor2& t, int leg) {
  Tensor3 r;
  for (const auto& [k, c] : t.entries()) {
    Tensor2 img = d.image(k[static_cast<size_t>(leg)]);
    for (const auto& [ki, ci] : img.entries()) {
      if (leg == 0)
        r.add({ki[0], ki[1], k[1]}, c * ci);
      else
        r.add({k[0], ki[0], ki[1]}, c * ci);
    }
  }
  return r;
}

/// The four slot products on pairs of 2-tensors r = Σ x_i⊗y_i, s = Σ x'_j⊗y'_j:
///   (12,13): Σ (x_i∗x'_j) ⊗ y_i ⊗ y'_j
///   (13,23): Σ x_i ⊗ x'_j ⊗ (y_i∗y'_j)
///   (12,23): Σ x_i ⊗ (y_i∗x'_j) ⊗ y'_j
///   (23,13): Σ x'_j ⊗ x_i ⊗ (y_i∗y'_j)
/// Any other slot pair is rejected.
inline Tensor3 slot_product(const BilinearOp& m, const Tensor2& r,
                            const Tensor2& s, int slot_r, int slot_s) {
  Tensor3 out;
  for (const auto& [kr, cr] : r.entries())
    for (const auto& [ks, cs] : s.entries()) {
      const Rational c = cr * cs;
      if (slot_r == 12 && slot_s == 13) {
        Tensor1 p = m.of_basis(kr[0], ks[0]);
        for (const auto& [kp, cp] : p.entries()) out.add({kp[0], kr[1], ks[1]}, c * cp);
      } else if (slot_r == 13 && slot_s == 23) {
        Tensor1 p = m.of_basis(kr[1], ks[1]);
        for (const auto& [kp, cp] : p.entries()) out.add({kr[0], ks[0], kp[0]}, c * cp);
      } else if (slot_r == 12 && slot_s == 23) {
        Tensor1 p = m.of_basis(kr[1], ks[0]);
        for (const auto& [kp, cp] : p.entries()) out.add({kr[0], kp[0], ks[1]}, c * cp);
      } else if (slot_r == 23 && slot_s == 13) {
        Tensor1 p = m.of_basis(kr[1], ks[1]);
        for (const auto& [kp, cp] : p.entries()) out.add({ks[0], kr[0], kp[0]}, c * cp);
      } else {
        throw std::invalid_argument("unsupported slot pair");
      }
    }
  return out;
}

// Aggregates used across the workbench.
struct PreNovikovOps {
  BilinearOp lhd;  // ◁
  BilinearOp rhd;  // ▷
  BilinearOp circ() const { return lhd + rhd; }
};

struct DialgebraOps {
  BilinearOp dashv;  // ⊣
  BilinearOp vdash;  // ⊢
};

struct PreNovikovCoops {
  CoOp alpha;
  CoOp beta;
};

}  // namespace prenov
