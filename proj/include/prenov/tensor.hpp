#pragma once

#include <array>
#include <map>
#include <string>

#include "prenov/scalar.hpp"
#include "prenov/space.hpp"

namespace prenov {

/// Sparse element of V^{⊗Arity} over a fixed basis, indexed by basis tuples.
/// Canonical form: zero coefficients are never stored, keys are ordered, so
/// equality is structural.
template <int Arity>
class SparseTensor {
 public:
  static_assert(Arity >= 1);
  using Key = std::array<int, Arity>;
  using Map = std::map<Key, Rational>;

  SparseTensor() = default;

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) entries_.erase(it);
    }
  }

  const Map& entries() const& { return entries_; }
  Map entries() && { return std::move(entries_); }  // safe to iterate on temporaries
  bool zero() const { return entries_.empty(); }

  Rational coeff(const Key& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  SparseTensor& operator+=(const SparseTensor& o) {
    for (const auto& [k, c] : o.entries_) add(k, c);
    return *this;
  }
  SparseTensor& operator-=(const SparseTensor& o) {
    for (const auto& [k, c] : o.entries_) add(k, -c);
    return *this;
  }
  SparseTensor& operator*=(const Rational& s) {
    if (s == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [k, c] : entries_) c *= s;
    return *this;
  }

  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) {
    a += b;
    return a;
  }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) {
    a -= b;
    return a;
  }
  friend SparseTensor operator*(const Rational& s, SparseTensor t) {
    t *= s;
    return t;
  }
  SparseTensor operator-() const {
    SparseTensor r;
    for (const auto& [k, c] : entries_) r.entries_.emplace(k, -c);
    return r;
  }

  bool operator==(const SparseTensor& o) const = default;

 private:
  Map entries_;
};

using Tensor1 = SparseTensor<1>;
using Tensor2 = SparseTensor<2>;
using Tensor3 = SparseTensor<3>;

inline Tensor1 basis_vec(int i) {
  Tensor1 t;
  t.add({i}, Rational(1));
  return t;
}

template <int A, int B>
SparseTensor<A + B> outer(const SparseTensor<A>& s, const SparseTensor<B>& t) {
  SparseTensor<A + B> r;
  for (const auto& [ks, cs] : s.entries())
    for (const auto& [kt, ct] : t.entries()) {
      typename SparseTensor<A + B>::Key k;
      for (int i = 0; i < A; ++i) k[static_cast<size_t>(i)] = ks[static_cast<size_t>(i)];
      for (int i = 0; i < B; ++i) k[static_cast<size_t>(A + i)] = kt[static_cast<size_t>(i)];
      r.add(k, cs * ct);
    }
  return r;
}

template <int Arity>
SparseTensor<Arity> permute(const SparseTensor<Arity>& t,
                            const std::array<int, Arity>& perm) {
  // perm[slot of output] = slot of input
  SparseTensor<Arity> r;
  for (const auto& [k, c] : t.entries()) {
    typename SparseTensor<Arity>::Key nk;
    for (int i = 0; i < Arity; ++i)
      nk[static_cast<size_t>(i)] = k[static_cast<size_t>(perm[static_cast<size_t>(i)])];
    r.add(nk, c);
  }
  return r;
}

/// The flip τ(a⊗b) = b⊗a and its three embeddings into triple tensors.
inline Tensor2 flip(const Tensor2& t) { return permute<2>(t, {1, 0}); }
inline Tensor3 flip12(const Tensor3& t) { return permute<3>(t, {1, 0, 2}); }
inline Tensor3 flip13(const Tensor3& t) { return permute<3>(t, {2, 1, 0}); }
inline Tensor3 flip23(const Tensor3& t) { return permute<3>(t, {0, 2, 1}); }

/// The interleaving product of equal-arity tensors over A and B:
/// (c1⊗…⊗ck) • (d1⊗…⊗dk) = (c1⊗d1)⊗…⊗(ck⊗dk), landing in (A⊗B)^{⊗k}
/// with the product basis flattened as i*dim(B)+p.
template <int Arity>
SparseTensor<Arity> bullet(const SparseTensor<Arity>& ta,
                           const SparseTensor<Arity>& tb, int dim_b) {
  SparseTensor<Arity> r;
  for (const auto& [ka, ca] : ta.entries())
    for (const auto& [kb, cb] : tb.entries()) {
      typename SparseTensor<Arity>::Key k;
      for (int i = 0; i < Arity; ++i)
        k[static_cast<size_t>(i)] =
            ka[static_cast<size_t>(i)] * dim_b + kb[static_cast<size_t>(i)];
      r.add(k, ca * cb);
    }
  return r;
}

template <int Arity>
std::string to_string(const SparseTensor<Arity>& t, const BasisSpace& space) {
  if (t.zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.entries()) {
    std::string term;
    if (c == 1) {
      term = "";
    } else if (c == -1) {
      term = "-";
    } else {
      term = rational_str(c) + "*";
    }
    for (int i = 0; i < Arity; ++i) {
      if (i) term += "⊗";
      term += space.label(k[static_cast<size_t>(i)]);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace prenov
