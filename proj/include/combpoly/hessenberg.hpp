#pragma once

// Lower Hessenberg determinants over the exact rings of this library.
//
// A square matrix H is lower Hessenberg when h(i,j) = 0 for j > i+1. Its
// determinant satisfies a linear recursion in the leading principal minors
// (0-based rows below; det H_0 = 1):
//
//   det H_{k+1} = h(k,k) det H_k
//               + sum_{r=0}^{k-1} (-1)^{k-r} h(k,r) prod_{j=r}^{k-1} h(j,j+1) det H_r
//
// which costs O(order^2) ring multiplications once the superdiagonal
// products are accumulated from the right.

#include <string>
#include <utility>
#include <vector>

#include "combpoly/errors.hpp"
#include "combpoly/exactring.hpp"
#include "combpoly/laurent.hpp"
#include "combpoly/unipoly.hpp"

namespace combpoly {

// Ring adapters. Each ring supplies zero/one "like" a prototype so that
// LaurentPoly elements carry their letter set.
inline Int ring_zero_like(const Int&) { return Int(0); }
inline Int ring_one_like(const Int&) { return Int(1); }
inline bool ring_is_zero(const Int& v) { return v == 0; }

inline UniPoly ring_zero_like(const UniPoly&) { return UniPoly(); }
inline UniPoly ring_one_like(const UniPoly&) { return UniPoly::constant(Int(1)); }
inline bool ring_is_zero(const UniPoly& v) { return v.is_zero(); }

inline LaurentPoly ring_zero_like(const LaurentPoly& p) { return LaurentPoly(p.letters()); }
inline LaurentPoly ring_one_like(const LaurentPoly& p) {
  return LaurentPoly::constant(p.letters(), Int(1));
}
inline bool ring_is_zero(const LaurentPoly& v) { return v.is_zero(); }

/// Dense square matrix, row-major, 0-based.
template <class R>
class SquareMatrix {
 public:
  /// All entries start as `zero`, which also fixes the ring for order 0.
  SquareMatrix(size_t order, R zero)
      : order_(order), zero_(std::move(zero)), entries_(order * order, zero_) {}

  size_t order() const noexcept { return order_; }
  const R& at(size_t i, size_t j) const { return entries_.at(i * order_ + j); }
  R& at(size_t i, size_t j) { return entries_.at(i * order_ + j); }
  const R& zero() const noexcept { return zero_; }

  bool is_lower_hessenberg() const {
    for (size_t i = 0; i < order_; ++i) {
      for (size_t j = i + 2; j < order_; ++j) {
        if (!ring_is_zero(at(i, j))) return false;
      }
    }
    return true;
  }

  /// Leading k-by-k block.
  SquareMatrix leading(size_t k) const {
    SquareMatrix out(k, zero_);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) out.at(i, j) = at(i, j);
    }
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  size_t order_;
  R zero_;
  std::vector<R> entries_;
};

/// A SquareMatrix that has been checked to be lower Hessenberg.
template <class R>
class HessMatrix {
 public:
  /// Throws NotHessenberg if any entry above the superdiagonal is nonzero.
  explicit HessMatrix(SquareMatrix<R> m) : m_(std::move(m)) {
    if (!m_.is_lower_hessenberg()) {
      throw NotHessenberg("entry above the superdiagonal is nonzero");
    }
  }

  size_t order() const noexcept { return m_.order(); }
  const R& at(size_t i, size_t j) const { return m_.at(i, j); }
  const SquareMatrix<R>& matrix() const noexcept { return m_; }
  HessMatrix leading(size_t k) const { return HessMatrix(m_.leading(k)); }

  friend bool operator==(const HessMatrix& a, const HessMatrix& b) { return a.m_ == b.m_; }

 private:
  SquareMatrix<R> m_;
};

/// [det H_0, det H_1, ..., det H_order] for the leading principal blocks.
template <class R>
std::vector<R> leading_minors(const SquareMatrix<R>& m) {
  if (!m.is_lower_hessenberg()) {
    throw NotHessenberg("entry above the superdiagonal is nonzero");
  }
  const size_t n = m.order();
  std::vector<R> minors;
  minors.reserve(n + 1);
  minors.push_back(ring_one_like(m.zero()));
  for (size_t k = 0; k < n; ++k) {
    R det = m.at(k, k) * minors[k];
    R super = ring_one_like(m.zero());
    for (size_t r = k; r-- > 0;) {
      super = super * m.at(r, r + 1);
      if (ring_is_zero(super)) break;  // every earlier product is zero too
      if (ring_is_zero(m.at(k, r))) continue;
      R term = m.at(k, r) * super * minors[r];
      if ((k - r) % 2 == 1) {
        det = det - term;
      } else {
        det = det + term;
      }
    }
    minors.push_back(std::move(det));
  }
  return minors;
}

template <class R>
std::vector<R> leading_minors(const HessMatrix<R>& m) {
  return leading_minors(m.matrix());
}

/// Determinant by the Hessenberg recursion.
template <class R>
R det_recursive(const HessMatrix<R>& m) {
  return leading_minors(m.matrix()).back();
}

template <class R>
R det_recursive(const SquareMatrix<R>& m) {
  return leading_minors(m).back();
}

inline constexpr size_t kNaiveDetMaxOrder = 8;

namespace detail {
template <class R>
R laplace(const SquareMatrix<R>& m, size_t row, std::vector<size_t>& cols) {
  if (cols.empty()) return ring_one_like(m.zero());
  R acc = ring_zero_like(m.zero());
  for (size_t idx = 0; idx < cols.size(); ++idx) {
    const R& entry = m.at(row, cols[idx]);
    if (ring_is_zero(entry)) continue;
    size_t c = cols[idx];
    cols.erase(cols.begin() + static_cast<long>(idx));
    R minor = laplace(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<long>(idx), c);
    if (idx % 2 == 0) {
      acc = acc + entry * minor;
    } else {
      acc = acc - entry * minor;
    }
  }
  return acc;
}
}  // namespace detail

/// Determinant by cofactor expansion along the first row, ignoring any
/// structure. Throws OrderTooLarge above order 8.
template <class R>
R det_naive(const SquareMatrix<R>& m) {
  if (m.order() > kNaiveDetMaxOrder) {
    throw OrderTooLarge("naive determinant limited to order " +
                        std::to_string(kNaiveDetMaxOrder) + ", got " +
                        std::to_string(m.order()));
  }
  std::vector<size_t> cols(m.order());
  for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::laplace(m, 0, cols);
}

template <class R>
R det_naive(const HessMatrix<R>& m) {
  return det_naive(m.matrix());
}

}  // namespace combpoly
