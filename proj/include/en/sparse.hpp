#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "en/scalar.hpp"

namespace en {

using Index = std::uint64_t;

// Sparse coefficient vector; zero coefficients are never stored.
class SparseVec {
 public:
  using Map = std::map<Index, Scalar>;

  SparseVec() = default;
  static SparseVec unit(Index i, const Scalar& c = Scalar(1)) {
    SparseVec v;
    v.add(i, c);
    return v;
  }

  void add(Index i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m_.erase(it);
    }
  }
  void add_scaled(const SparseVec& o, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [i, v] : o.m_) add(i, v * c);
  }
  Scalar get(Index i) const {
    auto it = m_.find(i);
    return it == m_.end() ? Scalar() : it->second;
  }
  void set(Index i, const Scalar& c) {
    if (c.is_zero())
      m_.erase(i);
    else
      m_[i] = c;
  }

  bool empty() const { return m_.empty(); }
  std::size_t size() const { return m_.size(); }
  auto begin() const { return m_.begin(); }
  auto end() const { return m_.end(); }
  const Map& terms() const { return m_; }

  SparseVec& operator+=(const SparseVec& o) {
    add_scaled(o, Scalar(1));
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    add_scaled(o, Scalar(-1));
    return *this;
  }
  SparseVec& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      m_.clear();
      return *this;
    }
    for (auto& [i, v] : m_) v *= c;
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(SparseVec a, const Scalar& c) { return a *= c; }
  friend SparseVec operator*(const Scalar& c, SparseVec a) { return a *= c; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.m_ == b.m_; }

 private:
  Map m_;
};

}  // namespace en
