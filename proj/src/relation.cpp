#include "catgrp/relation.hpp"

#include <algorithm>

namespace catgrp {

Relation Relation::equality(int n) {
  Relation r(n);
  for (Elem a = 0; a < n; ++a) r.insert(a, a);
  return r;
}

Relation Relation::total(int n) {
  Relation r(n);
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

Relation Relation::equivalenceFrom(int n, const std::vector<ElemPair>& ps) {
  Relation r = equality(n);
  for (const auto& [a, b] : ps) {
    r.insert(a, b);
    r.insert(b, a);
  }
  // transitive closure, n is small
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!r.contains(a, b)) continue;
        for (Elem c = 0; c < n; ++c)
          if (r.contains(b, c) && r.insert(a, c)) changed = true;
      }
  }
  return r;
}

bool Relation::insert(Elem a, Elem b) {
  std::uint8_t& cell = bits_[idx(a, b)];
  if (cell) return false;
  cell = 1;
  return true;
}

int Relation::count() const {
  int c = 0;
  for (auto b : bits_) c += b;
  return c;
}

bool Relation::isReflexive() const {
  for (Elem a = 0; a < n_; ++a)
    if (!contains(a, a)) return false;
  return true;
}

bool Relation::isSymmetric() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (contains(a, b) && !contains(b, a)) return false;
  return true;
}

bool Relation::isTransitive() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      if (!contains(a, b)) continue;
      for (Elem c = 0; c < n_; ++c)
        if (contains(b, c) && !contains(a, c)) return false;
    }
  return true;
}

bool Relation::isEquivalence() const {
  return isReflexive() && isSymmetric() && isTransitive();
}

bool Relation::subsetOf(const Relation& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

std::vector<ElemPair> Relation::pairs() const {
  std::vector<ElemPair> out;
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<Elem>> Relation::classes() const {
  std::vector<std::vector<Elem>> out;
  std::vector<char> seen(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    if (seen[a]) continue;
    std::vector<Elem> cls;
    for (Elem b = 0; b < n_; ++b)
      if (contains(a, b)) {
        cls.push_back(b);
        seen[b] = 1;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace catgrp
