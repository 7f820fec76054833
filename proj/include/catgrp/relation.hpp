#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace catgrp {

using Elem = int;
using ElemPair = std::pair<Elem, Elem>;

// Dense binary relation on {0..n-1}. Used for congruences (R), special
// congruences (S) and weak special congruences (W); all carriers here are
// small, so a bit matrix is the right trade-off.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}

  static Relation equality(int n);
  static Relation total(int n);
  // Reflexive-symmetric-transitive closure of the given pairs.
  static Relation equivalenceFrom(int n, const std::vector<ElemPair>& pairs);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  bool contains(Elem a, Elem b) const { return bits_[idx(a, b)] != 0; }
  // Returns true if the pair was not present before.
  bool insert(Elem a, Elem b);
  int count() const;

  bool operator==(const Relation&) const = default;

  bool isReflexive() const;
  bool isSymmetric() const;
  bool isTransitive() const;
  bool isEquivalence() const;
  bool subsetOf(const Relation& other) const;

  // All pairs in ascending (a,b) order.
  std::vector<ElemPair> pairs() const;
  // Equivalence classes sorted by least member. Requires isEquivalence().
  std::vector<std::vector<Elem>> classes() const;

 private:
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }

  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace catgrp
