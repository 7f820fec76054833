#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catgrp/relation.hpp"

namespace catgrp {

// Fully enumerated finite categorical group: a monoidal groupoid with
// object inverses, given by plain tables. comp[g][f] is g after f, -1 when
// the endpoints do not match. For every object tuple the designated
// structural isomorphisms are stored as arrow ids; specialArrow flags the
// closure of those picks under composition, sums and inverses.
struct CatGroupModel {
  int numObjects = 0;
  std::vector<std::string> objName;
  std::vector<std::string> arrName;

  std::vector<Elem> d0, d1;  // per arrow
  std::vector<Elem> idArr;   // per object
  std::vector<std::vector<Elem>> comp;  // comp[g][f], -1 undefined

  std::vector<std::vector<Elem>> addObj;
  std::vector<std::vector<Elem>> addArr;
  std::vector<Elem> negObj;
  std::vector<Elem> negArr;
  Elem zeroObj = 0;

  std::vector<std::uint8_t> specialArrow;  // per arrow

  // Structural picks: alpha[x][y][z] : (x+y)+z -> x+(y+z),
  // lambda[x] : 0+x -> x, rho[x] : x+0 -> x,
  // eps[x] : -x+x -> 0, delta[x] : x+(-x) -> 0.
  std::vector<std::vector<std::vector<Elem>>> alpha;
  std::vector<Elem> lambda, rho, eps, delta;

  int numArrows() const { return static_cast<int>(d0.size()); }

  // Deterministic text tables: objects, arrows, composition, addition,
  // negation, special arrows, structural picks.
  std::string dump() const;
};

}  // namespace catgrp
