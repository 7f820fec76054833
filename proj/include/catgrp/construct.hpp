#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catgrp/crossed.hpp"
#include "catgrp/model.hpp"

namespace catgrp {

// Arrow of the category built from a crossed module, in normal form:
// source object, payload W-class (stored as its least element) and target
// object, with (bd(payload) + src, tgt) in S_N. Equality of arrows is
// componentwise; the quotient by the two arrow identifications is baked in.
struct CanonicalArrow {
  Elem src = -1;
  Elem payload = -1;  // least id in its W-class
  Elem tgt = -1;

  bool operator==(const CanonicalArrow&) const = default;
  auto operator<=>(const CanonicalArrow&) const = default;
};

// Unnormalized arrow: either a special isomorphism between two
// S_N-congruent objects, or a triple beta (r,c) alpha where alpha and beta
// are special witnesses recorded by their outer endpoints.
struct RawArrow {
  bool isIso = false;
  Elem alphaSrc = -1;  // dom
  Elem r = -1;         // triple only
  Elem c = -1;         // triple only
  Elem betaTgt = -1;   // codom

  static RawArrow specialIso(Elem a, Elem b) {
    RawArrow w;
    w.isIso = true;
    w.alphaSrc = a;
    w.betaTgt = b;
    return w;
  }
  static RawArrow triple(Elem alphaSrc, Elem r, Elem c, Elem betaTgt) {
    RawArrow w;
    w.alphaSrc = alphaSrc;
    w.r = r;
    w.c = c;
    w.betaTgt = betaTgt;
    return w;
  }

  Elem dom() const { return alphaSrc; }
  Elem codom() const { return betaTgt; }
};

// W-class bookkeeping for the payload quotient.
struct WClasses {
  std::vector<int> classOf;   // M element -> class index
  std::vector<Elem> rep;      // class index -> least element
  int zeroClass = -1;         // class of 0_M
};

WClasses wClasses(const CCrossedModule& xm);

// Validated constructor: payload becomes the W-class of c. Throws Error
// when (bd c + src, tgt) is not in S_N.
CanonicalArrow mkArrow(const CCrossedModule& xm, Elem src, Elem c, Elem tgt);

// Both identifications as a normal form: a special isomorphism becomes the
// arrow with the zero payload class, a triple forgets its witnesses.
CanonicalArrow normalize(const CCrossedModule& xm, const RawArrow& raw);

// g2 after g1; payload class of (c2 + c1).
CanonicalArrow compose(const CCrossedModule& xm, const CanonicalArrow& g2,
                       const CanonicalArrow& g1);

CanonicalArrow identityArrow(const CCrossedModule& xm, Elem r);

// (tgt, [-c], src); a two-sided inverse for composition.
CanonicalArrow inverseArrow(const CCrossedModule& xm, const CanonicalArrow& f);

// (src1+src2, [c1 + src1.c2], tgt1+tgt2).
CanonicalArrow addArrows(const CCrossedModule& xm, const CanonicalArrow& f1,
                         const CanonicalArrow& f2);

CanonicalArrow zeroArrow(const CCrossedModule& xm);

// (-src, [(-src).(-c)], -tgt).
CanonicalArrow oppositeArrow(const CCrossedModule& xm,
                             const CanonicalArrow& f);

// For R_N-congruent sources on a connected instance: arrows
// phi : src f -> src f' and theta : tgt f -> tgt f' with
// theta o f = f' o phi. Payloads come from the unique special lift when the
// objects are S_N-congruent, otherwise from the least-id search. Throws
// Error if no commuting choice exists.
std::pair<CanonicalArrow, CanonicalArrow> congruenceSquare(
    const CCrossedModule& xm, const CanonicalArrow& f,
    const CanonicalArrow& fp);

// Full enumeration of the category: objects are carrier(N), arrows all
// normal forms, with composition/addition/negation tables and the special
// arrows (zero payload class). Throws Error if the arrow count exceeds the
// cap (CATGRP_ARROW_CAP, default 10000) or the instance is not cssc.
CatGroupModel buildCategoricalGroup(const CCrossedModule& xm);

// Raw-level operations following the defining formulas; the property tests
// normalize these against the canonical route.
RawArrow rawCompose(const CCrossedModule& xm, const RawArrow& g2,
                    const RawArrow& g1);
RawArrow rawAdd(const CCrossedModule& xm, const RawArrow& f1,
                const RawArrow& f2);
RawArrow rawInverse(const CCrossedModule& xm, const RawArrow& f);
RawArrow rawOpposite(const CCrossedModule& xm, const RawArrow& f);

// First identification: a special isomorphism a -> b becomes the triple
// (a, a, l, b) where l is the unique W-lift of 0 with bd(l) = b - a.
RawArrow isoToTriple(const CCrossedModule& xm, const RawArrow& iso);

// "a -[c]-> b"
std::string arrowLiteral(const CanonicalArrow& f);

// Effective arrow-space cap: CATGRP_ARROW_CAP env var or 10000.
long arrowCap();

}  // namespace catgrp
