#include "catgrp/construct.hpp"

#include <cstdlib>
#include <string>

namespace catgrp {

long arrowCap() {
  if (const char* env = std::getenv("CATGRP_ARROW_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

WClasses wClasses(const CCrossedModule& xm) {
  WClasses wc;
  wc.classOf.assign(xm.m.n, -1);
  auto cls = xm.weakSpecial.classes();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    wc.rep.push_back(cls[k].front());
    for (Elem e : cls[k]) wc.classOf[e] = static_cast<int>(k);
  }
  wc.zeroClass = wc.classOf[xm.m.zero];
  return wc;
}

namespace {

Elem canon(const WClasses& wc, Elem c) { return wc.rep[wc.classOf[c]]; }

void checkInvariant(const CCrossedModule& xm, const CanonicalArrow& f,
                    const char* who) {
  if (!xm.n.inS(xm.n.plus(xm.bd(f.payload), f.src), f.tgt))
    throw Error(std::string(who) + ": arrow invariant broken at " +
                arrowLiteral(f));
}

}  // namespace

std::string arrowLiteral(const CanonicalArrow& f) {
  return std::to_string(f.src) + " -[" + std::to_string(f.payload) + "]-> " +
         std::to_string(f.tgt);
}

CanonicalArrow mkArrow(const CCrossedModule& xm, Elem src, Elem c, Elem tgt) {
  if (src < 0 || src >= xm.n.n || tgt < 0 || tgt >= xm.n.n || c < 0 ||
      c >= xm.m.n)
    throw Error("mkArrow: element out of range");
  if (!xm.n.inS(xm.n.plus(xm.bd(c), src), tgt))
    throw Error("mkArrow: (bd(c)+src, tgt) is not a special congruence for " +
                std::to_string(src) + " -[" + std::to_string(c) + "]-> " +
                std::to_string(tgt));
  WClasses wc = wClasses(xm);
  return {src, canon(wc, c), tgt};
}

CanonicalArrow normalize(const CCrossedModule& xm, const RawArrow& raw) {
  WClasses wc = wClasses(xm);
  if (raw.isIso) {
    if (!xm.n.inS(raw.alphaSrc, raw.betaTgt))
      throw Error("normalize: endpoints of a special isomorphism must be "
                  "S-congruent");
    return {raw.alphaSrc, wc.rep[wc.zeroClass], raw.betaTgt};
  }
  if (!xm.n.inS(raw.alphaSrc, raw.r))
    throw Error("normalize: alpha is not a special congruence");
  if (!xm.n.inS(xm.n.plus(xm.bd(raw.c), raw.r), raw.betaTgt))
    throw Error("normalize: beta is not a special congruence");
  return {raw.alphaSrc, canon(wc, raw.c), raw.betaTgt};
}

CanonicalArrow compose(const CCrossedModule& xm, const CanonicalArrow& g2,
                       const CanonicalArrow& g1) {
  if (g1.tgt != g2.src)
    throw Error("compose: endpoint mismatch, " + arrowLiteral(g2) + " after " +
                arrowLiteral(g1));
  WClasses wc = wClasses(xm);
  CanonicalArrow out{g1.src, canon(wc, xm.m.plus(g2.payload, g1.payload)),
                     g2.tgt};
  checkInvariant(xm, out, "compose");
  return out;
}

CanonicalArrow identityArrow(const CCrossedModule& xm, Elem r) {
  if (r < 0 || r >= xm.n.n) throw Error("identityArrow: object out of range");
  WClasses wc = wClasses(xm);
  CanonicalArrow out{r, wc.rep[wc.zeroClass], r};
  checkInvariant(xm, out, "identityArrow");
  return out;
}

CanonicalArrow inverseArrow(const CCrossedModule& xm,
                            const CanonicalArrow& f) {
  WClasses wc = wClasses(xm);
  CanonicalArrow out{f.tgt, canon(wc, xm.m.neg[f.payload]), f.src};
  checkInvariant(xm, out, "inverseArrow");
  return out;
}

CanonicalArrow addArrows(const CCrossedModule& xm, const CanonicalArrow& f1,
                         const CanonicalArrow& f2) {
  WClasses wc = wClasses(xm);
  CanonicalArrow out{
      xm.n.plus(f1.src, f2.src),
      canon(wc, xm.m.plus(f1.payload, xm.act(f1.src, f2.payload))),
      xm.n.plus(f1.tgt, f2.tgt)};
  checkInvariant(xm, out, "addArrows");
  return out;
}

CanonicalArrow zeroArrow(const CCrossedModule& xm) {
  return identityArrow(xm, xm.n.zero);
}

CanonicalArrow oppositeArrow(const CCrossedModule& xm,
                             const CanonicalArrow& f) {
  WClasses wc = wClasses(xm);
  Elem ms = xm.n.neg[f.src];
  CanonicalArrow out{ms, canon(wc, xm.act(ms, xm.m.neg[f.payload])),
                     xm.n.neg[f.tgt]};
  checkInvariant(xm, out, "oppositeArrow");
  return out;
}

std::pair<CanonicalArrow, CanonicalArrow> congruenceSquare(
    const CCrossedModule& xm, const CanonicalArrow& f,
    const CanonicalArrow& fp) {
  const CGroup& m = xm.m;
  const CGroup& n = xm.n;
  if (!n.inR(f.src, fp.src))
    throw Error("congruenceSquare: sources are not congruent");
  auto conn = isConnected(m);
  if (!conn.holds)
    throw Error("congruenceSquare: instance not connected, " + conn.witness);
  WClasses wc = wClasses(xm);

  auto candidates = [&](Elem from, Elem to) {
    std::vector<Elem> cs;
    if (n.inS(from, to)) {
      // the unique lift comes first, remaining candidates in id order
      Elem l = liftAlongSpecial(xm, m.zero, n.plus(to, n.neg[from]));
      cs.push_back(canon(wc, l));
    }
    for (Elem c = 0; c < m.n; ++c) {
      Elem cc = canon(wc, c);
      if (cc != c) continue;  // class representatives only
      if (!cs.empty() && cs.front() == cc) continue;
      if (n.inS(n.plus(xm.bd(cc), from), to)) cs.push_back(cc);
    }
    return cs;
  };

  for (Elem cphi : candidates(f.src, fp.src))
    for (Elem cth : candidates(f.tgt, fp.tgt)) {
      CanonicalArrow phi{f.src, cphi, fp.src};
      CanonicalArrow theta{f.tgt, cth, fp.tgt};
      if (compose(xm, theta, f) == compose(xm, fp, phi))
        return {phi, theta};
    }
  throw Error("congruenceSquare: no commuting square; instance not special");
}

CatGroupModel buildCategoricalGroup(const CCrossedModule& xm) {
  Report rep = validateCrossedModule(xm);
  if (!rep.ok()) throw Error("buildCategoricalGroup: " + rep.str());
  CsscFlags fl = classify(xm);
  if (!fl.cssc())
    throw Error("buildCategoricalGroup: instance is not cssc\n" + fl.str());

  const CGroup& n = xm.n;
  WClasses wc = wClasses(xm);
  int numCls = static_cast<int>(wc.rep.size());

  CatGroupModel md;
  md.numObjects = n.n;
  md.zeroObj = n.zero;
  md.addObj = n.add;
  md.negObj = n.neg;
  for (Elem x = 0; x < n.n; ++x) md.objName.push_back(std::to_string(x));

  // arrows ordered by (src, class, tgt)
  std::vector<Elem> index(static_cast<std::size_t>(n.n) * numCls * n.n, -1);
  auto slot = [&](Elem a, int k, Elem b) -> Elem& {
    return index[(static_cast<std::size_t>(a) * numCls + k) * n.n + b];
  };
  long cap = arrowCap();
  std::vector<CanonicalArrow> arrows;
  for (Elem a = 0; a < n.n; ++a)
    for (int k = 0; k < numCls; ++k)
      for (Elem b = 0; b < n.n; ++b) {
        if (!n.inS(n.plus(xm.bd(wc.rep[k]), a), b)) continue;
        if (static_cast<long>(arrows.size()) >= cap)
          throw Error("buildCategoricalGroup: arrow cap " +
                      std::to_string(cap) + " exceeded");
        slot(a, k, b) = static_cast<Elem>(arrows.size());
        arrows.push_back({a, wc.rep[k], b});
      }

  auto idOf = [&](const CanonicalArrow& f) {
    Elem r = slot(f.src, wc.classOf[f.payload], f.tgt);
    if (r < 0)
      throw Error("buildCategoricalGroup: operation left the arrow space at " +
                  arrowLiteral(f));
    return r;
  };

  int A = static_cast<int>(arrows.size());
  for (const auto& f : arrows) {
    md.d0.push_back(f.src);
    md.d1.push_back(f.tgt);
    md.arrName.push_back(arrowLiteral(f));
    md.specialArrow.push_back(wc.classOf[f.payload] == wc.zeroClass ? 1 : 0);
  }
  for (Elem x = 0; x < n.n; ++x)
    md.idArr.push_back(idOf(identityArrow(xm, x)));

  md.comp.assign(A, std::vector<Elem>(A, -1));
  for (int g2 = 0; g2 < A; ++g2)
    for (int g1 = 0; g1 < A; ++g1)
      if (arrows[g1].tgt == arrows[g2].src)
        md.comp[g2][g1] = idOf(compose(xm, arrows[g2], arrows[g1]));

  md.addArr.assign(A, std::vector<Elem>(A, -1));
  for (int f1 = 0; f1 < A; ++f1)
    for (int f2 = 0; f2 < A; ++f2)
      md.addArr[f1][f2] = idOf(addArrows(xm, arrows[f1], arrows[f2]));

  for (int f = 0; f < A; ++f)
    md.negArr.push_back(idOf(oppositeArrow(xm, arrows[f])));

  auto specialAt = [&](Elem x, Elem y) {
    Elem r = slot(x, wc.zeroClass, y);
    if (r < 0)
      throw Error("buildCategoricalGroup: missing special arrow " +
                  std::to_string(x) + " -> " + std::to_string(y));
    return r;
  };
  md.alpha.assign(
      n.n, std::vector<std::vector<Elem>>(n.n, std::vector<Elem>(n.n)));
  for (Elem x = 0; x < n.n; ++x)
    for (Elem y = 0; y < n.n; ++y)
      for (Elem z = 0; z < n.n; ++z)
        md.alpha[x][y][z] = specialAt(n.plus(n.plus(x, y), z),
                                      n.plus(x, n.plus(y, z)));
  for (Elem x = 0; x < n.n; ++x) {
    md.lambda.push_back(specialAt(n.plus(n.zero, x), x));
    md.rho.push_back(specialAt(n.plus(x, n.zero), x));
    md.eps.push_back(specialAt(n.plus(n.neg[x], x), n.zero));
    md.delta.push_back(specialAt(n.plus(x, n.neg[x]), n.zero));
  }
  return md;
}

RawArrow isoToTriple(const CCrossedModule& xm, const RawArrow& iso) {
  if (!iso.isIso) return iso;
  Elem a = iso.alphaSrc, b = iso.betaTgt;
  Elem l = liftAlongSpecial(xm, xm.m.zero, xm.n.plus(b, xm.n.neg[a]));
  return RawArrow::triple(a, a, l, b);
}

RawArrow rawCompose(const CCrossedModule& xm, const RawArrow& g2,
                    const RawArrow& g1) {
  if (g1.codom() != g2.dom())
    throw Error("rawCompose: endpoint mismatch");
  if (g1.isIso && g2.isIso) {
    if (!xm.n.inS(g1.alphaSrc, g2.betaTgt))
      throw Error("rawCompose: composite is not a special congruence");
    return RawArrow::specialIso(g1.alphaSrc, g2.betaTgt);
  }
  if (g1.isIso)  // beta (r,c) (alpha delta)
    return RawArrow::triple(g1.alphaSrc, g2.r, g2.c, g2.betaTgt);
  if (g2.isIso)  // (gamma beta)(r,c) alpha
    return RawArrow::triple(g1.alphaSrc, g1.r, g1.c, g2.betaTgt);
  return RawArrow::triple(g1.alphaSrc, g1.r, xm.m.plus(g2.c, g1.c),
                          g2.betaTgt);
}

RawArrow rawAdd(const CCrossedModule& xm, const RawArrow& f1,
                const RawArrow& f2) {
  RawArrow a = isoToTriple(xm, f1);
  RawArrow b = isoToTriple(xm, f2);
  return RawArrow::triple(xm.n.plus(a.alphaSrc, b.alphaSrc),
                          xm.n.plus(a.r, b.r),
                          xm.m.plus(a.c, xm.act(a.r, b.c)),
                          xm.n.plus(a.betaTgt, b.betaTgt));
}

RawArrow rawInverse(const CCrossedModule& xm, const RawArrow& f) {
  if (f.isIso) return RawArrow::specialIso(f.betaTgt, f.alphaSrc);
  return RawArrow::triple(f.betaTgt, xm.n.plus(xm.bd(f.c), f.r),
                          xm.m.neg[f.c], f.alphaSrc);
}

RawArrow rawOpposite(const CCrossedModule& xm, const RawArrow& f) {
  if (f.isIso)
    return RawArrow::specialIso(xm.n.neg[f.alphaSrc], xm.n.neg[f.betaTgt]);
  Elem mr = xm.n.neg[f.r];
  return RawArrow::triple(xm.n.neg[f.alphaSrc], mr,
                          xm.act(mr, xm.m.neg[f.c]), xm.n.neg[f.betaTgt]);
}

}  // namespace catgrp
