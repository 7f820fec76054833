#include "catgrp/star.hpp"

#include <algorithm>
#include <string>

#include "catgrp/verify.hpp"

namespace catgrp {

namespace {

std::string pairStr(Elem a, Elem b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Plain group laws on the nose; no relations involved.
void checkGroupStrict(const CGroup& g, Report& rep, const std::string& pre) {
  if (g.n <= 0 || static_cast<int>(g.add.size()) != g.n ||
      static_cast<int>(g.neg.size()) != g.n) {
    rep.fail(pre + "dimensions");
    return;
  }
  for (Elem a = 0; a < g.n; ++a) {
    if (static_cast<int>(g.add[a].size()) != g.n) {
      rep.fail(pre + "dimensions", "row " + std::to_string(a));
      return;
    }
    for (Elem b = 0; b < g.n; ++b)
      if (g.add[a][b] < 0 || g.add[a][b] >= g.n) {
        rep.fail(pre + "dimensions", "entry " + pairStr(a, b));
        return;
      }
  }
  for (Elem a = 0; a < g.n; ++a)
    for (Elem b = 0; b < g.n; ++b)
      for (Elem c = 0; c < g.n; ++c)
        if (g.plus(g.plus(a, b), c) != g.plus(a, g.plus(b, c))) {
          rep.fail(pre + "assoc", "a=" + std::to_string(a) + " b=" +
                                      std::to_string(b) + " c=" +
                                      std::to_string(c));
          a = g.n;
          b = g.n;
          break;
        }
  for (Elem a = 0; a < g.n; ++a)
    if (g.plus(g.zero, a) != a || g.plus(a, g.zero) != a) {
      rep.fail(pre + "unit", "a=" + std::to_string(a));
      break;
    }
  for (Elem a = 0; a < g.n; ++a)
    if (g.plus(g.neg[a], a) != g.zero || g.plus(a, g.neg[a]) != g.zero) {
      rep.fail(pre + "inverse", "a=" + std::to_string(a));
      break;
    }
}

}  // namespace

Report validateClassical(const ClassicalCrossedModule& xm0) {
  Report rep;
  rep.subject = "classical xmod";
  checkGroupStrict(xm0.m, rep, "m:");
  checkGroupStrict(xm0.n, rep, "n:");
  if (!rep.ok()) return rep;
  const CGroup& m = xm0.m;
  const CGroup& n = xm0.n;

  if (static_cast<int>(xm0.boundary.size()) != m.n ||
      static_cast<int>(xm0.action.size()) != n.n) {
    rep.fail("dimensions", "boundary/action tables");
    return rep;
  }
  for (Elem c = 0; c < m.n; ++c)
    if (xm0.boundary[c] < 0 || xm0.boundary[c] >= n.n) {
      rep.fail("dimensions", "boundary[" + std::to_string(c) + "]");
      return rep;
    }
  for (Elem r = 0; r < n.n; ++r) {
    if (static_cast<int>(xm0.action[r].size()) != m.n) {
      rep.fail("dimensions", "action row " + std::to_string(r));
      return rep;
    }
    for (Elem c = 0; c < m.n; ++c)
      if (xm0.action[r][c] < 0 || xm0.action[r][c] >= m.n) {
        rep.fail("dimensions", "action entry " + pairStr(r, c));
        return rep;
      }
  }

  for (Elem a = 0; a < m.n; ++a)
    for (Elem b = 0; b < m.n; ++b)
      if (xm0.boundary[m.plus(a, b)] !=
          n.plus(xm0.boundary[a], xm0.boundary[b])) {
        rep.fail("boundary-hom", pairStr(a, b));
        a = m.n;
        break;
      }
  for (Elem r = 0; r < n.n; ++r)
    for (Elem a = 0; a < m.n; ++a)
      for (Elem b = 0; b < m.n; ++b)
        if (xm0.action[r][m.plus(a, b)] !=
            m.plus(xm0.action[r][a], xm0.action[r][b])) {
          rep.fail("action-additive", "r=" + std::to_string(r) + " " +
                                          pairStr(a, b));
          r = n.n;
          a = m.n;
          break;
        }
  for (Elem r = 0; r < n.n; ++r)
    for (Elem s = 0; s < n.n; ++s)
      for (Elem a = 0; a < m.n; ++a)
        if (xm0.action[n.plus(r, s)][a] != xm0.action[r][xm0.action[s][a]]) {
          rep.fail("action-compose", "r=" + std::to_string(r) + " s=" +
                                         std::to_string(s) + " a=" +
                                         std::to_string(a));
          r = n.n;
          s = n.n;
          break;
        }
  for (Elem a = 0; a < m.n; ++a)
    if (xm0.action[n.zero][a] != a) {
      rep.fail("action-unit", "a=" + std::to_string(a));
      break;
    }
  // equivariance
  for (Elem r = 0; r < n.n; ++r)
    for (Elem a = 0; a < m.n; ++a)
      if (xm0.boundary[xm0.action[r][a]] !=
          n.plus(r, n.plus(xm0.boundary[a], n.neg[r]))) {
        rep.fail("equivariance",
                 "r=" + std::to_string(r) + " a=" + std::to_string(a));
        r = n.n;
        break;
      }
  // Peiffer
  for (Elem a = 0; a < m.n; ++a)
    for (Elem b = 0; b < m.n; ++b)
      if (xm0.action[xm0.boundary[a]][b] !=
          m.plus(a, m.plus(b, m.neg[a]))) {
        rep.fail("peiffer", pairStr(a, b));
        a = m.n;
        break;
      }
  return rep;
}

CatGroupModel groupGroupoidFromClassical(const ClassicalCrossedModule& xm0) {
  Report rep = validateClassical(xm0);
  if (!rep.ok()) throw Error("groupGroupoidFromClassical: " + rep.str());

  const CGroup& m = xm0.m;
  const CGroup& n = xm0.n;
  CatGroupModel md;
  md.numObjects = n.n;
  md.zeroObj = n.zero;
  md.addObj = n.add;
  md.negObj = n.neg;
  for (Elem x = 0; x < n.n; ++x) md.objName.push_back(std::to_string(x));

  int A = n.n * m.n;
  auto id = [&](Elem r, Elem c) { return r * m.n + c; };
  for (Elem r = 0; r < n.n; ++r)
    for (Elem c = 0; c < m.n; ++c) {
      md.d0.push_back(r);
      md.d1.push_back(n.plus(xm0.boundary[c], r));
      md.arrName.push_back("(" + std::to_string(r) + "," + std::to_string(c) +
                           ")");
      md.specialArrow.push_back(c == m.zero ? 1 : 0);
    }
  for (Elem x = 0; x < n.n; ++x) md.idArr.push_back(id(x, m.zero));

  md.comp.assign(A, std::vector<Elem>(A, -1));
  for (Elem r = 0; r < n.n; ++r)
    for (Elem c = 0; c < m.n; ++c) {
      Elem mid = n.plus(xm0.boundary[c], r);
      for (Elem c2 = 0; c2 < m.n; ++c2)
        md.comp[id(mid, c2)][id(r, c)] = id(r, m.plus(c2, c));
    }

  md.addArr.assign(A, std::vector<Elem>(A, -1));
  for (Elem r = 0; r < n.n; ++r)
    for (Elem c = 0; c < m.n; ++c)
      for (Elem r2 = 0; r2 < n.n; ++r2)
        for (Elem c2 = 0; c2 < m.n; ++c2)
          md.addArr[id(r, c)][id(r2, c2)] =
              id(n.plus(r, r2), m.plus(c, xm0.action[r][c2]));

  for (Elem r = 0; r < n.n; ++r)
    for (Elem c = 0; c < m.n; ++c)
      md.negArr.push_back(id(n.neg[r], xm0.action[n.neg[r]][m.neg[c]]));

  // strict instance: every structural pick is an identity
  md.alpha.assign(n.n, std::vector<std::vector<Elem>>(
                           n.n, std::vector<Elem>(n.n)));
  for (Elem x = 0; x < n.n; ++x)
    for (Elem y = 0; y < n.n; ++y)
      for (Elem z = 0; z < n.n; ++z)
        md.alpha[x][y][z] = md.idArr[n.plus(n.plus(x, y), z)];
  for (Elem x = 0; x < n.n; ++x) {
    md.lambda.push_back(md.idArr[x]);
    md.rho.push_back(md.idArr[x]);
    md.eps.push_back(md.idArr[n.zero]);
    md.delta.push_back(md.idArr[n.zero]);
  }
  return md;
}

CGroup objectsCGroup(const CatGroupModel& C) {
  CGroup g;
  g.n = C.numObjects;
  g.add = C.addObj;
  g.zero = C.zeroObj;
  g.neg = C.negObj;
  g.cong = Relation(g.n);
  for (Elem x = 0; x < g.n; ++x)
    for (Elem y = 0; y < g.n; ++y)
      for (int f = 0; f < C.numArrows(); ++f)
        if (C.d0[f] == x && C.d1[f] == y) {
          g.cong.insert(x, y);
          break;
        }
  return sealCGroup(g);
}

namespace {

// f isomorphic to g in C1: a commuting square of arbitrary arrows.
Relation arrowIsoRelation(const CatGroupModel& C) {
  int A = C.numArrows();
  Relation rel(A);
  std::vector<std::vector<int>> between(
      static_cast<std::size_t>(C.numObjects) * C.numObjects);
  for (int t = 0; t < A; ++t)
    between[static_cast<std::size_t>(C.d0[t]) * C.numObjects + C.d1[t]]
        .push_back(t);
  for (int f = 0; f < A; ++f)
    for (int g = 0; g < A; ++g) {
      const auto& t0s =
          between[static_cast<std::size_t>(C.d0[f]) * C.numObjects + C.d0[g]];
      const auto& t1s =
          between[static_cast<std::size_t>(C.d1[f]) * C.numObjects + C.d1[g]];
      bool found = false;
      for (int t0 : t0s) {
        for (int t1 : t1s)
          if (C.comp[t1][f] == C.comp[g][t0]) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (found) rel.insert(f, g);
    }
  return rel;
}

}  // namespace

CGroup arrowsCGroup(const CatGroupModel& C) {
  CGroup g;
  g.n = C.numArrows();
  g.add = C.addArr;
  g.zero = C.idArr[C.zeroObj];
  g.neg = C.negArr;
  g.cong = arrowIsoRelation(C);
  return sealCGroup(g);
}

CGroupMorphism d0Morphism(const CatGroupModel& C) {
  return {arrowsCGroup(C), objectsCGroup(C), C.d0};
}

StarZeroResult starZero(const CatGroupModel& C) {
  StarZeroResult out;
  for (int f = 0; f < C.numArrows(); ++f)
    if (C.d0[f] == C.zeroObj) out.arrows.push_back(f);
  if (out.arrows.empty()) throw Error("starZero: no arrows out of 0");
  int k = static_cast<int>(out.arrows.size());
  std::vector<int> toStar(C.numArrows(), -1);
  for (int i = 0; i < k; ++i) toStar[out.arrows[i]] = i;

  Elem gamma = uniqueSpecialArrow(C, C.zeroObj,
                                  C.addObj[C.zeroObj][C.zeroObj]);
  if (gamma < 0)
    throw Error("starZero: no unique special arrow 0 -> 0+0");

  CGroup g;
  g.n = k;
  g.add.assign(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem s = C.comp[C.addArr[out.arrows[i]][out.arrows[j]]][gamma];
      if (s < 0 || toStar[s] < 0)
        throw Error("starZero: sum left the star");
      g.add[i][j] = toStar[s];
    }

  Relation iso = arrowIsoRelation(C);
  g.cong = Relation(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (iso.contains(out.arrows[i], out.arrows[j])) g.cong.insert(i, j);

  if (toStar[C.idArr[C.zeroObj]] < 0)
    throw Error("starZero: identity of 0 is missing");
  g.zero = toStar[C.idArr[C.zeroObj]];

  // -f is the opposite arrow carried back into the star; its target is the
  // negated object on the nose, so the inverse-law closure generators land
  // on inverse-law instances downstairs.
  Elem toNegZero = uniqueSpecialArrow(C, C.zeroObj, C.negObj[C.zeroObj]);
  if (toNegZero < 0)
    throw Error("starZero: no unique special arrow 0 -> -0");
  g.neg.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    Elem cand = C.comp[C.negArr[out.arrows[i]]][toNegZero];
    if (cand >= 0 && toStar[cand] >= 0) {
      Elem j = toStar[cand];
      if (g.cong.contains(g.add[i][j], g.zero) &&
          g.cong.contains(g.add[j][i], g.zero))
        g.neg[i] = j;
    }
    if (g.neg[i] < 0)
      throw Error("starZero: no negative for star element " +
                  std::to_string(i));
  }
  out.group = sealCGroup(g);
  return out;
}

CAction starAction(const CatGroupModel& C) {
  StarZeroResult star = starZero(C);
  CGroup objs = objectsCGroup(C);
  int k = star.group.n;
  std::vector<int> toStar(C.numArrows(), -1);
  for (int i = 0; i < k; ++i) toStar[star.arrows[i]] = i;

  CAction act;
  act.actor = objs;
  act.acted = star.group;
  act.table.assign(objs.n, std::vector<Elem>(k));
  for (Elem r = 0; r < objs.n; ++r) {
    Elem gammaDom =
        C.addObj[r][C.addObj[C.zeroObj][C.negObj[r]]];  // r + (0 + (-r))
    Elem gammaR = uniqueSpecialArrow(C, C.zeroObj, gammaDom);
    if (gammaR < 0)
      throw Error("starAction: no unique special arrow 0 -> r+(0-r) for r=" +
                  std::to_string(r));
    for (int i = 0; i < k; ++i) {
      Elem f = star.arrows[i];
      Elem conj = C.addArr[C.idArr[r]][C.addArr[f][C.negArr[C.idArr[r]]]];
      Elem res = C.comp[conj][gammaR];
      if (res < 0 || toStar[res] < 0)
        throw Error("starAction: action left the star");
      act.table[r][i] = toStar[res];
    }
  }
  Report rep = validateAction(act);
  if (!rep.ok()) throw Error("starAction: " + rep.str());
  return act;
}

CCrossedModule starCrossedModule(const CatGroupModel& C) {
  StarZeroResult star = starZero(C);
  CAction act = starAction(C);

  CCrossedModule xm;
  xm.m = star.group;
  xm.n = act.actor;
  xm.action = act.table;
  xm.boundary.resize(star.group.n);
  for (int i = 0; i < star.group.n; ++i)
    xm.boundary[i] = C.d1[star.arrows[i]];

  // W: commuting squares whose object components are special arrows
  int k = star.group.n;
  xm.weakSpecial = Relation(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem f = star.arrows[i], g = star.arrows[j];
      bool rel = false;
      for (int t0 = 0; t0 < C.numArrows() && !rel; ++t0) {
        if (!C.specialArrow[t0] || C.d0[t0] != C.zeroObj ||
            C.d1[t0] != C.zeroObj)
          continue;
        for (int t1 = 0; t1 < C.numArrows(); ++t1) {
          if (!C.specialArrow[t1] || C.d0[t1] != C.d1[f] ||
              C.d1[t1] != C.d1[g])
            continue;
          if (C.comp[t1][f] == C.comp[g][t0]) {
            rel = true;
            break;
          }
        }
      }
      if (rel) xm.weakSpecial.insert(i, j);
    }

  Report rep = validateCrossedModule(xm);
  if (!rep.ok()) throw Error("starCrossedModule: result invalid\n" + rep.str());
  CsscFlags fl = classify(xm);
  if (!fl.cssc())
    throw Error("starCrossedModule: result is not cssc\n" + fl.str());
  return xm;
}

CAction ckerAction(const CatGroupModel& C) {
  CGroupMorphism d0m = d0Morphism(C);
  CSubgroup ker = cKernel(d0m);
  CGroup objs = d0m.cod;

  std::vector<int> toKer(C.numArrows(), -1);
  for (int i = 0; i < ker.group.n; ++i) toKer[ker.embed[i]] = i;

  CAction act;
  act.actor = objs;
  act.acted = ker.group;
  act.table.assign(objs.n, std::vector<Elem>(ker.group.n));
  for (Elem r = 0; r < objs.n; ++r)
    for (int i = 0; i < ker.group.n; ++i) {
      Elem f = ker.embed[i];
      Elem res = C.addArr[C.idArr[r]][C.addArr[f][C.negArr[C.idArr[r]]]];
      if (toKer[res] < 0) throw Error("ckerAction: action left the kernel");
      act.table[r][i] = toKer[res];
    }
  Report rep = validateAction(act);
  if (!rep.ok()) throw Error("ckerAction: " + rep.str());
  return act;
}

namespace {

struct IsoSearch {
  const CatGroupModel& A;
  const CatGroupModel& B;
  std::vector<Elem> objMap, arrMap;
  std::vector<char> objUsed, arrUsed;

  IsoSearch(const CatGroupModel& a, const CatGroupModel& b)
      : A(a),
        B(b),
        objMap(a.numObjects, -1),
        arrMap(a.numArrows(), -1),
        objUsed(b.numObjects, 0),
        arrUsed(b.numArrows(), 0) {}

  struct Sig {
    int specIn = 0, specOut = 0, in = 0, out = 0;
    bool operator==(const Sig&) const = default;
  };

  static Sig sig(const CatGroupModel& M, Elem x) {
    Sig s;
    for (int f = 0; f < M.numArrows(); ++f) {
      if (M.d1[f] == x) {
        ++s.in;
        if (M.specialArrow[f]) ++s.specIn;
      }
      if (M.d0[f] == x) {
        ++s.out;
        if (M.specialArrow[f]) ++s.specOut;
      }
    }
    return s;
  }

  bool objConsistent(Elem x) const {
    if ((A.zeroObj == x) != (B.zeroObj == objMap[x])) return false;
    for (Elem y = 0; y < A.numObjects; ++y) {
      if (objMap[y] < 0) continue;
      Elem xy = A.addObj[x][y], yx = A.addObj[y][x];
      if (objMap[xy] >= 0 &&
          objMap[xy] != B.addObj[objMap[x]][objMap[y]])
        return false;
      if (objMap[yx] >= 0 &&
          objMap[yx] != B.addObj[objMap[y]][objMap[x]])
        return false;
    }
    Elem nx = A.negObj[x];
    if (objMap[nx] >= 0 && objMap[nx] != B.negObj[objMap[x]]) return false;
    return true;
  }

  bool arrConsistent(Elem f) const {
    Elem g = arrMap[f];
    if (A.specialArrow[f] != B.specialArrow[g]) return false;
    for (Elem x = 0; x < A.numObjects; ++x)
      if (A.idArr[x] == f && B.idArr[objMap[x]] != g) return false;
    for (Elem h = 0; h < A.numArrows(); ++h) {
      if (arrMap[h] < 0) continue;
      Elem c = A.comp[h][f];
      if (c >= 0 && arrMap[c] >= 0 &&
          arrMap[c] != B.comp[arrMap[h]][g])
        return false;
      c = A.comp[f][h];
      if (c >= 0 && arrMap[c] >= 0 &&
          arrMap[c] != B.comp[g][arrMap[h]])
        return false;
      c = A.addArr[f][h];
      if (arrMap[c] >= 0 && arrMap[c] != B.addArr[g][arrMap[h]]) return false;
      c = A.addArr[h][f];
      if (arrMap[c] >= 0 && arrMap[c] != B.addArr[arrMap[h]][g]) return false;
    }
    Elem nf = A.negArr[f];
    if (arrMap[nf] >= 0 && arrMap[nf] != B.negArr[g]) return false;
    return true;
  }

  bool assignArrows(int f) {
    if (f == A.numArrows()) return finalCheck();
    for (Elem g = 0; g < B.numArrows(); ++g) {
      if (arrUsed[g] || B.d0[g] != objMap[A.d0[f]] ||
          B.d1[g] != objMap[A.d1[f]])
        continue;
      arrMap[f] = g;
      arrUsed[g] = 1;
      if (arrConsistent(f) && assignArrows(f + 1)) return true;
      arrMap[f] = -1;
      arrUsed[g] = 0;
    }
    return false;
  }

  bool assignObjects(int x, const std::vector<Sig>& sa,
                     const std::vector<Sig>& sb) {
    if (x == A.numObjects) return assignArrows(0);
    for (Elem y = 0; y < B.numObjects; ++y) {
      if (objUsed[y] || !(sa[x] == sb[y])) continue;
      objMap[x] = y;
      objUsed[y] = 1;
      if (objConsistent(x) && assignObjects(x + 1, sa, sb)) return true;
      objMap[x] = -1;
      objUsed[y] = 0;
    }
    return false;
  }

  bool finalCheck() const {
    if (objMap[A.zeroObj] != B.zeroObj) return false;
    for (Elem x = 0; x < A.numObjects; ++x) {
      if (arrMap[A.idArr[x]] != B.idArr[objMap[x]]) return false;
      if (objMap[A.negObj[x]] != B.negObj[objMap[x]]) return false;
      for (Elem y = 0; y < A.numObjects; ++y)
        if (objMap[A.addObj[x][y]] != B.addObj[objMap[x]][objMap[y]])
          return false;
    }
    for (int f = 0; f < A.numArrows(); ++f) {
      if (B.d0[arrMap[f]] != objMap[A.d0[f]]) return false;
      if (B.d1[arrMap[f]] != objMap[A.d1[f]]) return false;
      if (arrMap[A.negArr[f]] != B.negArr[arrMap[f]]) return false;
      for (int g = 0; g < A.numArrows(); ++g) {
        Elem c = A.comp[g][f];
        Elem cb = B.comp[arrMap[g]][arrMap[f]];
        if ((c < 0) != (cb < 0)) return false;
        if (c >= 0 && arrMap[c] != cb) return false;
        if (arrMap[A.addArr[f][g]] != B.addArr[arrMap[f]][arrMap[g]])
          return false;
      }
    }
    return true;
  }
};

}  // namespace

bool modelsIsomorphic(const CatGroupModel& A, const CatGroupModel& B,
                      std::vector<Elem>* objMap, std::vector<Elem>* arrMap) {
  if (A.numObjects != B.numObjects || A.numArrows() != B.numArrows())
    return false;
  IsoSearch search(A, B);
  std::vector<IsoSearch::Sig> sa, sb;
  for (Elem x = 0; x < A.numObjects; ++x) sa.push_back(IsoSearch::sig(A, x));
  for (Elem y = 0; y < B.numObjects; ++y) sb.push_back(IsoSearch::sig(B, y));
  if (!search.assignObjects(0, sa, sb)) return false;
  if (objMap) *objMap = search.objMap;
  if (arrMap) *arrMap = search.arrMap;
  return true;
}

std::string IsoReport::str() const {
  std::string out;
  out += "arrows lhs=" + std::to_string(lhsArrows) +
         " rhs=" + std::to_string(rhsArrows) +
         " expected=" + std::to_string(expectedArrows) + "\n";
  out += std::string("isomorphism: ") + (found ? "FOUND" : "NOT FOUND") + "\n";
  if (found) {
    out += "objects:";
    for (std::size_t i = 0; i < objMap.size(); ++i)
      out += " " + std::to_string(i) + "->" + std::to_string(objMap[i]);
    out += "\narrows:";
    for (std::size_t i = 0; i < arrMap.size(); ++i)
      out += " " + std::to_string(i) + "->" + std::to_string(arrMap[i]);
    out += "\n";
  }
  return out;
}

IsoReport roundTrip(const ClassicalCrossedModule& xm0) {
  CatGroupModel C = groupGroupoidFromClassical(xm0);
  for (const Report& r : verifyAll(C))
    if (!r.ok()) throw Error("roundTrip: group groupoid stage\n" + r.str());
  CCrossedModule X = starCrossedModule(C);
  CatGroupModel G = buildCategoricalGroup(X);
  for (const Report& r : verifyAll(G))
    if (!r.ok()) throw Error("roundTrip: rebuilt category stage\n" + r.str());

  IsoReport rep;
  rep.lhsArrows = C.numArrows();
  rep.rhsArrows = G.numArrows();
  rep.expectedArrows = static_cast<long>(xm0.n.n) * xm0.m.n;
  rep.found = modelsIsomorphic(C, G, &rep.objMap, &rep.arrMap);
  return rep;
}

}  // namespace catgrp
