#include "catgrp/crossed.hpp"

#include <string>

namespace catgrp {

namespace {

std::string pairStr(Elem a, Elem b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool actionShapeOk(const CAction& act, Report& rep) {
  if (static_cast<int>(act.table.size()) != act.actor.n) {
    rep.fail("dimensions", "table has " + std::to_string(act.table.size()) +
                               " rows, expected " +
                               std::to_string(act.actor.n));
    return false;
  }
  for (int b = 0; b < act.actor.n; ++b) {
    if (static_cast<int>(act.table[b].size()) != act.acted.n) {
      rep.fail("dimensions", "row " + std::to_string(b) + " has " +
                                 std::to_string(act.table[b].size()) +
                                 " entries");
      return false;
    }
    for (int a = 0; a < act.acted.n; ++a)
      if (act.table[b][a] < 0 || act.table[b][a] >= act.acted.n) {
        rep.fail("dimensions", "entry " + pairStr(b, a) + " out of range");
        return false;
      }
  }
  return true;
}

// W1-W10 plus the unique-lift property; shared between the validator and
// derivedWeakSpecial.
void checkWeakSpecial(const CCrossedModule& xm, Report& rep) {
  const CGroup& m = xm.m;
  const CGroup& n = xm.n;
  const Relation& w = xm.weakSpecial;

  if (w.size() != m.n) {
    rep.fail("w1", "relation on wrong carrier");
    return;
  }
  if (!w.isEquivalence()) rep.fail("w1", "not an equivalence");
  for (Elem c = 0; c < m.n && rep.ok(); ++c)
    for (Elem c1 = 0; c1 < m.n; ++c1)
      if (w.contains(c, c1) && !m.inR(c, c1)) {
        rep.fail("w1", "not within R_M " + pairStr(c, c1));
        c = m.n;
        break;
      }
  for (Elem c = 0; c < m.n; ++c)
    for (Elem c1 = 0; c1 < m.n; ++c1)
      if (m.inS(c, c1) && !w.contains(c, c1)) {
        rep.fail("w2", pairStr(c, c1));
        c = m.n;
        break;
      }
  for (Elem c = 0; c < m.n; ++c)
    for (Elem c1 = 0; c1 < m.n; ++c1)
      if (w.contains(c, c1) && !n.inS(xm.bd(c), xm.bd(c1))) {
        rep.fail("w3", pairStr(c, c1));
        c = m.n;
        break;
      }
  {
    auto wp = w.pairs();
    bool done = false;
    for (const auto& [c, c1] : wp) {
      for (const auto& [d, d1] : wp)
        if (!w.contains(m.plus(c, d), m.plus(c1, d1))) {
          rep.fail("w4", pairStr(c, c1) + "+" + pairStr(d, d1));
          done = true;
          break;
        }
      if (done) break;
    }
    for (const auto& [c, c1] : wp)
      if (!w.contains(m.neg[c], m.neg[c1])) {
        rep.fail("w5", pairStr(c, c1));
        break;
      }
    done = false;
    for (const auto& [c, c1] : wp) {
      for (Elem b = 0; b < n.n; ++b)
        if (!w.contains(xm.act(b, c), xm.act(b, c1))) {
          rep.fail("w6", "b=" + std::to_string(b) + " " + pairStr(c, c1));
          done = true;
          break;
        }
      if (done) break;
    }
  }
  for (Elem b = 0; b < n.n; ++b)
    for (Elem b1 = 0; b1 < n.n; ++b1) {
      if (!n.inS(b, b1)) continue;
      for (Elem c = 0; c < m.n; ++c)
        if (!w.contains(xm.act(b, c), xm.act(b1, c))) {
          rep.fail("w7", pairStr(b, b1) + " c=" + std::to_string(c));
          b = n.n;
          b1 = n.n;
          break;
        }
    }
  for (Elem b = 0; b < n.n; ++b)
    if (!w.contains(xm.act(b, m.zero), m.zero)) {
      rep.fail("w8", "b=" + std::to_string(b));
      break;
    }
  for (Elem c = 0; c < m.n; ++c)
    if (!w.contains(xm.act(n.zero, c), c)) {
      rep.fail("w8", "c=" + std::to_string(c));
      break;
    }
  for (Elem b = 0; b < n.n; ++b)
    for (Elem b1 = 0; b1 < n.n; ++b1)
      for (Elem c = 0; c < m.n; ++c)
        if (!w.contains(xm.act(n.plus(b, b1), c), xm.act(b, xm.act(b1, c)))) {
          rep.fail("w9", "b=" + std::to_string(b) + " b1=" +
                             std::to_string(b1) + " c=" + std::to_string(c));
          b = n.n;
          b1 = n.n;
          break;
        }
  for (Elem b = 0; b < n.n; ++b)
    for (Elem c = 0; c < m.n; ++c)
      for (Elem c1 = 0; c1 < m.n; ++c1)
        if (!w.contains(xm.act(b, m.plus(c, c1)),
                        m.plus(xm.act(b, c), xm.act(b, c1)))) {
          rep.fail("w10", "b=" + std::to_string(b) + " c=" +
                              std::to_string(c) + " c1=" + std::to_string(c1));
          b = n.n;
          c = m.n;
          break;
        }

  // unique lift along every special congruence on the boundary side
  for (Elem c = 0; c < m.n; ++c)
    for (Elem r = 0; r < n.n; ++r) {
      if (!n.inS(xm.bd(c), r)) continue;
      int count = 0;
      for (Elem c1 = 0; c1 < m.n; ++c1)
        if (w.contains(c, c1) && xm.bd(c1) == r) ++count;
      if (count != 1) {
        rep.fail("special-lift", "c=" + std::to_string(c) + " r=" +
                                     std::to_string(r) + " lifts=" +
                                     std::to_string(count));
        c = m.n;
        break;
      }
    }
}

}  // namespace

Report validateAction(const CAction& act) {
  Report rep;
  rep.subject = "action";
  if (!actionShapeOk(act, rep)) return rep;
  const CGroup& h = act.actor;
  const CGroup& g = act.acted;

  for (Elem b = 0; b < h.n; ++b)
    for (Elem a = 0; a < g.n; ++a)
      for (Elem a1 = 0; a1 < g.n; ++a1)
        if (!g.inR(act.act(b, g.plus(a, a1)),
                   g.plus(act.act(b, a), act.act(b, a1)))) {
          rep.fail("act-add", "b=" + std::to_string(b) + " a=" +
                                  std::to_string(a) + " a1=" +
                                  std::to_string(a1));
          b = h.n;
          a = g.n;
          break;
        }
  for (Elem b = 0; b < h.n; ++b)
    for (Elem b1 = 0; b1 < h.n; ++b1)
      for (Elem a = 0; a < g.n; ++a)
        if (!g.inR(act.act(h.plus(b, b1), a), act.act(b, act.act(b1, a)))) {
          rep.fail("act-compose", "b=" + std::to_string(b) + " b1=" +
                                      std::to_string(b1) + " a=" +
                                      std::to_string(a));
          b = h.n;
          b1 = h.n;
          break;
        }
  for (Elem a = 0; a < g.n; ++a)
    if (!g.inR(act.act(h.zero, a), a)) {
      rep.fail("act-zero", "a=" + std::to_string(a));
      break;
    }
  for (Elem b = 0; b < h.n; ++b)
    for (Elem b1 = 0; b1 < h.n; ++b1) {
      if (!h.inR(b, b1)) continue;
      for (Elem a = 0; a < g.n; ++a)
        for (Elem a1 = 0; a1 < g.n; ++a1)
          if (g.inR(a, a1) && !g.inR(act.act(b, a), act.act(b1, a1))) {
            rep.fail("act-congruence",
                     pairStr(b, b1) + " " + pairStr(a, a1));
            b = h.n;
            b1 = h.n;
            a = g.n;
            break;
          }
    }
  return rep;
}

Report validateCrossedModule(const CCrossedModule& xm) {
  Report rep;
  rep.subject = "xmod";
  const CGroup& m = xm.m;
  const CGroup& n = xm.n;

  auto mv = validateCGroup(m);
  rep.merge(mv.report, "m:");
  auto nv = validateCGroup(n);
  rep.merge(nv.report, "n:");
  if (!rep.ok()) return rep;

  if (static_cast<int>(xm.boundary.size()) != m.n) {
    rep.fail("dimensions", "boundary has " +
                               std::to_string(xm.boundary.size()) +
                               " entries, expected " + std::to_string(m.n));
    return rep;
  }
  for (Elem c = 0; c < m.n; ++c)
    if (xm.bd(c) < 0 || xm.bd(c) >= n.n) {
      rep.fail("dimensions",
               "boundary[" + std::to_string(c) + "] out of range");
      return rep;
    }

  Report bm = validateMorphism({m, n, xm.boundary});
  rep.merge(bm, "boundary:");

  Report ar = validateAction({n, m, xm.action});
  rep.merge(ar, "action:");
  if (!rep.ok()) return rep;

  // equivariance on the nose: bd(b.a) = b + (bd(a) - b)
  for (Elem b = 0; b < n.n; ++b)
    for (Elem a = 0; a < m.n; ++a)
      if (xm.bd(xm.act(b, a)) !=
          n.plus(b, n.plus(xm.bd(a), n.neg[b]))) {
        rep.fail("cm1", "b=" + std::to_string(b) + " a=" + std::to_string(a));
        b = n.n;
        break;
      }

  // Peiffer up to R: bd(a).a1 ~ a + (a1 - a)
  for (Elem a = 0; a < m.n; ++a)
    for (Elem a1 = 0; a1 < m.n; ++a1)
      if (!m.inR(xm.act(xm.bd(a), a1),
                 m.plus(a, m.plus(a1, m.neg[a])))) {
        rep.fail("cm2", "a=" + std::to_string(a) + " a1=" + std::to_string(a1));
        a = m.n;
        break;
      }

  checkWeakSpecial(xm, rep);

  // the sum-vs-compose payload congruence used by the interchange law;
  // only meaningful when the Peiffer law is exact
  bool peifferExact = true;
  for (Elem a = 0; a < m.n && peifferExact; ++a)
    for (Elem a1 = 0; a1 < m.n; ++a1)
      if (xm.act(xm.bd(a), a1) != m.plus(a, m.plus(a1, m.neg[a]))) {
        peifferExact = false;
        break;
      }
  if (peifferExact && rep.ok()) {
    const Relation& w = xm.weakSpecial;
    for (Elem r = 0; r < n.n; ++r)
      for (Elem c = 0; c < m.n; ++c)
        for (Elem c1 = 0; c1 < m.n; ++c1)
          for (Elem cp = 0; cp < m.n; ++cp)
            for (Elem c1p = 0; c1p < m.n; ++c1p) {
              Elem lhs = m.plus(m.plus(c1, c),
                                xm.act(r, m.plus(c1p, cp)));
              Elem rhs = m.plus(
                  m.plus(c1, xm.act(n.plus(xm.bd(c), r), c1p)),
                  m.plus(c, xm.act(r, cp)));
              if (!w.contains(lhs, rhs)) {
                rep.fail("w-interchange",
                         "r=" + std::to_string(r) + " c=" + std::to_string(c) +
                             " c1=" + std::to_string(c1) + " c'=" +
                             std::to_string(cp) + " c1'=" +
                             std::to_string(c1p));
                r = n.n;
                c = m.n;
                c1 = m.n;
                cp = m.n;
                break;
              }
            }
  }
  return rep;
}

std::string CsscFlags::str() const {
  auto one = [](const char* name, bool v, const std::string& w) {
    std::string s = std::string(name) + "=" + (v ? "true" : "false");
    if (!v && !w.empty()) s += " witness " + w;
    return s;
  };
  return one("connected", connected, connectedWitness) + "\n" +
         one("strict", strict, strictWitness) + "\n" +
         one("special", special, specialWitness) + "\n";
}

CsscFlags classify(const CCrossedModule& xm) {
  CsscFlags fl;
  const CGroup& m = xm.m;
  const CGroup& n = xm.n;

  auto conn = isConnected(m);
  fl.connected = conn.holds;
  fl.connectedWitness = conn.witness;

  fl.strict = true;
  for (Elem a = 0; a < m.n && fl.strict; ++a)
    for (Elem a1 = 0; a1 < m.n; ++a1)
      if (xm.act(xm.bd(a), a1) != m.plus(a, m.plus(a1, m.neg[a]))) {
        fl.strict = false;
        fl.strictWitness =
            "a=" + std::to_string(a) + " a1=" + std::to_string(a1);
        break;
      }

  fl.special = true;
  for (Elem c = 0; c < m.n && fl.special; ++c)
    for (Elem r = 0; r < n.n; ++r) {
      if (!n.inS(xm.bd(c), r)) continue;
      int count = 0;
      for (Elem c1 = 0; c1 < m.n; ++c1)
        if (xm.weakSpecial.contains(c, c1) && xm.bd(c1) == r) ++count;
      if (count != 1) {
        fl.special = false;
        fl.specialWitness = "c=" + std::to_string(c) +
                            " r=" + std::to_string(r) +
                            " lifts=" + std::to_string(count);
        break;
      }
    }
  return fl;
}

Elem liftAlongSpecial(const CCrossedModule& xm, Elem c, Elem r) {
  if (c < 0 || c >= xm.m.n || r < 0 || r >= xm.n.n)
    throw Error("liftAlongSpecial: element out of range");
  if (!xm.n.inS(xm.bd(c), r))
    throw Error("liftAlongSpecial: (bd c, r) is not a special congruence");
  Elem found = -1;
  for (Elem c1 = 0; c1 < xm.m.n; ++c1) {
    if (!xm.weakSpecial.contains(c, c1) || xm.bd(c1) != r) continue;
    if (found >= 0)
      throw Error("liftAlongSpecial: several lifts, instance corrupted");
    found = c1;
  }
  if (found < 0)
    throw Error("liftAlongSpecial: no lift, instance corrupted");
  return found;
}

CCrossedModule conjugationCrossedModule(const CGroup& g,
                                        const std::vector<Elem>& subset) {
  auto nrm = isNormal(g, subset);
  if (!nrm.holds)
    throw Error("conjugationCrossedModule: subgroup not normal, " +
                nrm.witness);
  auto perf = isPerfect(g, subset);
  if (!perf.holds)
    throw Error("conjugationCrossedModule: subgroup not perfect, " +
                perf.witness);

  CSubgroup sub = subCGroup(g, subset);
  CCrossedModule xm;
  xm.m = sub.group;
  xm.n = g;
  xm.boundary = sub.embed;
  xm.action.assign(g.n, std::vector<Elem>(sub.group.n));
  for (Elem a = 0; a < g.n; ++a)
    for (int x = 0; x < sub.group.n; ++x) {
      Elem conj = g.plus(g.plus(a, sub.embed[x]), g.neg[a]);
      int pick = -1;
      for (int j = 0; j < sub.group.n && pick < 0; ++j)
        if (g.inR(conj, sub.embed[j])) pick = j;
      if (pick < 0) throw Error("conjugationCrossedModule: normality broken");
      xm.action[a][x] = pick;
    }
  xm.weakSpecial = xm.m.special;  // fallback when the derived reading fails
  if (auto w = derivedWeakSpecial(xm)) xm.weakSpecial = *w;

  Report rep = validateCrossedModule(xm);
  if (!rep.ok()) throw Error("conjugationCrossedModule: " + rep.str());
  return xm;
}

std::optional<Relation> derivedWeakSpecial(const CCrossedModule& xm) {
  Relation w(xm.m.n);
  for (Elem c = 0; c < xm.m.n; ++c)
    for (Elem c1 = 0; c1 < xm.m.n; ++c1)
      if (xm.m.inR(c, c1) && xm.n.inS(xm.bd(c), xm.bd(c1))) w.insert(c, c1);
  CCrossedModule probe = xm;
  probe.weakSpecial = w;
  Report rep;
  checkWeakSpecial(probe, rep);
  if (!rep.ok()) return std::nullopt;
  return w;
}

}  // namespace catgrp
