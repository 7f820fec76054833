#include "catgrp/cgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "catgrp/crossed.hpp"

namespace catgrp {

namespace {

std::string pairStr(Elem a, Elem b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool tablesWellFormed(const CGroup& g, Report& rep) {
  bool ok = true;
  if (g.n <= 0) {
    rep.fail("dimensions", "carrier size " + std::to_string(g.n));
    return false;
  }
  if (static_cast<int>(g.add.size()) != g.n) {
    rep.fail("dimensions", "add has " + std::to_string(g.add.size()) +
                               " rows, expected " + std::to_string(g.n));
    ok = false;
  } else {
    for (int i = 0; i < g.n; ++i)
      if (static_cast<int>(g.add[i].size()) != g.n) {
        rep.fail("dimensions", "add row " + std::to_string(i) + " has " +
                                   std::to_string(g.add[i].size()) +
                                   " entries");
        ok = false;
        break;
      }
  }
  if (static_cast<int>(g.neg.size()) != g.n) {
    rep.fail("dimensions",
             "neg has " + std::to_string(g.neg.size()) + " entries");
    ok = false;
  }
  if (g.zero < 0 || g.zero >= g.n) {
    rep.fail("dimensions", "zero id " + std::to_string(g.zero));
    ok = false;
  }
  if (!ok) return false;
  for (int i = 0; i < g.n; ++i) {
    if (g.neg[i] < 0 || g.neg[i] >= g.n) {
      rep.fail("dimensions", "neg[" + std::to_string(i) + "] out of range");
      return false;
    }
    for (int j = 0; j < g.n; ++j)
      if (g.add[i][j] < 0 || g.add[i][j] >= g.n) {
        rep.fail("dimensions",
                 "add" + pairStr(i, j) + " out of range");
        return false;
      }
  }
  if (!g.cong.empty() && g.cong.size() != g.n) {
    rep.fail("dimensions", "cong relation on wrong carrier");
    return false;
  }
  if (!g.special.empty() && g.special.size() != g.n) {
    rep.fail("dimensions", "special relation on wrong carrier");
    return false;
  }
  return true;
}

// Closure worklist with per-pair provenance so certificates can be read off.
struct Deriv {
  CertStepKind kind = CertStepKind::Identity;
  CGroupAxiom axiom = CGroupAxiom::Assoc;
  std::array<Elem, 3> args = {-1, -1, -1};
  ElemPair p1{-1, -1};
  ElemPair p2{-1, -1};
};

struct ClosureState {
  const CGroup& g;
  Relation rel;
  std::vector<Deriv> why;
  std::deque<ElemPair> work;
  std::vector<ElemPair> all;  // insertion order
  std::vector<std::vector<Elem>> succ, pred;

  explicit ClosureState(const CGroup& grp)
      : g(grp),
        rel(grp.n),
        why(static_cast<std::size_t>(grp.n) * grp.n),
        succ(grp.n),
        pred(grp.n) {}

  void add(Elem x, Elem y, const Deriv& d) {
    if (!rel.insert(x, y)) return;
    why[static_cast<std::size_t>(x) * g.n + y] = d;
    work.emplace_back(x, y);
    all.emplace_back(x, y);
    succ[x].push_back(y);
    pred[y].push_back(x);
  }

  void seed() {
    for (Elem a = 0; a < g.n; ++a)
      add(a, a, {CertStepKind::Identity, CGroupAxiom::Assoc, {a, -1, -1}});
    for (Elem a = 0; a < g.n; ++a) {
      add(g.plus(g.zero, a), a,
          {CertStepKind::Axiom, CGroupAxiom::LUnit, {a, -1, -1}});
      add(g.plus(a, g.zero), a,
          {CertStepKind::Axiom, CGroupAxiom::RUnit, {a, -1, -1}});
      add(g.plus(g.neg[a], a), g.zero,
          {CertStepKind::Axiom, CGroupAxiom::LInv, {a, -1, -1}});
      add(g.plus(a, g.neg[a]), g.zero,
          {CertStepKind::Axiom, CGroupAxiom::RInv, {a, -1, -1}});
    }
    for (Elem a = 0; a < g.n; ++a)
      for (Elem b = 0; b < g.n; ++b)
        for (Elem c = 0; c < g.n; ++c)
          add(g.plus(g.plus(a, b), c), g.plus(a, g.plus(b, c)),
              {CertStepKind::Axiom, CGroupAxiom::Assoc, {a, b, c}});
  }

  void run() {
    seed();
    while (!work.empty()) {
      auto [x, y] = work.front();
      work.pop_front();
      Deriv sym{CertStepKind::Symmetry, CGroupAxiom::Assoc, {}, {x, y}};
      add(y, x, sym);
      // transitivity against both sides
      for (std::size_t i = 0; i < succ[y].size(); ++i) {
        Elem z = succ[y][i];
        add(x, z,
            {CertStepKind::Transitivity, CGroupAxiom::Assoc, {}, {x, y}, {y, z}});
      }
      for (std::size_t i = 0; i < pred[x].size(); ++i) {
        Elem w = pred[x][i];
        add(w, y,
            {CertStepKind::Transitivity, CGroupAxiom::Assoc, {}, {w, x}, {x, y}});
      }
      // sum closure against everything known so far; later pairs pick this
      // one up during their own turn
      std::size_t snapshot = all.size();
      for (std::size_t i = 0; i < snapshot; ++i) {
        auto [u, v] = all[i];
        add(g.plus(x, u), g.plus(y, v),
            {CertStepKind::Sum, CGroupAxiom::Assoc, {}, {x, y}, {u, v}});
        add(g.plus(u, x), g.plus(v, y),
            {CertStepKind::Sum, CGroupAxiom::Assoc, {}, {u, v}, {x, y}});
      }
    }
  }
};

}  // namespace

Relation specialClosure(const CGroup& g) {
  ClosureState st(g);
  st.run();
  return st.rel;
}

CGroupValidation validateCGroup(const CGroup& raw) {
  CGroupValidation out;
  Report& rep = out.report;
  rep.subject = "cgroup";
  if (!tablesWellFormed(raw, rep)) return out;

  CGroup g = raw;
  if (g.cong.empty()) g.cong = Relation::equality(g.n);

  if (!g.cong.isEquivalence()) rep.fail("cong-equivalence");

  bool compat = true;
  for (Elem a = 0; a < g.n && compat; ++a)
    for (Elem a1 = 0; a1 < g.n && compat; ++a1) {
      if (!g.inR(a, a1)) continue;
      for (Elem b = 0; b < g.n && compat; ++b)
        for (Elem b1 = 0; b1 < g.n; ++b1) {
          if (!g.inR(b, b1)) continue;
          if (!g.inR(g.plus(a, b), g.plus(a1, b1))) {
            rep.fail("r-compatibility",
                     "a=" + std::to_string(a) + " a'=" + std::to_string(a1) +
                         " b=" + std::to_string(b) +
                         " b'=" + std::to_string(b1));
            compat = false;
            break;
          }
        }
    }

  bool laws = true;
  for (Elem a = 0; a < g.n && laws; ++a)
    for (Elem b = 0; b < g.n && laws; ++b)
      for (Elem c = 0; c < g.n; ++c)
        if (!g.inR(g.plus(g.plus(a, b), c), g.plus(a, g.plus(b, c)))) {
          rep.fail("assoc", "a=" + std::to_string(a) +
                                " b=" + std::to_string(b) +
                                " c=" + std::to_string(c));
          laws = false;
          break;
        }
  for (Elem a = 0; a < g.n; ++a) {
    if (!g.inR(g.plus(g.zero, a), a)) {
      rep.fail("lunit", "a=" + std::to_string(a));
      break;
    }
  }
  for (Elem a = 0; a < g.n; ++a) {
    if (!g.inR(g.plus(a, g.zero), a)) {
      rep.fail("runit", "a=" + std::to_string(a));
      break;
    }
  }
  for (Elem a = 0; a < g.n; ++a) {
    if (!g.inR(g.plus(g.neg[a], a), g.zero)) {
      rep.fail("linv", "a=" + std::to_string(a));
      break;
    }
  }
  for (Elem a = 0; a < g.n; ++a) {
    if (!g.inR(g.plus(a, g.neg[a]), g.zero)) {
      rep.fail("rinv", "a=" + std::to_string(a));
      break;
    }
  }

  if (!rep.ok()) return out;

  Relation closure = specialClosure(g);
  if (!closure.subsetOf(g.cong)) {
    rep.fail("special-subset", "closure escapes R");
    return out;
  }

  if (!g.special.empty()) {
    const Relation& s = g.special;
    if (!s.isEquivalence()) rep.fail("special-equivalence");
    if (!s.subsetOf(g.cong)) {
      for (auto [a, b] : s.pairs())
        if (!g.inR(a, b)) {
          rep.fail("special-subset", pairStr(a, b));
          break;
        }
    }
    if (!closure.subsetOf(s)) {
      for (auto [a, b] : closure.pairs())
        if (!s.contains(a, b)) {
          rep.fail("special-missing-closure", pairStr(a, b));
          break;
        }
    }
    bool sumClosed = true;
    auto sp = s.pairs();
    for (const auto& [x, y] : sp) {
      for (const auto& [u, v] : sp)
        if (!s.contains(g.plus(x, u), g.plus(y, v))) {
          rep.fail("special-sum-closed",
                   pairStr(x, y) + "+" + pairStr(u, v));
          sumClosed = false;
          break;
        }
      if (!sumClosed) break;
    }
    if (rep.ok() && s != closure)
      rep.warnings.push_back(
          "supplied special relation is larger than the closure; replaced");
  }

  if (!rep.ok()) return out;
  g.special = closure;
  out.sealed = std::move(g);
  return out;
}

CGroup sealCGroup(const CGroup& raw) {
  auto v = validateCGroup(raw);
  if (!v.sealed) throw Error(v.report.str());
  return *v.sealed;
}

Report validateMorphism(const CGroupMorphism& f) {
  Report rep;
  rep.subject = "morphism";
  if (static_cast<int>(f.map.size()) != f.dom.n) {
    rep.fail("dimensions", "map has " + std::to_string(f.map.size()) +
                               " entries, expected " +
                               std::to_string(f.dom.n));
    return rep;
  }
  for (Elem a = 0; a < f.dom.n; ++a)
    if (f.map[a] < 0 || f.map[a] >= f.cod.n) {
      rep.fail("dimensions", "map[" + std::to_string(a) + "] out of range");
      return rep;
    }
  for (Elem a = 0; a < f.dom.n; ++a)
    for (Elem b = 0; b < f.dom.n; ++b)
      if (f.map[f.dom.plus(a, b)] != f.cod.plus(f.map[a], f.map[b])) {
        rep.fail("morphism-additive",
                 "a=" + std::to_string(a) + " b=" + std::to_string(b));
        a = f.dom.n;
        break;
      }
  for (Elem a = 0; a < f.dom.n; ++a)
    for (Elem b = 0; b < f.dom.n; ++b) {
      if (f.dom.inR(a, b) && !f.cod.inR(f.map[a], f.map[b])) {
        rep.fail("morphism-cong", pairStr(a, b));
        a = f.dom.n;
        break;
      }
    }
  for (Elem a = 0; a < f.dom.n; ++a)
    for (Elem b = 0; b < f.dom.n; ++b) {
      if (f.dom.inS(a, b) && !f.cod.inS(f.map[a], f.map[b])) {
        rep.fail("morphism-special", pairStr(a, b));
        a = f.dom.n;
        break;
      }
    }
  return rep;
}

std::optional<SpecialCert> certifySpecial(const CGroup& g, Elem x, Elem y) {
  ClosureState st(g);
  st.run();
  if (!st.rel.contains(x, y)) return std::nullopt;

  SpecialCert cert;
  std::map<ElemPair, int> stepOf;
  // iterative post-order over the derivation dag
  struct Frame {
    ElemPair p;
    bool expanded;
  };
  std::vector<Frame> stack{{{x, y}, false}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (stepOf.count(fr.p)) continue;
    const Deriv& d =
        st.why[static_cast<std::size_t>(fr.p.first) * g.n + fr.p.second];
    if (!fr.expanded) {
      stack.push_back({fr.p, true});
      if (d.kind == CertStepKind::Symmetry ||
          d.kind == CertStepKind::Transitivity || d.kind == CertStepKind::Sum)
        stack.push_back({d.p1, false});
      if (d.kind == CertStepKind::Transitivity || d.kind == CertStepKind::Sum)
        stack.push_back({d.p2, false});
      continue;
    }
    CertStep step;
    step.kind = d.kind;
    step.axiom = d.axiom;
    step.args = d.args;
    step.yields = fr.p;
    if (d.kind == CertStepKind::Symmetry ||
        d.kind == CertStepKind::Transitivity || d.kind == CertStepKind::Sum)
      step.prev1 = stepOf.at(d.p1);
    if (d.kind == CertStepKind::Transitivity || d.kind == CertStepKind::Sum)
      step.prev2 = stepOf.at(d.p2);
    stepOf[fr.p] = static_cast<int>(cert.steps.size());
    cert.steps.push_back(step);
  }
  cert.conclusion = {x, y};
  return cert;
}

bool replayCert(const CGroup& g, const SpecialCert& cert) {
  if (cert.steps.empty()) return false;
  std::vector<ElemPair> derived;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertStep& s = cert.steps[i];
    ElemPair got{-1, -1};
    auto prev = [&](int idx) -> std::optional<ElemPair> {
      if (idx < 0 || idx >= static_cast<int>(i)) return std::nullopt;
      return derived[idx];
    };
    switch (s.kind) {
      case CertStepKind::Identity: {
        Elem a = s.args[0];
        if (a < 0 || a >= g.n) return false;
        got = {a, a};
        break;
      }
      case CertStepKind::Axiom: {
        Elem a = s.args[0], b = s.args[1], c = s.args[2];
        switch (s.axiom) {
          case CGroupAxiom::Assoc:
            if (a < 0 || b < 0 || c < 0 || a >= g.n || b >= g.n || c >= g.n)
              return false;
            got = {g.plus(g.plus(a, b), c), g.plus(a, g.plus(b, c))};
            break;
          case CGroupAxiom::LUnit:
            if (a < 0 || a >= g.n) return false;
            got = {g.plus(g.zero, a), a};
            break;
          case CGroupAxiom::RUnit:
            if (a < 0 || a >= g.n) return false;
            got = {g.plus(a, g.zero), a};
            break;
          case CGroupAxiom::LInv:
            if (a < 0 || a >= g.n) return false;
            got = {g.plus(g.neg[a], a), g.zero};
            break;
          case CGroupAxiom::RInv:
            if (a < 0 || a >= g.n) return false;
            got = {g.plus(a, g.neg[a]), g.zero};
            break;
        }
        break;
      }
      case CertStepKind::Symmetry: {
        auto p = prev(s.prev1);
        if (!p) return false;
        got = {p->second, p->first};
        break;
      }
      case CertStepKind::Transitivity: {
        auto p = prev(s.prev1), q = prev(s.prev2);
        if (!p || !q || p->second != q->first) return false;
        got = {p->first, q->second};
        break;
      }
      case CertStepKind::Sum: {
        auto p = prev(s.prev1), q = prev(s.prev2);
        if (!p || !q) return false;
        got = {g.plus(p->first, q->first), g.plus(p->second, q->second)};
        break;
      }
    }
    if (got != s.yields) return false;
    derived.push_back(got);
  }
  return derived.back() == cert.conclusion;
}

CGroup semidirect(const CGroup& b, const CGroup& a,
                  const std::vector<std::vector<Elem>>& actionTable) {
  CAction act{b, a, actionTable};
  Report actRep = validateAction(act);
  if (!actRep.ok()) throw Error("semidirect: " + actRep.str());

  CGroup p;
  p.n = b.n * a.n;
  auto id = [&](Elem bi, Elem ai) { return bi * a.n + ai; };
  p.add.assign(p.n, std::vector<Elem>(p.n));
  for (Elem b1 = 0; b1 < b.n; ++b1)
    for (Elem a1 = 0; a1 < a.n; ++a1)
      for (Elem b2 = 0; b2 < b.n; ++b2)
        for (Elem a2 = 0; a2 < a.n; ++a2)
          p.add[id(b1, a1)][id(b2, a2)] =
              id(b.plus(b1, b2), a.plus(a1, act.act(b1, a2)));
  p.zero = id(b.zero, a.zero);
  p.neg.resize(p.n);
  for (Elem b1 = 0; b1 < b.n; ++b1)
    for (Elem a1 = 0; a1 < a.n; ++a1)
      p.neg[id(b1, a1)] = id(b.neg[b1], act.act(b.neg[b1], a.neg[a1]));
  p.cong = Relation(p.n);
  for (Elem b1 = 0; b1 < b.n; ++b1)
    for (Elem a1 = 0; a1 < a.n; ++a1)
      for (Elem b2 = 0; b2 < b.n; ++b2)
        for (Elem a2 = 0; a2 < a.n; ++a2)
          if (b.inR(b1, b2) && a.inR(a1, a2))
            p.cong.insert(id(b1, a1), id(b2, a2));
  return sealCGroup(p);
}

CSubgroup subCGroup(const CGroup& g, const std::vector<Elem>& subset) {
  std::vector<Elem> emb = subset;
  std::sort(emb.begin(), emb.end());
  emb.erase(std::unique(emb.begin(), emb.end()), emb.end());
  if (emb.empty()) throw Error("subCGroup: empty subset");
  for (Elem e : emb)
    if (e < 0 || e >= g.n)
      throw Error("subCGroup: element " + std::to_string(e) + " out of range");

  int k = static_cast<int>(emb.size());
  std::vector<int> toSub(g.n, -1);
  for (int i = 0; i < k; ++i) toSub[emb[i]] = i;

  CGroup h;
  h.n = k;
  h.add.assign(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem s = g.plus(emb[i], emb[j]);
      if (toSub[s] < 0)
        throw Error("subCGroup: not closed under addition, " +
                    std::to_string(emb[i]) + "+" + std::to_string(emb[j]) +
                    "=" + std::to_string(s));
      h.add[i][j] = toSub[s];
    }

  // zero: the ambient zero when present, else the least element acting as
  // one up to the restricted relation
  int z = -1;
  if (toSub[g.zero] >= 0) {
    z = toSub[g.zero];
  } else {
    for (int zi = 0; zi < k && z < 0; ++zi) {
      bool good = true;
      for (int i = 0; i < k; ++i)
        if (!g.inR(g.plus(emb[zi], emb[i]), emb[i]) ||
            !g.inR(g.plus(emb[i], emb[zi]), emb[i])) {
          good = false;
          break;
        }
      if (good) z = zi;
    }
    if (z < 0) throw Error("subCGroup: no zero element");
  }
  h.zero = z;

  h.neg.resize(k);
  for (int i = 0; i < k; ++i) {
    if (toSub[g.neg[emb[i]]] >= 0) {
      h.neg[i] = toSub[g.neg[emb[i]]];
      continue;
    }
    int found = -1;
    for (int j = 0; j < k && found < 0; ++j)
      if (g.inR(g.plus(emb[i], emb[j]), emb[z]) &&
          g.inR(g.plus(emb[j], emb[i]), emb[z]))
        found = j;
    if (found < 0)
      throw Error("subCGroup: no negative for " + std::to_string(emb[i]));
    h.neg[i] = found;
  }

  h.cong = Relation(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.inR(emb[i], emb[j])) h.cong.insert(i, j);

  CSubgroup out{sealCGroup(h), emb};
  return out;
}

CSubgroup cKernel(const CGroupMorphism& f) {
  std::vector<Elem> subset;
  for (Elem a = 0; a < f.dom.n; ++a)
    if (f.cod.inR(f.map[a], f.cod.zero)) subset.push_back(a);
  return subCGroup(f.dom, subset);
}

CSubgroup cImage(const CGroupMorphism& f) {
  std::vector<Elem> subset;
  for (Elem b = 0; b < f.cod.n; ++b) {
    for (Elem a = 0; a < f.dom.n; ++a)
      if (f.cod.inR(f.map[a], b)) {
        subset.push_back(b);
        break;
      }
  }
  return subCGroup(f.cod, subset);
}

PredicateResult isNormal(const CGroup& g, const std::vector<Elem>& subset) {
  CSubgroup sub = subCGroup(g, subset);  // throws if not a c-subgroup
  std::vector<char> inSub(g.n, 0);
  for (Elem e : sub.embed) inSub[e] = 1;
  for (Elem a = 0; a < g.n; ++a)
    for (Elem h : sub.embed) {
      Elem conj = g.plus(g.plus(a, h), g.neg[a]);
      bool near = false;
      for (Elem e : sub.embed)
        if (g.inR(conj, e)) {
          near = true;
          break;
        }
      if (!near)
        return {false, "g=" + std::to_string(a) + " h=" + std::to_string(h)};
    }
  return {true, ""};
}

PredicateResult isPerfect(const CGroup& g, const std::vector<Elem>& subset) {
  CSubgroup sub = subCGroup(g, subset);
  std::vector<char> inSub(g.n, 0);
  for (Elem e : sub.embed) inSub[e] = 1;
  for (Elem a = 0; a < g.n; ++a) {
    if (inSub[a]) continue;
    for (Elem e : sub.embed)
      if (g.inR(a, e)) return {false, "g=" + std::to_string(a)};
  }
  return {true, ""};
}

PredicateResult isConnected(const CGroup& g) {
  for (Elem a = 0; a < g.n; ++a)
    for (Elem b = 0; b < g.n; ++b)
      if (!g.inR(a, b)) return {false, pairStr(a, b)};
  return {true, ""};
}

}  // namespace catgrp
