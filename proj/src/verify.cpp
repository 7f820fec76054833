#include "catgrp/verify.hpp"

#include <string>

namespace catgrp {

namespace {

std::string arrStr(const CatGroupModel& m, Elem f) {
  return std::to_string(f) + " (" + m.arrName[f] + ")";
}

bool shapeOk(const CatGroupModel& m, Report& rep) {
  int A = m.numArrows();
  int O = m.numObjects;
  if (O <= 0 || A <= 0) {
    rep.fail("shape", "empty model");
    return false;
  }
  bool ok =
      static_cast<int>(m.d1.size()) == A &&
      static_cast<int>(m.idArr.size()) == O &&
      static_cast<int>(m.comp.size()) == A &&
      static_cast<int>(m.addObj.size()) == O &&
      static_cast<int>(m.addArr.size()) == A &&
      static_cast<int>(m.negObj.size()) == O &&
      static_cast<int>(m.negArr.size()) == A &&
      static_cast<int>(m.specialArrow.size()) == A;
  if (!ok) {
    rep.fail("shape", "table sizes inconsistent");
    return false;
  }
  return true;
}

}  // namespace

Elem uniqueSpecialArrow(const CatGroupModel& m, Elem x, Elem y) {
  Elem found = -1;
  for (int f = 0; f < m.numArrows(); ++f) {
    if (!m.specialArrow[f] || m.d0[f] != x || m.d1[f] != y) continue;
    if (found >= 0) return -2;
    found = f;
  }
  return found;
}

std::vector<Elem> groupoidInverses(const CatGroupModel& m) {
  std::vector<Elem> inv(m.numArrows(), -1);
  for (int f = 0; f < m.numArrows(); ++f)
    for (int g = 0; g < m.numArrows(); ++g)
      if (m.comp[g][f] == m.idArr[m.d0[f]] &&
          m.comp[f][g] == m.idArr[m.d1[f]]) {
        inv[f] = g;
        break;
      }
  return inv;
}

Report verifyCategory(const CatGroupModel& m) {
  Report rep;
  rep.subject = "category";
  if (!shapeOk(m, rep)) return rep;
  int A = m.numArrows();

  for (Elem x = 0; x < m.numObjects; ++x) {
    Elem i = m.idArr[x];
    if (i < 0 || i >= A || m.d0[i] != x || m.d1[i] != x) {
      rep.fail("identity-endpoints", "x=" + std::to_string(x));
      break;
    }
  }
  for (int g = 0; g < A; ++g)
    for (int f = 0; f < A; ++f) {
      bool composable = m.d1[f] == m.d0[g];
      Elem c = m.comp[g][f];
      if (composable != (c >= 0)) {
        rep.fail("comp-domain", "g=" + arrStr(m, g) + " f=" + arrStr(m, f));
        g = A;
        break;
      }
      if (c >= 0 && (m.d0[c] != m.d0[f] || m.d1[c] != m.d1[g])) {
        rep.fail("comp-endpoints", "g=" + arrStr(m, g) + " f=" + arrStr(m, f));
        g = A;
        break;
      }
    }
  for (int f = 0; f < A; ++f) {
    if (m.comp[f][m.idArr[m.d0[f]]] != f || m.comp[m.idArr[m.d1[f]]][f] != f) {
      rep.fail("identity-law", "f=" + arrStr(m, f));
      break;
    }
  }
  for (int h = 0; h < A; ++h)
    for (int g = 0; g < A; ++g) {
      if (m.d1[g] != m.d0[h]) continue;
      for (int f = 0; f < A; ++f) {
        if (m.d1[f] != m.d0[g]) continue;
        if (m.comp[m.comp[h][g]][f] != m.comp[h][m.comp[g][f]]) {
          rep.fail("assoc", "h=" + std::to_string(h) + " g=" +
                                std::to_string(g) + " f=" + std::to_string(f));
          h = A;
          g = A;
          break;
        }
      }
    }
  return rep;
}

Report verifyGroupoid(const CatGroupModel& m) {
  Report rep;
  rep.subject = "groupoid";
  if (!shapeOk(m, rep)) return rep;
  auto inv = groupoidInverses(m);
  for (int f = 0; f < m.numArrows(); ++f)
    if (inv[f] < 0) {
      rep.fail("inverse", "f=" + arrStr(m, f));
      break;
    }
  return rep;
}

Report verifyMonoidal(const CatGroupModel& m) {
  Report rep;
  rep.subject = "monoidal";
  if (!shapeOk(m, rep)) return rep;
  int A = m.numArrows();
  int O = m.numObjects;

  for (int f = 0; f < A; ++f)
    for (int g = 0; g < A; ++g) {
      Elem s = m.addArr[f][g];
      if (s < 0 || s >= A || m.d0[s] != m.addObj[m.d0[f]][m.d0[g]] ||
          m.d1[s] != m.addObj[m.d1[f]][m.d1[g]]) {
        rep.fail("add-endpoints",
                 "f=" + std::to_string(f) + " g=" + std::to_string(g));
        f = A;
        break;
      }
    }
  if (!rep.ok()) return rep;

  for (Elem x = 0; x < O; ++x)
    for (Elem y = 0; y < O; ++y)
      if (m.addArr[m.idArr[x]][m.idArr[y]] != m.idArr[m.addObj[x][y]]) {
        rep.fail("identity-sum",
                 "x=" + std::to_string(x) + " y=" + std::to_string(y));
        x = O;
        break;
      }

  // interchange over all composable pairs
  std::vector<std::pair<int, int>> pairs;  // (f, f') with f' after f
  for (int f = 0; f < A; ++f)
    for (int fp = 0; fp < A; ++fp)
      if (m.d1[f] == m.d0[fp]) pairs.emplace_back(f, fp);
  for (const auto& [f, fp] : pairs) {
    for (const auto& [g, gp] : pairs) {
      if (m.addArr[m.comp[fp][f]][m.comp[gp][g]] !=
          m.comp[m.addArr[fp][gp]][m.addArr[f][g]]) {
        rep.fail("interchange", "f=" + std::to_string(f) + " f'=" +
                                    std::to_string(fp) + " g=" +
                                    std::to_string(g) + " g'=" +
                                    std::to_string(gp));
        break;
      }
    }
    if (!rep.ok()) break;
  }

  // endpoints of the structural picks
  for (Elem x = 0; x < O; ++x) {
    if (m.d0[m.lambda[x]] != m.addObj[m.zeroObj][x] || m.d1[m.lambda[x]] != x) {
      rep.fail("lambda-endpoints", "x=" + std::to_string(x));
      break;
    }
    if (m.d0[m.rho[x]] != m.addObj[x][m.zeroObj] || m.d1[m.rho[x]] != x) {
      rep.fail("rho-endpoints", "x=" + std::to_string(x));
      break;
    }
  }
  for (Elem x = 0; x < O && rep.ok(); ++x)
    for (Elem y = 0; y < O; ++y)
      for (Elem z = 0; z < O; ++z) {
        Elem al = m.alpha[x][y][z];
        if (m.d0[al] != m.addObj[m.addObj[x][y]][z] ||
            m.d1[al] != m.addObj[x][m.addObj[y][z]]) {
          rep.fail("alpha-endpoints", "x=" + std::to_string(x) + " y=" +
                                          std::to_string(y) + " z=" +
                                          std::to_string(z));
          x = O;
          y = O;
          break;
        }
      }
  if (!rep.ok()) return rep;

  // naturality: lambda, rho over arrows; alpha over arrow triples
  for (int f = 0; f < A; ++f) {
    Elem x = m.d0[f], xp = m.d1[f];
    if (m.comp[m.lambda[xp]][m.addArr[m.idArr[m.zeroObj]][f]] !=
        m.comp[f][m.lambda[x]]) {
      rep.fail("lambda-natural", "f=" + arrStr(m, f));
      break;
    }
    if (m.comp[m.rho[xp]][m.addArr[f][m.idArr[m.zeroObj]]] !=
        m.comp[f][m.rho[x]]) {
      rep.fail("rho-natural", "f=" + arrStr(m, f));
      break;
    }
  }
  for (int f = 0; f < A && rep.ok(); ++f)
    for (int g = 0; g < A; ++g)
      for (int h = 0; h < A; ++h) {
        Elem lhs = m.comp[m.alpha[m.d1[f]][m.d1[g]][m.d1[h]]]
                         [m.addArr[m.addArr[f][g]][h]];
        Elem rhs = m.comp[m.addArr[f][m.addArr[g][h]]]
                         [m.alpha[m.d0[f]][m.d0[g]][m.d0[h]]];
        if (lhs != rhs) {
          rep.fail("alpha-natural", "f=" + std::to_string(f) + " g=" +
                                        std::to_string(g) + " h=" +
                                        std::to_string(h));
          f = A;
          g = A;
          break;
        }
      }

  // pentagon and triangle
  for (Elem x = 0; x < O && rep.ok(); ++x)
    for (Elem y = 0; y < O; ++y)
      for (Elem z = 0; z < O; ++z)
        for (Elem t = 0; t < O; ++t) {
          Elem top = m.comp[m.alpha[x][y][m.addObj[z][t]]]
                           [m.alpha[m.addObj[x][y]][z][t]];
          Elem bottom = m.comp
              [m.addArr[m.idArr[x]][m.alpha[y][z][t]]]
              [m.comp[m.alpha[x][m.addObj[y][z]][t]]
                     [m.addArr[m.alpha[x][y][z]][m.idArr[t]]]];
          if (top != bottom) {
            rep.fail("pentagon", "x=" + std::to_string(x) + " y=" +
                                     std::to_string(y) + " z=" +
                                     std::to_string(z) + " t=" +
                                     std::to_string(t));
            x = O;
            y = O;
            z = O;
            break;
          }
        }
  for (Elem x = 0; x < O && rep.ok(); ++x)
    for (Elem y = 0; y < O; ++y) {
      Elem lhs = m.comp[m.addArr[m.idArr[x]][m.lambda[y]]]
                       [m.alpha[x][m.zeroObj][y]];
      Elem rhs = m.addArr[m.rho[x]][m.idArr[y]];
      if (lhs != rhs) {
        rep.fail("triangle", "x=" + std::to_string(x) + " y=" +
                                 std::to_string(y));
        x = O;
        break;
      }
    }
  return rep;
}

Report verifyCategoricalGroup(const CatGroupModel& m) {
  Report rep;
  rep.subject = "catgroup";
  if (!shapeOk(m, rep)) return rep;
  int A = m.numArrows();
  int O = m.numObjects;
  auto inv = groupoidInverses(m);
  auto needInv = [&](Elem f, const char* who) -> Elem {
    if (f < 0 || inv[f] < 0) {
      rep.fail(who, "no inverse for arrow " + std::to_string(f));
      return -1;
    }
    return inv[f];
  };

  for (Elem x = 0; x < O; ++x) {
    if (m.d0[m.eps[x]] != m.addObj[m.negObj[x]][x] ||
        m.d1[m.eps[x]] != m.zeroObj) {
      rep.fail("eps-endpoints", "x=" + std::to_string(x));
      break;
    }
    if (m.d0[m.delta[x]] != m.addObj[x][m.negObj[x]] ||
        m.d1[m.delta[x]] != m.zeroObj) {
      rep.fail("delta-endpoints", "x=" + std::to_string(x));
      break;
    }
  }
  for (int f = 0; f < A; ++f) {
    Elem nf = m.negArr[f];
    if (nf < 0 || nf >= A || m.d0[nf] != m.negObj[m.d0[f]] ||
        m.d1[nf] != m.negObj[m.d1[f]]) {
      rep.fail("negarr-endpoints", "f=" + arrStr(m, f));
      break;
    }
  }
  if (!rep.ok()) return rep;

  for (int f = 0; f < A; ++f) {
    Elem x = m.d0[f], xp = m.d1[f];
    if (m.comp[m.eps[xp]][m.addArr[m.negArr[f]][f]] != m.eps[x]) {
      rep.fail("eps-natural", "f=" + arrStr(m, f));
      break;
    }
    if (m.comp[m.delta[xp]][m.addArr[f][m.negArr[f]]] != m.delta[x]) {
      rep.fail("delta-natural", "f=" + arrStr(m, f));
      break;
    }
  }

  for (Elem x = 0; x < O && rep.ok(); ++x) {
    Elem dinv = needInv(m.delta[x], "zigzag-1");
    Elem rinv = needInv(m.rho[x], "zigzag-1");
    if (dinv < 0 || rinv < 0) break;
    Elem lhs = m.comp[m.addArr[m.idArr[x]][m.eps[x]]]
                     [m.comp[m.alpha[x][m.negObj[x]][x]]
                            [m.addArr[dinv][m.idArr[x]]]];
    Elem rhs = m.comp[rinv][m.lambda[x]];
    if (lhs != rhs) {
      rep.fail("zigzag-1", "x=" + std::to_string(x));
      break;
    }
  }
  for (Elem x = 0; x < O && rep.ok(); ++x) {
    Elem nx = m.negObj[x];
    Elem dinv = needInv(m.delta[x], "zigzag-2");
    Elem ainv = needInv(m.alpha[nx][x][nx], "zigzag-2");
    Elem linv = needInv(m.lambda[nx], "zigzag-2");
    if (dinv < 0 || ainv < 0 || linv < 0) break;
    Elem lhs = m.comp[m.addArr[m.eps[x]][m.idArr[nx]]]
                     [m.comp[ainv][m.addArr[m.idArr[nx]][dinv]]];
    Elem rhs = m.comp[linv][m.rho[nx]];
    if (lhs != rhs) {
      rep.fail("zigzag-2", "x=" + std::to_string(x));
      break;
    }
  }

  // f + (-f) is the zero arrow after transport along the designated deltas
  for (int f = 0; f < A && rep.ok(); ++f) {
    Elem s = m.addArr[f][m.negArr[f]];
    Elem t0 = m.delta[m.d0[f]], t1 = m.delta[m.d1[f]];
    if (m.comp[t1][s] != m.comp[m.idArr[m.zeroObj]][t0]) {
      rep.fail("negarr-transport", "f=" + arrStr(m, f));
      break;
    }
  }
  return rep;
}

Report verifyCoherence(const CatGroupModel& m) {
  Report rep;
  rep.subject = "coherence";
  if (!shapeOk(m, rep)) return rep;
  int A = m.numArrows();
  int O = m.numObjects;

  for (Elem x = 0; x < O && rep.ok(); ++x)
    for (Elem y = 0; y < O; ++y) {
      int count = 0;
      for (int f = 0; f < A; ++f)
        if (m.specialArrow[f] && m.d0[f] == x && m.d1[f] == y) ++count;
      if (count > 1) {
        rep.fail("unique-special", "x=" + std::to_string(x) + " y=" +
                                       std::to_string(y) + " count=" +
                                       std::to_string(count));
        x = O;
        break;
      }
    }

  for (Elem x = 0; x < O; ++x)
    if (!m.specialArrow[m.idArr[x]]) {
      rep.fail("identity-special", "x=" + std::to_string(x));
      break;
    }

  bool picksOk = true;
  for (Elem x = 0; x < O && picksOk; ++x) {
    if (!m.specialArrow[m.lambda[x]] || !m.specialArrow[m.rho[x]] ||
        !m.specialArrow[m.eps[x]] || !m.specialArrow[m.delta[x]]) {
      rep.fail("picks-special", "x=" + std::to_string(x));
      picksOk = false;
    }
    for (Elem y = 0; y < O && picksOk; ++y)
      for (Elem z = 0; z < O; ++z)
        if (!m.specialArrow[m.alpha[x][y][z]]) {
          rep.fail("picks-special", "alpha x=" + std::to_string(x) + " y=" +
                                        std::to_string(y) + " z=" +
                                        std::to_string(z));
          picksOk = false;
          break;
        }
  }

  for (int f = 0; f < A; ++f) {
    if (!m.specialArrow[f]) continue;
    for (int g = 0; g < A; ++g) {
      if (!m.specialArrow[g] || m.comp[g][f] < 0) continue;
      if (!m.specialArrow[m.comp[g][f]]) {
        rep.fail("special-comp-closed",
                 "g=" + std::to_string(g) + " f=" + std::to_string(f));
        f = A;
        break;
      }
    }
  }
  for (int f = 0; f < A; ++f) {
    if (!m.specialArrow[f]) continue;
    for (int g = 0; g < A; ++g) {
      if (!m.specialArrow[g]) continue;
      if (!m.specialArrow[m.addArr[f][g]]) {
        rep.fail("special-sum-closed",
                 "f=" + std::to_string(f) + " g=" + std::to_string(g));
        f = A;
        break;
      }
    }
  }
  auto inv = groupoidInverses(m);
  for (int f = 0; f < A; ++f) {
    if (!m.specialArrow[f]) continue;
    if (inv[f] < 0 || !m.specialArrow[inv[f]]) {
      rep.fail("special-inverse-closed", "f=" + std::to_string(f));
      break;
    }
  }
  return rep;
}

Report checkKerComm(const CatGroupModel& m) {
  Report rep;
  rep.subject = "kercomm";
  if (!shapeOk(m, rep)) return rep;
  int A = m.numArrows();

  std::vector<int> kerD1, kerD0;
  for (int f = 0; f < A; ++f) {
    if (uniqueSpecialArrow(m, m.d1[f], m.zeroObj) >= 0) kerD1.push_back(f);
    if (uniqueSpecialArrow(m, m.d0[f], m.zeroObj) >= 0) kerD0.push_back(f);
  }
  for (int f : kerD1) {
    for (int g : kerD0) {
      Elem fg = m.addArr[f][g];
      Elem gf = m.addArr[g][f];
      Elem s0 = uniqueSpecialArrow(m, m.d0[fg], m.d0[gf]);
      Elem s1 = uniqueSpecialArrow(m, m.d1[fg], m.d1[gf]);
      if (s0 < 0 || s1 < 0) {
        rep.fail("kercomm-connect",
                 "f=" + std::to_string(f) + " g=" + std::to_string(g));
        break;
      }
      if (m.comp[s1][fg] != m.comp[gf][s0]) {
        rep.fail("kercomm-square",
                 "f=" + std::to_string(f) + " g=" + std::to_string(g));
        break;
      }
    }
    if (!rep.ok()) break;
  }
  return rep;
}

std::vector<Report> verifyAll(const CatGroupModel& m) {
  return {verifyCategory(m),  verifyGroupoid(m),  verifyMonoidal(m),
          verifyCategoricalGroup(m), verifyCoherence(m), checkKerComm(m)};
}

}  // namespace catgrp
