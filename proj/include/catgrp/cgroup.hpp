#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "catgrp/relation.hpp"
#include "catgrp/report.hpp"

namespace catgrp {

// Finite group up to congruence: carrier {0..n-1} with an operation table,
// a compatible equivalence relation R (cong) and the sub-relation S of
// special congruences. The group laws only need to hold up to R; S is the
// least equivalence containing every law instance, closed under sums.
struct CGroup {
  int n = 0;
  std::vector<std::vector<Elem>> add;  // n x n operation table
  Elem zero = 0;
  std::vector<Elem> neg;  // n-table, a -> -a
  Relation cong;          // R
  Relation special;       // S; empty relation means "compute by closure"

  Elem plus(Elem a, Elem b) const { return add[a][b]; }
  bool inR(Elem a, Elem b) const { return cong.contains(a, b); }
  bool inS(Elem a, Elem b) const { return special.contains(a, b); }
};

struct CGroupMorphism {
  CGroup dom;
  CGroup cod;
  std::vector<Elem> map;  // dom carrier -> cod carrier
};

struct CGroupValidation {
  Report report;
  std::optional<CGroup> sealed;  // present iff report.ok(); special = closure
};

// Checks carrier/table consistency, that cong is a compatible equivalence,
// the group laws up to R, and the supplied special relation (if any) against
// the closure. On success returns the sealed value with special = closure.
CGroupValidation validateCGroup(const CGroup& raw);

// validateCGroup that throws Error on any violation.
CGroup sealCGroup(const CGroup& raw);

// Least equivalence relation containing all law instances
// ((a+b)+c ~ a+(b+c), 0+a ~ a, a+0 ~ a, -a+a ~ 0, a+(-a) ~ 0),
// closed under sums. Monotone fixed point on the finite pair lattice.
Relation specialClosure(const CGroup& g);

Report validateMorphism(const CGroupMorphism& f);

enum class CertStepKind { Axiom, Identity, Symmetry, Transitivity, Sum };
enum class CGroupAxiom { Assoc, LUnit, RUnit, LInv, RInv };

struct CertStep {
  CertStepKind kind = CertStepKind::Identity;
  CGroupAxiom axiom = CGroupAxiom::Assoc;  // meaningful for kind == Axiom
  std::array<Elem, 3> args = {-1, -1, -1};
  int prev1 = -1;
  int prev2 = -1;
  ElemPair yields{-1, -1};
};

// Replayable derivation of one special congruence.
struct SpecialCert {
  std::vector<CertStep> steps;
  ElemPair conclusion{-1, -1};
};

// Witness extraction: a certificate iff (x,y) is in specialClosure(g).
std::optional<SpecialCert> certifySpecial(const CGroup& g, Elem x, Elem y);

// Re-derives every step from the raw tables; independent of the closure.
bool replayCert(const CGroup& g, const SpecialCert& cert);

// Semidirect product B x| A for an action of b on a (validated first):
// (b',a') + (b,a) = (b'+b, a'+b'.a), zero (0,0), -(b,a) = (-b, -b.(-a)),
// R the product relation, S by closure. Pair (bi,ai) has id bi*|A|+ai.
CGroup semidirect(const CGroup& b, const CGroup& a,
                  const std::vector<std::vector<Elem>>& actionTable);

// Sub-c-group on a carrier subset (ids into the parent). Throws Error if the
// subset is not add-closed or has no zero/negatives up to the restricted R.
struct CSubgroup {
  CGroup group;
  std::vector<Elem> embed;  // sub id -> parent id, ascending
};

CSubgroup subCGroup(const CGroup& g, const std::vector<Elem>& subset);

CSubgroup cKernel(const CGroupMorphism& f);  // {a : f(a) ~R 0}
CSubgroup cImage(const CGroupMorphism& f);   // {b : exists a, f(a) ~R b}

struct PredicateResult {
  bool holds = false;
  std::string witness;  // first counterexample when !holds
};

PredicateResult isNormal(const CGroup& g, const std::vector<Elem>& subset);
PredicateResult isPerfect(const CGroup& g, const std::vector<Elem>& subset);
PredicateResult isConnected(const CGroup& g);

}  // namespace catgrp
