#pragma once

#include <string>
#include <vector>

#include "catgrp/construct.hpp"
#include "catgrp/crossed.hpp"
#include "catgrp/model.hpp"

namespace catgrp {

// Crossed module of plain groups: relations are ignored (equality).
struct ClassicalCrossedModule {
  CGroup m;
  CGroup n;
  std::vector<Elem> boundary;
  std::vector<std::vector<Elem>> action;
};

// Independent checker for the classical laws: both tables are groups on
// the nose, the boundary is a homomorphism, the action is by automorphisms,
// equivariance and the Peiffer law hold as table equalities. Deliberately
// separate from validateCrossedModule so the two can cross-check.
Report validateClassical(const ClassicalCrossedModule& xm0);

// Strict categorical group of a classical crossed module: objects N,
// arrows N x M with d0(r,c) = r, d1(r,c) = bd(c)+r,
// (r',c') o (r,c) = (r, c'+c), semidirect addition, identity structural
// picks. Arrow (r,c) has id r*|M|+c.
CatGroupModel groupGroupoidFromClassical(const ClassicalCrossedModule& xm0);

// C0 as a c-group: R is "some arrow connects the objects", S by closure.
CGroup objectsCGroup(const CatGroupModel& C);

// C1 as a c-group under addArr: R is "isomorphic in C1" (a commuting
// square of any two arrows exists), S by closure.
CGroup arrowsCGroup(const CatGroupModel& C);

// d0 as a morphism arrowsCGroup -> objectsCGroup.
CGroupMorphism d0Morphism(const CatGroupModel& C);

// The c-group of arrows with source exactly 0: f + f' = (f + f') o gamma
// with gamma the unique special arrow 0 -> 0+0; R is the isomorphism
// relation, negatives are the least elements inverting up to R.
struct StarZeroResult {
  CGroup group;
  std::vector<Elem> arrows;  // star id -> model arrow id, ascending
};

StarZeroResult starZero(const CatGroupModel& C);

// r.c = (i(r) + (c - i(r))) o gamma_r with gamma_r the unique special
// arrow 0 -> r+(0-r). Validated before return.
CAction starAction(const CatGroupModel& C);

// (Star 0, C0, d1|) with W the witness-level relation: a commuting square
// whose object components are special arrows. Validates the result and
// throws Error (with the report) when validation or cssc classification
// fails; a failure here falsifies the construction for this input and is
// never silent.
CCrossedModule starCrossedModule(const CatGroupModel& C);

// The cKer d0 variant of the action, r.c = i(r) + (c - i(r)) on
// {f : d0(f) ~R 0}. Validated before return.
CAction ckerAction(const CatGroupModel& C);

struct IsoReport {
  bool found = false;
  std::vector<Elem> objMap;  // lhs object -> rhs object
  std::vector<Elem> arrMap;  // lhs arrow -> rhs arrow
  int lhsArrows = 0;
  int rhsArrows = 0;
  long expectedArrows = 0;  // |N| * |M|
  std::string str() const;
};

// Model isomorphism search: bijections preserving d0, d1, id, comp,
// addObj, addArr, negObj, negArr and the zero object. Candidates are tried
// in id order after signature filtering, so the result is deterministic.
bool modelsIsomorphic(const CatGroupModel& A, const CatGroupModel& B,
                      std::vector<Elem>* objMap, std::vector<Elem>* arrMap);

// classical -> group-groupoid -> star crossed module -> rebuilt category;
// reports the isomorphism between the two models and the arrow counts.
IsoReport roundTrip(const ClassicalCrossedModule& xm0);

}  // namespace catgrp
