#pragma once

#include <vector>

#include "catgrp/model.hpp"
#include "catgrp/report.hpp"

namespace catgrp {

// Identity arrows, endpoint consistency of comp, associativity.
Report verifyCategory(const CatGroupModel& m);

// Every arrow has a two-sided inverse.
Report verifyGroupoid(const CatGroupModel& m);

// addArr is a bifunctor (endpoints, identity sums, interchange); the
// designated alpha/lambda/rho are natural; pentagon and triangle commute.
Report verifyMonoidal(const CatGroupModel& m);

// eps/delta endpoints and naturality, the two zig-zag diagrams, and
// arrow-level inverses: f + (-f) equals the zero arrow after transport
// along the designated special arrows.
Report verifyCategoricalGroup(const CatGroupModel& m);

// Relation-level coherence: at most one special arrow per ordered object
// pair; special arrows contain the identities and structural picks and are
// closed under composition, sums and inverses. This finite statement makes
// every diagram of special arrows commute.
Report verifyCoherence(const CatGroupModel& m);

// For f with d1(f) special-connected to 0 and g with d0(g)
// special-connected to 0: f+g and g+f are connected by special arrows at
// both endpoints and equal after transport.
Report checkKerComm(const CatGroupModel& m);

// The six reports above, in CLI order:
// category, groupoid, monoidal, catgroup, coherence, kercomm.
std::vector<Report> verifyAll(const CatGroupModel& m);

// Per-arrow two-sided composition inverses, -1 when missing.
std::vector<Elem> groupoidInverses(const CatGroupModel& m);

// Id of the unique special arrow x -> y; -1 if none, -2 if several.
Elem uniqueSpecialArrow(const CatGroupModel& m, Elem x, Elem y);

}  // namespace catgrp
