#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catgrp/crossed.hpp"
#include "catgrp/star.hpp"

namespace catgrp {

// Plain group tables (equality congruence, special by closure).
CGroup cyclicGroup(int k);
CGroup kleinGroup();
CGroup symmetricGroup3();
CGroup quaternionGroup();

// Built-in instances, validated at load:
//   TRIV  everything trivial
//   XM4   Z2 -> Z4 doubling, trivial action, R_M total, W equality
//   S3A3  A3 into S3 with conjugation, R_M total, W equality
//   FZ2   three-element base over Z2 with a duplicated zero, W total;
//         shipped as data and re-validated; repaired via searchFattened if
//         the shipped tables ever fail
//   Z2V4  Z2 inside the Klein group by conjugation (not connected)
//   Q8Z2  center of Q8 by conjugation (not connected)
// Throws Error for unknown names.
CCrossedModule builtinInstance(const std::string& name);
std::vector<std::string> builtinInstanceNames();

// Underlying tables with the relations dropped, for the round trip.
ClassicalCrossedModule classicalCore(const CCrossedModule& xm);

// Redundant-carrier model of a non-strict c-group: each base element gets
// dupes[e] copies, the operation picks a seeded-random member of the
// correct fiber, R is the fiber relation, S by closure. Deterministic per
// seed; dupes all 1 reproduces the base tables exactly.
CGroup fattenGroup(const CGroup& base, const std::vector<int>& dupes,
                   std::uint64_t seed);

// Randomized search for non-strict cssc instances: samples fattened cyclic
// groups as N, takes M to be the zero fiber with the conjugation action
// (equivariance and Peiffer then hold on the nose), and tries W candidates
// {derived, equality, total}. Keeps instances that validate, classify cssc
// and have S_N different from equality. Deterministic per seed; the result
// list is deduplicated and canonically sorted.
std::vector<CCrossedModule> searchFattened(int maxN, int maxM, int trials,
                                           std::uint64_t seed);

}  // namespace catgrp
