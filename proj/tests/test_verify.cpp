#include <doctest.h>

#include "catgrp/construct.hpp"
#include "catgrp/instances.hpp"
#include "catgrp/star.hpp"
#include "catgrp/verify.hpp"

using namespace catgrp;

namespace {

bool allPass(const CatGroupModel& m) {
  for (const Report& r : verifyAll(m))
    if (!r.ok()) return false;
  return true;
}

bool failsCheck(const Report& rep, const std::string& check) {
  for (const auto& v : rep.violations)
    if (v.check == check) return true;
  return false;
}

}  // namespace

TEST_CASE("the built categories verify completely") {
  for (const char* name : {"TRIV", "XM4", "S3A3", "FZ2"})
    CHECK(allPass(buildCategoricalGroup(builtinInstance(name))));
}

TEST_CASE("strict group groupoids verify completely") {
  for (const char* name : {"XM4", "S3A3", "Z2V4", "Q8Z2"})
    CHECK(allPass(
        groupGroupoidFromClassical(classicalCore(builtinInstance(name)))));
}

TEST_CASE("a discrete group is a valid model") {
  // trivial M over Z4: four objects, only identity arrows
  ClassicalCrossedModule cc;
  cc.m = cyclicGroup(1);
  cc.n = cyclicGroup(4);
  cc.boundary = {0};
  cc.action.assign(4, {0});
  CatGroupModel m = groupGroupoidFromClassical(cc);
  CHECK(m.numArrows() == 4);
  CHECK(allPass(m));
}

namespace {

// one object with two parallel loops: Z2 over the trivial group
CatGroupModel twoLoopModel() {
  ClassicalCrossedModule cc;
  cc.m = cyclicGroup(2);
  cc.n = cyclicGroup(1);
  cc.boundary = {0, 0};
  cc.action = {{0, 1}};
  return groupGroupoidFromClassical(cc);
}

}  // namespace

TEST_CASE("verifyCategory flags a corrupted composition entry") {
  CatGroupModel m = twoLoopModel();
  REQUIRE(allPass(m));
  m.comp[1][0] = 0;  // claims loop after id is the id
  Report rep = verifyCategory(m);
  CHECK(!rep.ok());
  CHECK(failsCheck(rep, "identity-law"));
}

TEST_CASE("verifyGroupoid flags a missing inverse") {
  CatGroupModel m = twoLoopModel();
  // every composite against the loop now yields the loop, so nothing
  // can invert it
  m.comp[1][1] = 1;
  m.comp[0][1] = 1;
  Report rep = verifyGroupoid(m);
  CHECK(!rep.ok());
  CHECK(failsCheck(rep, "inverse"));
}

TEST_CASE("verifyMonoidal flags a first-projection sum") {
  CatGroupModel m = buildCategoricalGroup(builtinInstance("XM4"));
  for (int f = 0; f < m.numArrows(); ++f)
    for (int g = 0; g < m.numArrows(); ++g) m.addArr[f][g] = f;
  CHECK(!verifyMonoidal(m).ok());
}

TEST_CASE("verifyMonoidal flags a sum redirected between parallel loops") {
  CatGroupModel m = twoLoopModel();
  m.addArr[0][1] = 0;  // id + loop must stay the loop
  Report rep = verifyMonoidal(m);
  CHECK(!rep.ok());
}

TEST_CASE("verifyCategoricalGroup flags an identity negation map") {
  CatGroupModel m = buildCategoricalGroup(builtinInstance("XM4"));
  for (int f = 0; f < m.numArrows(); ++f) m.negArr[f] = f;
  Report rep = verifyCategoricalGroup(m);
  CHECK(!rep.ok());
  CHECK(failsCheck(rep, "negarr-endpoints"));
}

TEST_CASE("verifyCoherence flags duplicated special arrows") {
  CatGroupModel m = buildCategoricalGroup(builtinInstance("FZ2"));
  // redirect a special arrow onto an already-occupied object pair
  int f = -1;
  for (int a = 0; a < m.numArrows(); ++a)
    if (m.specialArrow[a] && m.d0[a] != m.d1[a]) f = a;
  REQUIRE(f >= 0);
  m.d1[f] = m.d0[f];
  Report rep = verifyCoherence(m);
  CHECK(!rep.ok());
  CHECK(failsCheck(rep, "unique-special"));
}

TEST_CASE("coherence success implies the pentagon and triangle") {
  for (const char* name : {"TRIV", "XM4", "S3A3", "FZ2"}) {
    CatGroupModel m = buildCategoricalGroup(builtinInstance(name));
    Report coh = verifyCoherence(m);
    Report mon = verifyMonoidal(m);
    REQUIRE(coh.ok());
    CHECK(!failsCheck(mon, "pentagon"));
    CHECK(!failsCheck(mon, "triangle"));
  }
}

TEST_CASE("uniqueSpecialArrow") {
  CatGroupModel m = buildCategoricalGroup(builtinInstance("FZ2"));
  CHECK(uniqueSpecialArrow(m, 0, 1) >= 0);
  CHECK(uniqueSpecialArrow(m, 0, 2) == -1);
  CHECK(uniqueSpecialArrow(m, 2, 2) == m.idArr[2]);
}
