#include <doctest.h>

#include "catgrp/crossed.hpp"
#include "catgrp/instances.hpp"
#include "catgrp/star.hpp"

using namespace catgrp;

namespace {

bool hasViolation(const Report& rep, const std::string& check) {
  for (const auto& v : rep.violations)
    if (v.check == check) return true;
  return false;
}

// boundary onto the trivial group with a connected two-element M; the
// derived weak-special reading has two lifts of zero here
CCrossedModule kernelZ2Instance() {
  CGroup m = cyclicGroup(2);
  m.cong = Relation::total(2);
  m.special = Relation();
  CCrossedModule xm;
  xm.m = sealCGroup(m);
  xm.n = cyclicGroup(1);
  xm.boundary = {0, 0};
  xm.action = {{0, 1}};
  xm.weakSpecial = Relation::equality(2);
  return xm;
}

}  // namespace

TEST_CASE("validateAction") {
  SUBCASE("trivial actions are valid") {
    CGroup z4 = cyclicGroup(4), z2 = cyclicGroup(2);
    CAction act{z4, z2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}};
    CHECK(validateAction(act).ok());
  }
  SUBCASE("a unit-law breaking table is reported") {
    CGroup z2 = cyclicGroup(2);
    CAction act{z2, z2, {{1, 0}, {0, 1}}};  // 0.a != a
    Report rep = validateAction(act);
    CHECK(!rep.ok());
    CHECK(hasViolation(rep, "act-zero"));
  }
}

TEST_CASE("validateCrossedModule accepts the cssc builtins") {
  for (const char* name : {"TRIV", "XM4", "S3A3", "FZ2"}) {
    CCrossedModule xm = builtinInstance(name);
    Report rep = validateCrossedModule(xm);
    CHECK(rep.ok());
    CHECK(classify(xm).cssc());
  }
}

TEST_CASE("XM4 with a total weak-special relation is rejected") {
  CCrossedModule xm = builtinInstance("XM4");
  xm.weakSpecial = Relation::total(2);
  Report rep = validateCrossedModule(xm);
  CHECK(!rep.ok());
  CHECK(hasViolation(rep, "w3"));
}

TEST_CASE("lift uniqueness fails when a kernel collapses into one class") {
  CCrossedModule xm = kernelZ2Instance();
  REQUIRE(validateCrossedModule(xm).ok());
  xm.weakSpecial = Relation::total(2);
  Report rep = validateCrossedModule(xm);
  CHECK(hasViolation(rep, "special-lift"));
}

TEST_CASE("classify") {
  SUBCASE("XM4 is cssc") {
    CsscFlags fl = classify(builtinInstance("XM4"));
    CHECK(fl.connected);
    CHECK(fl.strict);
    CHECK(fl.special);
  }
  SUBCASE("a discrete M is not connected") {
    CCrossedModule xm = builtinInstance("XM4");
    CGroup m = cyclicGroup(2);
    xm.m = m;
    CsscFlags fl = classify(xm);
    CHECK(!fl.connected);
    CHECK(fl.connectedWitness == "(0,1)");
  }
  SUBCASE("conjugation instances are strict and special but not connected") {
    CsscFlags fl = classify(builtinInstance("Z2V4"));
    CHECK(!fl.connected);
    CHECK(fl.strict);
    CHECK(fl.special);
  }
}

TEST_CASE("liftAlongSpecial") {
  CCrossedModule xm4 = builtinInstance("XM4");
  CHECK(liftAlongSpecial(xm4, 0, 0) == 0);
  CHECK(liftAlongSpecial(xm4, 1, 2) == 1);
  CHECK_THROWS_AS((void)liftAlongSpecial(xm4, 1, 0), Error);

  CCrossedModule fz2 = builtinInstance("FZ2");
  CHECK(liftAlongSpecial(fz2, 0, 1) == 1);
  CHECK(liftAlongSpecial(fz2, 1, 0) == 0);
}

TEST_CASE("unique lifts exhaustively on every builtin") {
  for (const char* name : {"TRIV", "XM4", "S3A3", "FZ2", "Z2V4", "Q8Z2"}) {
    CCrossedModule xm = builtinInstance(name);
    for (Elem c = 0; c < xm.m.n; ++c)
      for (Elem r = 0; r < xm.n.n; ++r) {
        if (!xm.n.inS(xm.bd(c), r)) continue;
        int lifts = 0;
        for (Elem c1 = 0; c1 < xm.m.n; ++c1)
          if (xm.weakSpecial.contains(c, c1) && xm.bd(c1) == r) ++lifts;
        CHECK(lifts == 1);
        CHECK(xm.weakSpecial.contains(c, liftAlongSpecial(xm, c, r)));
      }
  }
}

TEST_CASE("boundary of zero is special without being assumed") {
  for (const char* name : {"TRIV", "XM4", "S3A3", "FZ2", "Z2V4", "Q8Z2"}) {
    CCrossedModule xm = builtinInstance(name);
    Relation s = specialClosure(xm.n);
    CHECK(s.contains(xm.bd(xm.m.zero), xm.n.zero));
  }
}

TEST_CASE("conjugationCrossedModule") {
  SUBCASE("A3 inside S3 reproduces the builtin conjugation tables") {
    CCrossedModule built = conjugationCrossedModule(symmetricGroup3(),
                                                    {0, 1, 2});
    CCrossedModule ref = builtinInstance("S3A3");
    CHECK(built.boundary == ref.boundary);
    CHECK(built.action == ref.action);
  }
  SUBCASE("the zero subgroup gives the trivial instance") {
    CCrossedModule xm = conjugationCrossedModule(kleinGroup(), {0});
    CHECK(xm.m.n == 1);
    CHECK(validateCrossedModule(xm).ok());
  }
  SUBCASE("the center of Q8 is accepted") {
    CCrossedModule xm = conjugationCrossedModule(quaternionGroup(), {0, 1});
    CHECK(validateCrossedModule(xm).ok());
    CHECK(classify(xm).strict);
  }
  SUBCASE("non-normal subgroups are rejected") {
    CHECK_THROWS_AS((void)conjugationCrossedModule(symmetricGroup3(), {0, 3}),
                    Error);
  }
}

TEST_CASE("derivedWeakSpecial") {
  SUBCASE("XM4 derives equality") {
    CCrossedModule xm = builtinInstance("XM4");
    auto w = derivedWeakSpecial(xm);
    REQUIRE(w.has_value());
    CHECK(*w == Relation::equality(2));
  }
  SUBCASE("FZ2 derives the total relation") {
    CCrossedModule xm = builtinInstance("FZ2");
    auto w = derivedWeakSpecial(xm);
    REQUIRE(w.has_value());
    CHECK(*w == Relation::total(2));
  }
  SUBCASE("a collapsed kernel has no consistent derived relation") {
    CCrossedModule xm = kernelZ2Instance();
    // derived reading: everything related, two lifts of 0 over bd(0)
    CHECK(!derivedWeakSpecial(xm).has_value());
  }
}

TEST_CASE("relation-level and classical validation agree on strict inputs") {
  auto toRelationLevel = [](const ClassicalCrossedModule& cc) {
    CCrossedModule xm;
    xm.m = sealCGroup(cc.m);
    xm.n = sealCGroup(cc.n);
    xm.boundary = cc.boundary;
    xm.action = cc.action;
    xm.weakSpecial = Relation::equality(cc.m.n);
    return xm;
  };
  SUBCASE("valid classical modules pass both") {
    for (const char* name : {"XM4", "S3A3", "Z2V4", "Q8Z2"}) {
      ClassicalCrossedModule cc = classicalCore(builtinInstance(name));
      CHECK(validateClassical(cc).ok());
      CHECK(validateCrossedModule(toRelationLevel(cc)).ok());
    }
  }
  SUBCASE("a Peiffer violation fails both") {
    // identity boundary on S3 with the trivial action; conjugation is not
    // trivial, so the Peiffer law breaks
    ClassicalCrossedModule cc;
    cc.m = symmetricGroup3();
    cc.n = symmetricGroup3();
    cc.boundary = {0, 1, 2, 3, 4, 5};
    cc.action.assign(6, {0, 1, 2, 3, 4, 5});
    Report classical = validateClassical(cc);
    CHECK(!classical.ok());
    CHECK(hasViolation(classical, "peiffer"));
    Report relational = validateCrossedModule(toRelationLevel(cc));
    CHECK(!relational.ok());
    CHECK(hasViolation(relational, "cm2"));
  }
}
