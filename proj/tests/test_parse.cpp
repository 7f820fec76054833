#include <doctest.h>

#include <string>

#include "catgrp/instances.hpp"
#include "catgrp/parse.hpp"

using namespace catgrp;

namespace {

std::string z4Block(const std::string& extra = "") {
  return "[cgroup g]\n"
         "elements: 4\n"
         "zero: 0\n"
         "neg: 0 3 2 1\n"
         "add:\n"
         "0 1 2 3\n"
         "1 2 3 0\n"
         "2 3 0 1\n"
         "3 0 1 2\n" +
         extra;
}

}  // namespace

TEST_CASE("a plain cgroup block loads") {
  LoadedFile f = loadFile(z4Block());
  REQUIRE(f.cgroups.size() == 1);
  CHECK(f.ok());
  CHECK(f.cgroups[0].first == "g");
  CHECK(f.cgroups[0].second.n == 4);
  CHECK(f.cgroups[0].second.special == Relation::equality(4));
}

TEST_CASE("comments and blank lines are ignored") {
  LoadedFile f = loadFile("# header comment\n\n" + z4Block("# trailing\n"));
  CHECK(f.ok());
}

TEST_CASE("explicit relations") {
  LoadedFile f = loadFile(z4Block("cong: 0~2 1~3\n"));
  REQUIRE(f.ok());
  CHECK(f.cgroups[0].second.cong ==
        Relation::equivalenceFrom(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("supplied special relations are checked against the closure") {
  SUBCASE("a larger supplied relation warns and is replaced") {
    LoadedFile f = loadFile(z4Block("special: 0~1 1~2 2~3\n"));
    REQUIRE(f.reports.size() == 1);
    // 0~1 is not within R = equality, so this is simply invalid
    CHECK(!f.ok());
  }
  SUBCASE("larger-but-compatible relation is replaced with a warning") {
    LoadedFile f =
        loadFile(z4Block("cong: 0~2 1~3\nspecial: 0~2 1~3\n"));
    REQUIRE(f.ok());
    CHECK(!f.reports[0].warnings.empty());
    CHECK(f.cgroups[0].second.special == Relation::equality(4));
  }
  SUBCASE("a relation missing closure pairs is rejected") {
    CCrossedModule fz2 = builtinInstance("FZ2");
    std::string text = exportCGroup("n", fz2.n);
    // force special: equality although the closure joins the fat zeros
    auto pos = text.find("special: auto");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("special: auto").size(),
                 "special: ");
    LoadedFile f = loadFile(text);
    CHECK(!f.ok());
    bool sawMissing = false;
    for (const auto& v : f.reports[0].violations)
      sawMissing |= v.check == "special-missing-closure";
    CHECK(sawMissing);
  }
}

TEST_CASE("parser rejects malformed input with line numbers") {
  SUBCASE("unknown key") {
    try {
      loadFile(z4Block("color: red\n"));
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 10") == 0);
      CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
    }
  }
  SUBCASE("bad row length") {
    std::string text =
        "[cgroup g]\nelements: 2\nzero: 0\nneg: 0 1\nadd:\n0 1\n1\n";
    CHECK_THROWS_AS((void)loadFile(text), Error);
  }
  SUBCASE("unknown block type") {
    CHECK_THROWS_AS((void)loadFile("[widget w]\n"), Error);
  }
  SUBCASE("missing reference") {
    std::string text = z4Block() +
                       "[action a]\nactor: g\nacted: missing\ntable:\n";
    CHECK_THROWS_AS((void)loadFile(text), Error);
  }
  SUBCASE("duplicate key") {
    CHECK_THROWS_AS((void)loadFile(z4Block("zero: 1\n")), Error);
  }
  SUBCASE("content before a block") {
    CHECK_THROWS_AS((void)loadFile("elements: 2\n"), Error);
  }
}

TEST_CASE("builtin instances round-trip through the file format") {
  for (const std::string& name : builtinInstanceNames()) {
    CCrossedModule xm = builtinInstance(name);
    std::string text = exportInstance(name, xm);
    LoadedFile f = loadFile(text);
    REQUIRE(f.ok());
    REQUIRE(f.xmods.size() == 1);
    const CCrossedModule& back = f.xmods[0].second;
    CHECK(back.m.add == xm.m.add);
    CHECK(back.n.add == xm.n.add);
    CHECK(back.boundary == xm.boundary);
    CHECK(back.action == xm.action);
    CHECK(back.weakSpecial == xm.weakSpecial);
    CHECK(back.n.special == xm.n.special);
    // re-export is byte-identical
    CHECK(exportInstance(name, back) == text);
  }
}

TEST_CASE("weakspecial variants parse") {
  CCrossedModule xm = builtinInstance("XM4");
  std::string text = exportInstance("i", xm);
  SUBCASE("derived") {
    auto pos = text.find("weakspecial: equality");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("weakspecial: equality").size(),
                 "weakspecial: derived");
    LoadedFile f = loadFile(text);
    REQUIRE(f.ok());
    CHECK(f.xmods[0].second.weakSpecial == Relation::equality(2));
  }
  SUBCASE("explicit pairs") {
    auto pos = text.find("weakspecial: equality");
    text.replace(pos, std::string("weakspecial: equality").size(),
                 "weakspecial: 0~1");
    LoadedFile f = loadFile(text);
    // total W on XM4 breaks the boundary-special condition
    CHECK(!f.ok());
  }
}

TEST_CASE("an invalid derived relation is reported, not thrown") {
  // boundary to the trivial group with connected M: the derived reading
  // has two lifts of zero
  std::string text =
      "[cgroup m]\nelements: 2\nzero: 0\nneg: 0 1\nadd:\n0 1\n1 0\n"
      "cong: total\n"
      "[cgroup n]\nelements: 1\nzero: 0\nneg: 0\nadd:\n0\n"
      "[action a]\nactor: n\nacted: m\ntable:\n0 1\n"
      "[xmod x]\nm: m\nn: n\nboundary: 0 0\naction: a\n"
      "weakspecial: derived\n";
  LoadedFile f = loadFile(text);
  CHECK(!f.ok());
  bool sawDerived = false;
  for (const auto& rep : f.reports)
    for (const auto& v : rep.violations)
      sawDerived |= v.check == "weakspecial-derived";
  CHECK(sawDerived);
}

TEST_CASE("xmod action references must act by n on m") {
  std::string text =
      "[cgroup m]\nelements: 2\nzero: 0\nneg: 0 1\nadd:\n0 1\n1 0\n"
      "cong: total\n"
      "[cgroup n]\nelements: 2\nzero: 0\nneg: 0 1\nadd:\n0 1\n1 0\n"
      "[action a]\nactor: m\nacted: m\ntable:\n0 1\n0 1\n"
      "[xmod x]\nm: m\nn: n\nboundary: 0 0\naction: a\n"
      "weakspecial: total\n";
  CHECK_THROWS_AS((void)loadFile(text), Error);
}

TEST_CASE("a table row may sit on the key line") {
  std::string text =
      "[cgroup m]\nelements: 2\nzero: 0\nneg: 0 1\nadd: 0 1\n1 0\n";
  LoadedFile f = loadFile(text);
  REQUIRE(f.ok());
  CHECK(f.cgroups[0].second.add == std::vector<std::vector<Elem>>{{0, 1},
                                                                  {1, 0}});
}
