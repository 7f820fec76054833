#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catgrp/construct.hpp"
#include "catgrp/instances.hpp"
#include "catgrp/parse.hpp"
#include "catgrp/star.hpp"
#include "catgrp/verify.hpp"

namespace {

using namespace catgrp;

struct Output {
  std::string text;
  std::vector<std::pair<std::string, std::string>> summary;
  int exitCode = 0;

  void line(const std::string& s) { text += s + "\n"; }
  void kv(const std::string& k, const std::string& v) {
    summary.emplace_back(k, v);
  }
};

void emit(const Output& out, bool summary) {
  std::fputs(out.text.c_str(), stdout);
  if (summary) {
    std::fputs("[summary]\n", stdout);
    for (const auto& [k, v] : out.summary)
      std::fputs((k + "=" + v + "\n").c_str(), stdout);
  }
}

// The single crossed module an instance file is about.
const CCrossedModule& theXmod(const LoadedFile& file) {
  if (file.xmods.size() != 1)
    throw Error("expected exactly one valid xmod block, found " +
                std::to_string(file.xmods.size()));
  return file.xmods.front().second;
}

Output cmdValidate(const std::string& path) {
  Output out;
  LoadedFile file = loadPath(path);
  for (const Report& r : file.reports) out.text += r.str();
  out.kv("blocks", std::to_string(file.reports.size()));
  out.kv("result", file.ok() ? "pass" : "fail");
  out.exitCode = file.ok() ? 0 : 1;
  return out;
}

Output cmdClassify(const std::string& path) {
  Output out;
  LoadedFile file = loadPath(path);
  if (!file.ok()) {
    for (const Report& r : file.reports)
      if (!r.ok()) out.text += r.str();
    out.kv("result", "fail");
    out.exitCode = 1;
    return out;
  }
  CsscFlags fl = classify(theXmod(file));
  out.text += fl.str();
  out.line(std::string("cssc: ") + (fl.cssc() ? "yes" : "no"));
  out.kv("connected", fl.connected ? "true" : "false");
  out.kv("strict", fl.strict ? "true" : "false");
  out.kv("special", fl.special ? "true" : "false");
  out.kv("result", "pass");
  return out;
}

Output cmdBuild(const std::string& path, const std::string& dumpPath) {
  Output out;
  LoadedFile file = loadPath(path);
  if (!file.ok()) {
    for (const Report& r : file.reports)
      if (!r.ok()) out.text += r.str();
    out.kv("result", "fail");
    out.exitCode = 1;
    return out;
  }
  CatGroupModel md = buildCategoricalGroup(theXmod(file));
  out.line("objects: " + std::to_string(md.numObjects));
  out.line("arrows: " + std::to_string(md.numArrows()));
  int specials = 0;
  for (auto s : md.specialArrow) specials += s;
  out.line("special arrows: " + std::to_string(specials));
  if (!dumpPath.empty()) {
    std::ofstream f(dumpPath);
    if (!f) throw Error("cannot write " + dumpPath);
    f << md.dump();
    out.line("model dumped to " + dumpPath);
  }
  out.kv("objects", std::to_string(md.numObjects));
  out.kv("arrows", std::to_string(md.numArrows()));
  out.kv("result", "pass");
  return out;
}

Output cmdVerify(const std::string& path) {
  Output out;
  LoadedFile file = loadPath(path);
  if (!file.ok()) {
    for (const Report& r : file.reports)
      if (!r.ok()) out.text += r.str();
    out.kv("result", "fail");
    out.exitCode = 1;
    return out;
  }
  CatGroupModel md = buildCategoricalGroup(theXmod(file));
  out.line("objects: " + std::to_string(md.numObjects));
  out.line("arrows: " + std::to_string(md.numArrows()));
  bool all = true;
  for (const Report& r : verifyAll(md)) {
    bool ok = r.ok();
    all &= ok;
    std::string line = r.subject + ": " + (ok ? "PASS" : "FAIL");
    if (!ok)
      line += "(" + r.violations.front().check + " " +
              r.violations.front().witness + ")";
    out.line(line);
    out.kv(r.subject, ok ? "pass" : "fail");
  }
  out.line(std::string("result: ") + (all ? "PASS" : "FAIL"));
  out.kv("result", all ? "pass" : "fail");
  out.exitCode = all ? 0 : 1;
  return out;
}

Output cmdRoundtrip(const std::string& path) {
  Output out;
  LoadedFile file = loadPath(path);
  if (!file.ok()) {
    for (const Report& r : file.reports)
      if (!r.ok()) out.text += r.str();
    out.kv("result", "fail");
    out.exitCode = 1;
    return out;
  }
  IsoReport rep = roundTrip(classicalCore(theXmod(file)));
  out.text += rep.str();
  bool pass = rep.found && rep.lhsArrows == rep.rhsArrows &&
              rep.lhsArrows == rep.expectedArrows;
  out.kv("found", rep.found ? "true" : "false");
  out.kv("arrows", std::to_string(rep.rhsArrows));
  out.kv("result", pass ? "pass" : "fail");
  out.exitCode = pass ? 0 : 1;
  return out;
}

Output cmdSearch(int maxN, int maxM, int trials, std::uint64_t seed) {
  Output out;
  auto found = searchFattened(maxN, maxM, trials, seed);
  out.line("found: " + std::to_string(found.size()));
  for (std::size_t i = 0; i < found.size(); ++i) {
    out.line("");
    out.text += exportInstance("found" + std::to_string(i), found[i]);
  }
  out.kv("found", std::to_string(found.size()));
  out.kv("result", "pass");
  return out;
}

Output cmdInstance(const std::string& name, const std::string& exportPath) {
  Output out;
  CCrossedModule xm = builtinInstance(name);
  std::string text = exportInstance(name, xm);
  if (exportPath.empty()) {
    out.text += text;
  } else {
    std::ofstream f(exportPath);
    if (!f) throw Error("cannot write " + exportPath);
    f << text;
    out.line("instance " + name + " exported to " + exportPath);
  }
  out.kv("instance", name);
  out.kv("result", "pass");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite categorical groups from crossed modules of "
               "groups up to congruence"};
  app.require_subcommand(1);
  app.fallthrough();
  bool summary = false;
  app.add_flag("--summary", summary, "append a key=value summary block");

  std::string file, dumpPath, name, exportPath;
  int maxN = 3, maxM = 2, trials = 1000;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "validate every block");
  validate->add_option("file", file)->required();
  auto* classifyCmd = app.add_subcommand("classify", "cssc flags");
  classifyCmd->add_option("file", file)->required();
  auto* build = app.add_subcommand("build", "construct the category");
  build->add_option("file", file)->required();
  build->add_option("--dump", dumpPath, "write the model tables");
  auto* verify = app.add_subcommand("verify", "build and run all checks");
  verify->add_option("file", file)->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "classical round trip");
  roundtrip->add_option("file", file)->required();
  auto* search = app.add_subcommand("search", "search for non-strict instances");
  search->add_option("--max-n", maxN);
  search->add_option("--max-m", maxM);
  search->add_option("--trials", trials);
  search->add_option("--seed", seed);
  auto* instance = app.add_subcommand("instance", "built-in instances");
  instance->add_option("name", name)->required();
  instance->add_option("--export", exportPath, "write instead of printing");

  CLI11_PARSE(app, argc, argv);

  try {
    Output out;
    if (validate->parsed()) out = cmdValidate(file);
    if (classifyCmd->parsed()) out = cmdClassify(file);
    if (build->parsed()) out = cmdBuild(file, dumpPath);
    if (verify->parsed()) out = cmdVerify(file);
    if (roundtrip->parsed()) out = cmdRoundtrip(file);
    if (search->parsed()) out = cmdSearch(maxN, maxM, trials, seed);
    if (instance->parsed()) out = cmdInstance(name, exportPath);
    emit(out, summary);
    return out.exitCode;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
