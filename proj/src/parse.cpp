#include "catgrp/parse.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace catgrp {

namespace {

struct Line {
  int num;
  std::string text;
};

std::vector<Line> splitLines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int num = 0;
  while (std::getline(in, line)) {
    ++num;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    out.push_back({num, line.substr(start)});
  }
  return out;
}

[[noreturn]] void parseError(int line, const std::string& msg) {
  throw Error("line " + std::to_string(line) + ": " + msg);
}

std::vector<Elem> parseIds(const Line& ln, const std::string& payload) {
  std::istringstream in(payload);
  std::vector<Elem> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      parseError(ln.num, "expected an element id, got '" + tok + "'");
    }
  }
  return out;
}

std::vector<ElemPair> parsePairs(const Line& ln, const std::string& payload) {
  std::istringstream in(payload);
  std::vector<ElemPair> out;
  std::string tok;
  while (in >> tok) {
    auto tilde = tok.find('~');
    if (tilde == std::string::npos)
      parseError(ln.num, "expected a~b pair, got '" + tok + "'");
    try {
      out.emplace_back(std::stoi(tok.substr(0, tilde)),
                       std::stoi(tok.substr(tilde + 1)));
    } catch (const std::exception&) {
      parseError(ln.num, "expected a~b pair, got '" + tok + "'");
    }
  }
  return out;
}

struct RawBlock {
  std::string type;
  std::string name;
  int line;
  // key -> (line, payload); table keys keep their row lines
  std::vector<std::pair<std::string, Line>> entries;
};

std::vector<RawBlock> splitBlocks(const std::vector<Line>& lines) {
  std::vector<RawBlock> blocks;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.text.front() == '[') {
      auto close = ln.text.find(']');
      if (close == std::string::npos) parseError(ln.num, "missing ']'");
      std::istringstream hdr(ln.text.substr(1, close - 1));
      RawBlock b;
      b.line = ln.num;
      if (!(hdr >> b.type >> b.name))
        parseError(ln.num, "expected [type name]");
      std::string extra;
      if (hdr >> extra) parseError(ln.num, "unexpected '" + extra + "'");
      if (b.type != "cgroup" && b.type != "action" && b.type != "xmod")
        parseError(ln.num, "unknown block type '" + b.type + "'");
      blocks.push_back(std::move(b));
      continue;
    }
    if (blocks.empty()) parseError(ln.num, "content before any block header");
    auto colon = ln.text.find(':');
    if (colon == std::string::npos) {
      // table row; attach to the pending table key
      const auto& es = blocks.back().entries;
      bool inTable = !es.empty() && (es.back().first == "add" ||
                                     es.back().first == "table" ||
                                     es.back().first.empty());
      if (!inTable) parseError(ln.num, "expected 'key: value'");
      blocks.back().entries.push_back({"", ln});
      continue;
    }
    std::string key = ln.text.substr(0, colon);
    std::string payload = ln.text.substr(colon + 1);
    std::size_t s = payload.find_first_not_of(" \t");
    payload = s == std::string::npos ? "" : payload.substr(s);
    blocks.back().entries.push_back({key, {ln.num, payload}});
  }
  return blocks;
}

// gathers "key: value" with following bare rows for table keys
struct BlockReader {
  const RawBlock& b;
  std::map<std::string, Line> scalars;
  std::map<std::string, std::vector<Line>> tables;

  explicit BlockReader(const RawBlock& blk,
                       const std::vector<std::string>& scalarKeys,
                       const std::vector<std::string>& tableKeys)
      : b(blk) {
    std::string pendingTable;
    for (const auto& [key, ln] : b.entries) {
      if (key.empty()) {
        tables[pendingTable].push_back(ln);
        continue;
      }
      pendingTable.clear();
      bool isScalar = false, isTable = false;
      for (const auto& k : scalarKeys) isScalar |= (k == key);
      for (const auto& k : tableKeys) isTable |= (k == key);
      if (isTable) {
        pendingTable = key;
        auto& rows = tables[key];
        if (!ln.text.empty()) rows.push_back(ln);  // row on the key line
        continue;
      }
      if (!isScalar) parseError(ln.num, "unknown key '" + key + "'");
      if (scalars.count(key)) parseError(ln.num, "duplicate key '" + key + "'");
      scalars.emplace(key, ln);
    }
  }

  const Line& need(const std::string& key) const {
    auto it = scalars.find(key);
    if (it == scalars.end())
      parseError(b.line, "block '" + b.name + "' is missing '" + key + ":'");
    return it->second;
  }
  const Line* maybe(const std::string& key) const {
    auto it = scalars.find(key);
    return it == scalars.end() ? nullptr : &it->second;
  }
};

std::vector<std::vector<Elem>> readTable(const RawBlock& b,
                                         const BlockReader& r,
                                         const std::string& key, int rows,
                                         int cols) {
  auto it = r.tables.find(key);
  if (it == r.tables.end())
    parseError(b.line, "block '" + b.name + "' is missing '" + key + ":'");
  if (static_cast<int>(it->second.size()) != rows)
    parseError(b.line, "'" + key + "' needs " + std::to_string(rows) +
                           " rows, got " + std::to_string(it->second.size()));
  std::vector<std::vector<Elem>> out;
  for (const Line& ln : it->second) {
    auto row = parseIds(ln, ln.text);
    if (static_cast<int>(row.size()) != cols)
      parseError(ln.num, "row needs " + std::to_string(cols) +
                             " entries, got " + std::to_string(row.size()));
    out.push_back(std::move(row));
  }
  return out;
}

Relation readRelation(const Line& ln, int n, bool allowDerived,
                      bool* derived) {
  if (derived) *derived = false;
  if (ln.text == "equality") return Relation::equality(n);
  if (ln.text == "total") return Relation::total(n);
  if (allowDerived && ln.text == "derived") {
    *derived = true;
    return Relation();
  }
  auto ps = parsePairs(ln, ln.text);
  for (const auto& [a, b] : ps)
    if (a < 0 || a >= n || b < 0 || b >= n)
      parseError(ln.num, "pair element out of range");
  return Relation::equivalenceFrom(n, ps);
}

}  // namespace

bool LoadedFile::ok() const {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

LoadedFile loadFile(const std::string& text) {
  LoadedFile out;
  auto blocks = splitBlocks(splitLines(text));

  auto findCGroup = [&](const std::string& name, int line) -> const CGroup& {
    for (const auto& [n, g] : out.cgroups)
      if (n == name) return g;
    parseError(line, "unknown cgroup '" + name + "'");
  };
  auto findAction = [&](const std::string& name, int line) -> const CAction& {
    for (const auto& [n, a] : out.actions)
      if (n == name) return a;
    parseError(line, "unknown action '" + name + "'");
  };

  for (const RawBlock& b : blocks) {
    if (b.type == "cgroup") {
      BlockReader r(b, {"elements", "zero", "neg", "cong", "special"},
                    {"add"});
      const Line& el = r.need("elements");
      auto ids = parseIds(el, el.text);
      if (ids.size() != 1 || ids[0] <= 0)
        parseError(el.num, "'elements:' needs one positive count");
      int n = ids[0];
      CGroup g;
      g.n = n;
      const Line& z = r.need("zero");
      auto zs = parseIds(z, z.text);
      if (zs.size() != 1) parseError(z.num, "'zero:' needs one id");
      g.zero = zs[0];
      const Line& ng = r.need("neg");
      g.neg = parseIds(ng, ng.text);
      g.add = readTable(b, r, "add", n, n);
      g.cong = r.maybe("cong") ? readRelation(*r.maybe("cong"), n, false,
                                              nullptr)
                               : Relation::equality(n);
      if (const Line* sp = r.maybe("special")) {
        if (sp->text != "auto") g.special = readRelation(*sp, n, false,
                                                         nullptr);
      }
      auto v = validateCGroup(g);
      v.report.subject = "cgroup " + b.name;
      out.reports.push_back(v.report);
      if (v.sealed) out.cgroups.emplace_back(b.name, std::move(*v.sealed));
      continue;
    }
    if (b.type == "action") {
      BlockReader r(b, {"actor", "acted"}, {"table"});
      CAction act;
      act.actor = findCGroup(r.need("actor").text, r.need("actor").num);
      act.acted = findCGroup(r.need("acted").text, r.need("acted").num);
      act.table = readTable(b, r, "table", act.actor.n, act.acted.n);
      Report rep = validateAction(act);
      rep.subject = "action " + b.name;
      out.reports.push_back(rep);
      if (rep.ok()) out.actions.emplace_back(b.name, std::move(act));
      continue;
    }
    // xmod
    BlockReader r(b, {"m", "n", "boundary", "action", "weakspecial"}, {});
    CCrossedModule xm;
    xm.m = findCGroup(r.need("m").text, r.need("m").num);
    xm.n = findCGroup(r.need("n").text, r.need("n").num);
    const Line& bd = r.need("boundary");
    xm.boundary = parseIds(bd, bd.text);
    const Line& an = r.need("action");
    const CAction& act = findAction(an.text, an.num);
    if (act.actor.add != xm.n.add || act.actor.cong != xm.n.cong ||
        act.acted.add != xm.m.add || act.acted.cong != xm.m.cong)
      parseError(an.num,
                 "action '" + an.text + "' does not act by n on m");
    xm.action = act.table;
    bool derived = false;
    if (const Line* ws = r.maybe("weakspecial")) {
      xm.weakSpecial = readRelation(*ws, xm.m.n, true, &derived);
    } else {
      derived = true;
    }
    Report rep;
    rep.subject = "xmod " + b.name;
    if (derived) {
      if (auto w = derivedWeakSpecial(xm)) {
        xm.weakSpecial = *w;
      } else {
        rep.fail("weakspecial-derived",
                 "no consistent derived relation; supply one explicitly");
        out.reports.push_back(rep);
        continue;
      }
    }
    Report vr = validateCrossedModule(xm);
    rep.violations = vr.violations;
    rep.warnings = vr.warnings;
    out.reports.push_back(rep);
    if (rep.ok()) out.xmods.emplace_back(b.name, std::move(xm));
  }
  return out;
}

LoadedFile loadPath(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return loadFile(buf.str());
}

namespace {

std::string relationText(const Relation& rel) {
  int n = rel.size();
  if (rel == Relation::equality(n)) return "equality";
  if (rel == Relation::total(n)) return "total";
  std::string out;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (rel.contains(a, b)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(a) + "~" + std::to_string(b);
      }
  return out.empty() ? "equality" : out;
}

void idsLine(std::string& out, const std::vector<Elem>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  out += '\n';
}

}  // namespace

std::string exportCGroup(const std::string& name, const CGroup& g) {
  std::string out = "[cgroup " + name + "]\n";
  out += "elements: " + std::to_string(g.n) + "\n";
  out += "zero: " + std::to_string(g.zero) + "\n";
  out += "neg: ";
  idsLine(out, g.neg);
  out += "add:\n";
  for (const auto& row : g.add) idsLine(out, row);
  out += "cong: " + relationText(g.cong) + "\n";
  out += "special: auto\n";
  return out;
}

std::string exportInstance(const std::string& name,
                           const CCrossedModule& xm) {
  std::string out = exportCGroup(name + ".M", xm.m);
  out += "\n" + exportCGroup(name + ".N", xm.n);
  out += "\n[action " + name + ".act]\n";
  out += "actor: " + name + ".N\n";
  out += "acted: " + name + ".M\n";
  out += "table:\n";
  for (const auto& row : xm.action) idsLine(out, row);
  out += "\n[xmod " + name + "]\n";
  out += "m: " + name + ".M\n";
  out += "n: " + name + ".N\n";
  out += "boundary: ";
  idsLine(out, xm.boundary);
  out += "action: " + name + ".act\n";
  out += "weakspecial: " + relationText(xm.weakSpecial) + "\n";
  return out;
}

}  // namespace catgrp
