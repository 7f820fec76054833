#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catgrp/crossed.hpp"
#include "catgrp/report.hpp"

namespace catgrp {

// Line-based instance files. Blocks:
//
//   [cgroup NAME]
//   elements: n
//   zero: id
//   neg: id*n
//   add:            (followed by n rows of n ids)
//   cong: equality | total | pairs like 0~1 (closed to an equivalence)
//   special: auto | explicit pairs
//
//   [action NAME]
//   actor: CGROUP
//   acted: CGROUP
//   table:          (|actor| rows of |acted| ids)
//
//   [xmod NAME]
//   m: CGROUP
//   n: CGROUP
//   boundary: id*|M|
//   action: ACTION
//   weakspecial: equality | total | derived | explicit pairs
//
// '#' starts a comment. Unknown keys are rejected with the line number.
struct LoadedFile {
  std::vector<std::pair<std::string, CGroup>> cgroups;  // sealed, file order
  std::vector<std::pair<std::string, CAction>> actions;
  std::vector<std::pair<std::string, CCrossedModule>> xmods;
  std::vector<Report> reports;  // one per block, file order

  bool ok() const;
};

// Parses and validates; syntax and reference errors throw Error with a
// line number, law violations land in the per-block reports.
LoadedFile loadFile(const std::string& text);
LoadedFile loadPath(const std::string& path);

std::string exportCGroup(const std::string& name, const CGroup& g);
// Emits NAME.M / NAME.N / NAME.act blocks plus the xmod block.
std::string exportInstance(const std::string& name, const CCrossedModule& xm);

}  // namespace catgrp
