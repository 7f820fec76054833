#include "catgrp/report.hpp"

namespace catgrp {

void Report::fail(std::string check, std::string witness) {
  violations.push_back({std::move(check), std::move(witness)});
}

void Report::merge(const Report& sub, const std::string& prefix) {
  for (const auto& v : sub.violations)
    violations.push_back({prefix + v.check, v.witness});
  for (const auto& w : sub.warnings) warnings.push_back(prefix + w);
}

std::string Report::str() const {
  std::string out = subject;
  if (ok()) {
    out += ": valid";
  } else {
    out += ": invalid";
    for (const auto& v : violations) {
      out += "\n  violation " + v.check;
      if (!v.witness.empty()) out += " [" + v.witness + "]";
    }
  }
  for (const auto& w : warnings) out += "\n  warning " + w;
  out += "\n";
  return out;
}

}  // namespace catgrp
