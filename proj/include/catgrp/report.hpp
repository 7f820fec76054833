#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace catgrp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string check;    // stable rule name, e.g. "r-compatibility"
  std::string witness;  // smallest counterexample in element-id order
};

// Validation outcome for one object. Violations are collected, not thrown:
// a report either says "valid" or lists every broken rule with a witness.
struct Report {
  std::string subject;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
  void fail(std::string check, std::string witness = "");
  void merge(const Report& sub, const std::string& prefix);
  std::string str() const;
};

}  // namespace catgrp
