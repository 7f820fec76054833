#include "catgrp/model.hpp"

#include <string>

namespace catgrp {

namespace {

void table(std::string& out, const std::vector<std::vector<Elem>>& t) {
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j] < 0 ? "." : std::to_string(row[j]);
    }
    out += '\n';
  }
}

void list(std::string& out, const std::vector<Elem>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  out += '\n';
}

}  // namespace

std::string CatGroupModel::dump() const {
  std::string out;
  out += "objects: " + std::to_string(numObjects) + "\n";
  out += "zero: " + std::to_string(zeroObj) + "\n";
  out += "addobj:\n";
  table(out, addObj);
  out += "negobj: ";
  list(out, negObj);
  out += "arrows: " + std::to_string(numArrows()) + "\n";
  for (int f = 0; f < numArrows(); ++f) {
    out += "  " + std::to_string(f) + ": " + arrName[f];
    if (specialArrow[f]) out += " special";
    out += "\n";
  }
  out += "id: ";
  list(out, idArr);
  out += "comp:\n";
  table(out, comp);
  out += "addarr:\n";
  table(out, addArr);
  out += "negarr: ";
  list(out, negArr);
  out += "special:";
  for (int f = 0; f < numArrows(); ++f)
    if (specialArrow[f]) out += " " + std::to_string(f);
  out += "\n";
  out += "lambda: ";
  list(out, lambda);
  out += "rho: ";
  list(out, rho);
  out += "eps: ";
  list(out, eps);
  out += "delta: ";
  list(out, delta);
  out += "alpha:\n";
  for (int x = 0; x < numObjects; ++x)
    for (int y = 0; y < numObjects; ++y) {
      out += "  " + std::to_string(x) + " " + std::to_string(y) + ":";
      for (int z = 0; z < numObjects; ++z)
        out += " " + std::to_string(alpha[x][y][z]);
      out += "\n";
    }
  return out;
}

}  // namespace catgrp
