#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rpolylog/polyengine.hpp"

namespace rpolylog {

#ifndef RPOLYLOG_DATA_DIR
#define RPOLYLOG_DATA_DIR "data"
#endif

inline std::string shipped_data_dir() {
  if (const char* env = std::getenv("RPOLYLOG_DATA_DIR")) return env;
  return RPOLYLOG_DATA_DIR;
}

// Constant terms P_k(0) recovered by the fitting pipeline at campaign scale
// ([1602, 2000] even grid) and revalidated against desk-scale fits; lines of
// "k num/den". See data/pk0_constants.txt.
inline std::vector<BigRational> shipped_constants_all(const std::string& path = "") {
  std::string file = path.empty() ? shipped_data_dir() + "/pk0_constants.txt" : path;
  std::ifstream in(file);
  if (!in) throw IOError("shipped constants: cannot open " + file);
  std::vector<BigRational> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    unsigned long k = 0;
    std::string value;
    if (!(ls >> k >> value)) throw IOError("shipped constants: malformed line: " + line);
    if (k != out.size()) throw IOError("shipped constants: indices must be consecutive from 0");
    out.emplace_back(value);
  }
  if (out.empty()) throw IOError("shipped constants: empty table in " + file);
  return out;
}

inline std::vector<BigRational> shipped_constants(unsigned k_max, const std::string& path = "") {
  auto all = shipped_constants_all(path);
  if (k_max >= all.size())
    throw DomainError("shipped constants: table covers k <= " +
                      std::to_string(all.size() - 1) + ", requested " + std::to_string(k_max) +
                      "; run the fit pipeline to extend it");
  all.resize(k_max + 1);
  return all;
}

inline unsigned shipped_constants_max_k(const std::string& path = "") {
  return static_cast<unsigned>(shipped_constants_all(path).size() - 1);
}

}  // namespace rpolylog
