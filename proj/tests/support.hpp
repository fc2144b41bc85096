#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mincplx/complex.hpp"

namespace testing_support {

inline mincplx::KComplex explicit_complex(int n, int k, std::vector<std::vector<int>> faces) {
  std::vector<mincplx::Face> out;
  for (auto& f : faces) out.push_back(mincplx::Face::from_unsorted(std::move(f)));
  return mincplx::KComplex(n, k, std::move(out));
}

inline std::string data_path(const std::string& name) { return std::string(MINCPLX_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
