// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mfpc/instance.hpp"

namespace mfpc::test {

inline std::string data_file(const std::string& name) {
  return std::string(MFPC_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open test data file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline Instance load_instance(const std::string& name) {
  return parse_instance(slurp(data_file(name)));
}

inline Instance figure1() { return load_instance("figure1.txt"); }

// A single arc s -> t with the given capacity.
inline Instance single_arc(std::int64_t capacity = 5) {
  Instance inst;
  inst.node_count = 2;
  inst.source = 0;
  inst.sink = 1;
  inst.arcs.push_back({0, 1, capacity});
  return inst;
}

// Two arc-disjoint s-t paths whose arcs are pairwise in conflict, so any
// feasible solution routes along exactly one of them.
inline Instance two_conflicting_paths(std::int64_t cap_first = 4,
                                      std::int64_t cap_second = 7) {
  Instance inst;
  inst.node_count = 4;
  inst.source = 0;
  inst.sink = 3;
  inst.arcs = {{0, 1, cap_first},
               {1, 3, cap_first},
               {0, 2, cap_second},
               {2, 3, cap_second}};
  inst.conflicts = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return inst;
}

}  // namespace mfpc::test
