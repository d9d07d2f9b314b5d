// Copyright 2026 The qaoacost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QAOACOST_TESTS_FIXTURES_H
#define QAOACOST_TESTS_FIXTURES_H

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qaoacost/graphs.h"

namespace qaoacost::fixtures {

// The published 8-vertex, 12-edge instance with its 3x3 schedule (p = 4).
inline Graph reference_graph() {
    return Graph(8, {{7, 6}, {7, 3}, {5, 3}, {6, 2}, {6, 1}, {5, 2},
                     {7, 4}, {3, 0}, {1, 0}, {4, 1}, {5, 4}, {2, 0}});
}

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string reference_pdpt() { return read_file(std::string(QAOACOST_TEST_DATA) + "/reference_8q.pdpt"); }

}  // namespace qaoacost::fixtures

#endif  // QAOACOST_TESTS_FIXTURES_H
