// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small helpers shared by the test binaries.

#ifndef MILNOR_TESTS_SUPPORT_HELPERS_HPP_
#define MILNOR_TESTS_SUPPORT_HELPERS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "milnor/error.hpp"
#include "milnor/exact.hpp"
#include "milnor/matrix.hpp"

namespace testing_support {

// Code of the milnor::Error thrown by f, or nullopt if f returns normally.
template <class F>
std::optional<milnor::ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const milnor::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline milnor::Matrix<milnor::Rational> rational_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<milnor::Rational>> q;
  for (const auto& r : rows) {
    q.emplace_back();
    for (long v : r) q.back().emplace_back(v);
  }
  return milnor::Matrix<milnor::Rational>::from_rows(q);
}

inline std::string data_path(const std::string& name) {
#ifdef MILNOR_DATA_DIR
  return std::string(MILNOR_DATA_DIR) + "/" + name;
#else
  return "data/" + name;
#endif
}

}  // namespace testing_support

#endif  // MILNOR_TESTS_SUPPORT_HELPERS_HPP_
