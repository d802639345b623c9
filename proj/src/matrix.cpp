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

#include "milnor/matrix.hpp"

#include "milnor/error.hpp"

namespace milnor {

Matrix<Rational> parse_rational_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> values;
  values.reserve(rows.size());
  for (const auto& r : rows) {
    if (!values.empty() && r.size() != values.front().size())
      throw Error(ErrorCode::kParseError, "matrix rows have different lengths");
    std::vector<Rational> row;
    row.reserve(r.size());
    for (const auto& entry : r) row.push_back(parse_rational(entry));
    values.push_back(std::move(row));
  }
  return Matrix<Rational>::from_rows(values);
}

Matrix<Zp> reduce_mod(const Matrix<Rational>& m, std::uint64_t p) {
  Matrix<Zp> out(m.rows(), m.cols(), Zp(0, p));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = reduce_mod(m(r, c), p);
  return out;
}

}  // namespace milnor
