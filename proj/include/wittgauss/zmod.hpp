// Copyright 2026 The wittgauss Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

/// Dense linear algebra over Z/p^e.
namespace wittgauss::zmod {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major

/// Solves A x = b over Z/p^e. Succeeds iff A is invertible mod p; every
/// pivot is then chosen to be a unit.
std::optional<Vec> solve(Mat a, Vec b, std::int64_t p, std::int64_t pe);

/// True iff A is invertible modulo p (equivalently modulo any power of p).
bool invertible(const Mat& a, std::int64_t p);

Mat mul(const Mat& a, const Mat& b, std::int64_t m);
Vec apply(const Mat& a, const Vec& x, std::int64_t m);
Mat identity(std::size_t n);

}  // namespace wittgauss::zmod
