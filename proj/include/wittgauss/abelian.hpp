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
#include <functional>
#include <vector>

/// Cyclic decomposition of a finite abelian group given by a multiplication
/// table on dense element ids 0..N-1.
namespace wittgauss::abelian {

using Mul = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

struct Decomposition {
  /// G = prod_j <generators[j]>, each of prime-power order orders[j].
  std::vector<std::uint32_t> generators;
  std::vector<std::uint32_t> orders;
  /// dlog[x * rank + j] is the exponent of generators[j] in x.
  std::vector<std::uint32_t> dlog;
  std::uint32_t rank() const { return static_cast<std::uint32_t>(generators.size()); }
  std::uint32_t exponent() const;
};

/// Sylow-wise basis construction: repeatedly adjoin an element of maximal
/// order modulo the span so far, corrected to split off a direct factor.
Decomposition decompose(std::uint32_t n, std::uint32_t identity, const Mul& mul);

/// Same, restricted to the p-subgroup listed in `members` (ids into 0..n-1).
/// Generators are appended to `out`; `out.dlog` is not filled.
void decompose_p_group(std::uint32_t n, std::uint32_t identity, const Mul& mul, std::uint32_t p,
                       const std::vector<std::uint32_t>& members, Decomposition& out);

/// Fills `out.dlog` by enumerating all generator products; throws if the
/// generators do not form a basis of the n-element group.
void fill_dlog(std::uint32_t n, std::uint32_t identity, const Mul& mul, Decomposition& out);

}  // namespace wittgauss::abelian
