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

#include "wittgauss/zmod.hpp"

#include <utility>

#include "wittgauss/common.hpp"

namespace wittgauss::zmod {

std::optional<Vec> solve(Mat a, Vec b, std::int64_t p, std::int64_t pe) {
  const std::size_t n = a.size();
  for (auto& row : a)
    for (auto& v : row) v = mod_floor(v, pe);
  for (auto& v : b) v = mod_floor(v, pe);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (a[r][c] % p != 0) { piv = r; break; }
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    const std::int64_t inv = inv_mod(a[c][c], pe);
    for (auto& v : a[c]) v = static_cast<std::int64_t>(static_cast<__int128>(v) * inv % pe);
    b[c] = static_cast<std::int64_t>(static_cast<__int128>(b[c]) * inv % pe);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t j = 0; j < n; ++j)
        a[r][j] = mod_floor(a[r][j] - static_cast<std::int64_t>(static_cast<__int128>(f) * a[c][j] % pe), pe);
      b[r] = mod_floor(b[r] - static_cast<std::int64_t>(static_cast<__int128>(f) * b[c] % pe), pe);
    }
  }
  return b;
}

bool invertible(const Mat& a, std::int64_t p) {
  return solve(a, Vec(a.size(), 0), p, p).has_value();
}

Mat mul(const Mat& a, const Mat& b, std::int64_t m) {
  const std::size_t n = a.size(), k = b.size(), l = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(l, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < l; ++j) r[i][j] = (r[i][j] + a[i][t] * b[t][j]) % m;
    }
  for (auto& row : r)
    for (auto& v : row) v = mod_floor(v, m);
  return r;
}

Vec apply(const Mat& a, const Vec& x, std::int64_t m) {
  Vec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) r[i] = (r[i] + a[i][j] * x[j]) % m;
    r[i] = mod_floor(r[i], m);
  }
  return r;
}

Mat identity(std::size_t n) {
  Mat r(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

}  // namespace wittgauss::zmod
