// Copyright 2026 The qps Authors
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

#include "qps/clifford/tableau.hpp"

#include <bit>

namespace qps {

StabilizerTableau::StabilizerTableau(int num_qubits)
    : n_(num_qubits),
      words_((num_qubits + 63) / 64),
      x_(static_cast<std::size_t>(2 * num_qubits + 1) * words_, 0),
      z_(static_cast<std::size_t>(2 * num_qubits + 1) * words_, 0),
      r_(2 * num_qubits + 1, 0) {
  for (int q = 0; q < n_; ++q) {
    x_[q * words_ + q / 64] |= std::uint64_t(1) << (q % 64);
    z_[(n_ + q) * words_ + q / 64] |= std::uint64_t(1) << (q % 64);
  }
}

void StabilizerTableau::h(int q) {
  const int w = q / 64;
  const std::uint64_t m = std::uint64_t(1) << (q % 64);
  for (int i = 0; i < 2 * n_; ++i) {
    std::uint64_t& xw = x_[i * words_ + w];
    std::uint64_t& zw = z_[i * words_ + w];
    const bool xb = xw & m;
    const bool zb = zw & m;
    r_[i] ^= xb && zb;
    if (xb != zb) {
      xw ^= m;
      zw ^= m;
    }
  }
}

void StabilizerTableau::s(int q) {
  const int w = q / 64;
  const std::uint64_t m = std::uint64_t(1) << (q % 64);
  for (int i = 0; i < 2 * n_; ++i) {
    const bool xb = x_[i * words_ + w] & m;
    const bool zb = z_[i * words_ + w] & m;
    r_[i] ^= xb && zb;
    if (xb) z_[i * words_ + w] ^= m;
  }
}

void StabilizerTableau::sdg(int q) {
  s(q);
  s(q);
  s(q);
}

void StabilizerTableau::x(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= zbit(i, q);
}

void StabilizerTableau::z(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= xbit(i, q);
}

void StabilizerTableau::y(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= xbit(i, q) ^ zbit(i, q);
}

void StabilizerTableau::sx(int q) {
  sdg(q);
  h(q);
  sdg(q);
}

void StabilizerTableau::cx(int c, int t) {
  const int wc = c / 64;
  const int wt = t / 64;
  const std::uint64_t mc = std::uint64_t(1) << (c % 64);
  const std::uint64_t mt = std::uint64_t(1) << (t % 64);
  for (int i = 0; i < 2 * n_; ++i) {
    const bool xc = x_[i * words_ + wc] & mc;
    const bool zc = z_[i * words_ + wc] & mc;
    const bool xt = x_[i * words_ + wt] & mt;
    const bool zt = z_[i * words_ + wt] & mt;
    r_[i] ^= xc && zt && !(xt ^ zc);
    if (xc) x_[i * words_ + wt] ^= mt;
    if (zt) z_[i * words_ + wc] ^= mc;
  }
}

void StabilizerTableau::swap(int a, int b) {
  cx(a, b);
  cx(b, a);
  cx(a, b);
}

void StabilizerTableau::rowsum(int h, int i) {
  int sum = 2 * r_[h] + 2 * r_[i];
  const std::uint64_t* x1 = &x_[i * words_];
  const std::uint64_t* z1 = &z_[i * words_];
  std::uint64_t* x2 = &x_[h * words_];
  std::uint64_t* z2 = &z_[h * words_];
  for (int w = 0; w < words_; ++w) {
    const std::uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
    const std::uint64_t plus = (a & b & d & ~c) | (a & ~b & d & c) | (~a & b & c & ~d);
    const std::uint64_t minus = (a & b & c & ~d) | (a & ~b & d & ~c) | (~a & b & c & d);
    sum += std::popcount(plus) - std::popcount(minus);
    x2[w] ^= a;
    z2[w] ^= b;
  }
  r_[h] = ((sum % 4) + 4) % 4 == 2;
}

void StabilizerTableau::clear_row(int row) {
  for (int w = 0; w < words_; ++w) x_[row * words_ + w] = z_[row * words_ + w] = 0;
  r_[row] = 0;
}

void StabilizerTableau::copy_row(int dst, int src) {
  for (int w = 0; w < words_; ++w) {
    x_[dst * words_ + w] = x_[src * words_ + w];
    z_[dst * words_ + w] = z_[src * words_ + w];
  }
  r_[dst] = r_[src];
}

bool StabilizerTableau::is_random(int q) const {
  for (int p = n_; p < 2 * n_; ++p)
    if (xbit(p, q)) return true;
  return false;
}

int StabilizerTableau::measure(int q, std::optional<int> forced, bool* was_random) {
  int p = -1;
  for (int i = n_; i < 2 * n_; ++i) {
    if (xbit(i, q)) {
      p = i;
      break;
    }
  }
  if (was_random) *was_random = p >= 0;
  if (p >= 0) {
    for (int i = 0; i < 2 * n_; ++i) {
      if (i != p && xbit(i, q)) rowsum(i, p);
    }
    copy_row(p - n_, p);
    clear_row(p);
    const int outcome = forced.value_or(0) & 1;
    z_[p * words_ + q / 64] |= std::uint64_t(1) << (q % 64);
    r_[p] = static_cast<std::uint8_t>(outcome);
    return outcome;
  }
  const int scratch = 2 * n_;
  clear_row(scratch);
  for (int i = 0; i < n_; ++i) {
    if (xbit(i, q)) rowsum(scratch, i + n_);
  }
  return r_[scratch];
}

bool StabilizerTableau::anticommute(int a, int b) const {
  int parity = 0;
  for (int w = 0; w < words_; ++w) {
    parity += std::popcount((x_[a * words_ + w] & z_[b * words_ + w]) ^ (z_[a * words_ + w] & x_[b * words_ + w]));
  }
  return parity & 1;
}

bool StabilizerTableau::is_consistent() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (anticommute(n_ + i, n_ + j)) return false;
      if (anticommute(i, n_ + j) != (i == j)) return false;
    }
  }
  return true;
}

}  // namespace qps
