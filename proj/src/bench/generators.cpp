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

#include "qps/bench/generators.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "qps/error.hpp"

namespace qps {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilies{{
    {Family::CnxDirty, "cnxdirty"},
    {Family::Bv, "bv"},
    {Family::Ghz, "ghz"},
    {Family::Qaoa, "qaoa"},
    {Family::Adder, "adder"},
    {Family::Cnx, "cnx"},
    {Family::Pea, "pea"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

Circuit bv(const BenchmarkSpec& s) {
  const int n = s.qubits - 1;
  require(n >= 1, "bv needs at least 2 qubits");
  const std::string secret = s.secret.empty() ? std::string(n, '1') : s.secret;
  require(static_cast<int>(secret.size()) == n, "bv secret length must be qubits - 1");
  Circuit c(n + 1, n);
  c.x(n);
  for (int q = 0; q <= n; ++q) c.h(q);
  for (int k = 0; k < n; ++k) {
    require(secret[k] == '0' || secret[k] == '1', "bv secret must be binary");
    if (secret[k] == '1') c.cx(n - 1 - k, n);
  }
  for (int q = 0; q < n; ++q) c.h(q);
  for (int q = 0; q < n; ++q) c.measure(q, q);
  return c;
}

Circuit ghz(const BenchmarkSpec& s) {
  require(s.qubits >= 1, "ghz needs at least 1 qubit");
  Circuit c(s.qubits, s.qubits);
  c.h(0);
  for (int q = 0; q + 1 < s.qubits; ++q) c.cx(q, q + 1);
  return c.measure_all();
}

Circuit qaoa(const BenchmarkSpec& s) {
  const int n = s.qubits;
  require(n >= 2, "qaoa needs at least 2 qubits");
  require(s.layers >= 1, "qaoa needs at least one layer");
  std::vector<Edge> graph = s.graph;
  if (graph.empty()) {
    for (int q = 0; q < n; ++q) {
      if (n > 2 || q == 0) graph.push_back(edge_key(q, (q + 1) % n));
    }
  }
  Circuit c(n, n);
  for (int q = 0; q < n; ++q) c.h(q);
  for (int layer = 0; layer < s.layers; ++layer) {
    for (auto [i, j] : graph) {
      c.cx(i, j);
      c.rz(j, 2 * s.gamma);
      c.cx(i, j);
    }
    for (int q = 0; q < n; ++q) c.h(q).rz(q, 2 * s.beta).h(q);
  }
  return c.measure_all();
}

Circuit adder(const BenchmarkSpec& s) {
  require(s.qubits >= 4 && s.qubits % 2 == 0, "adder needs an even qubit count of at least 4");
  const int bits = (s.qubits - 2) / 2;
  const long long a = s.a < 0 ? (1LL << bits) - 1 : s.a;
  const long long b = s.b < 0 ? 1 : s.b;
  require(a < (1LL << bits) && b < (1LL << bits), "adder operand does not fit");
  const int cin = 0;
  auto qa = [](int i) { return 1 + i; };
  auto qb = [bits](int i) { return 1 + bits + i; };
  const int cout = 2 * bits + 1;
  Circuit c(s.qubits, bits + 1);
  for (int i = 0; i < bits; ++i) {
    if ((a >> i) & 1) c.x(qa(i));
    if ((b >> i) & 1) c.x(qb(i));
  }
  auto maj = [&](int x, int y, int z) { c.cx(z, y).cx(z, x).ccx(x, y, z); };
  auto uma = [&](int x, int y, int z) { c.ccx(x, y, z).cx(z, x).cx(x, y); };
  maj(cin, qb(0), qa(0));
  for (int i = 1; i < bits; ++i) maj(qa(i - 1), qb(i), qa(i));
  c.cx(qa(bits - 1), cout);
  for (int i = bits - 1; i >= 1; --i) uma(qa(i - 1), qb(i), qa(i));
  uma(cin, qb(0), qa(0));
  for (int i = 0; i < bits; ++i) c.measure(qb(i), i);
  c.measure(cout, bits);
  return c;
}

int control_count(const BenchmarkSpec& s) {
  require(s.qubits >= 3 && s.qubits % 2 == 1, "cnx needs an odd qubit count of at least 3");
  return (s.qubits + 1) / 2;
}

Circuit cnx(const BenchmarkSpec& s) {
  const int m = control_count(s);
  const int target = s.qubits - 1;
  auto anc = [m](int i) { return m + i; };
  Circuit c(s.qubits, s.qubits);
  for (int i = 0; i < m; ++i) c.x(i);
  if (m == 2) {
    c.ccx(0, 1, target);
    return c.measure_all();
  }
  c.ccx(0, 1, anc(0));
  for (int i = 2; i < m - 1; ++i) c.ccx(i, anc(i - 2), anc(i - 1));
  c.ccx(m - 1, anc(m - 3), target);
  for (int i = m - 2; i >= 2; --i) c.ccx(i, anc(i - 2), anc(i - 1));
  c.ccx(0, 1, anc(0));
  return c.measure_all();
}

Circuit cnx_dirty(const BenchmarkSpec& s) {
  const int m = control_count(s);
  const int target = s.qubits - 1;
  auto anc = [m](int i) { return m + i; };
  Circuit c(s.qubits, s.qubits);
  for (int i = 0; i < m; ++i) c.x(i);
  for (int i = 0; i < m - 2; i += 2) c.x(anc(i));
  if (m == 2) {
    c.ccx(0, 1, target);
    return c.measure_all();
  }
  auto down = [&] {
    for (int i = m - 2; i >= 2; --i) c.ccx(i, anc(i - 2), anc(i - 1));
  };
  auto up = [&] {
    for (int i = 2; i <= m - 2; ++i) c.ccx(i, anc(i - 2), anc(i - 1));
  };
  for (int rep = 0; rep < 2; ++rep) {
    c.ccx(m - 1, anc(m - 3), target);
    down();
    c.ccx(0, 1, anc(0));
    up();
  }
  return c.measure_all();
}

// Controlled phase diag(1, 1, 1, e^{i theta}) up to global phase.
void cphase(Circuit& c, int ctrl, int tgt, double theta) {
  c.rz(ctrl, theta / 2).cx(ctrl, tgt).rz(tgt, -theta / 2).cx(ctrl, tgt).rz(tgt, theta / 2);
}

Circuit pea(const BenchmarkSpec& s) {
  const int m = s.qubits - 1;
  require(m >= 1, "pea needs at least 2 qubits");
  const double phi = 2 * kPi * s.phase;
  const int target = m;
  Circuit c(s.qubits, m);
  c.x(target);
  for (int k = 0; k < m; ++k) c.h(k);
  for (int k = 0; k < m; ++k) cphase(c, k, target, std::ldexp(phi, k));
  for (int k = m - 1; k >= 0; --k) {
    for (int j = m - 1; j > k; --j) cphase(c, j, k, -kPi / std::ldexp(1.0, j - k));
    c.h(k);
  }
  for (int k = 0; k < m; ++k) c.measure(k, m - 1 - k);
  return c;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilies)
    if (fam == f) return name;
  return "";
}

std::string BenchmarkSpec::name() const { return std::string(family_name(family)) + std::to_string(qubits); }

std::optional<BenchmarkSpec> parse_benchmark_name(std::string_view name) {
  for (const auto& [fam, prefix] : kFamilies) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    const std::string_view digits = name.substr(prefix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    BenchmarkSpec spec;
    spec.family = fam;
    spec.qubits = n;
    return spec;
  }
  return std::nullopt;
}

Circuit gen_benchmark(const BenchmarkSpec& spec) {
  switch (spec.family) {
    case Family::Bv: return bv(spec);
    case Family::Ghz: return ghz(spec);
    case Family::Qaoa: return qaoa(spec);
    case Family::Adder: return adder(spec);
    case Family::Cnx: return cnx(spec);
    case Family::CnxDirty: return cnx_dirty(spec);
    case Family::Pea: return pea(spec);
  }
  throw ValidationError("unknown benchmark family");
}

}  // namespace qps
