// Copyright 2026 The polymedial Authors
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

#include "polymedial/catalog.hpp"

#include <charconv>

#include "polymedial/error.hpp"

namespace polymedial::catalog {
namespace {

fp::Word product_power(std::initializer_list<int> letters, std::int64_t k) {
  return fp::power(fp::Word(letters), k);
}

fp::Presentation string_group(const std::vector<int>& schlafli) {
  for (int p : schlafli) {
    if (p < 2) throw DomainError("Schlafli entries must be at least 2");
  }
  const int n = static_cast<int>(schlafli.size()) + 1;
  fp::Presentation pres;
  for (int i = 0; i < n; ++i) pres.generators.push_back("r" + std::to_string(i));
  for (int i = 0; i < n; ++i) pres.relators.push_back({i, i});
  for (int i = 0; i + 1 < n; ++i) pres.relators.push_back(product_power({i, i + 1}, schlafli[i]));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) pres.relators.push_back(product_power({i, j}, 2));
  }
  return pres;
}

void check(ToroidalParams p) {
  if (p.s < 0 || p.t < 0) throw DomainError("toroidal parameters must be nonnegative");
  if (p.v() <= 1) throw DomainError("toroidal parameters need s^2+st+t^2 > 1");
  if (!p.regular_form()) {
    throw DomainError("chiral toroidal parameters " + p.to_string() + " are unsupported");
  }
}

// Rename generator i to map[i].
fp::Word relabel(const fp::Word& w, std::initializer_list<int> map) {
  std::vector<int> m(map);
  fp::Word out;
  for (fp::Letter l : w) {
    int g = m.at(fp::generator_of(l));
    out.push_back(l >= 0 ? g : fp::inverse_letter(g));
  }
  return out;
}

ToroidalParams normalized(ToroidalParams p) {
  if (p.s == 0 && p.t > 0) std::swap(p.s, p.t);
  return p;
}

}  // namespace

std::string ToroidalParams::to_string() const {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

ToroidalParams ToroidalParams::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw DomainError("toroidal parameters look like 's,t'");
  auto number = [](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("bad integer '" + std::string(s) + "'");
    }
    return v;
  };
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

fp::Presentation coxeter_string(int p1, int p2) { return string_group({p1, p2}); }

fp::Presentation coxeter_string(int p1, int p2, int p3) { return string_group({p1, p2, p3}); }

fp::Word toroidal_relator(ToroidalParams p) {
  p = normalized(p);
  check(p);
  if (p.t == 0) return product_power({0, 1, 2}, 2 * p.s);
  return product_power({0, 1, 2, 1, 2}, 2 * p.s);
}

fp::Presentation toroidal_map(ToroidalParams p) {
  auto pres = coxeter_string(3, 6);
  pres.relators.push_back(toroidal_relator(p));
  return pres;
}

fp::Presentation universal_locally_toroidal(ToroidalParams s, ToroidalParams t) {
  auto pres = coxeter_string(3, 6, 3);
  pres.relators.push_back(toroidal_relator(s));
  pres.relators.push_back(relabel(toroidal_relator(t), {3, 2, 1}));
  return pres;
}

fp::Presentation simplex_toroidal_1296() {
  auto pres = coxeter_string(3, 3, 6);
  pres.relators.push_back(relabel(toroidal_relator({3, 0}), {1, 2, 3}));
  return pres;
}

fp::Presentation eleven_cell() {
  auto pres = coxeter_string(3, 5, 3);
  pres.relators.push_back(product_power({0, 1, 2}, 5));
  pres.relators.push_back(product_power({1, 2, 3}, 5));
  return pres;
}

std::vector<fp::Word> parabolic(std::initializer_list<int> gens) {
  std::vector<fp::Word> out;
  for (int g : gens) out.push_back({g});
  return out;
}

}  // namespace polymedial::catalog
