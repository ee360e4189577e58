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

#ifndef POLYMEDIAL_FPGROUP_HPP_
#define POLYMEDIAL_FPGROUP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymedial/perm_group.hpp"
#include "polymedial/permutation.hpp"

namespace polymedial::fp {

// Letter g >= 0 is generator g; -1-g is its inverse.
using Letter = int;
using Word = std::vector<Letter>;

constexpr Letter inverse_letter(Letter l) { return -1 - l; }
constexpr int generator_of(Letter l) { return l >= 0 ? l : -1 - l; }
Word inverse(const Word& w);
Word power(const Word& w, std::int64_t k);
Word concat(const Word& u, const Word& v);
Word free_reduce(const Word& w);

// Text form: "gens: a b c; rels: a^2, (a b)^3, [a, c]".
// Words accept juxtaposition ("ab" with one-letter names), powers with
// negative exponents, parentheses, commutators and "u = v" relations.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  static Presentation parse(std::string_view text);
  std::string to_string() const;
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
  // Throws DomainError on empty relators or undeclared generators.
  void validate() const;
  std::size_t generator_index(std::string_view name) const;
};

struct EnumerationLimits {
  std::size_t max_cosets = 10'000'000;
  std::optional<double> time_budget_seconds;
};

enum class EnumerationStatus { kComplete, kOverflowed };

class CosetTable {
 public:
  EnumerationStatus status() const { return status_; }
  bool complete() const { return status_ == EnumerationStatus::kComplete; }
  // Why enumeration stopped when overflowed.
  const std::string& reason() const { return reason_; }
  // Number of cosets; requires a complete table.
  std::size_t index() const;
  std::size_t generator_count() const { return ngens_; }
  const std::vector<Word>& subgroup_generators() const { return subgens_; }
  // Largest number of simultaneously allocated rows during enumeration.
  std::size_t peak_rows() const { return peak_rows_; }

  std::uint32_t image(std::uint32_t coset, Letter l) const;
  std::uint32_t apply(std::uint32_t coset, const Word& w) const;
  perm::Permutation generator_permutation(std::size_t g) const;
  std::vector<perm::Permutation> permutations() const;
  // Relators act trivially on every coset and subgroup generators fix coset 0.
  bool verify(const Presentation& p) const;
  // Header "coset,<g>,<g>^-1,..." then one row per coset.
  std::string to_csv(const Presentation& p) const;

 private:
  friend CosetTable coset_enumeration(const Presentation&, const std::vector<Word>&,
                                      const EnumerationLimits&);
  EnumerationStatus status_ = EnumerationStatus::kOverflowed;
  std::string reason_;
  std::size_t ngens_ = 0;
  std::size_t index_ = 0;
  std::size_t peak_rows_ = 0;
  std::vector<Word> subgens_;
  std::vector<std::uint32_t> rows_;  // index_ x 2*ngens_, column 2g+1 is g^-1
};

// Todd-Coxeter enumeration of the cosets of <subgens> (HLT with lookahead).
CosetTable coset_enumeration(const Presentation& p, const std::vector<Word>& subgens,
                             const EnumerationLimits& limits = {});

// Throws StateError on an incomplete table.
perm::PermutationGroup permutation_representation(const CosetTable& t);
std::uint64_t subgroup_order(const CosetTable& t, std::uint64_t full_order);

}  // namespace polymedial::fp

#endif  // POLYMEDIAL_FPGROUP_HPP_
