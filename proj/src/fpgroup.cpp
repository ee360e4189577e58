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

#include "polymedial/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

#include "polymedial/error.hpp"
#include "polymedial/kernels.hpp"

namespace polymedial::fp {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

Word power(const Word& w, std::int64_t k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits at top-level occurrences of `sep`.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

class WordParser {
 public:
  WordParser(const std::vector<std::string>& names, std::string_view text)
      : names_(names), s_(text) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '=') {
      ++pos_;
      Word rhs = sequence();
      w = concat(w, inverse(rhs));
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("malformed word '" + std::string(s_) + "' at " + std::to_string(pos_) +
                      ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() &&
           (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*' ||
            s_[pos_] == '.')) {
      ++pos_;
    }
  }
  bool at_term_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '[' || c == '1' || is_name_start(c);
  }

  Word sequence() {
    Word w;
    while (at_term_start()) {
      Word t = term();
      w.insert(w.end(), t.begin(), t.end());
    }
    return w;
  }

  Word term() {
    Word a = atom();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      std::int64_t k = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        k = k * 10 + (s_[pos_] - '0');
        if (k > 1'000'000) fail("exponent too large");
        ++pos_;
      }
      if (start == pos_) fail("missing exponent");
      a = power(a, neg ? -k : k);
      skip();
    }
    return a;
  }

  Word atom() {
    skip();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = sequence();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = sequence();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ','");
      ++pos_;
      Word v = sequence();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return concat(concat(inverse(u), inverse(v)), concat(u, v));
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    // Longest generator name matching here.
    std::size_t best = 0;
    int which = -1;
    for (std::size_t g = 0; g < names_.size(); ++g) {
      const auto& n = names_[g];
      if (n.size() > best && s_.substr(pos_, n.size()) == n) {
        best = n.size();
        which = static_cast<int>(g);
      }
    }
    if (which < 0) fail("unknown generator");
    pos_ += best;
    return {which};
  }

  const std::vector<std::string>& names_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::vector<std::string_view> rel_texts;
  for (auto section : split_top(text, ';')) {
    section = trim(section);
    if (section.empty()) continue;
    auto colon = section.find(':');
    if (colon == std::string_view::npos) throw DomainError("presentation section lacks ':'");
    auto key = trim(section.substr(0, colon));
    auto body = trim(section.substr(colon + 1));
    if (key == "gens" || key == "generators") {
      std::string cur;
      auto flush = [&] {
        if (cur.empty()) return;
        if (!is_name_start(cur[0])) throw DomainError("bad generator name '" + cur + "'");
        if (std::find(p.generators.begin(), p.generators.end(), cur) != p.generators.end()) {
          throw DomainError("duplicate generator '" + cur + "'");
        }
        p.generators.push_back(cur);
        cur.clear();
      };
      for (char c : body) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
          flush();
        } else if (is_name_char(c)) {
          cur.push_back(c);
        } else {
          throw DomainError(std::string("bad character in generator list: ") + c);
        }
      }
      flush();
      have_gens = true;
    } else if (key == "rels" || key == "relators" || key == "relations") {
      for (auto r : split_top(body, ',')) {
        r = trim(r);
        if (!r.empty()) rel_texts.push_back(r);
      }
    } else {
      throw DomainError("unknown presentation section '" + std::string(key) + "'");
    }
  }
  if (!have_gens || p.generators.empty()) throw DomainError("presentation has no generators");
  for (auto r : rel_texts) p.relators.push_back(p.parse_word(r));
  p.validate();
  return p;
}

Word Presentation::parse_word(std::string_view text) const {
  return WordParser(generators, text).parse();
}

namespace {

std::string format_flat(const std::vector<std::string>& names, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += names.at(generator_of(w[i]));
    std::int64_t k = static_cast<std::int64_t>(j - i) * (w[i] < 0 ? -1 : 1);
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

}  // namespace

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  for (Letter l : w) {
    if (generator_of(l) >= static_cast<int>(generators.size())) {
      throw DomainError("letter outside the presentation");
    }
  }
  // Write a proper power of a longer word as (u)^k.
  const std::size_t n = w.size();
  for (std::size_t period = 2; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = w[i] == w[i - period];
    if (!periodic) continue;
    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period));
    bool constant = std::all_of(u.begin(), u.end(), [&](Letter l) { return l == u[0]; });
    if (constant) break;
    return "(" + format_flat(generators, u) + ")^" + std::to_string(n / period);
  }
  return format_flat(generators, w);
}

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (const auto& g : generators) out += " " + g;
  out += "; rels: ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(relators[i]);
  }
  return out;
}

void Presentation::validate() const {
  if (generators.empty()) throw DomainError("presentation has no generators");
  for (const auto& r : relators) {
    if (r.empty()) throw DomainError("empty relator");
    for (Letter l : r) {
      if (generator_of(l) >= static_cast<int>(generators.size())) {
        throw DomainError("relator uses an undeclared generator");
      }
    }
  }
}

std::size_t Presentation::generator_index(std::string_view name) const {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g] == name) return g;
  }
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Overflow {
  std::string reason;
};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens,
             const EnumerationLimits& limits)
      : ngens_(p.generators.size()), cap_(limits.max_cosets), limits_(limits) {
    // Involutions share one column for g and g^-1.
    std::vector<bool> involution(ngens_, false);
    for (const auto& r : p.relators) {
      Word red = free_reduce(r);
      if (red.size() == 2 && red[0] == red[1]) involution[generator_of(red[0])] = true;
    }
    for (std::size_t g = 0; g < ngens_; ++g) {
      col_[2 * g] = ncols_;
      if (involution[g]) {
        col_[2 * g + 1] = ncols_;
        inv_.push_back(ncols_);
        ++ncols_;
      } else {
        col_[2 * g + 1] = ncols_ + 1;
        inv_.push_back(ncols_ + 1);
        inv_.push_back(ncols_);
        ncols_ += 2;
      }
    }
    std::size_t total = 0;
    for (const auto& r : p.relators) {
      Word c = to_cols(r);
      total += c.size();
      rels_.push_back(std::move(c));
    }
    for (const auto& w : subgens) subs_.push_back(to_cols(w));
    reserve_ = total + static_cast<std::size_t>(ncols_);
    start_ = std::chrono::steady_clock::now();
  }

  void run() {
    new_coset();
    for (const auto& w : subs_) scan_and_fill(0, w);
    std::size_t since_lookahead = SIZE_MAX / 2;
    for (std::size_t alpha = 0; alpha < used_; ++alpha) {
      if ((alpha & 255) == 0) check_time();
      if (!live(alpha)) continue;
      if (cap_ - used_ < reserve_ && since_lookahead >= std::max<std::size_t>(reserve_, cap_ / 64)) {
        lookahead();
        alpha = compact(alpha);
        since_lookahead = 0;
        if (alpha >= used_) break;
      }
      std::size_t before = used_;
      for (const auto& r : rels_) {
        scan_and_fill(static_cast<std::int32_t>(alpha), r);
        if (!live(alpha)) break;
      }
      if (live(alpha)) {
        for (int x = 0; x < ncols_; ++x) {
          if (at(alpha, x) < 0) define(static_cast<std::int32_t>(alpha), x);
        }
      }
      since_lookahead += used_ - before;
    }
  }

  void export_to(std::vector<std::uint32_t>& rows, std::size_t& index) {
    // Standardize: breadth-first numbering from coset 0 in column order.
    std::vector<std::int32_t> order;
    std::vector<std::int32_t> number(used_, -1);
    order.push_back(0);
    number[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (std::size_t g = 0; g < ngens_; ++g) {
        for (int e = 0; e < 2; ++e) {
          std::int32_t d = rep(at(order[head], col_[2 * g + e]));
          if (number[d] < 0) {
            number[d] = static_cast<std::int32_t>(order.size());
            order.push_back(d);
          }
        }
      }
    }
    index = order.size();
    rows.assign(index * 2 * ngens_, 0);
    for (std::size_t i = 0; i < index; ++i) {
      for (std::size_t c = 0; c < 2 * ngens_; ++c) {
        rows[i * 2 * ngens_ + c] = static_cast<std::uint32_t>(number[rep(at(order[i], col_[c]))]);
      }
    }
  }

  std::size_t peak() const { return used_; }

 private:
  Word to_cols(const Word& w) const {
    Word out;
    for (Letter l : w) {
      int g = generator_of(l);
      if (g >= static_cast<int>(ngens_)) throw DomainError("word uses an undeclared generator");
      out.push_back(col_[2 * g + (l < 0 ? 1 : 0)]);
    }
    return out;
  }

  std::int32_t& at(std::size_t c, int x) { return table_[c * ncols_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::int32_t n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void check_time() const {
    if (!limits_.time_budget_seconds) return;
    std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
    if (spent.count() > *limits_.time_budget_seconds) throw Overflow{"time budget exhausted"};
  }

  std::int32_t new_coset() {
    if (used_ >= cap_) {
      throw Overflow{"coset limit " + std::to_string(cap_) + " reached"};
    }
    auto c = static_cast<std::int32_t>(used_++);
    table_.resize(used_ * ncols_, -1);
    parent_.push_back(c);
    return c;
  }

  void define(std::int32_t f, int x) {
    std::int32_t c = new_coset();
    at(f, x) = c;
    at(c, inv_[x]) = f;
  }

  // Scans w at alpha, defining cosets when fill is set; records deductions
  // and processes coincidences.
  void scan(std::int32_t alpha, const Word& w, bool fill) {
    std::int32_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv_[w[j]]) >= 0) b = at(b, inv_[w[j--]]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv_[w[i]]) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }
  void scan_and_fill(std::int32_t alpha, const Word& w) { scan(alpha, w, true); }

  void merge(std::int32_t k, std::int32_t l) {
    std::int32_t a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      std::int32_t g = queue_[q];
      for (int x = 0; x < ncols_; ++x) {
        std::int32_t d = at(g, x);
        if (d < 0) continue;
        int xi = inv_[x];
        if (at(d, xi) == g) at(d, xi) = -1;
        std::int32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x));
        } else if (at(nu, xi) >= 0) {
          merge(mu, at(nu, xi));
        } else {
          at(mu, x) = nu;
          at(nu, xi) = mu;
        }
      }
    }
    queue_.clear();
  }

  void lookahead() {
    for (std::size_t beta = 0; beta < used_; ++beta) {
      for (const auto& r : rels_) {
        if (!live(beta)) break;
        scan(static_cast<std::int32_t>(beta), r, false);
      }
    }
  }

  // Renumbers live cosets in order; returns the new number of `alpha`'s
  // first live successor-or-self.
  std::size_t compact(std::size_t alpha) {
    std::vector<std::int32_t> number(used_, -1);
    std::size_t n = 0;
    std::size_t new_alpha = SIZE_MAX;
    for (std::size_t c = 0; c < used_; ++c) {
      if (c == alpha) new_alpha = n;
      if (live(c)) number[c] = static_cast<std::int32_t>(n++);
    }
    std::vector<std::int32_t> table(n * ncols_, -1);
    for (std::size_t c = 0; c < used_; ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        std::int32_t d = at(c, x);
        if (d >= 0) table[number[c] * ncols_ + x] = number[rep(d)];
      }
    }
    table_ = std::move(table);
    parent_.resize(n);
    for (std::size_t c = 0; c < n; ++c) parent_[c] = static_cast<std::int32_t>(c);
    used_ = n;
    return new_alpha;
  }

  std::size_t ngens_;
  std::size_t cap_;
  EnumerationLimits limits_;
  int col_[64] = {};
  std::vector<int> inv_;
  int ncols_ = 0;
  std::vector<Word> rels_, subs_;
  std::size_t reserve_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::size_t used_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

CosetTable coset_enumeration(const Presentation& p, const std::vector<Word>& subgens,
                             const EnumerationLimits& limits) {
  p.validate();
  if (limits.max_cosets < 1) throw DomainError("max_cosets must be at least 1");
  if (p.generators.size() > 32) throw DomainError("at most 32 generators supported");
  CosetTable t;
  t.ngens_ = p.generators.size();
  t.subgens_ = subgens;
  Enumerator e(p, subgens, limits);
  try {
    e.run();
  } catch (const Overflow& o) {
    t.status_ = EnumerationStatus::kOverflowed;
    t.reason_ = o.reason;
    t.peak_rows_ = limits.max_cosets;
    return t;
  }
  t.peak_rows_ = e.peak();
  e.export_to(t.rows_, t.index_);
  t.status_ = EnumerationStatus::kComplete;
  if (!t.verify(p)) throw InconsistencyError("coset table fails its relators");
  return t;
}

std::size_t CosetTable::index() const {
  if (!complete()) throw StateError("coset table is incomplete");
  return index_;
}

std::uint32_t CosetTable::image(std::uint32_t coset, Letter l) const {
  if (!complete()) throw StateError("coset table is incomplete");
  int g = generator_of(l);
  if (coset >= index_ || g >= static_cast<int>(ngens_)) throw DomainError("index out of range");
  return rows_[coset * 2 * ngens_ + 2 * g + (l < 0 ? 1 : 0)];
}

std::uint32_t CosetTable::apply(std::uint32_t coset, const Word& w) const {
  for (Letter l : w) coset = image(coset, l);
  return coset;
}

perm::Permutation CosetTable::generator_permutation(std::size_t g) const {
  if (!complete()) throw StateError("coset table is incomplete");
  if (g >= ngens_) throw DomainError("generator out of range");
  std::vector<perm::Point> img(index_);
  for (std::size_t c = 0; c < index_; ++c) img[c] = rows_[c * 2 * ngens_ + 2 * g];
  return perm::Permutation(std::move(img));
}

std::vector<perm::Permutation> CosetTable::permutations() const {
  std::vector<perm::Permutation> out;
  for (std::size_t g = 0; g < ngens_; ++g) out.push_back(generator_permutation(g));
  return out;
}

bool CosetTable::verify(const Presentation& p) const {
  if (!complete()) return false;
  if (p.generators.size() != ngens_) return false;
  auto gens = permutations();
  for (const auto& w : subgens_) {
    if (apply(0, w) != 0) return false;
  }
  // Inverse columns must agree with the generator permutations.
  for (std::size_t g = 0; g < ngens_; ++g) {
    for (std::size_t c = 0; c < index_; ++c) {
      if (rows_[rows_[c * 2 * ngens_ + 2 * g] * 2 * ngens_ + 2 * g + 1] != c) return false;
    }
  }
  return kernels::relators_trivial(gens, p.relators);
}

std::string CosetTable::to_csv(const Presentation& p) const {
  if (!complete()) throw StateError("coset table is incomplete");
  std::ostringstream out;
  out << "coset";
  for (std::size_t g = 0; g < ngens_; ++g) {
    out << ',' << p.generators.at(g) << ',' << p.generators.at(g) << "^-1";
  }
  out << '\n';
  for (std::size_t c = 0; c < index_; ++c) {
    out << c;
    for (std::size_t k = 0; k < 2 * ngens_; ++k) out << ',' << rows_[c * 2 * ngens_ + k];
    out << '\n';
  }
  return out.str();
}

perm::PermutationGroup permutation_representation(const CosetTable& t) {
  if (!t.complete()) throw StateError("coset table is incomplete");
  return perm::PermutationGroup(t.index(), t.permutations());
}

std::uint64_t subgroup_order(const CosetTable& t, std::uint64_t full_order) {
  std::uint64_t idx = t.index();
  if (full_order % idx != 0) {
    throw InconsistencyError("index " + std::to_string(idx) + " does not divide " +
                             std::to_string(full_order));
  }
  return full_order / idx;
}

}  // namespace polymedial::fp
