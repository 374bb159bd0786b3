// Copyright 2026 The aoglab Authors
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

// Words over a finite alphabet and the overlap relation that defines the
// alphabet overlap graph G(k, d, s).
//
// Letters are 0-based indices. A word of length k over d letters has a
// lexicographic rank in [0, d^k); most algorithms in this library work on
// ranks and only materialize Word values at their boundaries.

#ifndef AOGLAB_WORDS_HPP_
#define AOGLAB_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aoglab {

using Letter = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxVertices = std::uint64_t{1} << 20;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  // Lexicographic on letter indices.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  Word slice(std::size_t pos, std::size_t len) const;
  Word concat(const Word& other) const;

 private:
  std::vector<Letter> letters_;
};

// The triple (k, d, s). Tag length t = k - s.
struct AOParams {
  int k = 0;
  int d = 0;
  int s = 0;

  int t() const { return k - s; }

  friend bool operator==(const AOParams&, const AOParams&) = default;
};

// Validates 1 <= s <= k-1 and d >= 1.
AOParams make_params(int k, int d, int s);

// d^k, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

// d^length, throwing SizeGuardExceeded when it exceeds `cap`.
std::uint64_t guarded_count(int d, int length, std::uint64_t cap);

// Number of vertices d^k of G(p). Throws SizeGuardExceeded above `cap`.
std::uint64_t vertex_count(const AOParams& p,
                           std::uint64_t cap = kDefaultMaxVertices);

// Throws InvalidInput unless w has `length` letters, each < d.
void check_word(const Word& w, std::size_t length, int d);

bool overlap_adjacent(const Word& v, const Word& w, const AOParams& p);

Word rotate_left(const Word& w, std::size_t r);

Word prefix_tag(const Word& w, const AOParams& p);
Word suffix_tag(const Word& w, const AOParams& p);

std::uint64_t word_rank(const Word& w, int d);
Word word_from_rank(std::uint64_t rank, int length, int d);

// Canonical text form: 'a' + letter when d <= 26, otherwise decimal letters
// joined by commas.
std::string render(const Word& w, int d);
// Decimal letters joined by commas, regardless of alphabet size.
std::string render_numeric(const Word& w);

// Accepts "aab", "001" (one digit per letter) and "0,0,1".
Word parse_word(std::string_view text);
// As above, then checks length and letter range. When d > 10 a bare
// number such as "27" is read as a single letter.
Word parse_word(std::string_view text, std::size_t length, int d);

// All words of a given length in strict lexicographic order.
class WordSequence {
 public:
  class iterator {
   public:
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Word& operator*() const { return current_; }
    const Word* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.remaining_ == b.remaining_;
    }

   private:
    friend class WordSequence;
    iterator(int length, int d, std::uint64_t remaining);

    std::vector<Letter> digits_;
    Word current_;
    int d_ = 0;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const { return iterator(length_, d_, count_); }
  iterator end() const { return iterator(); }
  std::uint64_t size() const { return count_; }

 private:
  friend WordSequence enumerate_words(int, int, std::uint64_t);
  WordSequence(int length, int d, std::uint64_t count)
      : length_(length), d_(d), count_(count) {}

  int length_;
  int d_;
  std::uint64_t count_;
};

WordSequence enumerate_words(int length, int d,
                             std::uint64_t cap = kDefaultMaxVertices);

}  // namespace aoglab

#endif  // AOGLAB_WORDS_HPP_
