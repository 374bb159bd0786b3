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

#include "aoglab/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "aoglab/error.hpp"

namespace aoglab {

Word Word::slice(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

AOParams make_params(int k, int d, int s) {
  if (d < 1) throw InvalidInput("alphabet size d must be >= 1");
  if (k < 2) throw InvalidInput("word length k must be >= 2");
  if (s < 1 || s > k - 1) {
    throw InvalidInput("shift s must satisfy 1 <= s <= k-1");
  }
  return AOParams{k, d, s};
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t guarded_count(int d, int length, std::uint64_t cap) {
  auto n = checked_pow(static_cast<std::uint64_t>(d),
                       static_cast<unsigned>(length));
  if (!n || *n > cap) {
    throw SizeGuardExceeded(std::to_string(d) + "^" + std::to_string(length) +
                            " exceeds the vertex cap of " +
                            std::to_string(cap));
  }
  return *n;
}

std::uint64_t vertex_count(const AOParams& p, std::uint64_t cap) {
  return guarded_count(p.d, p.k, cap);
}

void check_word(const Word& w, std::size_t length, int d) {
  if (w.size() != length) {
    throw InvalidInput("word has length " + std::to_string(w.size()) +
                       ", expected " + std::to_string(length));
  }
  for (Letter l : w.letters()) {
    if (l >= static_cast<Letter>(d)) {
      throw InvalidInput("letter " + std::to_string(l) +
                         " out of range for alphabet size " +
                         std::to_string(d));
    }
  }
}

bool overlap_adjacent(const Word& v, const Word& w, const AOParams& p) {
  check_word(v, p.k, p.d);
  check_word(w, p.k, p.d);
  if (v == w) return false;
  const auto t = static_cast<std::size_t>(p.t());
  const auto s = static_cast<std::size_t>(p.s);
  auto a = v.letters();
  auto b = w.letters();
  return std::equal(a.begin() + s, a.end(), b.begin()) ||
         std::equal(b.begin() + s, b.end(), a.begin(), a.begin() + t);
}

Word rotate_left(const Word& w, std::size_t r) {
  if (w.empty()) return w;
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % out.size()),
              out.end());
  return Word(std::move(out));
}

Word prefix_tag(const Word& w, const AOParams& p) {
  check_word(w, p.k, p.d);
  return w.slice(0, p.t());
}

Word suffix_tag(const Word& w, const AOParams& p) {
  check_word(w, p.k, p.d);
  return w.slice(p.s, p.t());
}

std::uint64_t word_rank(const Word& w, int d) {
  std::uint64_t r = 0;
  for (Letter l : w.letters()) r = r * static_cast<std::uint64_t>(d) + l;
  return r;
}

Word word_from_rank(std::uint64_t rank, int length, int d) {
  std::vector<Letter> out(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    out[i] = static_cast<Letter>(rank % static_cast<std::uint64_t>(d));
    rank /= static_cast<std::uint64_t>(d);
  }
  return Word(std::move(out));
}

std::string render(const Word& w, int d) {
  std::string out;
  if (d <= 26) {
    for (Letter l : w.letters()) out.push_back(static_cast<char>('a' + l));
    return out;
  }
  return render_numeric(w);
}

std::string render_numeric(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      auto field = text.substr(pos, end - pos);
      Letter value = 0;
      auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw InvalidInput("malformed numeric word '" + std::string(text) +
                           "'");
      }
      letters.push_back(value);
      pos = end + 1;
    }
    return Word(std::move(letters));
  }
  const bool digits = std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
  for (char c : text) {
    if (digits) {
      letters.push_back(static_cast<Letter>(c - '0'));
    } else if (c >= 'a' && c <= 'z') {
      letters.push_back(static_cast<Letter>(c - 'a'));
    } else {
      throw InvalidInput("malformed word '" + std::string(text) + "'");
    }
  }
  return Word(std::move(letters));
}

Word parse_word(std::string_view text, std::size_t length, int d) {
  // Over more than 10 letters a bare number is one letter ("27"), which is
  // how render() writes one-letter words for d > 26.
  const bool bare_number =
      !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
  Word w;
  if (d > 10 && bare_number) {
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw InvalidInput("malformed word '" + std::string(text) + "'");
    }
    w = Word{value};
  } else {
    w = parse_word(text);
  }
  check_word(w, length, d);
  return w;
}

WordSequence::iterator::iterator(int length, int d, std::uint64_t remaining)
    : digits_(static_cast<std::size_t>(length), 0),
      current_(digits_),
      d_(d),
      remaining_(remaining) {}

WordSequence::iterator& WordSequence::iterator::operator++() {
  if (--remaining_ == 0) return *this;
  // odometer increment, last letter fastest
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < static_cast<Letter>(d_)) break;
    digits_[i] = 0;
  }
  current_ = Word(digits_);
  return *this;
}

WordSequence enumerate_words(int length, int d, std::uint64_t cap) {
  if (length < 0) throw InvalidInput("word length must be >= 0");
  if (d < 1) throw InvalidInput("alphabet size d must be >= 1");
  return WordSequence(length, d, guarded_count(d, length, cap));
}

}  // namespace aoglab
