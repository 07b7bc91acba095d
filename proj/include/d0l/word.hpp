#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace d0l {

using Symbol = char;

/// A finite string over the alphabet. Positions are 1-based: at(1) is the
/// first symbol and slice(i, j) covers positions i..j-1.
class Word {
 public:
  Word() = default;
  Word(std::string_view symbols) : symbols_(symbols) {}
  Word(const char* symbols) : symbols_(symbols) {}
  Word(std::string symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// 1-based; throws IndexOutOfRange outside 1..size().
  Symbol at(std::size_t i) const;

  /// Substring from i inclusive to j exclusive, requiring 1 <= i <= j <= size()+1.
  Word slice(std::size_t i, std::size_t j) const;

  /// Unchecked view of slice(i, j).
  std::string_view slice_view(std::size_t i, std::size_t j) const noexcept {
    return std::string_view(symbols_).substr(i - 1, j - i);
  }

  const std::string& str() const noexcept { return symbols_; }
  std::string_view view() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  Word& operator+=(const Word& other) {
    symbols_ += other.symbols_;
    return *this;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string symbols_;
};

inline Word slice(const Word& s, std::size_t i, std::size_t j) { return s.slice(i, j); }

std::ostream& operator<<(std::ostream& os, const Word& w);

/// The input trace (w_0, ..., w_m). Indexing is 0-based like the subscripts.
class WordSequence {
 public:
  WordSequence() = default;
  explicit WordSequence(std::vector<Word> words) : words_(std::move(words)) {}
  WordSequence(std::initializer_list<Word> words) : words_(words) {}

  /// m, the number of derivation steps (size() - 1); 0 when empty.
  std::size_t steps() const noexcept { return words_.empty() ? 0 : words_.size() - 1; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  const Word& operator[](std::size_t i) const { return words_[i]; }
  const Word& at(std::size_t i) const { return words_.at(i); }
  const Word& back() const { return words_.back(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  void push_back(Word w) { words_.push_back(std::move(w)); }

  friend bool operator==(const WordSequence&, const WordSequence&) = default;

 private:
  std::vector<Word> words_;
};

std::ostream& operator<<(std::ostream& os, const WordSequence& seq);

}  // namespace d0l
