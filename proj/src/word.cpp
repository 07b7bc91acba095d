#include "d0l/word.hpp"

#include <ostream>

#include <fmt/format.h>

#include "d0l/errors.hpp"

namespace d0l {

Symbol Word::at(std::size_t i) const {
  if (i < 1 || i > symbols_.size())
    throw IndexOutOfRange(fmt::format("position {} outside 1..{}", i, symbols_.size()));
  return symbols_[i - 1];
}

Word Word::slice(std::size_t i, std::size_t j) const {
  if (i < 1 || i > j || j > symbols_.size() + 1)
    throw IndexOutOfRange(
        fmt::format("slice [{}:{}] invalid for word of length {}", i, j, symbols_.size()));
  return Word(slice_view(i, j));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.str() << '"'; }

std::ostream& operator<<(std::ostream& os, const WordSequence& seq) {
  os << '(';
  bool first = true;
  for (const auto& w : seq) {
    if (!first) os << ", ";
    os << w;
    first = false;
  }
  return os << ')';
}

}  // namespace d0l
