#pragma once

#include <string>
#include <string_view>

#include "d0l/lsystem.hpp"
#include "d0l/word.hpp"

namespace d0l {

// Sequence file: one word per line, w_0 first. Every character is a symbol
// and an empty line is the empty word. A single trailing newline is
// optional, so "a\n" and "a" both hold the one word "a", while "a\n\n"
// holds "a" followed by the empty word. Carriage returns before a newline
// are dropped.
WordSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const WordSequence& seq);

// System file:
//   axiom: <word>
//   <symbol> -> <word>
// one production per line, exactly one space on each side of "->". A
// production with an empty successor is written "<symbol> -> ". Throws
// ParseError carrying the 1-based line number.
D0LSystem parse_system(std::string_view text);
std::string serialize_system(const D0LSystem& sys);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace d0l
