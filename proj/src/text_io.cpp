#include "d0l/text_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (text.empty()) return lines;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t nl = text.find('\n', begin);
    if (nl == std::string_view::npos) {
      if (begin < text.size()) lines.push_back(text.substr(begin));
      break;
    }
    std::string_view line = text.substr(begin, nl - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    begin = nl + 1;
  }
  return lines;
}

constexpr std::string_view kAxiomPrefix = "axiom: ";
constexpr std::string_view kArrow = " -> ";

}  // namespace

WordSequence parse_sequence(std::string_view text) {
  WordSequence seq;
  for (auto line : split_lines(text)) seq.push_back(Word(line));
  return seq;
}

std::string serialize_sequence(const WordSequence& seq) {
  std::string out;
  for (const auto& w : seq) {
    out += w.str();
    out += '\n';
  }
  return out;
}

D0LSystem parse_system(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'axiom: <word>' line");
  if (lines[0].substr(0, kAxiomPrefix.size()) != kAxiomPrefix) {
    // Tolerate "axiom:" with nothing after it for an empty axiom.
    if (lines[0] != "axiom:") throw ParseError(1, "expected 'axiom: <word>'");
  }
  Word axiom(lines[0].size() > kAxiomPrefix.size() ? lines[0].substr(kAxiomPrefix.size())
                                                   : std::string_view{});

  D0LSystem::ProductionMap productions;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto line = lines[n];
    const std::size_t lineno = n + 1;
    std::string_view successor;
    if (line.size() >= 1 + kArrow.size() && line.substr(1, kArrow.size()) == kArrow) {
      successor = line.substr(1 + kArrow.size());
    } else if (line.size() == 1 + kArrow.size() - 1 && line.substr(1) == " ->") {
      successor = {};
    } else {
      throw ParseError(lineno, "expected '<symbol> -> <word>'");
    }
    const Symbol a = line[0];
    if (!productions.emplace(a, Word(successor)).second)
      throw ParseError(lineno, std::string("second production for symbol '") + a + "'");
  }
  return D0LSystem(std::move(axiom), std::move(productions));
}

std::string serialize_system(const D0LSystem& sys) {
  std::string out(kAxiomPrefix);
  out += sys.axiom().str();
  out += '\n';
  for (const auto& [a, x] : sys.productions()) {
    out += a;
    out += kArrow;
    out += x.str();
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
  if (!out) throw InvalidInput("failed writing " + path);
}

}  // namespace d0l
