#include "mulink/group_word.hpp"

#include <sstream>

#include "mulink/errors.hpp"

namespace mulink {

GroupWord generator(int index, int exponent) {
  return GroupWord{{GeneratorLetter{index, exponent}}};
}

GroupWord word_normalize(const GroupWord& w) {
  std::vector<GeneratorLetter> out;
  out.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (!out.empty() && out.back().index == l.index &&
        out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return GroupWord{std::move(out)};
}

GroupWord word_multiply(const GroupWord& a, const GroupWord& b) {
  GroupWord c;
  c.letters.reserve(a.letters.size() + b.letters.size());
  c.letters = a.letters;
  c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
  return word_normalize(c);
}

GroupWord word_inverse(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(GeneratorLetter{it->index, -it->exponent});
  }
  return out;
}

GroupWord parse_word(const std::string& text) {
  GroupWord w;
  std::istringstream in(text);
  long long v = 0;
  while (in >> v) {
    if (v == 0) throw InvalidArgument("word literal: 0 is not a generator");
    w.letters.push_back(
        GeneratorLetter{static_cast<int>(v < 0 ? -v : v), v < 0 ? -1 : 1});
  }
  if (!in.eof()) throw InvalidArgument("word literal: expected signed integers");
  return w;
}

std::string word_str(const GroupWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) out << ' ';
    out << l.index * l.exponent;
    first = false;
  }
  return out.str();
}

}  // namespace mulink
