#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mulink {

// One letter x_i or x_i^{-1} of a free-group word.
struct GeneratorLetter {
  int index = 0;     // generator label, >= 1
  int exponent = 1;  // +1 or -1
  auto operator<=>(const GeneratorLetter&) const = default;
};

// A word in the free group on generators x_1, x_2, ...  The letter list is
// not forced into reduced form; word_normalize produces the reduced
// representative.
struct GroupWord {
  std::vector<GeneratorLetter> letters;
  auto operator<=>(const GroupWord&) const = default;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
};

GroupWord generator(int index, int exponent = 1);

// Free reduction: removes all adjacent x_i x_i^{-1} pairs.  Idempotent.
GroupWord word_normalize(const GroupWord& w);

// Normalized concatenation.
GroupWord word_multiply(const GroupWord& a, const GroupWord& b);

GroupWord word_inverse(const GroupWord& w);

// Literal syntax: whitespace-separated signed integers, "1 2 -1 -2" meaning
// x_1 x_2 x_1^{-1} x_2^{-1}.
GroupWord parse_word(const std::string& text);
std::string word_str(const GroupWord& w);

}  // namespace mulink
