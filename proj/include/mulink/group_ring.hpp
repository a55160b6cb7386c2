#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mulink/group_word.hpp"

namespace mulink {

using Int = boost::multiprecision::cpp_int;
using IndexSeq = std::vector<int>;

inline constexpr std::size_t kDefaultTermGuard = 1000000;

// Element of the integer group ring ZF.  Keys are kept in reduced form,
// coefficients are nonzero.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement zero() { return {}; }
  static GroupRingElement one();
  static GroupRingElement from_word(const GroupWord& w);

  // Adds c * w, normalizing the key and pruning zero coefficients.
  void add_term(const GroupWord& w, const Int& c);

  const std::map<GroupWord, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  bool operator==(const GroupRingElement&) const = default;

 private:
  std::map<GroupWord, Int> terms_;
};

// Evaluation at x_1 = ... = x_n = 1: the sum of coefficients.
Int augment(const GroupRingElement& e);

// Fox free derivative of a single word, taken letter-by-letter on the given
// spelling (the word need not be reduced; output keys are).
GroupRingElement fox_derivative(int index, const GroupWord& w);

// Linear extension to ZF.  Throws ResourceError if the result exceeds
// term_guard terms.
GroupRingElement fox_derivative(int index, const GroupRingElement& e,
                                std::size_t term_guard = kDefaultTermGuard);

// mu_of_word(w, [i1..ir]): the iterated derivative d_{i1}...d_{ir} applied to
// w (rightmost index applied first) and evaluated at 1.  Requires pairwise
// distinct indices.
Int mu_of_word(const GroupWord& w, const IndexSeq& seq,
               std::size_t term_guard = kDefaultTermGuard);

bool has_repeated_index(const IndexSeq& seq);

}  // namespace mulink
