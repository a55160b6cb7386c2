#pragma once

#include <map>

#include "mulink/diagram.hpp"
#include "mulink/meridians.hpp"
#include "mulink/series.hpp"

namespace mulink {

enum class Method { Magnus, Fox, Skein };

struct MuOptions {
  Method method = Method::Magnus;
  std::size_t term_guard = kDefaultTermGuard;
  std::size_t letter_guard = kDefaultLetterGuard;
};

// mu_{i1..ir}(L, l) for a diagram with a loose component; seq must have
// pairwise distinct indices drawn from the labels.  The empty sequence gives
// 1 (the constant term).  All three methods agree on valid inputs.
Int mu(const Diagram& d, const IndexSeq& seq, const MuOptions& opts = {});

struct MuTable {
  std::map<IndexSeq, Int> entries;  // every non-repeating seq of length 1..rmax
  int rmax = 0;
  bool operator==(const MuTable&) const = default;
};

MuTable mu_table(const Diagram& d, int rmax, const MuOptions& opts = {});

// mu_{i1..ir, j}(L) of a pure string link: component j is reinterpreted as
// the loose component.  seq must avoid j.
Int mu_string_link(const Diagram& d, int j, const IndexSeq& seq);

// The skein recursion of the main theorem, with memoization per call.
Int mu_via_skein(const Diagram& d, const IndexSeq& seq);

// All non-repeating sequences over `labels` of length 1..rmax, ordered by
// length then lexicographically.
std::vector<IndexSeq> all_sequences(const std::vector<int>& labels, int rmax);

}  // namespace mulink
