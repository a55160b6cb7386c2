#pragma once

#include <map>
#include <vector>

#include "mulink/diagram.hpp"
#include "mulink/series.hpp"

namespace mulink {

inline constexpr std::size_t kDefaultLetterGuard = 100000;

// A Wirtinger arc of a strand of L: the stretch between two consecutive
// under-passes.  Arc 0 contains the top endpoint.
struct Arc {
  int component = 0;
  int ordinal = 0;
  std::vector<Pass> passes;  // the over-passes lying on this arc
  bool operator==(const Arc&) const = default;
};

std::vector<Arc> arcs_of(const Diagram& d, int label);

// Per component label, one meridian series per arc.  Arc 0 of component i is
// exactly 1 + X_i; every entry is a unit with constant term 1.
using ArcMeridianTable = std::map<int, std::vector<MultilinearSeries>>;

// Iterated Wirtinger substitution: initialize every arc of component i to
// 1 + X_i, then sweep the under-passes |labels| times applying
// m_out = A^e * m_in * A^{-e} (A the over-arc's current meridian, e the
// crossing sign).  One further sweep must be a no-op; throws InternalError
// otherwise.
ArcMeridianTable solve_meridians(const Diagram& d);

// Magnus image of the loose strand's closure: the ordered product of arc
// meridians (to the power of the crossing sign) over l's under-passes
// beneath L.  Self-crossings of l and the front closure arc contribute
// nothing.
MultilinearSeries loose_closure_series(const Diagram& d,
                                       const ArcMeridianTable& table);

// Symbolic analogue: arc meridians expanded as free-group words by `depth`
// substitution rounds, then read along l.  Matches loose_closure_series on
// every monomial once depth >= |labels|.  Throws ResourceError if any word
// exceeds letter_guard letters.
GroupWord loose_closure_word(const Diagram& d, int depth,
                             std::size_t letter_guard = kDefaultLetterGuard);

// Arc ordinal of the pass at `position` on component `label`.
int arc_ordinal_at(const Diagram& d, int label, std::size_t position);

}  // namespace mulink
