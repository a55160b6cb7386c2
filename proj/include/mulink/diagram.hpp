#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mulink {

enum class Role { Over, Under };

// One visit of a strand to a crossing, in orientation order along the strand.
struct Pass {
  std::string crossing;
  Role role = Role::Over;
  auto operator<=>(const Pass&) const = default;
};

enum class LooseEnd { Top, Bottom };

// Gauss-code tangle: n ordered strands oriented downwards, plus an optional
// loose strand.  Every crossing id occurs in exactly two passes, one over and
// one under.  Labels are stable: deleting a component never renames the
// survivors.
struct Diagram {
  std::vector<int> labels;                     // ordered component labels
  std::map<int, std::vector<Pass>> components; // one path per label
  std::optional<std::vector<Pass>> loose;
  LooseEnd loose_end = LooseEnd::Bottom;       // informational only
  std::map<std::string, int> signs;            // crossing id -> +1/-1

  bool operator==(const Diagram&) const = default;
};

// Location of one pass of a crossing.
struct PassLocation {
  bool on_loose = false;
  int label = 0;          // valid when !on_loose
  std::size_t position = 0;
};

// JSON diagram document (see README for the schema).  Validates; throws
// ParseError on malformed or inconsistent input.
Diagram parse_gauss(const std::string& text);

// Canonical serialization (sorted keys); parse_gauss(serialize(d)) == d.
std::string serialize(const Diagram& d);

struct Event {
  int position = 1;   // positions p and p+1 cross
  int exponent = 1;   // +1: left strand over (positive crossing); -1: under
};

// Monotone braid-style builder: n strands of L plus a loose strand occupy
// positions 1..n+1; each event crosses adjacent positions and swaps them.
// The strand starting at loose_position becomes the loose component; the
// rest are labeled 1..n in starting order.  Output is always realizable.
Diagram from_events(int n, int loose_position, const std::vector<Event>& events);

// Event JSON document {"n":..,"loose_position":..,"events":[[p,e],...]}.
Diagram parse_events(const std::string& text);

// Returns the list of invariant violations; empty means valid.
std::vector<std::string> validate(const Diagram& d);

// Swaps the over/under roles at id and negates its sign.
Diagram switch_crossing(const Diagram& d, const std::string& id);

// Removes the labeled component of L, and every crossing touching it.
Diagram delete_component(const Diagram& d, int label);

struct SplitResult {
  Diagram zero;      // loose = (L_k before d) + (l after d)
  Diagram infinity;  // loose = (l before d) + reversed (L_k before d)
};

// Splits at a crossing between the loose strand and some component L_k; both
// outputs drop L_k and the crossing itself.  In the infinity output the
// reversed segment flips the sign of every surviving crossing with exactly
// one pass on it.
SplitResult split_crossing(const Diagram& d, const std::string& id);

// Sum of signs over crossings where the loose strand passes under `label`.
int loose_underpass_signs(const Diagram& d, int label);

// Locates the pass of crossing `id` carrying the given role.  Throws
// InvalidArgument if the crossing does not exist.
PassLocation find_pass(const Diagram& d, const std::string& id, Role role);

bool has_label(const Diagram& d, int label);

}  // namespace mulink
