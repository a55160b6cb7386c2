#pragma once

#include <random>

#include "mulink/diagram.hpp"
#include "mulink/group_word.hpp"

namespace mulink {

struct DiagramParams {
  int max_components = 4;
  int max_events = 20;
};

// Random monotone event diagram; realizable by construction.
Diagram random_event_diagram(std::mt19937_64& rng, const DiagramParams& p);

// Random word of at most max_len letters over generators 1..max_index.
GroupWord random_word(std::mt19937_64& rng, int max_index, int max_len);

}  // namespace mulink
