#include "mulink/random_gen.hpp"

namespace mulink {

Diagram random_event_diagram(std::mt19937_64& rng, const DiagramParams& p) {
  std::uniform_int_distribution<int> n_dist(1, p.max_components);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> loose_dist(1, n + 1);
  const int loose_position = loose_dist(rng);
  std::uniform_int_distribution<int> count_dist(0, p.max_events);
  const int m = count_dist(rng);
  std::uniform_int_distribution<int> pos_dist(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Event> events;
  events.reserve(m);
  for (int i = 0; i < m; ++i) {
    events.push_back(Event{pos_dist(rng), coin(rng) ? 1 : -1});
  }
  return from_events(n, loose_position, events);
}

GroupWord random_word(std::mt19937_64& rng, int max_index, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx_dist(1, max_index);
  std::uniform_int_distribution<int> coin(0, 1);
  GroupWord w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    w.letters.push_back(GeneratorLetter{idx_dist(rng), coin(rng) ? 1 : -1});
  }
  return w;
}

}  // namespace mulink
