#include "mulink/skein.hpp"

#include <algorithm>
#include <sstream>

#include "mulink/errors.hpp"
#include "mulink/random_gen.hpp"

namespace mulink {

SkeinReport skein_sides(const Diagram& d, const std::string& id,
                        const IndexSeq& seq) {
  if (!d.signs.count(id)) throw InvalidArgument("unknown crossing '" + id + "'");
  if (has_repeated_index(seq)) {
    throw InvalidArgument("repeated index in sequence");
  }
  PassLocation over = find_pass(d, id, Role::Over);
  PassLocation under = find_pass(d, id, Role::Under);
  if (over.on_loose == under.on_loose) {
    throw InvalidArgument(
        "crossing must be between the loose component and a strand of L");
  }
  const int j = over.on_loose ? under.label : over.label;
  auto pos = std::find(seq.begin(), seq.end(), j);
  if (pos == seq.end()) {
    throw InvalidArgument("the crossing's component is not in the sequence");
  }
  const std::size_t k = pos - seq.begin();

  const Diagram d_plus = d.signs.at(id) == 1 ? d : switch_crossing(d, id);
  const Diagram d_minus = d.signs.at(id) == 1 ? switch_crossing(d, id) : d;
  // The split segments do not depend on the over/under choice at id, so the
  // splits of d serve both d_plus and d_minus.
  SplitResult split = split_crossing(d, id);

  IndexSeq prefix(seq.begin(), seq.begin() + k);
  IndexSeq suffix(seq.begin() + k + 1, seq.end());

  SkeinReport r;
  r.crossing = id;
  r.seq = seq;
  r.k = static_cast<int>(k) + 1;
  r.mu_plus = mu(d_plus, seq);
  r.mu_minus = mu(d_minus, seq);
  r.mu_infinity_prefix = mu(split.infinity, prefix);
  r.mu_zero_suffix = mu(split.zero, suffix);
  r.lhs = r.mu_plus - r.mu_minus;
  r.rhs = r.mu_infinity_prefix * r.mu_zero_suffix;
  r.holds = r.lhs == r.rhs;
  return r;
}

LemmaSides verify_fox_lemma(const GroupWord& u, const GroupWord& v, int k,
                            int eps, const IndexSeq& seq) {
  if (has_repeated_index(seq)) {
    throw InvalidArgument("repeated index in sequence");
  }
  auto pos = std::find(seq.begin(), seq.end(), k);
  if (pos == seq.end()) throw InvalidArgument("k must occur in the sequence");
  if (eps != 1 && eps != -1) throw InvalidArgument("eps must be +1 or -1");
  const std::size_t kpos = pos - seq.begin();
  IndexSeq prefix(seq.begin(), seq.begin() + kpos);
  IndexSeq suffix(seq.begin() + kpos + 1, seq.end());

  LemmaSides s;
  s.lhs = mu_of_word(word_multiply(word_multiply(u, generator(k, eps)), v), seq);
  s.rhs = eps * mu_of_word(u, prefix) * mu_of_word(v, suffix) +
          mu_of_word(word_multiply(u, v), seq);
  return s;
}

SuiteSummary verify_theorem_suite(std::uint64_t seed, int trials) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  SuiteSummary summary;
  summary.trials = trials;

  for (int t = 0; t < trials; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{4, 20});
    // Eligible crossings: one pass on l, the other on a strand of L.
    std::vector<std::pair<std::string, int>> eligible;  // (id, component)
    for (const auto& [id, sign] : d.signs) {
      PassLocation over = find_pass(d, id, Role::Over);
      PassLocation under = find_pass(d, id, Role::Under);
      if (over.on_loose != under.on_loose) {
        eligible.emplace_back(id, over.on_loose ? under.label : over.label);
      }
    }
    long budget = 40;
    for (const auto& [id, j] : eligible) {
      for (const auto& seq : all_sequences(d.labels, d.labels.size())) {
        if (std::find(seq.begin(), seq.end(), j) == seq.end()) continue;
        if (budget-- <= 0) break;
        SkeinReport r = skein_sides(d, id, seq);
        ++summary.checks;
        if (!r.holds) {
          ++summary.failures;
          if (!summary.first_counterexample) {
            std::ostringstream out;
            out << "crossing=" << id << " seq=[";
            for (std::size_t i = 0; i < seq.size(); ++i) {
              out << (i ? " " : "") << seq[i];
            }
            out << "] lhs=" << r.lhs << " rhs=" << r.rhs << "\n" << serialize(d);
            summary.first_counterexample = out.str();
          }
        }
      }
      if (budget <= 0) break;
    }
  }
  return summary;
}

}  // namespace mulink
