#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mulink/mu.hpp"

namespace mulink {

// Both sides of the skein identity
//   mu_seq(L, l_+) - mu_seq(L, l_-) = mu_prefix(L - L_j, l_inf) * mu_suffix(L - L_j, l_0)
// at one crossing of l with component L_j, j at position k (1-based) in seq.
struct SkeinReport {
  std::string crossing;
  IndexSeq seq;
  int k = 0;
  Int lhs;
  Int rhs;
  bool holds = false;
  Int mu_plus;
  Int mu_minus;
  Int mu_infinity_prefix;
  Int mu_zero_suffix;
};

SkeinReport skein_sides(const Diagram& d, const std::string& id,
                        const IndexSeq& seq);

// Both sides of the Fox-calculus identity behind the theorem:
//   lhs = mu(u x_k^eps v, seq)
//   rhs = eps * mu(u, prefix) * mu(v, suffix) + mu(u v, seq)
// where k sits somewhere in the non-repeating seq.
struct LemmaSides {
  Int lhs;
  Int rhs;
};

LemmaSides verify_fox_lemma(const GroupWord& u, const GroupWord& v, int k,
                            int eps, const IndexSeq& seq);

struct SuiteSummary {
  int trials = 0;
  long checks = 0;
  long failures = 0;
  std::optional<std::string> first_counterexample;
};

// Randomized batch check of the skein identity over event diagrams; failures
// are recorded, not thrown.  Deterministic in the seed.
SuiteSummary verify_theorem_suite(std::uint64_t seed, int trials);

}  // namespace mulink
