// Acceptance suite: one pass/fail line per criterion, exit = failure count.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mulink/errors.hpp"
#include "mulink/mu.hpp"
#include "mulink/random_gen.hpp"
#include "mulink/skein.hpp"

#include "test_util.hpp"

using namespace mulink;
using mulink::test::fixture;
using mulink::test::read_file;

namespace {

int g_failures = 0;

void criterion(const std::string& id, const std::string& name,
               double budget_seconds, bool (*body)()) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed > budget_seconds) {
    ok = false;
    note += " (over time budget)";
  }
  if (!ok) ++g_failures;
  std::printf("%s %-28s %s (%.2fs)%s\n", id.c_str(), name.c_str(),
              ok ? "PASS" : "FAIL", elapsed, note.c_str());
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(MULINK_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

// A1: the frozen borromean fixture reproduces the worked example.
bool a1_borromean() {
  Diagram b = parse_gauss(read_file(fixture("borromean.json")));
  for (Method m : {Method::Magnus, Method::Fox, Method::Skein}) {
    if (mu(b, {1, 2}, MuOptions{m}) != -1) return false;
  }
  SplitResult split = split_crossing(b, "c4");
  return mu(split.infinity, {1}) == 1;
}

// A2: degree-1 invariants are the signed under-pass counts.
bool a2_linking() {
  std::mt19937_64 rng(1002);
  for (int t = 0; t < 1000; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{4, 20});
    for (int label : d.labels) {
      if (mu(d, {label}) != loose_underpass_signs(d, label)) return false;
    }
  }
  return true;
}

// A3: magnus, fox and skein agree on every non-repeating sequence.
bool a3_agreement() {
  std::mt19937_64 rng(1003);
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{3, 14});
    for (const auto& seq : all_sequences(d.labels, d.labels.size())) {
      Int m = mu(d, seq);
      if (m != mu(d, seq, MuOptions{Method::Fox})) return false;
      if (m != mu(d, seq, MuOptions{Method::Skein})) return false;
    }
  }
  return true;
}

// A4: the skein identity on 500 random (diagram, crossing, seq) triples,
// covering the k=1, k=r and r=1 special cases.
bool a4_theorem() {
  std::mt19937_64 rng(1004);
  int checks = 0, k1 = 0, kr = 0, r1 = 0;
  while (checks < 500) {
    Diagram d = random_event_diagram(rng, DiagramParams{4, 20});
    for (const auto& [id, sign] : d.signs) {
      if (checks >= 500) break;
      PassLocation over = find_pass(d, id, Role::Over);
      PassLocation under = find_pass(d, id, Role::Under);
      if (over.on_loose == under.on_loose) continue;
      const int j = over.on_loose ? under.label : over.label;
      for (const auto& seq : all_sequences(d.labels, d.labels.size())) {
        if (checks >= 500) break;
        if (std::find(seq.begin(), seq.end(), j) == seq.end()) continue;
        SkeinReport r = skein_sides(d, id, seq);
        if (!r.holds) return false;
        ++checks;
        if (r.k == 1) ++k1;
        if (r.k == static_cast<int>(seq.size())) ++kr;
        if (seq.size() == 1) ++r1;
      }
    }
  }
  return k1 > 0 && kr > 0 && r1 > 0;
}

// A5: the Fox-calculus lemma on 1000 random instances.
bool a5_lemma() {
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<int> r_dist(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 1000; ++t) {
    GroupWord u = random_word(rng, 5, 10);
    GroupWord v = random_word(rng, 5, 10);
    const int r = r_dist(rng);
    std::vector<int> pool{1, 2, 3, 4, 5};
    std::shuffle(pool.begin(), pool.end(), rng);
    IndexSeq seq(pool.begin(), pool.begin() + r);
    std::uniform_int_distribution<int> pick(0, r - 1);
    LemmaSides s =
        verify_fox_lemma(u, v, seq[pick(rng)], coin(rng) ? 1 : -1, seq);
    if (s.lhs != s.rhs) return false;
  }
  return true;
}

// A6: a loose strand passing in front of L has the all-zero table.
bool a6_vanishing() {
  std::mt19937_64 rng(1006);
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{4, 20});
    // switch every crossing where l passes under a strand of L
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [id, sign] : d.signs) {
        PassLocation over = find_pass(d, id, Role::Over);
        PassLocation under = find_pass(d, id, Role::Under);
        if (under.on_loose && !over.on_loose) {
          d = switch_crossing(d, id);
          changed = true;
          break;
        }
      }
    }
    MuTable table = mu_table(d, d.labels.size());
    for (const auto& [seq, v] : table.entries) {
      if (v != 0) return false;
    }
  }
  return true;
}

// A7: link-homotopy invariance under self-crossing switches, and stability
// of mu_seq under switches at components absent from seq.
bool a7_invariance() {
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 300; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{3, 14});
    MuTable base = mu_table(d, d.labels.size());

    // splice a kink (self-crossing) into a random strand; switching it must
    // not be visible
    Diagram k = d;
    std::vector<Pass>* strand;
    if (coin(rng)) {
      strand = &*k.loose;
    } else {
      std::uniform_int_distribution<std::size_t> pickc(0, k.labels.size() - 1);
      strand = &k.components.at(k.labels[pickc(rng)]);
    }
    std::uniform_int_distribution<std::size_t> at(0, strand->size());
    const bool over_first = coin(rng) == 1;
    strand->insert(strand->begin() + at(rng),
                   {Pass{"kink", over_first ? Role::Over : Role::Under},
                    Pass{"kink", over_first ? Role::Under : Role::Over}});
    k.signs["kink"] = coin(rng) ? 1 : -1;
    if (!(mu_table(k, k.labels.size()) == base)) return false;
    if (!(mu_table(switch_crossing(k, "kink"), k.labels.size()) == base)) {
      return false;
    }

    std::vector<std::pair<std::string, int>> mixed;
    for (const auto& [id, sign] : d.signs) {
      PassLocation over = find_pass(d, id, Role::Over);
      PassLocation under = find_pass(d, id, Role::Under);
      if (over.on_loose != under.on_loose) {
        mixed.emplace_back(id, over.on_loose ? under.label : over.label);
      }
    }
    if (!mixed.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, mixed.size() - 1);
      const auto& [id, j] = mixed[pick(rng)];
      MuTable switched = mu_table(switch_crossing(d, id), d.labels.size());
      for (const auto& [seq, v] : base.entries) {
        if (std::find(seq.begin(), seq.end(), j) != seq.end()) continue;
        if (switched.entries.at(seq) != v) return false;
      }
    }
  }
  return true;
}

// A8: algebra kernel laws, 1000 random instances each.
bool a8_algebra() {
  std::mt19937_64 rng(1008);
  const MultilinearSeries one = MultilinearSeries::constant(1);
  for (int t = 0; t < 1000; ++t) {
    MultilinearSeries a = mulink::test::random_series(rng);
    MultilinearSeries b = mulink::test::random_series(rng);
    MultilinearSeries c = mulink::test::random_series(rng);
    if (!((a * b) * c == a * (b * c))) return false;
    if (!(a * one == a && one * a == a)) return false;

    GroupWord u = random_word(rng, 4, 12);
    GroupWord v = random_word(rng, 4, 12);
    if (!(magnus_of_word(word_multiply(u, v)) ==
          magnus_of_word(u) * magnus_of_word(v))) {
      return false;
    }
    if (!(magnus_of_word(u) * magnus_of_word(word_inverse(u)) == one)) {
      return false;
    }
    MultilinearSeries mu_ = magnus_of_word(u);
    if (!(mu_ * mu_.inverse() == one)) return false;

    GroupRingElement ru = GroupRingElement::from_word(random_word(rng, 3, 8));
    GroupRingElement rv = GroupRingElement::from_word(random_word(rng, 3, 8));
    for (int i = 1; i <= 3; ++i) {
      if (!(fox_derivative(i, ru * rv) ==
            fox_derivative(i, ru) + ru * fox_derivative(i, rv))) {
        return false;
      }
    }
  }
  return true;
}

// A9: serialization identity and CLI golden outputs.
bool a9_format() {
  for (const char* name :
       {"trivial.json", "one_crossing.json", "hopf.json", "borromean.json"}) {
    Diagram d = parse_gauss(read_file(fixture(name)));
    if (!(parse_gauss(serialize(d)) == d)) return false;
  }
  std::mt19937_64 rng(1009);
  for (int t = 0; t < 100; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{4, 20});
    if (!(parse_gauss(serialize(d)) == d)) return false;
  }

  const struct {
    const char* args;
    const char* golden;
  } cases[] = {
      {"compute", "golden/borromean.compute.tsv"},
      {"expand", "golden/borromean.expand.txt"},
  };
  for (const auto& c : cases) {
    const std::string out =
        run_cli(std::string(c.args) + " " + fixture("borromean.json"));
    if (out != read_file(fixture(c.golden))) return false;
  }
  if (run_cli("compute " + fixture("trivial.json")) !=
      read_file(fixture("golden/trivial.compute.tsv"))) {
    return false;
  }
  if (run_cli("compute " + fixture("hopf.json")) !=
      read_file(fixture("golden/hopf.compute.tsv"))) {
    return false;
  }
  if (run_cli("expand " + fixture("one_crossing.json")) !=
      read_file(fixture("golden/one_crossing.expand.txt"))) {
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion("A1", "borromean-example", 1, a1_borromean);
  criterion("A2", "linking-consistency", 30, a2_linking);
  criterion("A3", "three-method-agreement", 60, a3_agreement);
  criterion("A4", "skein-identity", 60, a4_theorem);
  criterion("A5", "fox-lemma", 10, a5_lemma);
  criterion("A6", "vanishing-base-case", 10, a6_vanishing);
  criterion("A7", "link-homotopy-invariance", 60, a7_invariance);
  criterion("A8", "algebra-kernel", 30, a8_algebra);
  criterion("A9", "format-stability", 5, a9_format);
  return g_failures;
}
