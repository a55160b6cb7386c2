// mulink: Milnor mu-invariants of string links with a loose component.
//
// Exit codes: 0 ok, 1 input error, 2 resource guard, 3 verification failed,
// 64 usage error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mulink/errors.hpp"
#include "mulink/mu.hpp"
#include "mulink/random_gen.hpp"
#include "mulink/skein.hpp"

namespace {

using namespace mulink;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

Diagram load_diagram(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  if (format == "gauss") return parse_gauss(text);
  if (format == "events") return parse_events(text);
  // auto: event documents carry an "events" field
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_object() && j.contains("events")) return parse_events(text);
  return parse_gauss(text);
}

Method parse_method(const std::string& m) {
  if (m == "magnus") return Method::Magnus;
  if (m == "fox") return Method::Fox;
  if (m == "skein") return Method::Skein;
  throw InvalidArgument("unknown method '" + m + "'");
}

IndexSeq parse_seq(const std::string& text) {
  IndexSeq seq;
  std::istringstream in(text);
  int v = 0;
  while (in >> v) seq.push_back(v);
  if (!in.eof()) throw InvalidArgument("--seq expects space-separated integers");
  return seq;
}

std::string seq_str(const IndexSeq& seq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
  return out.str();
}

void print_report(const SkeinReport& r) {
  std::cout << r.crossing << "\tseq=[" << seq_str(r.seq) << "]\tk=" << r.k
            << "\tlhs=" << r.lhs << "\trhs=" << r.rhs
            << "\tmu_plus=" << r.mu_plus << "\tmu_minus=" << r.mu_minus
            << "\tmu_infinity=" << r.mu_infinity_prefix
            << "\tmu_zero=" << r.mu_zero_suffix
            << "\tholds=" << (r.holds ? "yes" : "no") << "\n";
}

struct Options {
  std::string input = "-";
  std::string format = "auto";
  std::string method = "magnus";
  int rmax = -1;
  std::string seq;
  std::string crossing;
  bool all = false;
  std::uint64_t seed = 1;
  int trials = 100;
  std::size_t guard_terms = kDefaultTermGuard;
  std::size_t guard_letters = kDefaultLetterGuard;
};

int run_compute(const Options& opt) {
  Diagram d = load_diagram(opt.input, opt.format);
  MuOptions mo{parse_method(opt.method), opt.guard_terms, opt.guard_letters};
  const int rmax = opt.rmax < 0 ? static_cast<int>(d.labels.size()) : opt.rmax;
  MuTable table = mu_table(d, rmax, mo);
  for (const auto& seq : all_sequences(d.labels, rmax)) {
    std::cout << seq_str(seq) << '\t' << table.entries.at(seq) << '\n';
  }
  return 0;
}

int run_expand(const Options& opt) {
  Diagram d = load_diagram(opt.input, opt.format);
  std::cout << loose_closure_series(d, solve_meridians(d)).str() << '\n';
  return 0;
}

int run_verify_skein(const Options& opt) {
  Diagram d = load_diagram(opt.input, opt.format);
  bool all_hold = true;
  if (opt.all) {
    for (const auto& [id, sign] : d.signs) {
      PassLocation over = find_pass(d, id, Role::Over);
      PassLocation under = find_pass(d, id, Role::Under);
      if (over.on_loose == under.on_loose) continue;
      const int j = over.on_loose ? under.label : over.label;
      for (const auto& seq : all_sequences(d.labels, d.labels.size())) {
        if (std::find(seq.begin(), seq.end(), j) == seq.end()) continue;
        SkeinReport r = skein_sides(d, id, seq);
        print_report(r);
        all_hold = all_hold && r.holds;
      }
    }
  } else {
    if (opt.crossing.empty()) {
      throw InvalidArgument("verify-skein needs --crossing or --all");
    }
    SkeinReport r = skein_sides(d, opt.crossing, parse_seq(opt.seq));
    print_report(r);
    all_hold = r.holds;
  }
  return all_hold ? 0 : 3;
}

// The randomized suites behind `random-suite`; each returns checks/failures.
struct SuiteCounts {
  long checks = 0;
  long failures = 0;
  std::optional<std::string> first_counterexample;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (!first_counterexample) first_counterexample = describe();
    }
  }
};

SuiteCounts suite_method_agreement(std::uint64_t seed, int trials) {
  SuiteCounts c;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{3, 14});
    for (const auto& seq : all_sequences(d.labels, d.labels.size())) {
      Int m = mu(d, seq, MuOptions{Method::Magnus});
      Int f = mu(d, seq, MuOptions{Method::Fox});
      Int s = mu(d, seq, MuOptions{Method::Skein});
      c.record(m == f && f == s, [&] {
        return "method disagreement seq=[" + seq_str(seq) + "] magnus=" +
               m.str() + " fox=" + f.str() + " skein=" + s.str() + "\n" +
               serialize(d);
      });
    }
  }
  return c;
}

SuiteCounts suite_linking(std::uint64_t seed, int trials) {
  SuiteCounts c;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{4, 20});
    for (int label : d.labels) {
      Int m = mu(d, {label});
      c.record(m == loose_underpass_signs(d, label), [&] {
        return "linking mismatch label=" + std::to_string(label) + "\n" +
               serialize(d);
      });
    }
  }
  return c;
}

SuiteCounts suite_lemma(std::uint64_t seed, int trials) {
  SuiteCounts c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> r_dist(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < trials; ++t) {
    GroupWord u = random_word(rng, 5, 10);
    GroupWord v = random_word(rng, 5, 10);
    const int r = r_dist(rng);
    std::vector<int> pool{1, 2, 3, 4, 5};
    std::shuffle(pool.begin(), pool.end(), rng);
    IndexSeq seq(pool.begin(), pool.begin() + r);
    std::uniform_int_distribution<int> k_dist(0, r - 1);
    const int k = seq[k_dist(rng)];
    const int eps = coin(rng) ? 1 : -1;
    LemmaSides s = verify_fox_lemma(u, v, k, eps, seq);
    c.record(s.lhs == s.rhs, [&] {
      return "lemma failure u=[" + word_str(u) + "] v=[" + word_str(v) +
             "] k=" + std::to_string(k) + " eps=" + std::to_string(eps) +
             " seq=[" + seq_str(seq) + "]";
    });
  }
  return c;
}

SuiteCounts suite_invariance(std::uint64_t seed, int trials) {
  SuiteCounts c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < trials; ++t) {
    Diagram d = random_event_diagram(rng, DiagramParams{3, 14});
    std::vector<std::pair<std::string, int>> mixed;
    for (const auto& [id, sign] : d.signs) {
      PassLocation over = find_pass(d, id, Role::Over);
      PassLocation under = find_pass(d, id, Role::Under);
      if (over.on_loose != under.on_loose) {
        mixed.emplace_back(id, over.on_loose ? under.label : over.label);
      }
    }
    MuTable base = mu_table(d, d.labels.size());
    {
      // Event diagrams are monotone braids without self-crossings, so splice
      // a kink into a random strand and switch it.
      Diagram k = d;
      std::vector<Pass>* strand;
      if (coin(rng)) {
        strand = &*k.loose;
      } else {
        std::uniform_int_distribution<std::size_t> pickc(0,
                                                         k.labels.size() - 1);
        strand = &k.components.at(k.labels[pickc(rng)]);
      }
      std::uniform_int_distribution<std::size_t> at(0, strand->size());
      const bool over_first = coin(rng) == 1;
      strand->insert(strand->begin() + at(rng),
                     {Pass{"kink", over_first ? Role::Over : Role::Under},
                      Pass{"kink", over_first ? Role::Under : Role::Over}});
      k.signs["kink"] = coin(rng) ? 1 : -1;
      MuTable switched =
          mu_table(switch_crossing(k, "kink"), k.labels.size());
      c.record(base == switched, [&] {
        return "self-crossing switch changed mu-table\n" + serialize(k);
      });
    }
    if (!mixed.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, mixed.size() - 1);
      const auto& [id, j] = mixed[pick(rng)];
      MuTable switched = mu_table(switch_crossing(d, id), d.labels.size());
      bool ok = true;
      for (const auto& [seq, value] : base.entries) {
        if (std::find(seq.begin(), seq.end(), j) != seq.end()) continue;
        ok = ok && switched.entries.at(seq) == value;
      }
      c.record(ok, [&] {
        return "absent-index stability violated at " + id + "\n" + serialize(d);
      });
    }
  }
  return c;
}

int run_random_suite(const Options& opt) {
  nlohmann::json out;
  long checks = 0, failures = 0;
  std::optional<std::string> first;

  SuiteSummary theorem = verify_theorem_suite(opt.seed, opt.trials);
  const std::map<std::string, SuiteCounts> suites = {
      {"method_agreement", suite_method_agreement(opt.seed + 1, opt.trials)},
      {"linking_number", suite_linking(opt.seed + 2, opt.trials)},
      {"fox_lemma", suite_lemma(opt.seed + 3, opt.trials * 10)},
      {"invariance", suite_invariance(opt.seed + 4, opt.trials)},
  };

  out["trials"] = opt.trials;
  out["suites"]["skein_identity"] = {{"checks", theorem.checks},
                                     {"failures", theorem.failures}};
  checks += theorem.checks;
  failures += theorem.failures;
  if (theorem.first_counterexample) first = theorem.first_counterexample;
  for (const auto& [name, c] : suites) {
    out["suites"][name] = {{"checks", c.checks}, {"failures", c.failures}};
    checks += c.checks;
    failures += c.failures;
    if (!first && c.first_counterexample) first = c.first_counterexample;
  }
  out["checks"] = checks;
  out["failures"] = failures;
  if (first) out["first_counterexample"] = *first;
  std::cout << out.dump(2) << '\n';
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor mu-invariants of string links with a loose component"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "diagram file, or - for stdin");
    cmd->add_option("--format", opt.format, "gauss | events | auto")
        ->check(CLI::IsMember({"gauss", "events", "auto"}));
    cmd->add_option("--guard-terms", opt.guard_terms, "group-ring term guard");
    cmd->add_option("--guard-letters", opt.guard_letters, "word letter guard");
  };

  auto* compute = app.add_subcommand("compute", "print the mu-table as TSV");
  add_input(compute);
  compute->add_option("--method", opt.method, "magnus | fox | skein")
      ->check(CLI::IsMember({"magnus", "fox", "skein"}));
  compute->add_option("--rmax", opt.rmax, "maximum sequence length");

  auto* expand = app.add_subcommand("expand", "print the Magnus expansion of the closure");
  add_input(expand);

  auto* verify = app.add_subcommand("verify-skein", "check the skein identity");
  add_input(verify);
  verify->add_option("--crossing", opt.crossing, "crossing id");
  verify->add_option("--seq", opt.seq, "index sequence, e.g. \"1 2\"");
  verify->add_flag("--all", opt.all, "all eligible (crossing, seq) pairs");

  auto* suite = app.add_subcommand("random-suite", "seeded randomized verification");
  suite->add_option("--seed", opt.seed, "random seed");
  suite->add_option("--trials", opt.trials, "trial count")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (compute->parsed()) return run_compute(opt);
    if (expand->parsed()) return run_expand(opt);
    if (verify->parsed()) return run_verify_skein(opt);
    if (suite->parsed()) return run_random_suite(opt);
  } catch (const mulink::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const mulink::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const mulink::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 64;
}
