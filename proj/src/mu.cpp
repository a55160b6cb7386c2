#include "mulink/mu.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mulink/errors.hpp"

namespace mulink {

namespace {

void check_seq(const Diagram& d, const IndexSeq& seq) {
  if (has_repeated_index(seq)) {
    throw InvalidArgument("repeated index in mu sequence");
  }
  for (int i : seq) {
    if (!has_label(d, i)) {
      throw InvalidArgument("mu sequence index " + std::to_string(i) +
                            " is not a component label");
    }
  }
}

using Memo = std::map<std::pair<std::string, IndexSeq>, Int>;

Int skein_rec(const Diagram& d, const IndexSeq& seq, Memo& memo) {
  if (seq.empty()) return 1;
  const auto key = std::make_pair(serialize(d), seq);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Int result = 0;
  bool found = false;
  for (const auto& p : *d.loose) {
    if (p.role != Role::Under) continue;
    PassLocation over = find_pass(d, p.crossing, Role::Over);
    if (over.on_loose) continue;  // self-crossing, switching it is free
    auto pos = std::find(seq.begin(), seq.end(), over.label);
    if (pos == seq.end()) continue;  // cannot affect this coefficient
    const std::size_t k = pos - seq.begin();

    SplitResult split = split_crossing(d, p.crossing);
    Diagram switched = switch_crossing(d, p.crossing);
    const int eps = d.signs.at(p.crossing);
    IndexSeq prefix(seq.begin(), seq.begin() + k);
    IndexSeq suffix(seq.begin() + k + 1, seq.end());
    result = skein_rec(switched, seq, memo) +
             eps * skein_rec(split.infinity, prefix, memo) *
                 skein_rec(split.zero, suffix, memo);
    found = true;
    break;
  }
  if (!found) result = 0;  // l passes in front for these indices

  memo.emplace(key, result);
  return result;
}

}  // namespace

Int mu(const Diagram& d, const IndexSeq& seq, const MuOptions& opts) {
  if (!d.loose) throw InvalidArgument("mu requires a loose component");
  check_seq(d, seq);
  if (seq.empty()) return 1;
  switch (opts.method) {
    case Method::Magnus:
      return loose_closure_series(d, solve_meridians(d)).coefficient(seq);
    case Method::Fox: {
      const int depth = std::max<int>(1, d.labels.size());
      GroupWord w = loose_closure_word(d, depth, opts.letter_guard);
      return mu_of_word(w, seq, opts.term_guard);
    }
    case Method::Skein:
      return mu_via_skein(d, seq);
  }
  throw InvalidArgument("unknown method");
}

std::vector<IndexSeq> all_sequences(const std::vector<int>& labels, int rmax) {
  std::vector<IndexSeq> out;
  std::vector<IndexSeq> frontier{{}};
  for (int r = 1; r <= rmax; ++r) {
    std::vector<IndexSeq> next;
    for (const auto& s : frontier) {
      for (int l : labels) {
        if (std::find(s.begin(), s.end(), l) != s.end()) continue;
        IndexSeq t = s;
        t.push_back(l);
        next.push_back(std::move(t));
      }
    }
    for (auto& s : next) out.push_back(s);
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const IndexSeq& a, const IndexSeq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

MuTable mu_table(const Diagram& d, int rmax, const MuOptions& opts) {
  if (!d.loose) throw InvalidArgument("mu_table requires a loose component");
  if (rmax < 0 || rmax > static_cast<int>(d.labels.size())) {
    throw InvalidArgument("rmax must be between 0 and |labels|");
  }
  MuTable table;
  table.rmax = rmax;
  if (opts.method == Method::Magnus) {
    MultilinearSeries series = loose_closure_series(d, solve_meridians(d));
    for (const auto& seq : all_sequences(d.labels, rmax)) {
      table.entries[seq] = series.coefficient(seq);
    }
  } else {
    for (const auto& seq : all_sequences(d.labels, rmax)) {
      table.entries[seq] = mu(d, seq, opts);
    }
  }
  return table;
}

Int mu_string_link(const Diagram& d, int j, const IndexSeq& seq) {
  if (d.loose) throw InvalidArgument("mu_string_link requires no loose component");
  if (!has_label(d, j)) {
    throw InvalidArgument("unknown component label " + std::to_string(j));
  }
  if (std::find(seq.begin(), seq.end(), j) != seq.end()) {
    throw InvalidArgument("sequence must not contain the loose label");
  }
  Diagram dl;
  for (int l : d.labels) {
    if (l != j) dl.labels.push_back(l);
  }
  for (const auto& [l, ps] : d.components) {
    if (l != j) dl.components[l] = ps;
  }
  dl.loose = d.components.at(j);
  dl.loose_end = LooseEnd::Bottom;
  dl.signs = d.signs;
  return mu(dl, seq, MuOptions{Method::Magnus});
}

Int mu_via_skein(const Diagram& d, const IndexSeq& seq) {
  if (!d.loose) throw InvalidArgument("mu requires a loose component");
  check_seq(d, seq);
  Memo memo;
  return skein_rec(d, seq, memo);
}

}  // namespace mulink
