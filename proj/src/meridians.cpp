#include "mulink/meridians.hpp"

#include "mulink/errors.hpp"

namespace mulink {

std::vector<Arc> arcs_of(const Diagram& d, int label) {
  if (!has_label(d, label)) {
    throw InvalidArgument("unknown component label " + std::to_string(label));
  }
  std::vector<Arc> arcs;
  Arc cur{label, 0, {}};
  for (const auto& p : d.components.at(label)) {
    if (p.role == Role::Under) {
      arcs.push_back(cur);
      cur = Arc{label, cur.ordinal + 1, {}};
    } else {
      cur.passes.push_back(p);
    }
  }
  arcs.push_back(cur);
  return arcs;
}

int arc_ordinal_at(const Diagram& d, int label, std::size_t position) {
  const auto& ps = d.components.at(label);
  int ordinal = 0;
  for (std::size_t i = 0; i < position && i < ps.size(); ++i) {
    if (ps[i].role == Role::Under) ++ordinal;
  }
  return ordinal;
}

namespace {

// Under-pass update m_out = A^{-e} m_in A^{e}.  This direction is the one
// consistent with the splice construction's sign rule; see the skein tests.
MultilinearSeries conjugate(const MultilinearSeries& a, const MultilinearSeries& m,
                            int sign) {
  if (sign == 1) return a.inverse() * m * a;
  return a * m * a.inverse();
}

// One in-place sweep of the Wirtinger update over all components in label
// order.  Returns true if any entry changed.
bool sweep(const Diagram& d, ArcMeridianTable& table) {
  bool changed = false;
  for (int label : d.labels) {
    const auto& ps = d.components.at(label);
    int arc = 0;
    for (std::size_t pos = 0; pos < ps.size(); ++pos) {
      if (ps[pos].role != Role::Under) continue;
      const MultilinearSeries& in = table.at(label)[arc];
      PassLocation over = find_pass(d, ps[pos].crossing, Role::Over);
      MultilinearSeries next;
      if (over.on_loose) {
        // The loose strand is not part of L, so its over-passes do not
        // conjugate anything.
        next = in;
      } else {
        const MultilinearSeries& a =
            table.at(over.label)[arc_ordinal_at(d, over.label, over.position)];
        next = conjugate(a, in, d.signs.at(ps[pos].crossing));
      }
      ++arc;
      if (table.at(label)[arc] != next) {
        table.at(label)[arc] = next;
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

ArcMeridianTable solve_meridians(const Diagram& d) {
  ArcMeridianTable table;
  for (int label : d.labels) {
    MultilinearSeries m = MultilinearSeries::constant(1);
    m.add_term({label}, 1);  // 1 + X_label
    table[label] = std::vector<MultilinearSeries>(arcs_of(d, label).size(), m);
  }
  const int sweeps = static_cast<int>(d.labels.size());
  for (int i = 0; i < sweeps; ++i) sweep(d, table);
  if (sweep(d, table)) {
    throw InternalError("meridian fixpoint not reached after |labels| sweeps");
  }
  return table;
}

MultilinearSeries loose_closure_series(const Diagram& d,
                                       const ArcMeridianTable& table) {
  if (!d.loose) throw InvalidArgument("no loose component");
  MultilinearSeries result = MultilinearSeries::constant(1);
  for (const auto& p : *d.loose) {
    if (p.role != Role::Under) continue;
    PassLocation over = find_pass(d, p.crossing, Role::Over);
    if (over.on_loose) continue;  // self-crossing of l, invisible
    const MultilinearSeries& a =
        table.at(over.label)[arc_ordinal_at(d, over.label, over.position)];
    result = result * (d.signs.at(p.crossing) == 1 ? a : a.inverse());
  }
  return result;
}

GroupWord loose_closure_word(const Diagram& d, int depth,
                             std::size_t letter_guard) {
  if (!d.loose) throw InvalidArgument("no loose component");
  if (depth < 1) throw InvalidArgument("depth must be >= 1");

  std::map<int, std::vector<GroupWord>> table;
  for (int label : d.labels) {
    table[label] =
        std::vector<GroupWord>(arcs_of(d, label).size(), generator(label));
  }

  auto guard = [&](const GroupWord& w) {
    if (w.size() > letter_guard) {
      throw ResourceError("loose_closure_word: letter guard exceeded");
    }
    return w;
  };

  for (int round = 0; round < depth; ++round) {
    for (int label : d.labels) {
      const auto& ps = d.components.at(label);
      int arc = 0;
      for (std::size_t pos = 0; pos < ps.size(); ++pos) {
        if (ps[pos].role != Role::Under) continue;
        const GroupWord& in = table.at(label)[arc];
        PassLocation over = find_pass(d, ps[pos].crossing, Role::Over);
        GroupWord next;
        if (over.on_loose) {
          next = in;
        } else {
          const GroupWord& a =
              table.at(over.label)[arc_ordinal_at(d, over.label, over.position)];
          const GroupWord conj =
              d.signs.at(ps[pos].crossing) == 1 ? word_inverse(a) : a;
          next = guard(word_multiply(word_multiply(conj, in), word_inverse(conj)));
        }
        ++arc;
        table.at(label)[arc] = next;
      }
    }
  }

  GroupWord result;
  for (const auto& p : *d.loose) {
    if (p.role != Role::Under) continue;
    PassLocation over = find_pass(d, p.crossing, Role::Over);
    if (over.on_loose) continue;
    const GroupWord& a =
        table.at(over.label)[arc_ordinal_at(d, over.label, over.position)];
    result = guard(word_multiply(
        result, d.signs.at(p.crossing) == 1 ? a : word_inverse(a)));
  }
  return result;
}

}  // namespace mulink
