#include "mulink/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mulink/errors.hpp"

namespace mulink {

using nlohmann::json;

namespace {

std::string role_str(Role r) { return r == Role::Over ? "o" : "u"; }

Role role_from_str(const std::string& s) {
  if (s == "o") return Role::Over;
  if (s == "u") return Role::Under;
  throw ParseError("bad pass role '" + s + "' (expected \"o\" or \"u\")");
}

int label_from_str(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 1) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad component label '" + s + "' (expected positive integer)");
  }
}

std::vector<Pass> passes_from_json(const json& arr) {
  if (!arr.is_array()) throw ParseError("pass list must be an array");
  std::vector<Pass> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw ParseError("pass must be [\"<crossing>\", \"o\"|\"u\"]");
    }
    out.push_back(Pass{p[0].get<std::string>(), role_from_str(p[1].get<std::string>())});
  }
  return out;
}

json passes_to_json(const std::vector<Pass>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(json::array({p.crossing, role_str(p.role)}));
  return arr;
}

// Crossing ids appearing in a pass range.
std::set<std::string> crossing_ids(const std::vector<Pass>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.crossing);
  return out;
}

std::vector<Pass> filter_removed(const std::vector<Pass>& ps,
                                 const std::set<std::string>& removed) {
  std::vector<Pass> out;
  for (const auto& p : ps) {
    if (!removed.count(p.crossing)) out.push_back(p);
  }
  return out;
}

}  // namespace

bool has_label(const Diagram& d, int label) {
  return std::find(d.labels.begin(), d.labels.end(), label) != d.labels.end();
}

Diagram parse_gauss(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("diagram document must be a JSON object");
  for (const char* key : {"n", "labels", "components", "loose", "loose_end", "signs"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  }

  Diagram d;
  if (!j["n"].is_number_integer()) throw ParseError("'n' must be an integer");
  int n = j["n"].get<int>();

  if (!j["labels"].is_array()) throw ParseError("'labels' must be an array");
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    d.labels.push_back(label_from_str(l.get<std::string>()));
  }

  if (!j["components"].is_object()) throw ParseError("'components' must be an object");
  for (const auto& [key, val] : j["components"].items()) {
    d.components[label_from_str(key)] = passes_from_json(val);
  }

  if (j["loose"].is_null()) {
    d.loose.reset();
  } else {
    d.loose = passes_from_json(j["loose"]);
  }

  const std::string le = j["loose_end"].is_string() ? j["loose_end"].get<std::string>() : "";
  if (le == "top") {
    d.loose_end = LooseEnd::Top;
  } else if (le == "bottom") {
    d.loose_end = LooseEnd::Bottom;
  } else {
    throw ParseError("'loose_end' must be \"top\" or \"bottom\"");
  }

  if (!j["signs"].is_object()) throw ParseError("'signs' must be an object");
  for (const auto& [key, val] : j["signs"].items()) {
    if (!val.is_number_integer() || (val.get<int>() != 1 && val.get<int>() != -1)) {
      throw ParseError("crossing sign must be 1 or -1 (crossing '" + key + "')");
    }
    d.signs[key] = val.get<int>();
  }

  if (n != static_cast<int>(d.labels.size())) {
    throw ParseError("'n' does not match the number of labels");
  }
  auto errs = validate(d);
  if (!errs.empty()) {
    std::ostringstream msg;
    msg << "invalid diagram:";
    for (const auto& e : errs) msg << "\n  " << e;
    throw ParseError(msg.str());
  }
  return d;
}

std::string serialize(const Diagram& d) {
  json j;
  j["n"] = static_cast<int>(d.labels.size());
  json labels = json::array();
  for (int l : d.labels) labels.push_back(std::to_string(l));
  j["labels"] = labels;
  json comps = json::object();
  for (const auto& [label, ps] : d.components) {
    comps[std::to_string(label)] = passes_to_json(ps);
  }
  j["components"] = comps;
  j["loose"] = d.loose ? passes_to_json(*d.loose) : json();
  j["loose_end"] = d.loose_end == LooseEnd::Top ? "top" : "bottom";
  json signs = json::object();
  for (const auto& [id, s] : d.signs) signs[id] = s;
  j["signs"] = signs;
  return j.dump(2) + "\n";
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> errs;

  std::set<int> label_set(d.labels.begin(), d.labels.end());
  if (label_set.size() != d.labels.size()) errs.push_back("duplicate labels");
  for (int l : d.labels) {
    if (!d.components.count(l)) {
      errs.push_back("label " + std::to_string(l) + " has no component path");
    }
  }
  for (const auto& [l, ps] : d.components) {
    if (!label_set.count(l)) {
      errs.push_back("component path for unknown label " + std::to_string(l));
    }
  }

  std::map<std::string, int> over_count, under_count;
  auto scan = [&](const std::vector<Pass>& ps, const std::string& where) {
    for (const auto& p : ps) {
      if (!d.signs.count(p.crossing)) {
        errs.push_back("pass on " + where + " references unknown crossing '" +
                       p.crossing + "'");
        continue;
      }
      (p.role == Role::Over ? over_count : under_count)[p.crossing]++;
    }
  };
  for (const auto& [l, ps] : d.components) scan(ps, "component " + std::to_string(l));
  if (d.loose) scan(*d.loose, "loose");

  for (const auto& [id, sign] : d.signs) {
    if (sign != 1 && sign != -1) {
      errs.push_back("crossing '" + id + "' has sign " + std::to_string(sign));
    }
    int o = over_count.count(id) ? over_count[id] : 0;
    int u = under_count.count(id) ? under_count[id] : 0;
    if (o != 1 || u != 1) {
      errs.push_back("crossing '" + id + "' occurs with " + std::to_string(o) +
                     " over and " + std::to_string(u) +
                     " under passes (expected 1 and 1)");
    }
  }
  return errs;
}

Diagram from_events(int n, int loose_position, const std::vector<Event>& events) {
  if (n < 0) throw InvalidArgument("from_events: n must be >= 0");
  const int strands = n + 1;
  if (loose_position < 1 || loose_position > strands) {
    throw InvalidArgument("from_events: loose_position out of range");
  }

  Diagram d;
  // Strand k (by starting position 1..n+1) is the loose one at
  // loose_position; the rest take labels 1..n in starting order.
  std::vector<int> strand_label(strands, 0);  // 0 marks the loose strand
  {
    int next = 1;
    for (int s = 0; s < strands; ++s) {
      if (s + 1 == loose_position) continue;
      strand_label[s] = next++;
    }
  }
  for (int s = 0; s < strands; ++s) {
    if (strand_label[s] != 0) {
      d.labels.push_back(strand_label[s]);
      d.components[strand_label[s]] = {};
    }
  }
  d.loose = std::vector<Pass>{};
  d.loose_end = LooseEnd::Bottom;

  std::vector<int> occupant(strands);  // position (0-based) -> strand index
  for (int s = 0; s < strands; ++s) occupant[s] = s;

  auto path_of = [&](int strand) -> std::vector<Pass>& {
    return strand_label[strand] == 0 ? *d.loose : d.components[strand_label[strand]];
  };

  int counter = 0;
  for (const auto& ev : events) {
    if (ev.position < 1 || ev.position >= strands) {
      throw InvalidArgument("from_events: event position out of range");
    }
    if (ev.exponent != 1 && ev.exponent != -1) {
      throw InvalidArgument("from_events: event exponent must be +1 or -1");
    }
    const int left = occupant[ev.position - 1];
    const int right = occupant[ev.position];
    const std::string id = "c" + std::to_string(++counter);
    if (ev.exponent == 1) {
      path_of(left).push_back(Pass{id, Role::Over});
      path_of(right).push_back(Pass{id, Role::Under});
    } else {
      path_of(left).push_back(Pass{id, Role::Under});
      path_of(right).push_back(Pass{id, Role::Over});
    }
    d.signs[id] = ev.exponent;
    std::swap(occupant[ev.position - 1], occupant[ev.position]);
  }
  return d;
}

Diagram parse_events(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("loose_position") ||
      !j.contains("events")) {
    throw ParseError("event document needs fields n, loose_position, events");
  }
  if (!j["n"].is_number_integer() || !j["loose_position"].is_number_integer() ||
      !j["events"].is_array()) {
    throw ParseError("bad event document field types");
  }
  std::vector<Event> events;
  for (const auto& e : j["events"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("event must be [position, 1|-1]");
    }
    events.push_back(Event{e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return from_events(j["n"].get<int>(), j["loose_position"].get<int>(), events);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

PassLocation find_pass(const Diagram& d, const std::string& id, Role role) {
  if (d.loose) {
    for (std::size_t i = 0; i < d.loose->size(); ++i) {
      const auto& p = (*d.loose)[i];
      if (p.crossing == id && p.role == role) return PassLocation{true, 0, i};
    }
  }
  for (const auto& [label, ps] : d.components) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (ps[i].crossing == id && ps[i].role == role) {
        return PassLocation{false, label, i};
      }
    }
  }
  throw InvalidArgument("no pass with the requested role for crossing '" + id + "'");
}

Diagram switch_crossing(const Diagram& d, const std::string& id) {
  if (!d.signs.count(id)) throw InvalidArgument("unknown crossing '" + id + "'");
  Diagram out = d;
  auto flip = [&](std::vector<Pass>& ps) {
    for (auto& p : ps) {
      if (p.crossing == id) p.role = p.role == Role::Over ? Role::Under : Role::Over;
    }
  };
  for (auto& [label, ps] : out.components) flip(ps);
  if (out.loose) flip(*out.loose);
  out.signs[id] = -out.signs[id];
  return out;
}

Diagram delete_component(const Diagram& d, int label) {
  if (!has_label(d, label)) {
    throw InvalidArgument("unknown component label " + std::to_string(label));
  }
  const std::set<std::string> removed = crossing_ids(d.components.at(label));

  Diagram out;
  for (int l : d.labels) {
    if (l != label) out.labels.push_back(l);
  }
  for (const auto& [l, ps] : d.components) {
    if (l != label) out.components[l] = filter_removed(ps, removed);
  }
  if (d.loose) out.loose = filter_removed(*d.loose, removed);
  out.loose_end = d.loose_end;
  for (const auto& [id, s] : d.signs) {
    if (!removed.count(id)) out.signs[id] = s;
  }
  return out;
}

SplitResult split_crossing(const Diagram& d, const std::string& id) {
  if (!d.signs.count(id)) throw InvalidArgument("unknown crossing '" + id + "'");
  if (!d.loose) throw InvalidArgument("split requires a loose component");

  PassLocation over = find_pass(d, id, Role::Over);
  PassLocation under = find_pass(d, id, Role::Under);
  if (over.on_loose == under.on_loose) {
    throw InvalidArgument(
        "split requires a crossing between the loose component and a strand of L");
  }
  const PassLocation& on_loose = over.on_loose ? over : under;
  const PassLocation& on_strand = over.on_loose ? under : over;
  const int k = on_strand.label;

  const auto& lp = *d.loose;
  const auto& kp = d.components.at(k);
  std::vector<Pass> v(lp.begin(), lp.begin() + on_loose.position);
  std::vector<Pass> w(lp.begin() + on_loose.position + 1, lp.end());
  std::vector<Pass> u(kp.begin(), kp.begin() + on_strand.position);
  std::vector<Pass> t(kp.begin() + on_strand.position + 1, kp.end());

  auto build = [&](const std::vector<Pass>& discard_a,
                   const std::vector<Pass>& discard_b,
                   const std::vector<Pass>& first_seg,
                   const std::vector<Pass>& second_seg, bool reverse_second,
                   LooseEnd end) {
    std::set<std::string> removed = crossing_ids(discard_a);
    for (const auto& cid : crossing_ids(discard_b)) removed.insert(cid);
    removed.insert(id);

    Diagram out;
    for (int l : d.labels) {
      if (l != k) out.labels.push_back(l);
    }
    for (const auto& [l, ps] : d.components) {
      if (l != k) out.components[l] = filter_removed(ps, removed);
    }
    std::vector<Pass> loose = filter_removed(first_seg, removed);
    std::vector<Pass> second = filter_removed(second_seg, removed);
    if (reverse_second) std::reverse(second.begin(), second.end());
    loose.insert(loose.end(), second.begin(), second.end());
    out.loose = std::move(loose);
    out.loose_end = end;

    for (const auto& [cid, s] : d.signs) {
      if (removed.count(cid)) continue;
      int sign = s;
      if (reverse_second) {
        // Reversing one strand of a crossing negates its sign; reversing
        // both (a self-crossing inside the reversed segment) preserves it.
        int passes_on_u = 0;
        for (const auto& p : u) {
          if (p.crossing == cid) ++passes_on_u;
        }
        if (passes_on_u == 1) sign = -sign;
      }
      out.signs[cid] = sign;
    }
    return out;
  };

  SplitResult r;
  // l_0: along L_k to the crossing, then along l; orientations respected.
  r.zero = build(v, t, u, w, false, d.loose_end);
  // l_inf: along l to the crossing, then back up L_k against its orientation.
  r.infinity = build(w, t, v, u, true, LooseEnd::Top);
  return r;
}

int loose_underpass_signs(const Diagram& d, int label) {
  if (!d.loose) throw InvalidArgument("no loose component");
  if (!has_label(d, label)) {
    throw InvalidArgument("unknown component label " + std::to_string(label));
  }
  int sum = 0;
  const auto& ps = d.components.at(label);
  for (const auto& p : *d.loose) {
    if (p.role != Role::Under) continue;
    for (const auto& q : ps) {
      if (q.crossing == p.crossing && q.role == Role::Over) {
        sum += d.signs.at(p.crossing);
      }
    }
  }
  return sum;
}

}  // namespace mulink
