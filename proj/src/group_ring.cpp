#include "mulink/group_ring.hpp"

#include <set>

#include "mulink/errors.hpp"

namespace mulink {

GroupRingElement GroupRingElement::one() {
  GroupRingElement e;
  e.add_term(GroupWord{}, 1);
  return e;
}

GroupRingElement GroupRingElement::from_word(const GroupWord& w) {
  GroupRingElement e;
  e.add_term(w, 1);
  return e;
}

void GroupRingElement::add_term(const GroupWord& w, const Int& c) {
  if (c == 0) return;
  GroupWord key = word_normalize(w);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      r.add_term(word_multiply(wa, wb), ca * cb);
    }
  }
  return r;
}

Int augment(const GroupRingElement& e) {
  Int s = 0;
  for (const auto& [w, c] : e.terms()) s += c;
  return s;
}

GroupRingElement fox_derivative(int index, const GroupWord& w) {
  GroupRingElement out;
  GroupWord prefix;
  for (const auto& l : w.letters) {
    if (l.index == index) {
      if (l.exponent == 1) {
        out.add_term(prefix, 1);
      } else {
        GroupWord p = prefix;
        p.letters.push_back(l);  // prefix * x_i^{-1}
        out.add_term(p, -1);
      }
    }
    prefix.letters.push_back(l);
  }
  return out;
}

GroupRingElement fox_derivative(int index, const GroupRingElement& e,
                                std::size_t term_guard) {
  GroupRingElement out;
  for (const auto& [w, c] : e.terms()) {
    const GroupRingElement dw_elem = fox_derivative(index, w);
    for (const auto& [dw, dc] : dw_elem.terms()) {
      out.add_term(dw, c * dc);
    }
    if (out.term_count() > term_guard) {
      throw ResourceError("fox_derivative: term guard exceeded");
    }
  }
  return out;
}

bool has_repeated_index(const IndexSeq& seq) {
  std::set<int> seen;
  for (int i : seq) {
    if (!seen.insert(i).second) return true;
  }
  return false;
}

Int mu_of_word(const GroupWord& w, const IndexSeq& seq,
               std::size_t term_guard) {
  if (has_repeated_index(seq)) {
    throw InvalidArgument("mu_of_word: repeated index in sequence");
  }
  GroupRingElement e = GroupRingElement::from_word(w);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    e = fox_derivative(*it, e, term_guard);
  }
  return augment(e);
}

}  // namespace mulink
