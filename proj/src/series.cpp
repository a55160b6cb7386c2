#include "mulink/series.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "mulink/errors.hpp"

namespace mulink {

namespace {

void check_distinct(const IndexSeq& seq) {
  if (has_repeated_index(seq)) {
    throw InvalidArgument("series: repeated index in monomial");
  }
}

// Concatenation of two distinct-index monomials, or nullopt when a variable
// would repeat (the monomial dies in the quotient).
std::optional<IndexSeq> concat_monomials(const IndexSeq& a, const IndexSeq& b) {
  for (int i : b) {
    if (std::find(a.begin(), a.end(), i) != a.end()) return std::nullopt;
  }
  IndexSeq r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

MultilinearSeries MultilinearSeries::constant(const Int& c) {
  MultilinearSeries s;
  s.add_term({}, c);
  return s;
}

MultilinearSeries MultilinearSeries::generator(int index) {
  MultilinearSeries s;
  s.add_term({index}, 1);
  return s;
}

void MultilinearSeries::add_term(const IndexSeq& seq, const Int& c) {
  check_distinct(seq);
  if (c == 0) return;
  auto it = coeffs_.find(seq);
  if (it == coeffs_.end()) {
    coeffs_.emplace(seq, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int MultilinearSeries::coefficient(const IndexSeq& seq) const {
  check_distinct(seq);
  auto it = coeffs_.find(seq);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int MultilinearSeries::constant_term() const { return coefficient({}); }

MultilinearSeries MultilinearSeries::operator+(const MultilinearSeries& o) const {
  MultilinearSeries r = *this;
  for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
  return r;
}

MultilinearSeries MultilinearSeries::operator-(const MultilinearSeries& o) const {
  MultilinearSeries r = *this;
  for (const auto& [k, c] : o.coeffs_) r.add_term(k, -c);
  return r;
}

MultilinearSeries MultilinearSeries::operator*(const MultilinearSeries& o) const {
  MultilinearSeries r;
  for (const auto& [ka, ca] : coeffs_) {
    for (const auto& [kb, cb] : o.coeffs_) {
      if (auto k = concat_monomials(ka, kb)) r.add_term(*k, ca * cb);
    }
  }
  return r;
}

MultilinearSeries MultilinearSeries::inverse() const {
  Int c = constant_term();
  if (c != 1 && c != -1) {
    throw InvalidArgument("series inverse: constant term must be +1 or -1");
  }
  // a = c (1 + c N) with N the augmentation part, so
  // a^{-1} = c * sum_k (-c N)^k; N is nilpotent, the sum is finite.
  MultilinearSeries n = *this - constant(c);
  MultilinearSeries pow = constant(1);
  MultilinearSeries result;
  Int factor = c;
  while (!pow.is_zero()) {
    MultilinearSeries scaled = pow * constant(factor);
    result = result + scaled;
    pow = pow * n;
    factor *= -c;  // factor at step k is c * (-c)^k
  }
  return result;
}

std::string MultilinearSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<const std::pair<const IndexSeq, Int>*> terms;
  terms.reserve(coeffs_.size());
  for (const auto& t : coeffs_) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) {
      return a->first.size() < b->first.size();
    }
    return a->first < b->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : terms) {
    const auto& [seq, coeff] = *t;
    Int c = coeff;
    if (first) {
      if (c < 0) {
        out << '-';
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (seq.empty()) {
      out << c;
    } else {
      if (c != 1) out << c << '*';
      bool inner_first = true;
      for (int i : seq) {
        if (!inner_first) out << '*';
        out << 'X' << i;
        inner_first = false;
      }
    }
  }
  return out.str();
}

MultilinearSeries magnus_of_word(const GroupWord& w) {
  MultilinearSeries r = MultilinearSeries::constant(1);
  for (const auto& l : w.letters) {
    MultilinearSeries f = MultilinearSeries::constant(1);
    f.add_term({l.index}, l.exponent);
    r = r * f;
  }
  return r;
}

}  // namespace mulink
