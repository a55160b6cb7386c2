#pragma once

#include <map>
#include <string>
#include <vector>

#include "mulink/group_ring.hpp"
#include "mulink/group_word.hpp"

namespace mulink {

// Element of the ring of integer series in noncommuting variables X_i modulo
// all monomials in which some variable repeats.  For a fixed label set the
// ring is finite-dimensional, so elements are exact finite coefficient
// tables.  Keys are index sequences with pairwise distinct entries; the empty
// key holds the constant term.
class MultilinearSeries {
 public:
  MultilinearSeries() = default;

  static MultilinearSeries zero() { return {}; }
  static MultilinearSeries constant(const Int& c);
  static MultilinearSeries generator(int index);  // the variable X_index

  // Adds c on the monomial keyed by seq; throws InvalidArgument on a
  // repeated index.  Zero coefficients are pruned.
  void add_term(const IndexSeq& seq, const Int& c);

  // Stored coefficient or 0; throws InvalidArgument on a repeated index.
  Int coefficient(const IndexSeq& seq) const;
  Int constant_term() const;

  const std::map<IndexSeq, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  MultilinearSeries operator+(const MultilinearSeries& o) const;
  MultilinearSeries operator-(const MultilinearSeries& o) const;
  MultilinearSeries operator*(const MultilinearSeries& o) const;
  bool operator==(const MultilinearSeries&) const = default;

  // Multiplicative inverse; requires constant term +1 or -1 (throws
  // InvalidArgument otherwise).  Finite geometric series: the augmentation
  // ideal is nilpotent.
  MultilinearSeries inverse() const;

  // "1 + X1*X2 - X2*X1": terms sorted by degree, then lexicographically.
  std::string str() const;

 private:
  std::map<IndexSeq, Int> coeffs_;
};

// Magnus expansion x_i -> 1 + X_i (and x_i^{-1} -> 1 - X_i).
MultilinearSeries magnus_of_word(const GroupWord& w);

}  // namespace mulink
