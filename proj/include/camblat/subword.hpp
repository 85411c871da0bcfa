#pragma once

#include "camblat/coxeter.hpp"
#include "camblat/poset.hpp"

namespace camb {

/// A positive Artin-monoid element kept in left-greedy normal form: the
/// factors are group elements with lengths additive and
/// DesL(f_{i+1}) contained in DesR(f_i).
struct BraidChain {
  std::vector<Element> factors;

  bool empty() const { return factors.empty(); }
  bool operator==(const BraidChain& other) const {
    return factors == other.factors;
  }
};

/// Normal form of x^m for a group element lift (typically w0^m).
BraidChain braid_power(const CoxeterSystem& sys, const Element& x, int m);

/// Normal form of the element spelled by an S-word.
BraidChain braid_from_word(const CoxeterSystem& sys, const Word& word);

int braid_letter_length(const CoxeterSystem& sys, const BraidChain& chain);

/// Whether the generator left-divides the chain in the Artin monoid.
bool braid_divisible(const CoxeterSystem& sys, const BraidChain& chain, Gen s);

/// Quotient s^{-1} * chain; requires divisibility.
BraidChain braid_divide_left(const CoxeterSystem& sys, const BraidChain& chain,
                             Gen s);

/// Facets of the subword complex on Q whose complements spell the target
/// Artin-monoid element. Positions are 1-based; output sorted.
std::vector<std::vector<int>> subword_facets_braid(const CoxeterSystem& sys,
                                                   const Word& Q,
                                                   const BraidChain& target);

/// Facets whose complements spell a length-a S-word of the group element w
/// (non-reduced words allowed when a > l(w)).
std::vector<std::vector<int>> subword_facets_group(const CoxeterSystem& sys,
                                                   const Word& Q,
                                                   const Element& w, int a);

/// Whether the word spelled at the complement of `facet` equals the target.
bool complement_spells(const CoxeterSystem& sys, const Word& Q,
                       const BraidChain& target, const std::vector<int>& facet);

/// The unique facet exchanging `position` (1-based, must lie in facet).
/// Throws std::invalid_argument if the position is exposed.
std::vector<int> subword_flip(const CoxeterSystem& sys, const Word& Q,
                              const BraidChain& target,
                              const std::vector<int>& facet, int position);

/// Transitive closure of increasing flips on the given facets.
FinitePoset flip_poset(const CoxeterSystem& sys, const Word& Q,
                       const BraidChain& target,
                       const std::vector<std::vector<int>>& facets);

}  // namespace camb
