#pragma once

#include <unordered_map>

#include "camblat/coxeter.hpp"
#include "camblat/poset.hpp"
#include "camblat/subword.hpp"

namespace camb {

/// A colored reflection: position `index` in one of the copies of R(c),
/// copy number `color`. Totally ordered by (color, index).
struct ColoredLetter {
  int color = 0;
  int index = 0;

  bool operator==(const ColoredLetter& o) const {
    return color == o.color && index == o.index;
  }
  bool operator<(const ColoredLetter& o) const {
    return color != o.color ? color < o.color : index < o.index;
  }
};

/// An m-factorization of c: a reduced R-word for c realized as a strictly
/// increasing subword of R(c)^{m+1}, stored as sorted extended positions
/// color * |R| + index.
struct MFactorization {
  int m = 1;
  std::vector<int> ext;

  bool operator==(const MFactorization& o) const {
    return m == o.m && ext == o.ext;
  }
  bool operator<(const MFactorization& o) const { return ext < o.ext; }
  bool contains(int e) const;
};

/// Shared data for a fixed (W, c): the c-sorting word of w0, the reflection
/// order R(c), the noncrossing partitions and their c-increasing words.
class CambrianContext {
public:
  CambrianContext(const CoxeterSystem& sys, Word cword);

  const CoxeterSystem& sys() const { return *sys_; }
  const Word& cword() const { return cword_; }
  const Element& coxeter_element() const { return c_; }
  const Word& w0_sorting_word() const { return w0_word_; }

  const std::vector<Element>& reflection_order() const { return refl_order_; }
  int num_reflections() const { return static_cast<int>(refl_order_.size()); }
  const Element& refl(int index) const { return refl_order_[index]; }
  int refl_index(const Element& t) const;

  const std::vector<Element>& nc() const { return nc_; }
  bool in_nc(const Element& w) const { return nc_idx_.count(w) > 0; }
  int nc_index(const Element& w) const { return nc_idx_.at(w); }

  /// The unique reduced R-word of w that is a subword of R(c), as indices
  /// into R(c). Uniqueness is asserted, not assumed.
  const std::vector<int>& c_increasing_word(const Element& w) const;

  ColoredLetter letter_of(int ext) const {
    return {ext / num_reflections(), ext % num_reflections()};
  }
  int ext_of(const ColoredLetter& l) const {
    return l.color * num_reflections() + l.index;
  }
  std::string letter_name(const ColoredLetter& l) const;

private:
  const CoxeterSystem* sys_;
  Word cword_;
  Element c_;
  Word w0_word_;
  std::vector<Element> refl_order_;
  std::unordered_map<Element, int, ElementHash> refl_idx_;
  std::vector<Element> nc_;
  std::unordered_map<Element, int, ElementHash> nc_idx_;
  mutable std::unordered_map<Element, std::vector<int>, ElementHash> incr_cache_;
};

// --- Sorting words and sortable elements -----------------------------------

/// The c-sorting word: leftmost reduced subword of c^infinity for w.
Word sorting_word(const CoxeterSystem& sys, const Word& cword, const Element& w);

/// Letters of the sorting word grouped by copy of c.
std::vector<std::vector<Gen>> sorting_blocks(const CoxeterSystem& sys,
                                             const Word& cword, const Element& w);

bool is_sortable(const CoxeterSystem& sys, const Word& cword, const Element& w);

std::vector<Element> sortable_elements(const CoxeterSystem& sys,
                                       const Word& cword);

/// Weak order restricted to the c-sortable elements.
FinitePoset cambrian_sort_poset(const CoxeterSystem& sys, const Word& cword);

// --- Subword-complex version ------------------------------------------------

/// The m-Cambrian search word: c followed by the c-sorting word of w0^m,
/// the latter computed by a greedy scan of c^infinity against the
/// length-additive Artin-monoid power.
Word m_search_word(const CambrianContext& ctx, int m);

std::vector<std::vector<int>> m_sc_facets(const CambrianContext& ctx, int m,
                                          std::size_t cap = CoxeterSystem::kDefaultCap);

FinitePoset m_sc_poset(const CambrianContext& ctx, int m,
                       std::size_t cap = CoxeterSystem::kDefaultCap);

// --- Noncrossing version ----------------------------------------------------

std::vector<MFactorization> m_factorizations(
    const CambrianContext& ctx, int m,
    std::size_t cap = CoxeterSystem::kDefaultCap);

/// The minimal m-factorization: the c-increasing word of c in color 0.
MFactorization bottom_factorization(const CambrianContext& ctx, int m);

/// Increasing rotation at a colored letter of color < m: the letter gains a
/// color while the letters strictly between it and its target are
/// conjugated and re-placed at their forced positions.
MFactorization colored_rotation(const CambrianContext& ctx,
                                const MFactorization& f, const ColoredLetter& at);

struct RotationEdge {
  int from = 0;
  int to = 0;
  ColoredLetter letter;
};

/// All increasing rotations among `facts` (which must be sorted).
std::vector<RotationEdge> rotation_edges(const CambrianContext& ctx,
                                         const std::vector<MFactorization>& facts);

FinitePoset m_nc_poset(const CambrianContext& ctx,
                       const std::vector<MFactorization>& facts);

std::string factorization_label(const CambrianContext& ctx,
                                const MFactorization& f);

// --- Explicit correspondences ----------------------------------------------

/// Colored reflections of a facet: each facet position p carries the
/// reflection obtained by conjugating its letter by the complement prefix,
/// colored by the number of earlier complement occurrences of that value.
MFactorization facet_to_factorization(const CambrianContext& ctx, int m,
                                      const Word& Q, const std::vector<int>& facet);

/// Facet of the Cambrian subword complex attached to a sortable element:
/// its sorting word embedded leftmost, completed rightmost to w0.
std::vector<int> sortable_to_facet(const CambrianContext& ctx, const Element& v);

struct ThreeVersions {
  std::vector<Element> sortables;
  std::vector<std::vector<int>> facets;
  std::vector<MFactorization> factorizations;
  FinitePoset sort_poset;
  FinitePoset sc_poset;
  FinitePoset nc_poset;
  std::vector<int> sort_to_sc;
  std::vector<int> sc_to_nc;
  bool verdict = false;
  std::string counterexample;
};

/// Builds all three Cambrian posets with the explicit alignment maps and
/// verifies that both maps are order-isomorphisms.
ThreeVersions three_versions(const CambrianContext& ctx);

}  // namespace camb
