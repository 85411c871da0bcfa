#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace camb {

/// Thrown when a construction would exceed the configured size cap.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

using Gen = int;
using Word = std::vector<Gen>;

/// A group element, stored as its permutation of the root set.
/// Equality is structural; the containing CoxeterSystem interprets it.
struct Element {
  std::vector<std::uint8_t> perm;

  bool operator==(const Element& other) const { return perm == other.perm; }
  bool operator!=(const Element& other) const { return perm != other.perm; }
  bool operator<(const Element& other) const { return perm < other.perm; }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto b : e.perm) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A finite Coxeter system with an exact faithful action on its root set.
///
/// Elements act on roots on the left; the product convention is
/// (a*b)(x) = a(b(x)). All derived notions (inversion sets, sorting words,
/// the Kreweras complement) are fixed against this convention once and
/// validated by the test suite.
class CoxeterSystem {
public:
  static constexpr std::size_t kDefaultCap = 50000;

  /// Builds a system from a textual label: "A2", "B3", "D4", "F4", "G2",
  /// "I2(5)", or a product such as "A1xA1". Verifies finiteness and the
  /// expected group order.
  static CoxeterSystem build(const std::string& label,
                             std::size_t cap = kDefaultCap);

  /// The rank-0 system (trivial group). Used for parabolic recursions.
  static CoxeterSystem trivial();

  int rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<std::vector<int>>& coxeter_matrix() const {
    return matrix_;
  }
  /// Degrees of the invariants, grouped per irreducible factor.
  const std::vector<std::vector<int>>& factor_degrees() const {
    return factor_degrees_;
  }

  int num_roots() const { return static_cast<int>(neg_.size()); }
  int num_positive_roots() const { return static_cast<int>(neg_.size()) / 2; }

  Element identity() const;
  const Element& generator(Gen i) const;
  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element product(const Word& word) const;
  Element conjugate(const Element& by, const Element& x) const;

  bool is_identity(const Element& w) const;
  int length(const Element& w) const;
  bool is_left_descent(Gen i, const Element& w) const;
  bool is_right_descent(Gen i, const Element& w) const;
  std::vector<Gen> left_descents(const Element& w) const;

  /// All elements, sorted by (length, lexicographic canonical word).
  const std::vector<Element>& elements() const { return elements_; }
  int index_of(const Element& w) const;
  const Element& longest_element() const;

  const std::vector<Element>& reflections() const { return reflections_; }
  bool is_reflection(const Element& w) const;
  /// Left inversion set: reflections t with l(tw) < l(w).
  std::vector<Element> inversion_set(const Element& w) const;

  /// Right weak order: u <= w iff w = uv with lengths additive.
  bool leq_weak(const Element& u, const Element& w) const;

  int absolute_length(const Element& w) const;
  /// Absolute order: u <= w iff l_R(u) + l_R(u^{-1} w) = l_R(w).
  bool leq_absolute(const Element& u, const Element& w) const;

  /// Lexicographically smallest reduced word.
  Word canonical_word(const Element& w) const;
  std::string word_string(const Element& w) const;
  std::string name_of_gen(Gen i) const { return names_[i]; }

  /// Parses a word in generator names ("sts", "e", or space-separated).
  Element parse_element(const std::string& text) const;

  bool is_coxeter_element(const Element& w) const;
  /// All Coxeter words (each generator exactly once), in lex order.
  std::vector<Word> coxeter_words() const;

  /// Generalized Fuss-Catalan number of (W, m), from the degrees.
  long long fuss_catalan(int m) const;

  struct Parabolic;

  /// Subgroup generated by reflections simultaneously conjugate to a
  /// subset of the simple system. Throws std::invalid_argument otherwise.
  Parabolic parabolic_subgroup(const std::vector<Element>& J) const;

  std::size_t cap() const { return cap_; }

private:
  CoxeterSystem() = default;

  void finish_construction();
  Word canonical_word_impl(Element w) const;

  std::string label_;
  int rank_ = 0;
  std::size_t cap_ = kDefaultCap;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> matrix_;
  std::vector<std::vector<int>> factor_degrees_;

  // Root bookkeeping: neg_[i] = index of -root_i, positive_[i] flags sign.
  std::vector<int> neg_;
  std::vector<char> positive_;
  std::vector<Element> gens_;

  std::vector<Element> elements_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<int> abs_length_;
  std::vector<Element> reflections_;
  std::unordered_map<Element, int, ElementHash> reflection_index_;
  int longest_ = -1;
};

struct CoxeterSystem::Parabolic {
  CoxeterSystem sub;
  /// Image of each sub-system generator in the ambient group.
  std::vector<Element> generator_images;
  /// Conjugator g with g J_i g^{-1} simple, recorded for reference.
  Element conjugator;
  /// Maps a sub-system element to its image in the ambient group.
  Element embed(const Element& x) const;
};

/// Identifies the type of a finite Coxeter matrix, e.g. "A2", "A1xI2(5)".
/// Returns the label and a generator permutation mapping the canonical
/// system's generators onto the given matrix's indices.
std::optional<std::pair<std::string, std::vector<int>>> classify_coxeter_matrix(
    const std::vector<std::vector<int>>& matrix);

}  // namespace camb
