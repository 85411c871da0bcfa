#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace camb {

/// Multichain counts overflow 64 bits well before desk scale is exhausted.
using Count = unsigned __int128;

std::string count_to_string(Count value);

/// Thrown when a candidate order relation violates antisymmetry; reported
/// as a finding, never repaired silently.
class OrderViolation : public std::runtime_error {
public:
  explicit OrderViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A finite poset over opaque labels: irredundant Hasse edges plus a dense
/// reachability bitmap for O(1) comparability queries.
class FinitePoset {
public:
  FinitePoset() = default;

  /// From a comparability oracle (must already be a partial order).
  static FinitePoset from_leq(std::vector<std::string> labels,
                              const std::function<bool(int, int)>& leq);

  /// From cover relations; reachability is their reflexive-transitive closure.
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& covers);

  /// From an arbitrary relation set: takes the reflexive-transitive closure
  /// and verifies antisymmetry, throwing OrderViolation on failure.
  static FinitePoset from_relations(std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& rels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  bool leq(int a, int b) const;
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  /// Hasse edges (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> upper_covers(int a) const;
  std::vector<int> lower_covers(int a) const;

  /// Unique minimum / maximum, or nullopt.
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  std::vector<std::pair<int, int>> intervals() const;
  Count num_intervals() const;

  /// Number of weakly increasing m-tuples.
  Count count_multichains(int m) const;
  /// Same, but forbidding x
  /// immediately followed by the same x when flagged (red elements).
  Count count_multichains_no_flagged_repeat(int m,
                                            const std::vector<char>& flagged) const;
  /// All weakly increasing k-tuples, in lexicographic order.
  std::vector<std::vector<int>> multichains(int k) const;

  /// All saturated chains from a to b (inclusive endpoints).
  std::vector<std::vector<int>> saturated_chains(int a, int b) const;

  int longest_chain_length() const;

  /// Order isomorphism test; returns the image of each element of `this`
  /// in `other`, or nullopt. Deterministic.
  std::optional<std::vector<int>> isomorphism_to(const FinitePoset& other) const;

  /// Induced subposet; labels and order inherited, element i of the result
  /// is keep[i] here.
  FinitePoset induced(const std::vector<int>& keep) const;

  bool operator==(const FinitePoset& other) const;

private:
  using Row = std::vector<std::uint64_t>;
  bool bit(const Row& row, int j) const { return (row[j >> 6] >> (j & 63)) & 1; }
  static void set_bit(Row& row, int j) { row[j >> 6] |= std::uint64_t(1) << (j & 63); }
  void finish(bool verify_antisymmetry);

  std::vector<std::string> labels_;
  std::vector<Row> leq_;  // leq_[a] has bit b iff a <= b
  std::vector<std::pair<int, int>> covers_;
};

}  // namespace camb
