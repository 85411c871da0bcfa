#include "camblat/subword.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace camb {

namespace {

// Left-greedy normalization by local sliding: move descents of the right
// factor into the left factor until stable.
void normalize(const CoxeterSystem& sys, std::vector<Element>& factors) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      Element& a = factors[i];
      Element& b = factors[i + 1];
      for (int s = 0; s < sys.rank(); ++s) {
        while (sys.is_left_descent(s, b) && !sys.is_right_descent(s, a)) {
          a = sys.mul(a, sys.generator(s));
          b = sys.mul(sys.generator(s), b);
          changed = true;
        }
      }
    }
    std::erase_if(factors, [&](const Element& f) { return sys.is_identity(f); });
  }
}

}  // namespace

BraidChain braid_power(const CoxeterSystem& sys, const Element& x, int m) {
  BraidChain chain;
  for (int i = 0; i < m; ++i) chain.factors.push_back(x);
  normalize(sys, chain.factors);
  return chain;
}

BraidChain braid_from_word(const CoxeterSystem& sys, const Word& word) {
  BraidChain chain;
  for (Gen s : word) {
    chain.factors.push_back(sys.generator(s));
    normalize(sys, chain.factors);
  }
  return chain;
}

int braid_letter_length(const CoxeterSystem& sys, const BraidChain& chain) {
  int total = 0;
  for (const auto& f : chain.factors) total += sys.length(f);
  return total;
}

bool braid_divisible(const CoxeterSystem& sys, const BraidChain& chain, Gen s) {
  if (chain.factors.empty()) return false;
  return sys.is_left_descent(s, chain.factors.front());
}

BraidChain braid_divide_left(const CoxeterSystem& sys, const BraidChain& chain,
                             Gen s) {
  if (!braid_divisible(sys, chain, s))
    throw std::invalid_argument("letter does not divide the chain");
  BraidChain out = chain;
  out.factors.front() = sys.mul(sys.generator(s), out.factors.front());
  normalize(sys, out.factors);
  return out;
}

std::vector<std::vector<int>> subword_facets_braid(const CoxeterSystem& sys,
                                                   const Word& Q,
                                                   const BraidChain& target) {
  const int p = static_cast<int>(Q.size());
  const int a = braid_letter_length(sys, target);
  const int facet_size = p - a;
  std::vector<std::vector<int>> out;
  if (facet_size < 0) return out;

  std::vector<int> facet;
  std::function<void(int, const BraidChain&)> rec = [&](int pos,
                                                        const BraidChain& rest) {
    int remaining = braid_letter_length(sys, rest);
    int slots = p - pos + 1;
    if (remaining > slots) return;
    if (slots - remaining != facet_size - static_cast<int>(facet.size())) return;
    if (pos > p) {
      if (rest.empty() && static_cast<int>(facet.size()) == facet_size)
        out.push_back(facet);
      return;
    }
    if (static_cast<int>(facet.size()) < facet_size) {
      facet.push_back(pos);
      rec(pos + 1, rest);
      facet.pop_back();
    }
    if (braid_divisible(sys, rest, Q[pos - 1]))
      rec(pos + 1, braid_divide_left(sys, rest, Q[pos - 1]));
  };
  rec(1, target);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subword_facets_group(const CoxeterSystem& sys,
                                                   const Word& Q,
                                                   const Element& w, int a) {
  const int p = static_cast<int>(Q.size());
  if (a < sys.length(w) || a > p)
    throw std::invalid_argument("word length outside [l(w), |Q|]");
  const int facet_size = p - a;
  std::vector<std::vector<int>> out;
  std::vector<int> facet;
  // prefix[pos] = product of chosen letters so far, tracked on the stack.
  std::function<void(int, const Element&, int)> rec =
      [&](int pos, const Element& prefix, int used) {
        if (a - used > p - pos + 1) return;
        if (pos > p) {
          if (used == a && prefix == w) out.push_back(facet);
          return;
        }
        if (static_cast<int>(facet.size()) < facet_size) {
          facet.push_back(pos);
          rec(pos + 1, prefix, used);
          facet.pop_back();
        }
        if (used < a)
          rec(pos + 1, sys.mul(prefix, sys.generator(Q[pos - 1])), used + 1);
      };
  rec(1, sys.identity(), 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool complement_spells(const CoxeterSystem& sys, const Word& Q,
                       const BraidChain& target, const std::vector<int>& facet) {
  std::vector<char> in_facet(Q.size() + 1, 0);
  for (int pos : facet) {
    if (pos < 1 || pos > static_cast<int>(Q.size())) return false;
    in_facet[pos] = 1;
  }
  Word word;
  for (int pos = 1; pos <= static_cast<int>(Q.size()); ++pos)
    if (!in_facet[pos]) word.push_back(Q[pos - 1]);
  return braid_from_word(sys, word) == target;
}

std::vector<int> subword_flip(const CoxeterSystem& sys, const Word& Q,
                              const BraidChain& target,
                              const std::vector<int>& facet, int position) {
  if (std::find(facet.begin(), facet.end(), position) == facet.end())
    throw std::invalid_argument("flip position not in facet");
  std::vector<int> found;
  for (int q = 1; q <= static_cast<int>(Q.size()); ++q) {
    if (q == position) continue;
    if (std::find(facet.begin(), facet.end(), q) != facet.end()) continue;
    std::vector<int> candidate;
    for (int x : facet)
      if (x != position) candidate.push_back(x);
    candidate.push_back(q);
    std::sort(candidate.begin(), candidate.end());
    if (complement_spells(sys, Q, target, candidate)) found.push_back(q);
  }
  if (found.size() != 1)
    throw std::invalid_argument("position is exposed: no unique exchange");
  std::vector<int> result;
  for (int x : facet)
    if (x != position) result.push_back(x);
  result.push_back(found.front());
  std::sort(result.begin(), result.end());
  return result;
}

FinitePoset flip_poset(const CoxeterSystem& sys, const Word& Q,
                       const BraidChain& target,
                       const std::vector<std::vector<int>>& facets) {
  (void)sys;
  (void)Q;
  (void)target;
  std::vector<std::string> labels;
  for (const auto& f : facets) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "}";
    labels.push_back(os.str());
  }
  // Adjacent facets share all but one position; the exchange is increasing
  // when the removed position is smaller than the added one. For group
  // targets the exchange partner is unique, for monoid targets it need not
  // be, so edges come from the pairwise adjacency test.
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      std::vector<int> only_i, only_j;
      std::set_difference(facets[i].begin(), facets[i].end(), facets[j].begin(),
                          facets[j].end(), std::back_inserter(only_i));
      std::set_difference(facets[j].begin(), facets[j].end(), facets[i].begin(),
                          facets[i].end(), std::back_inserter(only_j));
      if (only_i.size() != 1 || only_j.size() != 1) continue;
      if (only_i[0] < only_j[0])
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      else
        edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
    }
  }
  return FinitePoset::from_relations(labels, edges);
}

}  // namespace camb
