#include "camblat/poset.hpp"

#include <algorithm>
#include <map>

namespace camb {

std::string count_to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

FinitePoset FinitePoset::from_leq(std::vector<std::string> labels,
                                  const std::function<bool(int, int)>& leq) {
  FinitePoset p;
  p.labels_ = std::move(labels);
  const int n = p.size();
  const int words = (n + 63) / 64;
  p.leq_.assign(n, Row(words, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a == b || leq(a, b)) set_bit(p.leq_[a], b);
  p.finish(true);
  return p;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<int, int>>& covers) {
  return from_relations(std::move(labels), covers);
}

FinitePoset FinitePoset::from_relations(std::vector<std::string> labels,
                                        const std::vector<std::pair<int, int>>& rels) {
  FinitePoset p;
  p.labels_ = std::move(labels);
  const int n = p.size();
  const int words = (n + 63) / 64;
  p.leq_.assign(n, Row(words, 0));
  for (int a = 0; a < n; ++a) set_bit(p.leq_[a], a);
  for (auto [a, b] : rels) set_bit(p.leq_[a], b);
  // Warshall closure over bitset rows.
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (p.bit(p.leq_[a], k))
        for (int w = 0; w < words; ++w) p.leq_[a][w] |= p.leq_[k][w];
  p.finish(true);
  return p;
}

void FinitePoset::finish(bool verify_antisymmetry) {
  const int n = size();
  if (verify_antisymmetry) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (bit(leq_[a], b) && bit(leq_[b], a))
          throw OrderViolation("antisymmetry fails between '" + labels_[a] +
                               "' and '" + labels_[b] + "'");
  }
  covers_.clear();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !bit(leq_[a], b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && bit(leq_[a], c) && bit(leq_[c], b)) direct = false;
      if (direct) covers_.emplace_back(a, b);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

bool FinitePoset::leq(int a, int b) const { return bit(leq_[a], b); }

std::vector<int> FinitePoset::upper_covers(int a) const {
  std::vector<int> out;
  for (auto [x, y] : covers_)
    if (x == a) out.push_back(y);
  return out;
}

std::vector<int> FinitePoset::lower_covers(int a) const {
  std::vector<int> out;
  for (auto [x, y] : covers_)
    if (y == a) out.push_back(x);
  return out;
}

std::optional<int> FinitePoset::bottom() const {
  int found = -1;
  for (int a = 0; a < size(); ++a) {
    bool minimal = true;
    for (int b = 0; b < size(); ++b)
      if (b != a && leq(b, a)) minimal = false;
    if (minimal) {
      if (found >= 0) return std::nullopt;
      found = a;
    }
  }
  if (found < 0) return std::nullopt;
  return found;
}

std::optional<int> FinitePoset::top() const {
  int found = -1;
  for (int a = 0; a < size(); ++a) {
    bool maximal = true;
    for (int b = 0; b < size(); ++b)
      if (b != a && leq(a, b)) maximal = false;
    if (maximal) {
      if (found >= 0) return std::nullopt;
      found = a;
    }
  }
  if (found < 0) return std::nullopt;
  return found;
}

std::vector<std::pair<int, int>> FinitePoset::intervals() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (leq(a, b)) out.emplace_back(a, b);
  return out;
}

Count FinitePoset::num_intervals() const {
  Count total = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (leq(a, b)) ++total;
  return total;
}

Count FinitePoset::count_multichains(int m) const {
  return count_multichains_no_flagged_repeat(m, std::vector<char>(size(), 0));
}

Count FinitePoset::count_multichains_no_flagged_repeat(
    int m, const std::vector<char>& flagged) const {
  if (m <= 0) return m == 0 ? 1 : 0;
  const int n = size();
  std::vector<Count> cur(n, 1);
  for (int step = 1; step < m; ++step) {
    std::vector<Count> nxt(n, 0);
    for (int b = 0; b < n; ++b) {
      Count acc = 0;
      for (int a = 0; a < n; ++a) {
        if (!leq(a, b)) continue;
        if (a == b && flagged[b]) continue;
        acc += cur[a];
      }
      nxt[b] = acc;
    }
    cur = std::move(nxt);
  }
  Count total = 0;
  for (int a = 0; a < n; ++a) total += cur[a];
  return total;
}

std::vector<std::vector<int>> FinitePoset::multichains(int k) const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      out.push_back(chain);
      return;
    }
    for (int b = 0; b < size(); ++b) {
      if (!chain.empty() && !leq(chain.back(), b)) continue;
      chain.push_back(b);
      rec(depth + 1);
      chain.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> FinitePoset::saturated_chains(int a, int b) const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain = {a};
  std::function<void()> rec = [&]() {
    int cur = chain.back();
    if (cur == b) {
      out.push_back(chain);
      return;
    }
    for (auto [x, y] : covers_) {
      if (x != cur || !leq(y, b)) continue;
      chain.push_back(y);
      rec();
      chain.pop_back();
    }
  };
  if (leq(a, b)) rec();
  return out;
}

int FinitePoset::longest_chain_length() const {
  const int n = size();
  std::vector<int> depth(n, 0);
  // covers_ is sorted; process in topological order by repeated relaxation.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : covers_) {
      if (depth[b] < depth[a] + 1) {
        depth[b] = depth[a] + 1;
        changed = true;
      }
    }
  }
  int best = 0;
  for (int d : depth) best = std::max(best, d);
  return best;
}

namespace {

// Invariant vector used to pre-partition elements before backtracking.
std::vector<std::size_t> refine_colors(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::size_t> color(n, 0);
  for (int a = 0; a < n; ++a) {
    int down = 0, up = 0;
    for (int b = 0; b < n; ++b) {
      if (p.leq(b, a)) ++down;
      if (p.leq(a, b)) ++up;
    }
    color[a] = static_cast<std::size_t>(down) * 1000003u + up;
  }
  for (int round = 0; round < 4; ++round) {
    std::vector<std::size_t> next(n);
    for (int a = 0; a < n; ++a) {
      std::vector<std::size_t> lows, highs;
      for (int b : p.lower_covers(a)) lows.push_back(color[b]);
      for (int b : p.upper_covers(a)) highs.push_back(color[b]);
      std::sort(lows.begin(), lows.end());
      std::sort(highs.begin(), highs.end());
      std::size_t h = color[a];
      for (auto v : lows) h = h * 1000000007u + v + 17;
      for (auto v : highs) h = h * 998244353u + v + 29;
      next[a] = h;
    }
    color = std::move(next);
  }
  return color;
}

}  // namespace

std::optional<std::vector<int>> FinitePoset::isomorphism_to(
    const FinitePoset& other) const {
  const int n = size();
  if (other.size() != n) return std::nullopt;
  if (covers_.size() != other.covers_.size()) return std::nullopt;

  auto ca = refine_colors(*this);
  auto cb = refine_colors(other);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  // Match rarest colors first to keep the search shallow.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::map<std::size_t, int> freq;
  for (auto v : ca) ++freq[v];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[ca[x]] != freq[ca[y]]) return freq[ca[x]] < freq[ca[y]];
    return x < y;
  });

  std::function<bool(int)> rec = [&](int pos) {
    if (pos == n) return true;
    int a = order[pos];
    for (int b = 0; b < n; ++b) {
      if (used[b] || cb[b] != ca[a]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        int a2 = order[q];
        if (leq(a, a2) != other.leq(b, image[a2])) ok = false;
        if (leq(a2, a) != other.leq(image[a2], b)) ok = false;
      }
      if (!ok) continue;
      image[a] = b;
      used[b] = 1;
      if (rec(pos + 1)) return true;
      image[a] = -1;
      used[b] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

FinitePoset FinitePoset::induced(const std::vector<int>& keep) const {
  std::vector<std::string> labels;
  for (int i : keep) labels.push_back(labels_[i]);
  const int k = static_cast<int>(keep.size());
  FinitePoset p;
  p.labels_ = std::move(labels);
  const int words = (k + 63) / 64;
  p.leq_.assign(k, Row(words, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (leq(keep[a], keep[b])) set_bit(p.leq_[a], b);
  p.finish(false);
  return p;
}

bool FinitePoset::operator==(const FinitePoset& other) const {
  return labels_ == other.labels_ && leq_ == other.leq_;
}

}  // namespace camb
