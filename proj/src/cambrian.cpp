#include "camblat/cambrian.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace camb {

bool MFactorization::contains(int e) const {
  return std::binary_search(ext.begin(), ext.end(), e);
}

CambrianContext::CambrianContext(const CoxeterSystem& sys, Word cword)
    : sys_(&sys), cword_(std::move(cword)) {
  const int n = sys.rank();
  std::vector<char> seen(n, 0);
  if (static_cast<int>(cword_.size()) != n)
    throw std::invalid_argument("Coxeter word must use each generator exactly once");
  for (Gen g : cword_) {
    if (g < 0 || g >= n || seen[g])
      throw std::invalid_argument("Coxeter word must use each generator exactly once");
    seen[g] = 1;
  }
  c_ = sys.product(cword_);
  w0_word_ = sorting_word(sys, cword_, sys.longest_element());

  Element prefix = sys.identity();
  for (Gen s : w0_word_) {
    Element t = sys.conjugate(prefix, sys.generator(s));
    if (!refl_idx_.emplace(t, static_cast<int>(refl_order_.size())).second)
      throw std::logic_error("repeated reflection in the reflection order");
    refl_order_.push_back(t);
    prefix = sys.mul(prefix, sys.generator(s));
  }
  if (static_cast<int>(refl_order_.size()) != sys.num_positive_roots())
    throw std::logic_error("reflection order does not cover all reflections");

  for (const auto& w : sys.elements())
    if (sys.leq_absolute(w, c_)) nc_.push_back(w);
  std::stable_sort(nc_.begin(), nc_.end(), [&](const Element& a, const Element& b) {
    int la = sys.absolute_length(a), lb = sys.absolute_length(b);
    if (la != lb) return la < lb;
    return sys.canonical_word(a) < sys.canonical_word(b);
  });
  for (std::size_t i = 0; i < nc_.size(); ++i)
    nc_idx_.emplace(nc_[i], static_cast<int>(i));
}

int CambrianContext::refl_index(const Element& t) const {
  auto it = refl_idx_.find(t);
  if (it == refl_idx_.end())
    throw std::invalid_argument("element is not a reflection");
  return it->second;
}

const std::vector<int>& CambrianContext::c_increasing_word(const Element& w) const {
  auto it = incr_cache_.find(w);
  if (it != incr_cache_.end()) return it->second;
  if (!in_nc(w))
    throw std::invalid_argument("element is not a noncrossing partition");

  const int target_len = sys_->absolute_length(w);
  const int r = num_reflections();
  std::vector<int> path, result;
  bool found = false;
  std::function<void(int, const Element&, int)> rec = [&](int start,
                                                          const Element& cur,
                                                          int used) {
    if (used == target_len) {
      if (cur == w) {
        if (found)
          throw std::logic_error("c-increasing word is not unique");
        found = true;
        result = path;
      }
      return;
    }
    for (int i = start; i < r; ++i) {
      Element nxt = sys_->mul(cur, refl_order_[i]);
      if (sys_->absolute_length(nxt) != used + 1) continue;
      if (!sys_->leq_absolute(nxt, w)) continue;
      path.push_back(i);
      rec(i + 1, nxt, used + 1);
      path.pop_back();
    }
  };
  rec(0, sys_->identity(), 0);
  if (!found) throw std::logic_error("no c-increasing word found");
  return incr_cache_.emplace(w, std::move(result)).first->second;
}

std::string CambrianContext::letter_name(const ColoredLetter& l) const {
  return sys_->word_string(refl_order_[l.index]) + "(" + std::to_string(l.color) +
         ")";
}

// --- Sorting words ----------------------------------------------------------

std::vector<std::vector<Gen>> sorting_blocks(const CoxeterSystem& sys,
                                             const Word& cword,
                                             const Element& w) {
  std::vector<std::vector<Gen>> blocks;
  Element rem = w;
  while (!sys.is_identity(rem)) {
    std::vector<Gen> block;
    for (Gen s : cword) {
      if (sys.is_left_descent(s, rem)) {
        block.push_back(s);
        rem = sys.mul(sys.generator(s), rem);
      }
    }
    if (block.empty())
      throw std::logic_error("sorting scan stalled");
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Word sorting_word(const CoxeterSystem& sys, const Word& cword, const Element& w) {
  Word out;
  for (const auto& block : sorting_blocks(sys, cword, w))
    for (Gen s : block) out.push_back(s);
  return out;
}

bool is_sortable(const CoxeterSystem& sys, const Word& cword, const Element& w) {
  auto blocks = sorting_blocks(sys, cword, w);
  for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
    std::vector<char> in_prev(sys.rank(), 0);
    for (Gen s : blocks[k]) in_prev[s] = 1;
    for (Gen s : blocks[k + 1])
      if (!in_prev[s]) return false;
  }
  return true;
}

std::vector<Element> sortable_elements(const CoxeterSystem& sys,
                                       const Word& cword) {
  std::vector<Element> out;
  for (const auto& w : sys.elements())
    if (is_sortable(sys, cword, w)) out.push_back(w);
  return out;
}

FinitePoset cambrian_sort_poset(const CoxeterSystem& sys, const Word& cword) {
  auto sortables = sortable_elements(sys, cword);
  std::vector<std::string> labels;
  for (const auto& w : sortables) labels.push_back(sys.word_string(w));
  return FinitePoset::from_leq(labels, [&](int a, int b) {
    return sys.leq_weak(sortables[a], sortables[b]);
  });
}

// --- Subword-complex version -------------------------------------------------

Word m_search_word(const CambrianContext& ctx, int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const auto& sys = ctx.sys();
  Word out = ctx.cword();
  BraidChain rem = braid_power(sys, sys.longest_element(), m);
  int guard = 0;
  while (!rem.empty()) {
    bool took = false;
    for (Gen s : ctx.cword()) {
      if (braid_divisible(sys, rem, s)) {
        out.push_back(s);
        rem = braid_divide_left(sys, rem, s);
        took = true;
      }
    }
    if (!took || ++guard > 100000)
      throw std::logic_error("search-word scan stalled");
  }
  return out;
}

std::vector<std::vector<int>> m_sc_facets(const CambrianContext& ctx, int m,
                                          std::size_t cap) {
  const auto& sys = ctx.sys();
  if (static_cast<std::size_t>(sys.fuss_catalan(m)) > cap)
    throw CapExceeded("facet count " + std::to_string(sys.fuss_catalan(m)) +
                      " exceeds cap");
  Word Q = m_search_word(ctx, m);
  auto target = braid_power(sys, sys.longest_element(), m);
  return subword_facets_braid(sys, Q, target);
}

FinitePoset m_sc_poset(const CambrianContext& ctx, int m, std::size_t cap) {
  const auto& sys = ctx.sys();
  Word Q = m_search_word(ctx, m);
  auto target = braid_power(sys, sys.longest_element(), m);
  return flip_poset(sys, Q, target, m_sc_facets(ctx, m, cap));
}

// --- Noncrossing version -----------------------------------------------------

std::vector<MFactorization> m_factorizations(const CambrianContext& ctx, int m,
                                             std::size_t cap) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const auto& sys = ctx.sys();
  const int r = ctx.num_reflections();
  const int n = sys.rank();
  const int total = (m + 1) * r;
  const Element& c = ctx.coxeter_element();

  std::vector<MFactorization> out;
  std::vector<int> ext;
  std::function<void(int, const Element&, int)> rec = [&](int start,
                                                          const Element& cur,
                                                          int used) {
    if (used == n) {
      out.push_back({m, ext});
      if (out.size() > cap) throw CapExceeded("factorization count exceeds cap");
      return;
    }
    for (int e = start; e < total; ++e) {
      if (total - e < n - used) break;
      Element nxt = sys.mul(cur, ctx.refl(e % r));
      if (sys.absolute_length(nxt) != used + 1) continue;
      if (!sys.leq_absolute(nxt, c)) continue;
      ext.push_back(e);
      rec(e + 1, nxt, used + 1);
      ext.pop_back();
    }
  };
  rec(0, sys.identity(), 0);
  std::sort(out.begin(), out.end());
  return out;
}

MFactorization bottom_factorization(const CambrianContext& ctx, int m) {
  MFactorization f;
  f.m = m;
  f.ext = ctx.c_increasing_word(ctx.coxeter_element());
  return f;
}

namespace {

void validate_factorization(const CambrianContext& ctx, const MFactorization& f,
                            const char* who) {
  const auto& sys = ctx.sys();
  const int r = ctx.num_reflections();
  Element prod = sys.identity();
  int prev = -1;
  for (int e : f.ext) {
    if (e <= prev || e >= (f.m + 1) * r)
      throw std::logic_error(std::string(who) + ": positions not increasing");
    prev = e;
    prod = sys.mul(prod, ctx.refl(e % r));
  }
  if (!(prod == ctx.coxeter_element()) ||
      static_cast<int>(f.ext.size()) != sys.rank())
    throw std::logic_error(std::string(who) + ": word does not factor c");
}

}  // namespace

MFactorization colored_rotation(const CambrianContext& ctx,
                                const MFactorization& f, const ColoredLetter& at) {
  const auto& sys = ctx.sys();
  const int r = ctx.num_reflections();
  if (at.color >= f.m)
    throw std::invalid_argument("cannot rotate a letter of maximal color");
  const int e = ctx.ext_of(at);
  const int e2 = e + r;
  if (!f.contains(e))
    throw std::invalid_argument("rotation letter is not in the factorization");

  const Element& rv = ctx.refl(at.index);
  MFactorization out;
  out.m = f.m;
  for (int x : f.ext) {
    if (x == e) continue;
    if (x > e && x < e2) {
      Element v = sys.mul(rv, sys.mul(ctx.refl(x % r), rv));
      int j = ctx.refl_index(v);
      int cand = j > at.index ? at.color * r + j : (at.color + 1) * r + j;
      if (cand <= e || cand >= e2)
        throw std::logic_error("conjugated letter falls outside the window");
      out.ext.push_back(cand);
    } else {
      out.ext.push_back(x);
    }
  }
  out.ext.push_back(e2);
  std::sort(out.ext.begin(), out.ext.end());
  validate_factorization(ctx, out, "colored_rotation");
  return out;
}

std::vector<RotationEdge> rotation_edges(const CambrianContext& ctx,
                                         const std::vector<MFactorization>& facts) {
  auto find_index = [&](const MFactorization& f) {
    auto it = std::lower_bound(facts.begin(), facts.end(), f);
    if (it == facts.end() || !(*it == f))
      throw std::logic_error("rotation left the factorization set");
    return static_cast<int>(it - facts.begin());
  };
  std::vector<RotationEdge> edges;
  for (std::size_t i = 0; i < facts.size(); ++i) {
    for (int e : facts[i].ext) {
      ColoredLetter l = ctx.letter_of(e);
      if (l.color >= facts[i].m) continue;
      auto g = colored_rotation(ctx, facts[i], l);
      edges.push_back({static_cast<int>(i), find_index(g), l});
    }
  }
  return edges;
}

std::string factorization_label(const CambrianContext& ctx,
                                const MFactorization& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.ext.size(); ++i)
    os << (i ? " " : "") << ctx.letter_name(ctx.letter_of(f.ext[i]));
  os << "]";
  return os.str();
}

FinitePoset m_nc_poset(const CambrianContext& ctx,
                       const std::vector<MFactorization>& facts) {
  std::vector<std::string> labels;
  for (const auto& f : facts) labels.push_back(factorization_label(ctx, f));
  std::vector<std::pair<int, int>> rels;
  for (const auto& edge : rotation_edges(ctx, facts))
    rels.emplace_back(edge.from, edge.to);
  return FinitePoset::from_relations(labels, rels);
}

// --- Correspondences ---------------------------------------------------------

MFactorization facet_to_factorization(const CambrianContext& ctx, int m,
                                      const Word& Q, const std::vector<int>& facet) {
  const auto& sys = ctx.sys();
  const int r = ctx.num_reflections();
  std::vector<char> in_facet(Q.size() + 1, 0);
  for (int pos : facet) in_facet[pos] = 1;

  MFactorization out;
  out.m = m;
  Element prefix = sys.identity();
  std::unordered_map<Element, int, ElementHash> complement_count;
  for (int pos = 1; pos <= static_cast<int>(Q.size()); ++pos) {
    Element value = sys.conjugate(prefix, sys.generator(Q[pos - 1]));
    if (in_facet[pos]) {
      auto it = complement_count.find(value);
      int color = it == complement_count.end() ? 0 : it->second;
      out.ext.push_back(color * r + ctx.refl_index(value));
      if (out.ext.size() > 1 && out.ext[out.ext.size() - 2] >= out.ext.back())
        throw std::logic_error("facet letters are not extended-order increasing");
    } else {
      ++complement_count[value];
      prefix = sys.mul(prefix, sys.generator(Q[pos - 1]));
    }
  }
  validate_factorization(ctx, out, "facet_to_factorization");
  return out;
}

std::vector<int> sortable_to_facet(const CambrianContext& ctx, const Element& v) {
  const auto& sys = ctx.sys();
  Word Q = m_search_word(ctx, 1);
  const int p = static_cast<int>(Q.size());
  std::vector<char> used(p + 1, 0);

  Word vw = sorting_word(sys, ctx.cword(), v);
  int pos = 0;
  for (Gen g : vw) {
    do {
      ++pos;
    } while (pos <= p && Q[pos - 1] != g);
    if (pos > p) throw std::logic_error("sorting word does not embed");
    used[pos] = 1;
  }
  const int last_used = pos;

  Element rest = sys.mul(sys.inverse(v), sys.longest_element());
  Word xw = sorting_word(sys, ctx.cword(), rest);
  int rpos = p + 1;
  for (auto it = xw.rbegin(); it != xw.rend(); ++it) {
    do {
      --rpos;
    } while (rpos > last_used && Q[rpos - 1] != *it);
    if (rpos <= last_used || Q[rpos - 1] != *it)
      throw std::logic_error("completion word does not embed");
    used[rpos] = 1;
  }

  std::vector<int> facet;
  for (int q = 1; q <= p; ++q)
    if (!used[q]) facet.push_back(q);
  auto target = braid_power(sys, sys.longest_element(), 1);
  if (!complement_spells(sys, Q, target, facet))
    throw std::logic_error("constructed position set is not a facet");
  return facet;
}

ThreeVersions three_versions(const CambrianContext& ctx) {
  const auto& sys = ctx.sys();
  ThreeVersions out;
  out.sortables = sortable_elements(sys, ctx.cword());
  out.facets = m_sc_facets(ctx, 1);
  out.factorizations = m_factorizations(ctx, 1);
  out.sort_poset = cambrian_sort_poset(sys, ctx.cword());
  Word Q = m_search_word(ctx, 1);
  auto target = braid_power(sys, sys.longest_element(), 1);
  out.sc_poset = flip_poset(sys, Q, target, out.facets);
  out.nc_poset = m_nc_poset(ctx, out.factorizations);

  auto facet_index = [&](const std::vector<int>& f) {
    auto it = std::lower_bound(out.facets.begin(), out.facets.end(), f);
    if (it == out.facets.end() || *it != f)
      throw std::logic_error("facet lookup failed");
    return static_cast<int>(it - out.facets.begin());
  };
  auto fact_index = [&](const MFactorization& f) {
    auto it = std::lower_bound(out.factorizations.begin(), out.factorizations.end(), f);
    if (it == out.factorizations.end() || !(*it == f))
      throw std::logic_error("factorization lookup failed");
    return static_cast<int>(it - out.factorizations.begin());
  };

  for (const auto& v : out.sortables)
    out.sort_to_sc.push_back(facet_index(sortable_to_facet(ctx, v)));
  for (const auto& f : out.facets)
    out.sc_to_nc.push_back(fact_index(facet_to_factorization(ctx, 1, Q, f)));

  out.verdict = true;
  const int n = out.sort_poset.size();
  auto check_map = [&](const FinitePoset& a, const FinitePoset& b,
                       const std::vector<int>& map, const char* what) {
    std::vector<char> hit(n, 0);
    for (int x : map) {
      if (hit[x]) {
        out.verdict = false;
        out.counterexample = std::string(what) + ": map is not injective";
        return;
      }
      hit[x] = 1;
    }
    for (int x = 0; x < n && out.verdict; ++x) {
      for (int y = 0; y < n; ++y) {
        if (a.leq(x, y) != b.leq(map[x], map[y])) {
          out.verdict = false;
          out.counterexample = std::string(what) + ": order mismatch at (" +
                               a.label(x) + ", " + a.label(y) + ")";
          return;
        }
      }
    }
  };
  if (out.sc_poset.size() != n || out.nc_poset.size() != n) {
    out.verdict = false;
    out.counterexample = "element counts differ";
    return out;
  }
  check_map(out.sort_poset, out.sc_poset, out.sort_to_sc, "sort->sc");
  if (out.verdict) check_map(out.sc_poset, out.nc_poset, out.sc_to_nc, "sc->nc");
  return out;
}

}  // namespace camb
