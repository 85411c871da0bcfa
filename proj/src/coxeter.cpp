#include "camblat/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace camb {

namespace {

using Vec = std::vector<long long>;

long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Root data plus generator permutations, before group enumeration.
struct RootModel {
  std::vector<int> neg;
  std::vector<char> positive;
  std::vector<Element> gens;
};

// Closes a crystallographic simple system under the reflection action.
// Roots carry ambient integer coordinates and simple-basis coordinates;
// the latter decide positivity.
RootModel build_crystallographic(const std::vector<Vec>& simples) {
  const int n = static_cast<int>(simples.size());
  std::vector<Vec> roots;
  std::vector<Vec> basis;  // coordinates in the simple basis
  std::map<Vec, int> idx;

  auto add_root = [&](const Vec& r, const Vec& b) {
    auto it = idx.find(r);
    if (it != idx.end()) return it->second;
    idx.emplace(r, static_cast<int>(roots.size()));
    roots.push_back(r);
    basis.push_back(b);
    return static_cast<int>(roots.size()) - 1;
  };

  for (int i = 0; i < n; ++i) {
    Vec b(n, 0);
    b[i] = 1;
    add_root(simples[i], b);
  }

  auto reflect = [&](const Vec& r, const Vec& b, int i, Vec& out_r,
                     Vec& out_b) {
    long long num = 2 * dot(r, simples[i]);
    long long den = dot(simples[i], simples[i]);
    if (num % den != 0)
      throw std::logic_error("non-crystallographic reflection coefficient");
    long long coeff = num / den;
    out_r = r;
    out_b = b;
    for (std::size_t k = 0; k < r.size(); ++k)
      out_r[k] -= coeff * simples[i][k];
    out_b[i] -= coeff;
  };

  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      Vec r, b;
      reflect(roots[head], basis[head], i, r, b);
      add_root(r, b);
      if (roots.size() > 4096) throw CapExceeded("root system too large");
    }
  }

  const int num = static_cast<int>(roots.size());
  RootModel model;
  model.neg.resize(num);
  model.positive.resize(num);
  for (int j = 0; j < num; ++j) {
    Vec negated = roots[j];
    for (auto& x : negated) x = -x;
    model.neg[j] = idx.at(negated);
    bool nonneg = true, nonpos = true;
    for (auto x : basis[j]) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (nonneg == nonpos)
      throw std::logic_error("root with mixed simple coordinates");
    model.positive[j] = nonneg ? 1 : 0;
  }
  model.gens.resize(n);
  for (int i = 0; i < n; ++i) {
    model.gens[i].perm.resize(num);
    for (int j = 0; j < num; ++j) {
      Vec r, b;
      reflect(roots[j], basis[j], i, r, b);
      model.gens[i].perm[j] = static_cast<std::uint8_t>(idx.at(r));
    }
  }
  return model;
}

// Dihedral group I2(k) on 2k root directions indexed mod 2k; avoids
// irrational coordinates entirely.
RootModel build_dihedral(int k) {
  const int num = 2 * k;
  RootModel model;
  model.neg.resize(num);
  model.positive.resize(num);
  model.gens.resize(2);
  model.gens[0].perm.resize(num);
  model.gens[1].perm.resize(num);
  for (int j = 0; j < num; ++j) {
    model.neg[j] = (j + k) % num;
    model.positive[j] = j < k ? 1 : 0;
    model.gens[0].perm[j] = static_cast<std::uint8_t>(((k - j) % num + num) % num);
    model.gens[1].perm[j] =
        static_cast<std::uint8_t>(((3 * k - 2 - j) % num + num) % num);
  }
  return model;
}

RootModel product_of(const RootModel& a, const RootModel& b) {
  const int na = static_cast<int>(a.neg.size());
  const int nb = static_cast<int>(b.neg.size());
  RootModel out;
  out.neg.resize(na + nb);
  out.positive.resize(na + nb);
  for (int j = 0; j < na; ++j) {
    out.neg[j] = a.neg[j];
    out.positive[j] = a.positive[j];
  }
  for (int j = 0; j < nb; ++j) {
    out.neg[na + j] = na + b.neg[j];
    out.positive[na + j] = b.positive[j];
  }
  auto lift_a = [&](const Element& g) {
    Element e;
    e.perm.resize(na + nb);
    for (int j = 0; j < na; ++j) e.perm[j] = g.perm[j];
    for (int j = 0; j < nb; ++j) e.perm[na + j] = static_cast<std::uint8_t>(na + j);
    return e;
  };
  auto lift_b = [&](const Element& g) {
    Element e;
    e.perm.resize(na + nb);
    for (int j = 0; j < na; ++j) e.perm[j] = static_cast<std::uint8_t>(j);
    for (int j = 0; j < nb; ++j) e.perm[na + j] = static_cast<std::uint8_t>(na + g.perm[j]);
    return e;
  };
  for (const auto& g : a.gens) out.gens.push_back(lift_a(g));
  for (const auto& g : b.gens) out.gens.push_back(lift_b(g));
  return out;
}

struct FamilySpec {
  RootModel model;
  std::vector<int> degrees;
  std::string label;
};

Vec unit(int dim, int i, long long v = 1) {
  Vec e(dim, 0);
  e[i] = v;
  return e;
}

FamilySpec build_family(const std::string& token) {
  FamilySpec spec;
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("unsupported Coxeter type '" + token + "': " + why);
  };
  if (token.empty()) bad("empty label");

  if (token == "F4") {
    std::vector<Vec> simples = {
        {0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
    spec.model = build_crystallographic(simples);
    spec.degrees = {2, 6, 8, 12};
    spec.label = "F4";
    return spec;
  }
  if (token == "G2") {
    std::vector<Vec> simples = {{1, -1, 0}, {-2, 1, 1}};
    spec.model = build_crystallographic(simples);
    spec.degrees = {2, 6};
    spec.label = "G2";
    return spec;
  }
  if (token.rfind("I2(", 0) == 0 && token.back() == ')') {
    int k = 0;
    try {
      k = std::stoi(token.substr(3, token.size() - 4));
    } catch (...) {
      bad("cannot parse dihedral order");
    }
    if (k < 2) bad("I2(k) requires k >= 2");
    if (k > 200) bad("dihedral order too large");
    spec.model = build_dihedral(k);
    spec.degrees = {2, k};
    spec.label = "I2(" + std::to_string(k) + ")";
    return spec;
  }

  char family = token[0];
  int n = 0;
  try {
    n = std::stoi(token.substr(1));
  } catch (...) {
    bad("cannot parse rank");
  }
  switch (family) {
    case 'A': {
      if (n < 1) bad("A(n) requires n >= 1");
      std::vector<Vec> simples;
      for (int i = 0; i < n; ++i) {
        Vec v(n + 1, 0);
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      spec.model = build_crystallographic(simples);
      for (int d = 2; d <= n + 1; ++d) spec.degrees.push_back(d);
      spec.label = "A" + std::to_string(n);
      return spec;
    }
    case 'B':
    case 'C': {
      if (n < 2) bad("B(n) requires n >= 2");
      std::vector<Vec> simples;
      for (int i = 0; i + 1 < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      simples.push_back(unit(n, n - 1));
      spec.model = build_crystallographic(simples);
      for (int d = 1; d <= n; ++d) spec.degrees.push_back(2 * d);
      spec.label = "B" + std::to_string(n);
      return spec;
    }
    case 'D': {
      if (n < 4) bad("D(n) requires n >= 4");
      std::vector<Vec> simples;
      for (int i = 0; i + 1 < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      Vec last(n, 0);
      last[n - 2] = 1;
      last[n - 1] = 1;
      simples.push_back(last);
      spec.model = build_crystallographic(simples);
      for (int d = 1; d + 1 <= n; ++d) spec.degrees.push_back(2 * d);
      spec.degrees.push_back(n);
      std::sort(spec.degrees.begin(), spec.degrees.end());
      spec.label = "D" + std::to_string(n);
      return spec;
    }
    case 'H':
    case 'E':
      bad("type excluded from the supported families");
      break;
    default:
      bad("unknown family");
      break;
  }
  return spec;  // unreachable
}

std::vector<std::string> split_product(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : label) {
    if (ch == ' ') continue;
    if (ch == 'x' || ch == 'X' || ch == '*') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

Element compose(const Element& a, const Element& b) {
  Element r;
  r.perm.resize(a.perm.size());
  for (std::size_t x = 0; x < b.perm.size(); ++x) r.perm[x] = a.perm[b.perm[x]];
  return r;
}

Element invert(const Element& a) {
  Element r;
  r.perm.resize(a.perm.size());
  for (std::size_t x = 0; x < a.perm.size(); ++x) r.perm[a.perm[x]] = static_cast<std::uint8_t>(x);
  return r;
}

}  // namespace

CoxeterSystem CoxeterSystem::trivial() {
  CoxeterSystem sys;
  sys.label_ = "1";
  sys.rank_ = 0;
  sys.finish_construction();
  return sys;
}

CoxeterSystem CoxeterSystem::build(const std::string& label, std::size_t cap) {
  auto parts = split_product(label);
  if (parts.empty()) throw std::invalid_argument("empty group label");

  CoxeterSystem sys;
  sys.cap_ = cap;
  bool first = true;
  RootModel model;
  for (const auto& part : parts) {
    FamilySpec spec = build_family(part);
    model = first ? std::move(spec.model) : product_of(model, spec.model);
    sys.factor_degrees_.push_back(spec.degrees);
    sys.label_ += (first ? "" : "x") + spec.label;
    first = false;
  }
  sys.neg_ = std::move(model.neg);
  sys.positive_ = std::move(model.positive);
  sys.gens_ = std::move(model.gens);
  sys.rank_ = static_cast<int>(sys.gens_.size());
  if (sys.neg_.size() > 255)
    throw CapExceeded("root set too large for the byte-permutation model");

  long long expected = 1;
  for (const auto& degs : sys.factor_degrees_)
    for (int d : degs) expected *= d;
  if (static_cast<std::size_t>(expected) > cap)
    throw CapExceeded("group order " + std::to_string(expected) +
                      " exceeds cap " + std::to_string(cap));

  sys.finish_construction();
  if (static_cast<long long>(sys.elements_.size()) != expected)
    throw std::logic_error("group order mismatch against degree product");
  return sys;
}

void CoxeterSystem::finish_construction() {
  const int n = rank_;
  names_.clear();
  if (n <= 3) {
    const char* short_names[] = {"s", "t", "u"};
    for (int i = 0; i < n; ++i) names_.push_back(short_names[i]);
  } else {
    for (int i = 0; i < n; ++i) names_.push_back("s" + std::to_string(i + 1));
  }

  matrix_.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Element p = compose(gens_[i], gens_[j]);
      Element x = p;
      int ord = 1;
      while (!is_identity(x)) {
        x = compose(x, p);
        ++ord;
        if (ord > 1000) throw std::logic_error("unbounded braid relation order");
      }
      matrix_[i][j] = matrix_[j][i] = ord;
    }
  }

  // Closure under right multiplication by generators.
  elements_.clear();
  index_.clear();
  Element e = identity();
  elements_.push_back(e);
  index_.emplace(e, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    Element cur = elements_[head];  // copy: vector may reallocate
    for (int i = 0; i < n; ++i) {
      Element nxt = compose(cur, gens_[i]);
      if (index_.emplace(nxt, static_cast<int>(elements_.size())).second) {
        elements_.push_back(nxt);
        if (elements_.size() > cap_)
          throw CapExceeded("group enumeration exceeded cap");
      }
    }
  }

  std::vector<std::pair<std::pair<int, Word>, Element>> keyed;
  keyed.reserve(elements_.size());
  for (const auto& w : elements_) {
    Word cw = canonical_word_impl(w);
    keyed.push_back({{static_cast<int>(cw.size()), cw}, w});
  }
  std::sort(keyed.begin(), keyed.end());
  elements_.clear();
  index_.clear();
  for (auto& kv : keyed) {
    index_.emplace(kv.second, static_cast<int>(elements_.size()));
    elements_.push_back(std::move(kv.second));
  }

  // Reflections: conjugation closure of the generators.
  std::vector<Element> refl(gens_);
  std::unordered_map<Element, int, ElementHash> seen;
  for (const auto& g : refl) seen.emplace(g, 1);
  for (std::size_t head = 0; head < refl.size(); ++head) {
    Element cur = refl[head];
    for (int i = 0; i < n; ++i) {
      Element c = compose(gens_[i], compose(cur, gens_[i]));
      if (seen.emplace(c, 1).second) refl.push_back(c);
    }
  }
  std::sort(refl.begin(), refl.end(), [&](const Element& a, const Element& b) {
    return index_.at(a) < index_.at(b);
  });
  reflections_ = std::move(refl);
  reflection_index_.clear();
  for (std::size_t i = 0; i < reflections_.size(); ++i)
    reflection_index_.emplace(reflections_[i], static_cast<int>(i));

  // Absolute lengths: BFS layers in the reflection Cayley graph.
  abs_length_.assign(elements_.size(), -1);
  std::deque<int> queue;
  abs_length_[index_.at(identity())] = 0;
  queue.push_back(index_.at(identity()));
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const auto& t : reflections_) {
      Element nxt = compose(elements_[cur], t);
      int ni = index_.at(nxt);
      if (abs_length_[ni] < 0) {
        abs_length_[ni] = abs_length_[cur] + 1;
        queue.push_back(ni);
      }
    }
  }

  longest_ = 0;
  int best = -1;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int l = length(elements_[i]);
    if (l > best) {
      best = l;
      longest_ = static_cast<int>(i);
    }
  }
  if (static_cast<std::size_t>(best) * 2 != neg_.size() && rank_ > 0)
    throw std::logic_error("longest element length differs from root count");
}

Element CoxeterSystem::identity() const {
  Element e;
  e.perm.resize(neg_.size());
  for (std::size_t i = 0; i < neg_.size(); ++i)
    e.perm[i] = static_cast<std::uint8_t>(i);
  return e;
}

const Element& CoxeterSystem::generator(Gen i) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("generator index out of range");
  return gens_[i];
}

Element CoxeterSystem::mul(const Element& a, const Element& b) const {
  if (a.perm.size() != neg_.size() || b.perm.size() != neg_.size())
    throw std::invalid_argument("element does not belong to this system");
  return compose(a, b);
}

Element CoxeterSystem::inverse(const Element& a) const { return invert(a); }

Element CoxeterSystem::product(const Word& word) const {
  Element r = identity();
  for (Gen g : word) r = compose(r, generator(g));
  return r;
}

Element CoxeterSystem::conjugate(const Element& by, const Element& x) const {
  return compose(by, compose(x, invert(by)));
}

bool CoxeterSystem::is_identity(const Element& w) const {
  for (std::size_t i = 0; i < w.perm.size(); ++i)
    if (w.perm[i] != i) return false;
  return true;
}

int CoxeterSystem::length(const Element& w) const {
  int l = 0;
  for (std::size_t i = 0; i < w.perm.size(); ++i)
    if (positive_[i] && !positive_[w.perm[i]]) ++l;
  return l;
}

bool CoxeterSystem::is_left_descent(Gen i, const Element& w) const {
  return length(compose(gens_[i], w)) < length(w);
}

bool CoxeterSystem::is_right_descent(Gen i, const Element& w) const {
  return length(compose(w, gens_[i])) < length(w);
}

std::vector<Gen> CoxeterSystem::left_descents(const Element& w) const {
  std::vector<Gen> out;
  for (int i = 0; i < rank_; ++i)
    if (is_left_descent(i, w)) out.push_back(i);
  return out;
}

int CoxeterSystem::index_of(const Element& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw std::invalid_argument("element does not belong to this system");
  return it->second;
}

const Element& CoxeterSystem::longest_element() const {
  return elements_[longest_];
}

bool CoxeterSystem::is_reflection(const Element& w) const {
  return reflection_index_.count(w) > 0;
}

std::vector<Element> CoxeterSystem::inversion_set(const Element& w) const {
  std::vector<Element> out;
  const int lw = length(w);
  for (const auto& t : reflections_)
    if (length(compose(t, w)) < lw) out.push_back(t);
  return out;
}

bool CoxeterSystem::leq_weak(const Element& u, const Element& w) const {
  return length(u) + length(compose(invert(u), w)) == length(w);
}

int CoxeterSystem::absolute_length(const Element& w) const {
  return abs_length_[index_of(w)];
}

bool CoxeterSystem::leq_absolute(const Element& u, const Element& w) const {
  return absolute_length(u) + absolute_length(compose(invert(u), w)) ==
         absolute_length(w);
}

Word CoxeterSystem::canonical_word_impl(Element w) const {
  Word out;
  int l = length(w);
  while (l > 0) {
    for (int i = 0; i < rank_; ++i) {
      Element shorter = compose(gens_[i], w);
      int ls = length(shorter);
      if (ls < l) {
        out.push_back(i);
        w = std::move(shorter);
        l = ls;
        break;
      }
    }
  }
  return out;
}

Word CoxeterSystem::canonical_word(const Element& w) const {
  return canonical_word_impl(w);
}

std::string CoxeterSystem::word_string(const Element& w) const {
  Word cw = canonical_word_impl(w);
  if (cw.empty()) return "e";
  std::string out;
  bool wide = false;
  for (const auto& nm : names_)
    if (nm.size() > 1) wide = true;
  for (std::size_t i = 0; i < cw.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += names_[cw[i]];
  }
  return out;
}

Element CoxeterSystem::parse_element(const std::string& text) const {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed.empty() || trimmed == "e") return identity();

  std::unordered_map<std::string, Gen> by_name;
  for (int i = 0; i < rank_; ++i) by_name.emplace(names_[i], i);

  Word word;
  bool wide = false;
  for (const auto& nm : names_)
    if (nm.size() > 1) wide = true;
  if (!wide) {
    for (char c : trimmed) {
      auto it = by_name.find(std::string(1, c));
      if (it == by_name.end())
        throw std::invalid_argument("unknown generator '" + std::string(1, c) + "'");
      word.push_back(it->second);
    }
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (tok == "e") continue;
      auto it = by_name.find(tok);
      if (it == by_name.end())
        throw std::invalid_argument("unknown generator '" + tok + "'");
      word.push_back(it->second);
    }
  }
  return product(word);
}

bool CoxeterSystem::is_coxeter_element(const Element& w) const {
  Word perm(rank_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (product(perm) == w) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Word> CoxeterSystem::coxeter_words() const {
  std::vector<Word> out;
  Word perm(rank_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

long long CoxeterSystem::fuss_catalan(int m) const {
  long long result = 1;
  for (const auto& degs : factor_degrees_) {
    int h = *std::max_element(degs.begin(), degs.end());
    long long num = 1, den = 1;
    for (int d : degs) {
      num *= static_cast<long long>(m) * h + d;
      den *= d;
    }
    result *= num / den;
    if (num % den != 0) throw std::logic_error("non-integral Fuss-Catalan value");
  }
  return result;
}

Element CoxeterSystem::Parabolic::embed(const Element& x) const {
  Element r = compose(conjugator, invert(conjugator));  // ambient identity
  for (Gen g : sub.canonical_word(x)) r = compose(r, generator_images[g]);
  return r;
}

CoxeterSystem::Parabolic CoxeterSystem::parabolic_subgroup(
    const std::vector<Element>& J) const {
  for (const auto& t : J)
    if (!is_reflection(t))
      throw std::invalid_argument("parabolic generators must be reflections");

  // Desk-scale search for a simultaneous conjugation into the simple system.
  std::optional<Element> conj;
  for (const auto& g : elements_) {
    bool ok = true;
    for (const auto& t : J) {
      Element c = conjugate(g, t);
      bool simple = false;
      for (const auto& s : gens_)
        if (c == s) simple = true;
      if (!simple) {
        ok = false;
        break;
      }
    }
    if (ok) {
      conj = g;
      break;
    }
  }
  if (!conj)
    throw std::invalid_argument(
        "reflection set is not simultaneously conjugate to a simple subset");

  Parabolic out;
  out.conjugator = *conj;
  if (J.empty()) {
    out.sub = CoxeterSystem::trivial();
    out.conjugator = identity();
    return out;
  }

  const int k = static_cast<int>(J.size());
  std::vector<std::vector<int>> mat(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Element p = compose(J[i], J[j]);
      Element x = p;
      int ord = 1;
      while (!is_identity(x)) {
        x = compose(x, p);
        ++ord;
      }
      mat[i][j] = mat[j][i] = ord;
    }
  }
  auto cls = classify_coxeter_matrix(mat);
  if (!cls)
    throw std::invalid_argument("parabolic type outside the supported families");
  out.sub = CoxeterSystem::build(cls->first, cap_);
  out.generator_images.resize(k);
  for (int i = 0; i < k; ++i) out.generator_images[i] = J[cls->second[i]];
  return out;
}

namespace {

// Classifies one connected component of a Coxeter graph; returns the label
// and the component's generator indices in canonical order.
std::optional<std::pair<std::string, std::vector<int>>> classify_component(
    const std::vector<std::vector<int>>& m, const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  auto bond = [&](int a, int b) { return m[comp[a]][comp[b]]; };
  if (k == 1) return std::pair(std::string("A1"), std::vector<int>{comp[0]});
  if (k == 2) {
    int v = bond(0, 1);
    std::vector<int> order = {comp[0], comp[1]};
    if (v == 3) return std::pair(std::string("A2"), order);
    if (v == 4) return std::pair(std::string("B2"), order);
    if (v == 6) return std::pair(std::string("G2"), order);
    if (v >= 5) return std::pair("I2(" + std::to_string(v) + ")", order);
    return std::nullopt;
  }

  std::vector<int> degree(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && bond(a, b) >= 3) ++degree[a];

  int forks = 0, fork_at = -1, leaves = 0;
  for (int a = 0; a < k; ++a) {
    if (degree[a] > 3) return std::nullopt;
    if (degree[a] == 3) {
      ++forks;
      fork_at = a;
    }
    if (degree[a] == 1) ++leaves;
  }

  if (forks == 0 && leaves == 2) {
    // Path: orient from an endpoint, then match the bond sequence.
    int start = 0;
    while (degree[start] != 1) ++start;
    std::vector<int> path = {start};
    std::vector<char> used(k, 0);
    used[start] = 1;
    while (static_cast<int>(path.size()) < k) {
      int cur = path.back();
      for (int b = 0; b < k; ++b) {
        if (!used[b] && bond(cur, b) >= 3) {
          path.push_back(b);
          used[b] = 1;
          break;
        }
      }
    }
    std::vector<int> bonds;
    for (int i = 0; i + 1 < k; ++i) bonds.push_back(bond(path[i], path[i + 1]));
    auto all3 = [](const std::vector<int>& v, int from, int to) {
      for (int i = from; i < to; ++i)
        if (v[i] != 3) return false;
      return true;
    };
    std::vector<int> order;
    for (int i : path) order.push_back(comp[i]);
    if (all3(bonds, 0, k - 1)) return std::pair("A" + std::to_string(k), order);
    if (bonds.back() == 4 && all3(bonds, 0, k - 2))
      return std::pair("B" + std::to_string(k), order);
    if (bonds.front() == 4 && all3(bonds, 1, k - 1)) {
      std::reverse(order.begin(), order.end());
      return std::pair("B" + std::to_string(k), order);
    }
    if (k == 4 && bonds[1] == 4 && bonds[0] == 3 && bonds[2] == 3)
      return std::pair(std::string("F4"), order);
    return std::nullopt;
  }

  if (forks == 1 && leaves == 3) {
    // D-type fork: all bonds must be 3.
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (bond(a, b) != 2 && bond(a, b) != 3 && a != b) return std::nullopt;
    // Walk the long tail from the fork; the two short branches become the
    // final pair of generators.
    std::vector<int> branch_tips;
    for (int b = 0; b < k; ++b)
      if (bond(fork_at, b) == 3 && degree[b] == 1) branch_tips.push_back(b);
    if (branch_tips.size() < 2) return std::nullopt;
    std::vector<char> used(k, 0);
    used[fork_at] = 1;
    used[branch_tips[0]] = 1;
    used[branch_tips[1]] = 1;
    std::vector<int> tail = {fork_at};
    while (true) {
      int cur = tail.back();
      int nxt = -1;
      for (int b = 0; b < k; ++b)
        if (!used[b] && bond(cur, b) == 3) nxt = b;
      if (nxt < 0) break;
      tail.push_back(nxt);
      used[nxt] = 1;
    }
    if (static_cast<int>(tail.size()) + 2 != k) return std::nullopt;
    std::reverse(tail.begin(), tail.end());
    std::vector<int> order;
    for (int i : tail) order.push_back(comp[i]);
    order.push_back(comp[branch_tips[0]]);
    order.push_back(comp[branch_tips[1]]);
    return std::pair("D" + std::to_string(k), order);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<std::string, std::vector<int>>> classify_coxeter_matrix(
    const std::vector<std::vector<int>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n == 0) return std::pair(std::string("1"), std::vector<int>{});
  std::vector<int> comp_id(n, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    if (comp_id[i] >= 0) continue;
    std::vector<int> comp = {i};
    comp_id[i] = static_cast<int>(comps.size());
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int j = 0; j < n; ++j) {
        if (comp_id[j] < 0 && matrix[comp[head]][j] >= 3) {
          comp_id[j] = static_cast<int>(comps.size());
          comp.push_back(j);
        }
      }
    }
    comps.push_back(comp);
  }

  std::vector<std::pair<std::string, std::vector<int>>> classified;
  for (const auto& comp : comps) {
    auto c = classify_component(matrix, comp);
    if (!c) return std::nullopt;
    classified.push_back(*c);
  }
  std::sort(classified.begin(), classified.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string label;
  std::vector<int> order;
  for (std::size_t i = 0; i < classified.size(); ++i) {
    label += (i ? "x" : "") + classified[i].first;
    for (int g : classified[i].second) order.push_back(g);
  }
  return std::pair(label, order);
}

}  // namespace camb
