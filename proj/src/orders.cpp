#include "camblat/orders.hpp"

#include <algorithm>

namespace camb {

FinitePoset weak_order(const CoxeterSystem& sys) {
  const auto& elems = sys.elements();
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& w : elems) labels.push_back(sys.word_string(w));
  return FinitePoset::from_leq(labels, [&](int a, int b) {
    return sys.leq_weak(elems[a], elems[b]);
  });
}

std::vector<Element> noncrossing_partitions(const CoxeterSystem& sys,
                                            const Element& c) {
  if (!sys.is_coxeter_element(c))
    throw std::invalid_argument("not a Coxeter element");
  std::vector<Element> nc;
  for (const auto& w : sys.elements())
    if (sys.leq_absolute(w, c)) nc.push_back(w);
  std::stable_sort(nc.begin(), nc.end(), [&](const Element& a, const Element& b) {
    int la = sys.absolute_length(a), lb = sys.absolute_length(b);
    if (la != lb) return la < lb;
    return sys.canonical_word(a) < sys.canonical_word(b);
  });
  return nc;
}

FinitePoset nc_lattice(const CoxeterSystem& sys, const Element& c) {
  auto nc = noncrossing_partitions(sys, c);
  std::vector<std::string> labels;
  labels.reserve(nc.size());
  for (const auto& w : nc) labels.push_back(sys.word_string(w));
  return FinitePoset::from_leq(labels, [&](int a, int b) {
    return sys.leq_absolute(nc[a], nc[b]);
  });
}

Element kreweras(const CoxeterSystem& sys, const Element& c, const Element& w) {
  if (!sys.is_coxeter_element(c))
    throw std::invalid_argument("not a Coxeter element");
  if (!sys.leq_absolute(w, c))
    throw std::invalid_argument("element is not a noncrossing partition");
  return sys.mul(sys.inverse(w), c);
}

}  // namespace camb
