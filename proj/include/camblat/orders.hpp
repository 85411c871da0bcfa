#pragma once

#include "camblat/coxeter.hpp"
#include "camblat/poset.hpp"

namespace camb {

/// Right weak order on all of W; a lattice with top w0.
FinitePoset weak_order(const CoxeterSystem& sys);

/// Noncrossing partitions NC(W, c) = [e, c] in absolute order, sorted by
/// (absolute length, canonical word). Throws if c is not a Coxeter element.
std::vector<Element> noncrossing_partitions(const CoxeterSystem& sys,
                                            const Element& c);

/// The noncrossing partition lattice: absolute order restricted to NC(W, c).
FinitePoset nc_lattice(const CoxeterSystem& sys, const Element& c);

/// Kreweras complement on NC(W, c). Under the fixed composition convention
/// (left action, (a*b)(x) = a(b(x))) the complement taking the standard
/// tables to themselves is w -> w^{-1} c; applying it twice conjugates by c.
Element kreweras(const CoxeterSystem& sys, const Element& c, const Element& w);

}  // namespace camb
