#include "localepatch/adjunction.hpp"

#include <stdexcept>

#include "localepatch/errors.hpp"

namespace localepatch {

MonotoneMap make_monotone_map(const FiniteFrame& source, const FiniteFrame& target,
                              std::vector<Element> table) {
  const int n = source.size();
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("table must assign every source element");
  for (Element u = 0; u < n; ++u)
    if (table[u] < 0 || table[u] >= target.size())
      throw std::invalid_argument("table entry out of target range");
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      if (source.leq(u, v) && !target.leq(table[u], table[v]))
        throw NotMonotone("'" + source.label(u) + "' ≤ '" + source.label(v) +
                              "' but images are not ordered",
                          u, v);
  return MonotoneMap{&source, &target, std::move(table)};
}

MonotoneMap right_adjoint(const MonotoneMap& h, const Basis& b) {
  const FiniteFrame& src = *h.source;
  const FiniteFrame& tgt = *h.target;
  if (!(*b.frame == src))
    throw std::invalid_argument("basis must live on the hom's source frame");

  if (h(src.bottom()) != tgt.bottom())
    throw NotJoinPreserving("bottom (the empty join) is not preserved", {});
  for (Element u = 0; u < src.size(); ++u)
    for (Element v = 0; v < src.size(); ++v)
      if (h(src.join(u, v)) != tgt.join(h(u), h(v)))
        throw NotJoinPreserving("join of '" + src.label(u) + "' and '" + src.label(v) +
                                    "' is not preserved",
                                {u, v});

  std::vector<Element> g(tgt.size());
  for (Element u = 0; u < tgt.size(); ++u) {
    Element acc = src.bottom();
    for (Element m : b.members)
      if (tgt.leq(h(m), u)) acc = src.join(acc, m);
    g[u] = acc;
  }

  for (Element v = 0; v < src.size(); ++v)
    for (Element u = 0; u < tgt.size(); ++u)
      if (tgt.leq(h(v), u) != src.leq(v, g[u]))
        throw std::logic_error("adjunction law failed for a join-preserving map");
  return make_monotone_map(tgt, src, std::move(g));
}

Element heyting(const FiniteFrame& l, Element u, Element v) {
  // Right adjoint of (−)∧u at v over the all-elements basis.
  Element acc = l.bottom();
  for (Element w = 0; w < l.size(); ++w)
    if (l.leq(l.meet(w, u), v)) acc = l.join(acc, w);
  return acc;
}

Element complement(const FiniteFrame& l, Element u) { return heyting(l, u, l.bottom()); }

FrameHom check_frame_hom(const MonotoneMap& h) {
  const FiniteFrame& src = *h.source;
  const FiniteFrame& tgt = *h.target;
  make_monotone_map(src, tgt, h.table);  // revalidate

  FrameHom f;
  f.map = h;
  if (h(src.top()) != tgt.top())
    throw NotAFrameHom("top is not preserved", "top", src.top());
  f.preserves.top = true;
  if (h(src.bottom()) != tgt.bottom())
    throw NotAFrameHom("bottom is not preserved", "bottom", src.bottom());
  f.preserves.bottom = true;
  for (Element u = 0; u < src.size(); ++u)
    for (Element v = 0; v < src.size(); ++v) {
      if (h(src.meet(u, v)) != tgt.meet(h(u), h(v)))
        throw NotAFrameHom("meet of '" + src.label(u) + "' and '" + src.label(v) +
                               "' is not preserved",
                           "meet", u, v);
      if (h(src.join(u, v)) != tgt.join(h(u), h(v)))
        throw NotAFrameHom("join of '" + src.label(u) + "' and '" + src.label(v) +
                               "' is not preserved",
                           "join", u, v);
    }
  f.preserves.binary_meets = true;
  f.preserves.binary_joins = true;

  f.right_adjoint = right_adjoint(h, carrier_basis(src));
  f.preserves.adjunction_law = true;
  return f;
}

namespace {

// Sufficient for Scott continuity of g between spectral frames: every compact
// K' ≤ g(V) admits a compact K ≤ V with K' ≤ g(K). Compacts of a finite frame
// are all elements.
bool scott_criterion_map(const MonotoneMap& g) {
  const FiniteFrame& dom = *g.source;
  const FiniteFrame& cod = *g.target;
  for (Element v = 0; v < dom.size(); ++v)
    for (Element kp = 0; kp < cod.size(); ++kp) {
      if (!cod.leq(kp, g(v))) continue;
      bool found = false;
      for (Element k = 0; k < dom.size() && !found; ++k)
        if (dom.leq(k, v) && cod.leq(kp, g(k))) found = true;
      if (!found) return false;
    }
  return true;
}

}  // namespace

bool is_perfect(const FrameHom& f, WayBelowMode mode, int bound) {
  const MonotoneMap& g = f.right_adjoint;
  const FiniteFrame& tgt = *f.map.target;  // g's domain
  const bool fits = tgt.size() <= bound;
  if (mode == WayBelowMode::Exhaustive && !fits)
    throw FrameTooLarge("is_perfect needs exhaustive enumeration", tgt.size(), bound);
  if (mode == WayBelowMode::FastPath || (mode == WayBelowMode::Auto && !fits)) {
    if (!scott_criterion_map(g))
      throw FrameTooLarge("right adjoint fails the compact-approximation criterion; "
                          "exhaustive check needed",
                          tgt.size(), bound);
    return true;
  }

  const FiniteFrame& src = *f.map.source;  // g's codomain
  const DirectedSubsets ds = enumerate_directed_subsets(tgt, bound);
  for (size_t i = 0; i < ds.masks.size(); ++i) {
    Element folded = src.bottom();
    for (Element u = 0; u < tgt.size(); ++u)
      if (ds.masks[i] & (1u << u)) folded = src.join(folded, g(u));
    if (g(ds.joins[i]) != folded) return false;
  }
  return true;
}

bool is_spectral_map(const FrameHom& f, WayBelowMode mode, int bound) {
  const ClassificationReport rs = classify(*f.map.source, mode, bound);
  const ClassificationReport rt = classify(*f.map.target, mode, bound);
  for (Element k : rs.compact_opens) {
    const Element img = f(k);
    bool compact = false;
    for (Element c : rt.compact_opens)
      if (c == img) compact = true;
    if (!compact) return false;
  }
  return true;
}

std::vector<MonotoneMap> enumerate_monotone_maps(const FiniteFrame& source,
                                                 const FiniteFrame& target) {
  const int n = source.size();
  std::vector<MonotoneMap> out;
  std::vector<Element> table(n, -1);
  auto rec = [&](auto&& self, Element u) -> void {
    if (u == n) {
      out.push_back(MonotoneMap{&source, &target, table});
      return;
    }
    for (Element v = 0; v < target.size(); ++v) {
      bool ok = true;
      for (Element w = 0; w < u && ok; ++w) {
        if (source.leq(w, u) && !target.leq(table[w], v)) ok = false;
        if (source.leq(u, w) && !target.leq(v, table[w])) ok = false;
      }
      if (!ok) continue;
      table[u] = v;
      self(self, u + 1);
      table[u] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<FrameHom> enumerate_frame_homs(const FiniteFrame& source,
                                           const FiniteFrame& target) {
  std::vector<FrameHom> out;
  for (const MonotoneMap& m : enumerate_monotone_maps(source, target)) {
    try {
      out.push_back(check_frame_hom(m));
    } catch (const NotAFrameHom&) {
    }
  }
  return out;
}

}  // namespace localepatch
