#include "localepatch/nucleus.hpp"

#include <stdexcept>

#include "localepatch/errors.hpp"

namespace localepatch {

namespace {

void check_table(const FiniteFrame& l, const std::vector<Element>& table) {
  if (static_cast<int>(table.size()) != l.size())
    throw std::invalid_argument("table must assign every element");
  for (Element v : table)
    if (v < 0 || v >= l.size()) throw std::invalid_argument("table entry out of range");
}

void check_inflationary_meet(const FiniteFrame& l, const std::vector<Element>& t) {
  for (Element u = 0; u < l.size(); ++u)
    if (!l.leq(u, t[u]))
      throw NotInflationary("'" + l.label(u) + "' is not below its image", u);
  for (Element u = 0; u < l.size(); ++u)
    for (Element v = 0; v < l.size(); ++v)
      if (t[l.meet(u, v)] != l.meet(t[u], t[v]))
        throw NotMeetPreserving("meet of '" + l.label(u) + "' and '" + l.label(v) +
                                    "' is not preserved",
                                u, v);
}

bool establish_scott(const Nucleus& j, int bound) {
  if (j.frame->size() <= bound) return is_scott_continuous(j, bound);
  return scott_criterion(j);  // sufficient above the bound
}

}  // namespace

Nucleus check_nucleus(const FiniteFrame& l, std::vector<Element> table, ScottCheck sc,
                      int bound) {
  check_table(l, table);
  check_inflationary_meet(l, table);
  // With inflationarity, j(j(U)) ≤ j(U) gives equality.
  for (Element u = 0; u < l.size(); ++u)
    if (!l.leq(table[table[u]], table[u]))
      throw NotIdempotent("image of '" + l.label(u) + "' is not a fixed point", u);

  Nucleus j;
  j.frame = &l;
  j.table = std::move(table);
  j.certificate.inflationary = true;
  j.certificate.meet_preserving = true;
  j.certificate.idempotent = true;
  if (sc == ScottCheck::Verify) j.certificate.scott_continuous = establish_scott(j, bound);
  return j;
}

Prenucleus check_prenucleus(const FiniteFrame& l, std::vector<Element> table) {
  check_table(l, table);
  check_inflationary_meet(l, table);
  Prenucleus p;
  p.frame = &l;
  p.table = std::move(table);
  p.inflationary = true;
  p.meet_preserving = true;
  return p;
}

Nucleus identity_nucleus(const FiniteFrame& l) {
  std::vector<Element> t(l.size());
  for (Element u = 0; u < l.size(); ++u) t[u] = u;
  return check_nucleus(l, std::move(t));
}

Nucleus top_nucleus(const FiniteFrame& l) {
  return check_nucleus(l, std::vector<Element>(l.size(), l.top()));
}

Nucleus closed_nucleus(const FiniteFrame& l, Element u, ScottCheck sc, int bound) {
  std::vector<Element> t(l.size());
  for (Element v = 0; v < l.size(); ++v) t[v] = l.join(u, v);
  return check_nucleus(l, std::move(t), sc, bound);
}

Nucleus open_nucleus(const FiniteFrame& l, Element u, ScottCheck sc, int bound) {
  std::vector<Element> t(l.size());
  for (Element v = 0; v < l.size(); ++v) t[v] = heyting(l, u, v);
  return check_nucleus(l, std::move(t), sc, bound);
}

Nucleus nucleus_meet(const Nucleus& j, const Nucleus& k, ScottCheck sc, int bound) {
  const FiniteFrame& l = *j.frame;
  if (!(*k.frame == l)) throw std::invalid_argument("nuclei live on different frames");
  std::vector<Element> t(l.size());
  for (Element u = 0; u < l.size(); ++u) t[u] = l.meet(j(u), k(u));
  return check_nucleus(l, std::move(t), sc, bound);
}

bool scott_criterion(const Nucleus& j) {
  const FiniteFrame& l = *j.frame;
  for (Element u = 0; u < l.size(); ++u)
    for (Element k = 0; k < l.size(); ++k) {
      if (!l.leq(k, j(u))) continue;
      bool found = false;
      for (Element kp = 0; kp < l.size() && !found; ++kp)
        if (l.leq(kp, u) && l.leq(k, j(kp))) found = true;
      if (!found) return false;
    }
  return true;
}

bool is_scott_continuous(const Nucleus& j, const DirectedSubsets& ds) {
  const FiniteFrame& l = *j.frame;
  bool direct = true;
  for (size_t i = 0; i < ds.masks.size() && direct; ++i) {
    Element folded = l.bottom();
    for (Element u = 0; u < l.size(); ++u)
      if (ds.masks[i] & (1u << u)) folded = l.join(folded, j(u));
    if (j(ds.joins[i]) != folded) direct = false;
  }
  if (scott_criterion(j) && !direct)
    throw std::logic_error("compact-approximation criterion held but the direct check failed");
  return direct;
}

bool is_scott_continuous(const Nucleus& j, int bound) {
  return is_scott_continuous(j, enumerate_directed_subsets(*j.frame, bound));
}

Prenucleus word_composite(std::span<const Nucleus> ks, const Word& s) {
  if (ks.empty())
    throw std::invalid_argument("word_composite needs a frame; supply a nonempty family");
  const FiniteFrame& l = *ks[0].frame;
  for (const Nucleus& k : ks)
    if (!(*k.frame == l)) throw std::invalid_argument("nucleus lives on a different frame");
  for (int tag : s.letters)
    if (tag < 0 || tag >= static_cast<int>(ks.size()))
      throw UnknownTag("word letter has no nucleus", tag);

  std::vector<Element> t(l.size());
  for (Element u = 0; u < l.size(); ++u) {
    Element acc = u;
    for (int tag : s.letters) acc = ks[tag](acc);  // first letter applied first
    t[u] = acc;
  }
  return check_prenucleus(l, std::move(t));
}

Nucleus nucleus_join(const FiniteFrame& l, std::span<const Nucleus> ks, ScottCheck sc,
                     int bound) {
  for (const Nucleus& k : ks) {
    if (!(*k.frame == l)) throw std::invalid_argument("nucleus lives on a different frame");
    const NucleusCertificate& c = k.certificate;
    if (!c.inflationary || !c.meet_preserving || !c.idempotent || !c.scott_continuous)
      throw std::invalid_argument("nucleus_join requires fully certified inputs");
  }

  std::vector<Element> t(l.size());
  for (Element u = 0; u < l.size(); ++u) t[u] = u;
  const long rounds_bound = static_cast<long>(l.size()) * l.size() + 1;
  for (long round = 0;; ++round) {
    if (round > rounds_bound)
      throw std::logic_error("join iteration failed to stabilize within |L|^2 rounds");
    bool changed = false;
    for (Element u = 0; u < l.size(); ++u) {
      Element next = t[u];
      for (const Nucleus& k : ks) next = l.join(next, k(t[u]));
      if (next != t[u]) {
        t[u] = next;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return check_nucleus(l, std::move(t), sc, bound);
}

Nucleus directed_join_pointwise(const FiniteFrame& l, std::span<const Nucleus> ks,
                                ScottCheck sc, int bound) {
  if (ks.empty()) throw NotDirected("a directed family must be inhabited");
  for (const Nucleus& k : ks)
    if (!(*k.frame == l)) throw std::invalid_argument("nucleus lives on a different frame");
  auto dominates = [&](const Nucleus& a, const Nucleus& b) {
    for (Element u = 0; u < l.size(); ++u)
      if (!l.leq(b(u), a(u))) return false;
    return true;
  };
  for (size_t i = 0; i < ks.size(); ++i)
    for (size_t j = i; j < ks.size(); ++j) {
      bool bounded = false;
      for (size_t m = 0; m < ks.size() && !bounded; ++m)
        if (dominates(ks[m], ks[i]) && dominates(ks[m], ks[j])) bounded = true;
      if (!bounded)
        throw NotDirected("members have no upper bound in the family",
                          static_cast<int>(i), static_cast<int>(j));
    }

  std::vector<Element> t(l.size());
  for (Element u = 0; u < l.size(); ++u) {
    Element acc = l.bottom();
    for (const Nucleus& k : ks) acc = l.join(acc, k(u));
    t[u] = acc;
  }
  Nucleus result = check_nucleus(l, std::move(t), sc, bound);
  if (!(result == nucleus_join(l, ks, ScottCheck::Defer, bound)))
    throw std::logic_error("pointwise join of a directed family differs from the word join");
  return result;
}

}  // namespace localepatch
