#include "localepatch/patch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "localepatch/catalog.hpp"
#include "localepatch/errors.hpp"

namespace localepatch {

namespace {

// Shared by enumeration and closure: establish the scott flag from a
// precomputed subset table when the base fits the bound, else by criterion.
void set_scott(Nucleus& j, const DirectedSubsets* ds) {
  j.certificate.scott_continuous = ds ? is_scott_continuous(j, *ds) : scott_criterion(j);
}

std::string nucleus_label(const FiniteFrame& base, const std::vector<Element>& table) {
  std::string s = "[";
  for (size_t i = 0; i < table.size(); ++i) {
    if (i) s += ",";
    s += base.label(table[i]);
  }
  return s + "]";
}

}  // namespace

std::vector<Nucleus> enumerate_scott_nuclei(const FiniteFrame& l, int max_size) {
  const int n = l.size();
  if (n > max_size)
    throw FrameTooLarge("nucleus enumeration over " + std::to_string(n) + " elements",
                        n, max_size);

  const int bound = max_exhaustive_bound();
  DirectedSubsets ds_store;
  const DirectedSubsets* ds = nullptr;
  if (n <= bound) {
    ds_store = enumerate_directed_subsets(l, bound);
    ds = &ds_store;
  }

  std::vector<Nucleus> out;
  std::vector<Element> t(n, -1);
  // Assign ids descending; prune by inflationarity, monotonicity in both
  // directions, partial meet preservation, and partial idempotency.
  auto rec = [&](auto&& self, Element u) -> void {
    if (u < 0) {
      try {
        Nucleus j = check_nucleus(l, t, ScottCheck::Defer);
        set_scott(j, ds);
        if (j.certificate.scott_continuous) out.push_back(std::move(j));
      } catch (const Error&) {
      }
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (!l.leq(u, v)) continue;
      bool ok = true;
      for (Element w = u + 1; w < n && ok; ++w) {
        if (l.leq(u, w) && !l.leq(v, t[w])) ok = false;
        if (l.leq(w, u) && !l.leq(t[w], v)) ok = false;
        const Element m = l.meet(u, w);
        if (m > u && t[m] != l.meet(v, t[w])) ok = false;
      }
      // Idempotency: the value assigned to u must already be a fixed point.
      if (ok && v > u && t[v] != v) ok = false;
      if (!ok) continue;
      t[u] = v;
      self(self, u - 1);
      t[u] = -1;
    }
  };
  rec(rec, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

Element PatchFrame::element_of(const Nucleus& j) const {
  const auto it = std::lower_bound(carrier.begin(), carrier.end(), j);
  if (it == carrier.end() || !(*it == j))
    throw std::invalid_argument("nucleus is not in the patch carrier");
  return static_cast<Element>(it - carrier.begin());
}

PatchFrame build_patch(const FiniteFrame& l, const PatchOptions& opts) {
  const ClassificationReport base_report = classify(l, opts.mode, opts.bound);
  if (!base_report.is_spectral)
    throw NotSpectral("patch construction requires a spectral base");

  DirectedSubsets ds_store;
  const DirectedSubsets* ds = nullptr;
  if (l.size() <= std::min(opts.bound, 20)) {
    ds_store = enumerate_directed_subsets(l, opts.bound);
    ds = &ds_store;
  }

  PatchFrame p;
  p.base = &l;
  p.base_compacts = base_report.compact_opens;

  // Generator nuclei c_{K1} ∧ o_{K2} over all compact pairs.
  std::map<Element, Nucleus> closed, open;
  for (Element k : p.base_compacts) {
    Nucleus c = closed_nucleus(l, k, ScottCheck::Defer);
    set_scott(c, ds);
    Nucleus o = open_nucleus(l, k, ScottCheck::Defer);
    set_scott(o, ds);
    closed.emplace(k, std::move(c));
    open.emplace(k, std::move(o));
  }
  std::vector<std::pair<std::pair<Element, Element>, Nucleus>> gen_pairs;
  std::map<std::vector<Element>, int> gen_index;  // dedup by table
  std::vector<Nucleus> gens;
  for (Element k1 : p.base_compacts)
    for (Element k2 : p.base_compacts) {
      Nucleus g = nucleus_meet(closed.at(k1), open.at(k2), ScottCheck::Defer);
      set_scott(g, ds);
      if (!g.certificate.scott_continuous)
        throw std::logic_error("generator nucleus failed Scott continuity");
      if (!gen_index.count(g.table)) {
        gen_index.emplace(g.table, static_cast<int>(gens.size()));
        gens.push_back(g);
      }
      gen_pairs.push_back({{k1, k2}, std::move(g)});
    }

  // Closure of {identity} under binary joins with the generators. Each carrier
  // member remembers one generator subset joining to it.
  Nucleus id = identity_nucleus(l);
  set_scott(id, ds);
  std::map<std::vector<Element>, std::vector<int>> closure;
  closure.emplace(id.table, std::vector<int>{});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<std::vector<Element>, std::vector<int>>> snapshot(closure.begin(),
                                                                            closure.end());
    for (const auto& [table, gens_used] : snapshot) {
      Nucleus current = check_nucleus(l, table, ScottCheck::Defer);
      set_scott(current, ds);
      for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
        const Nucleus pair[2] = {current, gens[gi]};
        Nucleus joined = nucleus_join(l, pair, ScottCheck::Defer);
        set_scott(joined, ds);
        if (!joined.certificate.scott_continuous)
          throw std::logic_error("carrier nucleus failed Scott continuity");
        if (!closure.count(joined.table)) {
          std::vector<int> used = gens_used;
          if (std::find(used.begin(), used.end(), gi) == used.end()) used.push_back(gi);
          closure.emplace(joined.table, std::move(used));
          grew = true;
          if (static_cast<int>(closure.size()) > opts.max_carrier)
            throw FrameTooLarge("patch carrier exceeds the configured cap",
                                static_cast<int>(closure.size()), opts.max_carrier);
        }
      }
    }
  }

  for (const auto& [table, gens_used] : closure) {
    Nucleus j = check_nucleus(l, table, ScottCheck::Defer);
    set_scott(j, ds);
    p.carrier.push_back(std::move(j));
  }
  std::sort(p.carrier.begin(), p.carrier.end());

  // Cross-check against raw enumeration where feasible.
  if (l.size() <= opts.enum_crosscheck_limit) {
    const std::vector<Nucleus> all = enumerate_scott_nuclei(l, opts.enum_crosscheck_limit);
    if (all.size() != p.carrier.size())
      throw std::logic_error("generator closure disagrees with nucleus enumeration");
    for (size_t i = 0; i < all.size(); ++i)
      if (!(all[i] == p.carrier[i]))
        throw std::logic_error("generator closure disagrees with nucleus enumeration");
  }

  const int m = static_cast<int>(p.carrier.size());
  auto index_of_table = [&](const std::vector<Element>& t) -> Element {
    Nucleus probe;
    probe.table = t;
    const auto it = std::lower_bound(p.carrier.begin(), p.carrier.end(), probe);
    if (it == p.carrier.end() || it->table != t)
      throw std::logic_error("nucleus expected in the carrier is missing");
    return static_cast<Element>(it - p.carrier.begin());
  };

  // Generator subsets per carrier element, re-indexed after sorting.
  p.generator_joins.resize(m);
  for (const auto& [table, gens_used] : closure)
    p.generator_joins[index_of_table(table)] = gens_used;

  for (const auto& [tags, g] : gen_pairs)
    p.generators.push_back({tags.first, tags.second, index_of_table(g.table)});

  // The frame over the carrier: order pointwise, meets/joins via the nucleus
  // module, then full validation by the FiniteFrame constructor.
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = nucleus_label(l, p.carrier[i].table);
  std::vector<std::pair<Element, Element>> rel;
  auto pointwise_leq = [&](int a, int b) {
    for (Element u = 0; u < l.size(); ++u)
      if (!l.leq(p.carrier[a](u), p.carrier[b](u))) return false;
    return true;
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (pointwise_leq(a, b)) rel.emplace_back(a, b);
  FinitePoset poset = FinitePoset::from_relation(std::move(labels), rel);

  std::vector<Element> meet_table(static_cast<size_t>(m) * m);
  std::vector<Element> join_table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      const Nucleus mt = nucleus_meet(p.carrier[a], p.carrier[b], ScottCheck::Defer);
      const Nucleus pair[2] = {p.carrier[a], p.carrier[b]};
      const Nucleus jn = nucleus_join(l, pair, ScottCheck::Defer);
      const Element mi = index_of_table(mt.table);
      const Element ji = index_of_table(jn.table);
      meet_table[static_cast<size_t>(a) * m + b] = mi;
      meet_table[static_cast<size_t>(b) * m + a] = mi;
      join_table[static_cast<size_t>(a) * m + b] = ji;
      join_table[static_cast<size_t>(b) * m + a] = ji;
    }

  const Element top_id = index_of_table(top_nucleus(l).table);
  const Element bottom_id = index_of_table(id.table);
  p.frame_ = std::make_unique<const FiniteFrame>(std::move(poset), top_id, bottom_id,
                                                 std::move(meet_table), std::move(join_table));

  // Basic order: pointwise comparison coincides with comparison on compacts.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool on_compacts = true;
      for (Element k : p.base_compacts)
        if (!l.leq(p.carrier[a](k), p.carrier[b](k))) on_compacts = false;
      if (on_compacts != p.frame().leq(a, b))
        throw std::logic_error("basic order disagrees with the pointwise order");
    }

  const ClassificationReport patch_report = classify(p.frame(), opts.mode, opts.bound);
  if (!patch_report.is_stone)
    throw std::logic_error("patch frame failed the Stone classification");
  return p;
}

FrameHom counit(const PatchFrame& p) {
  const FiniteFrame& base = *p.base;
  std::vector<Element> t(base.size());
  for (Element u = 0; u < base.size(); ++u)
    t[u] = p.element_of(closed_nucleus(base, u, ScottCheck::Defer));
  const FrameHom eps = check_frame_hom(make_monotone_map(base, p.frame(), std::move(t)));

  for (Element e = 0; e < p.frame().size(); ++e)
    if (eps.right_adjoint(e) != p.carrier[e](base.bottom()))
      throw std::logic_error("counit right adjoint differs from evaluation at bottom");
  if (!is_perfect(eps))
    throw std::logic_error("counit failed the perfection check");
  return eps;
}

JohnstoneReport johnstone_decomposition(const PatchFrame& p, const Nucleus& j) {
  const FiniteFrame& base = *p.base;
  const FiniteFrame& pf = p.frame();
  JohnstoneReport rep;
  rep.element = p.element_of(j);

  auto term_element = [&](Element closed_part, Element open_part) {
    const Nucleus t = nucleus_meet(closed_nucleus(base, closed_part, ScottCheck::Defer),
                                   open_nucleus(base, open_part, ScottCheck::Defer),
                                   ScottCheck::Defer);
    return p.element_of(t);
  };

  Element full = pf.bottom();
  for (Element k : p.base_compacts) {
    rep.terms_full.emplace_back(j(k), k);
    full = pf.join(full, term_element(j(k), k));
  }
  rep.full_ok = (full == rep.element);

  Element restricted = pf.bottom();
  for (Element k1 : p.base_compacts)
    for (Element k2 : p.base_compacts) {
      if (!base.leq(k1, j(k2))) continue;
      rep.terms_restricted.emplace_back(j(k1), k2);
      restricted = pf.join(restricted, term_element(j(k1), k2));
    }
  rep.restricted_ok = (restricted == rep.element);
  return rep;
}

LiftResult lift_map(const FrameHom& f, const ClassificationReport& x_stone) {
  const FiniteFrame& a = *f.map.source;
  const FiniteFrame& x = *f.map.target;

  if (!x_stone.is_stone)
    throw SourceNotStone("the lift requires a Stone frame of opens");
  for (Element u = 0; u < x.size(); ++u) {
    const Element c = complement(x, u);
    if (x.meet(u, c) != x.bottom() || x.join(u, c) != x.top())
      throw SourceNotStone("'" + x.label(u) + "' has no Boolean complement");
  }
  if (!is_spectral_map(f))
    throw std::logic_error("finite frame hom failed the spectral-map check");

  LiftResult res;
  res.patch = build_patch(a);
  const PatchFrame& p = res.patch;
  const FiniteFrame& pf = p.frame();

  std::vector<Element> t(pf.size());
  for (Element e = 0; e < pf.size(); ++e) {
    const Nucleus& j = p.carrier[e];
    Element acc = x.bottom();
    for (Element k : p.base_compacts)
      acc = x.join(acc, x.meet(f(j(k)), complement(x, f(k))));
    t[e] = acc;
  }
  res.lift = check_frame_hom(make_monotone_map(pf, x, std::move(t)));

  const FrameHom eps = counit(p);
  res.commutes = true;
  for (Element u = 0; u < a.size(); ++u)
    if (res.lift(eps(u)) != f(u)) res.commutes = false;

  // Lemma form of the right adjoint: V ↦ f_* ∘ c_V ∘ f.
  for (Element v = 0; v < x.size(); ++v) {
    std::vector<Element> nt(a.size());
    for (Element u = 0; u < a.size(); ++u) nt[u] = f.right_adjoint(x.join(v, f(u)));
    Nucleus n = check_nucleus(a, std::move(nt), ScottCheck::Defer);
    if (res.lift.right_adjoint(v) != p.element_of(n))
      throw std::logic_error("lift right adjoint differs from the closed-nucleus form");
  }

  // Uniqueness by the generator argument: complement pairs force the images
  // of c_K and o_K under any commuting hom, and the Johnstone decomposition
  // writes every carrier element as a join of forced terms.
  bool unique = res.commutes;
  for (Element k : p.base_compacts) {
    const Element ck = p.element_of(closed_nucleus(a, k, ScottCheck::Defer));
    const Element ok = p.element_of(open_nucleus(a, k, ScottCheck::Defer));
    if (pf.meet(ck, ok) != pf.bottom() || pf.join(ck, ok) != pf.top()) unique = false;
    const Element fk = f(k);
    const Element cfk = complement(x, fk);
    if (x.meet(fk, cfk) != x.bottom() || x.join(fk, cfk) != x.top()) unique = false;
  }
  for (Element e = 0; e < pf.size() && unique; ++e)
    if (!johnstone_decomposition(p, p.carrier[e]).full_ok) unique = false;

  res.uniqueness_search_bound = 6;
  if (pf.size() <= res.uniqueness_search_bound && x.size() <= res.uniqueness_search_bound) {
    res.exhaustive_search_done = true;
    int found = 0;
    for (const FrameHom& g : enumerate_frame_homs(pf, x)) {
      bool commutes = true;
      for (Element u = 0; u < a.size(); ++u)
        if (g(eps(u)) != f(u)) commutes = false;
      if (!commutes) continue;
      ++found;
      if (!(g.map.table == res.lift.map.table)) unique = false;
    }
    if (found != 1) unique = false;
  }
  res.unique = unique;
  return res;
}

bool booleanization_oracle(const FinitePoset& p) {
  if (p.size() > 5)
    throw FrameTooLarge("booleanization oracle takes ground posets of at most 5 points",
                        p.size(), 5);

  const FiniteFrame down = downset_frame(p);
  const PatchFrame patch = build_patch(down);

  std::vector<std::string> labels;
  for (int i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
  const FiniteFrame powerset = downset_frame(
      FinitePoset::from_hasse(std::move(labels), {}));

  // Down(P) element i is the downset with bitmask masks[i]; in the powerset
  // frame over an antichain the element with that mask sits at index mask.
  const std::vector<std::uint32_t> masks = enumerate_downsets(p);
  std::vector<std::pair<Element, Element>> forced;
  for (int i = 0; i < down.size(); ++i) {
    const Element eps_i = patch.element_of(closed_nucleus(down, i, ScottCheck::Defer));
    forced.emplace_back(eps_i, static_cast<Element>(masks[i]));
  }
  return frame_isomorphism(patch.frame(), powerset, forced).has_value();
}

}  // namespace localepatch
