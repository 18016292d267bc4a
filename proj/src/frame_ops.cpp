#include "localepatch/frame_ops.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "localepatch/errors.hpp"

namespace localepatch {

int max_exhaustive_bound() {
  static const int bound = [] {
    if (const char* env = std::getenv("LOCALEPATCH_MAX_EXHAUSTIVE")) {
      const long v = std::strtol(env, nullptr, 10);
      return static_cast<int>(std::clamp(v, 1L, 20L));
    }
    return 16;
  }();
  return bound;
}

DirectedSubsets enumerate_directed_subsets(const FiniteFrame& l, int bound) {
  const int n = l.size();
  bound = std::min(bound, 20);  // subset masks stay within 32 bits
  if (n > bound)
    throw FrameTooLarge("directed-subset enumeration over " + std::to_string(n) +
                            " elements exceeds the bound",
                        n, bound);

  // ub[u][v]: bitmask of common upper bounds of u and v inside the frame.
  std::vector<std::uint32_t> ub(static_cast<size_t>(n) * n, 0);
  std::vector<std::uint32_t> down(n, 0);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      if (l.leq(v, u)) down[u] |= 1u << v;
      for (Element w = 0; w < n; ++w)
        if (l.leq(u, w) && l.leq(v, w)) ub[static_cast<size_t>(u) * n + v] |= 1u << w;
    }

  DirectedSubsets out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool directed = true;
    for (Element u = 0; u < n && directed; ++u) {
      if (!(mask & (1u << u))) continue;
      for (Element v = u; v < n && directed; ++v) {
        if (!(mask & (1u << v))) continue;
        if (!(ub[static_cast<size_t>(u) * n + v] & mask)) directed = false;
      }
    }
    if (!directed) continue;
    Element j = l.bottom();
    std::uint32_t below = 0;
    for (Element u = 0; u < n; ++u)
      if (mask & (1u << u)) {
        j = l.join(j, u);
        below |= down[u];
      }
    out.masks.push_back(mask);
    out.joins.push_back(j);
    out.below.push_back(below);
  }
  return out;
}

bool is_directed(const FiniteFrame& l, const Family& f) {
  if (f.empty()) return false;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i; j < f.size(); ++j) {
      bool bounded = false;
      for (int k = 0; k < f.size() && !bounded; ++k)
        if (l.leq(f[i], f[k]) && l.leq(f[j], f[k])) bounded = true;
      if (!bounded) return false;
    }
  return true;
}

bool way_below(const FiniteFrame& l, Element u, Element v, WayBelowMode mode, int bound) {
  const bool fits = l.size() <= bound;
  if (mode == WayBelowMode::Exhaustive && !fits)
    throw FrameTooLarge("way_below needs exhaustive enumeration", l.size(), bound);
  if (mode == WayBelowMode::FastPath || (mode == WayBelowMode::Auto && !fits))
    return l.leq(u, v);

  const DirectedSubsets ds = enumerate_directed_subsets(l, bound);
  for (size_t i = 0; i < ds.masks.size(); ++i)
    if (l.leq(v, ds.joins[i]) && !(ds.below[i] & (1u << u))) return false;
  return true;
}

std::optional<Element> well_inside(const FiniteFrame& l, Element u, Element v) {
  for (Element w = 0; w < l.size(); ++w)
    if (l.meet(u, w) == l.bottom() && l.join(v, w) == l.top()) return w;
  return std::nullopt;
}

namespace {

std::vector<Element> compact_opens_of(const FiniteFrame& l, WayBelowMode mode, int bound,
                                      WayBelowMode& mode_used) {
  const int n = l.size();
  const bool fits = n <= bound;
  if (mode == WayBelowMode::Exhaustive && !fits)
    throw FrameTooLarge("classification needs exhaustive enumeration", n, bound);

  std::vector<Element> compacts;
  if (mode == WayBelowMode::FastPath || (mode == WayBelowMode::Auto && !fits)) {
    mode_used = WayBelowMode::FastPath;
    for (Element u = 0; u < n; ++u) compacts.push_back(u);  // u ≪ u iff u ≤ u
    return compacts;
  }

  mode_used = WayBelowMode::Exhaustive;
  const DirectedSubsets ds = enumerate_directed_subsets(l, bound);
  for (Element u = 0; u < n; ++u) {
    bool compact = true;
    for (size_t i = 0; i < ds.masks.size() && compact; ++i)
      if (l.leq(u, ds.joins[i]) && !(ds.below[i] & (1u << u))) compact = false;
    if (compact) compacts.push_back(u);
  }
  return compacts;
}

}  // namespace

ClassificationReport classify(const FiniteFrame& l, WayBelowMode mode, int bound) {
  const int n = l.size();
  ClassificationReport r;
  r.compact_opens = compact_opens_of(l, mode, bound, r.mode_used);
  for (Element u = 0; u < n; ++u)
    if (well_inside(l, u, u)) r.clopens.push_back(u);

  auto contains = [](const std::vector<Element>& xs, Element u) {
    return std::binary_search(xs.begin(), xs.end(), u);
  };
  auto fail = [&](const char* cond, std::vector<Element> elems, std::string detail) {
    r.witnesses.push_back({cond, std::move(elems), std::move(detail)});
  };

  r.sp1 = contains(r.compact_opens, l.top());
  if (!r.sp1) fail("SP1", {l.top()}, "top is not compact");
  r.st1 = r.sp1;
  r.is_compact = r.sp1;

  r.sp2 = true;
  for (Element u : r.compact_opens)
    for (Element v : r.compact_opens)
      if (r.sp2 && !contains(r.compact_opens, l.meet(u, v))) {
        r.sp2 = false;
        fail("SP2", {u, v}, "meet of compacts '" + l.label(u) + "', '" + l.label(v) +
                                "' is not compact");
      }

  auto covering = [&](const std::vector<Element>& basics, const char* cond,
                      const std::string& kind) {
    for (Element u = 0; u < n; ++u) {
      std::vector<Element> below;
      for (Element b : basics)
        if (l.leq(b, u)) below.push_back(b);
      const Family fam{below};
      if (!is_directed(l, fam)) {
        fail(cond, {u}, "the " + kind + " below '" + l.label(u) + "' are not directed");
        return false;
      }
      if (family_join(l, fam) != u) {
        fail(cond, {u}, "'" + l.label(u) + "' is not the join of the " + kind + " below it");
        return false;
      }
    }
    return true;
  };
  r.sp3 = covering(r.compact_opens, "SP3", "compact opens");
  r.st2 = covering(r.clopens, "ST2", "clopens");

  r.sp4 = true;
  r.st3 = true;
  r.smallness_note =
      "SP4/ST3 smallness holds trivially: the compact opens and clopens of a finite "
      "frame are finite sets";

  r.is_spectral = r.sp1 && r.sp2 && r.sp3 && r.sp4;
  r.is_stone = r.st1 && r.st2 && r.st3;
  return r;
}

namespace {

Basis make_basis(const FiniteFrame& l, Family members) {
  Basis b;
  b.frame = &l;
  b.injective = true;
  std::set<Element> seen;
  for (Element m : members)
    if (!seen.insert(m).second) b.injective = false;
  b.members = std::move(members);
  b.covers.resize(l.size());
  for (Element u = 0; u < l.size(); ++u) {
    for (int tag = 0; tag < b.members.size(); ++tag)
      if (l.leq(b.members[tag], u)) b.covers[u].push_back(tag);
    const Family cov = b.cover(u);
    if (family_join(l, cov) != u)
      throw NotABasis("'" + l.label(u) + "' is not the join of the members below it", u);
    if (!is_directed(l, cov))
      throw NotABasis("cover of '" + l.label(u) + "' is not directed", u);
  }
  return b;
}

}  // namespace

Basis intensional_basis(const FiniteFrame& l, Family members) {
  for (Element m : members)
    if (m < 0 || m >= l.size())
      throw std::invalid_argument("basis member out of range");
  return make_basis(l, std::move(members));
}

Basis carrier_basis(const FiniteFrame& l) {
  std::vector<Element> all(l.size());
  for (Element u = 0; u < l.size(); ++u) all[u] = u;
  return make_basis(l, Family(std::move(all)));
}

Basis directify(const FiniteFrame& l, const Family& b) {
  for (Element m : b)
    if (m < 0 || m >= l.size())
      throw std::invalid_argument("family member out of range");
  // Join-closure of the members, seeded with the empty join.
  std::set<Element> closure = {l.bottom()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> current(closure.begin(), closure.end());
    for (Element c : current)
      for (Element m : b)
        if (closure.insert(l.join(c, m)).second) grew = true;
  }
  return make_basis(l, Family(std::vector<Element>(closure.begin(), closure.end())));
}

Basis canonical_spectral_basis(const FiniteFrame& l, WayBelowMode mode, int bound) {
  const ClassificationReport r = classify(l, mode, bound);
  if (!r.is_spectral) throw NotSpectral("canonical basis requires a spectral frame");
  return make_basis(l, Family(r.compact_opens));
}

Basis extensionalize(const Basis& b) {
  const FiniteFrame& l = *b.frame;
  std::set<Element> image(b.members.begin(), b.members.end());
  return make_basis(l, Family(std::vector<Element>(image.begin(), image.end())));
}

bool spectral_yoneda_check(const FiniteFrame& l, Element u, Element v, WayBelowMode mode,
                           int bound) {
  const ClassificationReport r = classify(l, mode, bound);
  if (!r.is_spectral) throw NotSpectral("yoneda check requires a spectral frame");
  bool all = true;
  for (Element k : r.compact_opens)
    if (l.leq(k, u) && !l.leq(k, v)) all = false;
  if (all != l.leq(u, v))
    throw std::logic_error("compact-reflection disagrees with the order");
  return all;
}

}  // namespace localepatch
