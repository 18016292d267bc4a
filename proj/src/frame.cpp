#include "localepatch/frame.hpp"

#include <algorithm>

#include "localepatch/errors.hpp"

namespace localepatch {

namespace {

constexpr int kMaxDownsetGround = 10;

void check_is_glb(const FinitePoset& p, Element u, Element v, Element m) {
  if (!p.leq(m, u) || !p.leq(m, v))
    throw NotALattice("meet of '" + p.label(u) + "' and '" + p.label(v) +
                          "' is not a lower bound",
                      u, v);
  for (Element w = 0; w < p.size(); ++w)
    if (p.leq(w, u) && p.leq(w, v) && !p.leq(w, m))
      throw NotALattice("meet of '" + p.label(u) + "' and '" + p.label(v) +
                            "' is not the greatest lower bound",
                        u, v);
}

void check_is_lub(const FinitePoset& p, Element u, Element v, Element j) {
  if (!p.leq(u, j) || !p.leq(v, j))
    throw NotALattice("join of '" + p.label(u) + "' and '" + p.label(v) +
                          "' is not an upper bound",
                      u, v);
  for (Element w = 0; w < p.size(); ++w)
    if (p.leq(u, w) && p.leq(v, w) && !p.leq(j, w))
      throw NotALattice("join of '" + p.label(u) + "' and '" + p.label(v) +
                            "' is not the least upper bound",
                        u, v);
}

}  // namespace

FiniteFrame::FiniteFrame(FinitePoset poset, Element top, Element bottom,
                         std::vector<Element> meet_table, std::vector<Element> join_table)
    : poset_(std::move(poset)),
      top_(top),
      bottom_(bottom),
      meet_(std::move(meet_table)),
      join_(std::move(join_table)) {
  const int n = poset_.size();
  if (n == 0) throw NotALattice("empty carrier has no top or bottom");
  if (meet_.size() != static_cast<size_t>(n) * n || join_.size() != static_cast<size_t>(n) * n)
    throw NotALattice("meet/join tables must be size x size");
  for (Element u = 0; u < n; ++u) {
    if (!poset_.leq(u, top_))
      throw NotALattice("'" + poset_.label(top_) + "' is not a top", u, top_);
    if (!poset_.leq(bottom_, u))
      throw NotALattice("'" + poset_.label(bottom_) + "' is not a bottom", bottom_, u);
  }
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      const Element m = meet(u, v);
      const Element j = join(u, v);
      if (m < 0 || m >= n || j < 0 || j >= n)
        throw NotALattice("table entry out of range", u, v);
      check_is_glb(poset_, u, v, m);
      check_is_lub(poset_, u, v, j);
    }
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      for (Element w = 0; w < n; ++w)
        if (meet(u, join(v, w)) != join(meet(u, v), meet(u, w)))
          throw NotDistributive("'" + poset_.label(u) + "' /\\ ('" + poset_.label(v) +
                                    "' \\/ '" + poset_.label(w) + "') breaks distributivity",
                                u, v, w);
}

FiniteFrame frame_from_poset(const FinitePoset& p) {
  const int n = p.size();
  if (n == 0) throw NotALattice("empty carrier has no top or bottom");

  auto find_glb = [&](Element u, Element v) -> Element {
    for (Element m = 0; m < n; ++m) {
      if (!p.leq(m, u) || !p.leq(m, v)) continue;
      bool greatest = true;
      for (Element w = 0; w < n && greatest; ++w)
        if (p.leq(w, u) && p.leq(w, v) && !p.leq(w, m)) greatest = false;
      if (greatest) return m;
    }
    throw NotALattice("'" + p.label(u) + "' and '" + p.label(v) + "' have no meet", u, v);
  };
  auto find_lub = [&](Element u, Element v) -> Element {
    for (Element j = 0; j < n; ++j) {
      if (!p.leq(u, j) || !p.leq(v, j)) continue;
      bool least = true;
      for (Element w = 0; w < n && least; ++w)
        if (p.leq(u, w) && p.leq(v, w) && !p.leq(j, w)) least = false;
      if (least) return j;
    }
    throw NotALattice("'" + p.label(u) + "' and '" + p.label(v) + "' have no join", u, v);
  };

  std::vector<Element> meet(static_cast<size_t>(n) * n);
  std::vector<Element> join(static_cast<size_t>(n) * n);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      meet[static_cast<size_t>(u) * n + v] = find_glb(u, v);
      join[static_cast<size_t>(u) * n + v] = find_lub(u, v);
    }

  Element top = -1, bottom = -1;
  for (Element t = 0; t < n && top < 0; ++t) {
    bool all = true;
    for (Element u = 0; u < n && all; ++u) all = p.leq(u, t);
    if (all) top = t;
  }
  if (top < 0) throw NotALattice("no top element");
  for (Element b = 0; b < n && bottom < 0; ++b) {
    bool all = true;
    for (Element u = 0; u < n && all; ++u) all = p.leq(b, u);
    if (all) bottom = b;
  }
  if (bottom < 0) throw NotALattice("no bottom element");

  return FiniteFrame(p, top, bottom, std::move(meet), std::move(join));
}

std::vector<std::uint32_t> enumerate_downsets(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (Element v = 0; v < n && closed; ++v) {
      if (!(mask & (1u << v))) continue;
      for (Element u = 0; u < n && closed; ++u)
        if (p.leq(u, v) && !(mask & (1u << u))) closed = false;
    }
    if (closed) out.push_back(mask);
  }
  return out;  // ascending by construction
}

FiniteFrame downset_frame(const FinitePoset& p) {
  const int n = p.size();
  if (n > kMaxDownsetGround)
    throw FrameTooLarge("downset frame over " + std::to_string(n) + " points", n,
                        kMaxDownsetGround);

  const std::vector<std::uint32_t> masks = enumerate_downsets(p);
  const int m = static_cast<int>(masks.size());
  std::vector<int> index(n ? (1u << n) : 1, -1);
  for (int i = 0; i < m; ++i) index[masks[i]] = i;

  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string s = "{";
    bool first = true;
    for (Element v = 0; v < n; ++v)
      if (masks[i] & (1u << v)) {
        if (!first) s += ",";
        s += p.label(v);
        first = false;
      }
    labels[i] = s + "}";
  }

  std::vector<std::pair<Element, Element>> rel;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((masks[i] & masks[j]) == masks[i]) rel.emplace_back(i, j);
  FinitePoset poset = FinitePoset::from_relation(std::move(labels), rel);

  std::vector<Element> meet(static_cast<size_t>(m) * m);
  std::vector<Element> join(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      meet[static_cast<size_t>(i) * m + j] = index[masks[i] & masks[j]];
      join[static_cast<size_t>(i) * m + j] = index[masks[i] | masks[j]];
    }
  return FiniteFrame(std::move(poset), m - 1, 0, std::move(meet), std::move(join));
}

std::vector<Element> join_irreducibles(const FiniteFrame& l) {
  std::vector<Element> out;
  for (Element u = 0; u < l.size(); ++u) {
    if (u == l.bottom()) continue;
    bool irreducible = true;
    for (Element a = 0; a < l.size() && irreducible; ++a) {
      if (!l.leq(a, u) || a == u) continue;
      for (Element b = 0; b < l.size() && irreducible; ++b) {
        if (!l.leq(b, u) || b == u) continue;
        if (l.join(a, b) == u) irreducible = false;
      }
    }
    if (irreducible) out.push_back(u);
  }
  return out;
}

Element family_join(const FiniteFrame& l, const Family& f) {
  Element acc = l.bottom();
  for (Element u : f) acc = l.join(acc, u);
  return acc;
}

Element family_meet(const FiniteFrame& l, const Family& f) {
  Element acc = l.top();
  for (Element u : f) acc = l.meet(acc, u);
  return acc;
}

std::optional<std::vector<Element>> frame_isomorphism(
    const FiniteFrame& f, const FiniteFrame& g,
    const std::vector<std::pair<Element, Element>>& forced) {
  const int n = f.size();
  if (g.size() != n) return std::nullopt;

  auto profile = [](const FiniteFrame& l, Element u) {
    int down = 0, up = 0;
    for (Element w = 0; w < l.size(); ++w) {
      if (l.leq(w, u)) ++down;
      if (l.leq(u, w)) ++up;
    }
    return std::pair<int, int>(down, up);
  };

  const std::vector<Element> ji_f = join_irreducibles(f);
  const std::vector<Element> ji_g = join_irreducibles(g);
  if (ji_f.size() != ji_g.size()) return std::nullopt;

  std::vector<std::vector<Element>> cand(ji_f.size());
  for (size_t i = 0; i < ji_f.size(); ++i) {
    const auto pf = profile(f, ji_f[i]);
    for (Element v : ji_g)
      if (profile(g, v) == pf) cand[i].push_back(v);
    if (cand[i].empty()) return std::nullopt;
  }

  std::vector<Element> phi(n, -1);
  auto extend_and_verify = [&](const std::vector<Element>& ji_image) -> bool {
    for (Element u = 0; u < n; ++u) {
      Element acc = g.bottom();
      for (size_t i = 0; i < ji_f.size(); ++i)
        if (f.leq(ji_f[i], u)) acc = g.join(acc, ji_image[i]);
      phi[u] = acc;
    }
    std::vector<bool> hit(n, false);
    for (Element u = 0; u < n; ++u) {
      if (hit[phi[u]]) return false;
      hit[phi[u]] = true;
    }
    if (phi[f.top()] != g.top() || phi[f.bottom()] != g.bottom()) return false;
    for (Element u = 0; u < n; ++u)
      for (Element v = 0; v < n; ++v) {
        if (f.leq(u, v) != g.leq(phi[u], phi[v])) return false;
        if (phi[f.meet(u, v)] != g.meet(phi[u], phi[v])) return false;
        if (phi[f.join(u, v)] != g.join(phi[u], phi[v])) return false;
      }
    for (const auto& [a, b] : forced)
      if (phi[a] != b) return false;
    return true;
  };

  std::vector<Element> image(ji_f.size(), -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == ji_f.size()) return extend_and_verify(image);
    for (Element v : cand[i]) {
      if (used[v]) continue;
      image[i] = v;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (rec(rec, 0)) return phi;
  return std::nullopt;
}

}  // namespace localepatch
