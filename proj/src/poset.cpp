#include "localepatch/poset.hpp"

#include <set>

#include "localepatch/errors.hpp"

namespace localepatch {

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::vector<std::pair<Element, Element>>& pairs) {
  const int n = static_cast<int>(labels.size());
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw ParseError("empty element name");
    if (!seen.insert(l).second) throw ParseError("duplicate element name '" + l + "'");
  }

  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  auto at = [&](Element u, Element v) -> std::vector<bool>::reference {
    return leq[static_cast<size_t>(u) * n + v];
  };
  for (Element u = 0; u < n; ++u) at(u, u) = true;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("relation pair refers to element id out of range");
    at(u, v) = true;
  }

  // Floyd-Warshall style transitive closure.
  for (Element k = 0; k < n; ++k)
    for (Element u = 0; u < n; ++u)
      if (at(u, k))
        for (Element v = 0; v < n; ++v)
          if (at(k, v)) at(u, v) = true;

  for (Element u = 0; u < n; ++u)
    for (Element v = u + 1; v < n; ++v)
      if (at(u, v) && at(v, u))
        throw NotAPartialOrder(
            "cycle between '" + labels[u] + "' and '" + labels[v] + "'", u, v);

  return FinitePoset(n, std::move(leq), std::move(labels));
}

FinitePoset FinitePoset::from_hasse(std::vector<std::string> labels,
                                    const std::vector<std::pair<Element, Element>>& edges) {
  return from_relation(std::move(labels), edges);
}

std::vector<std::pair<Element, Element>> FinitePoset::hasse_edges() const {
  std::vector<std::pair<Element, Element>> edges;
  for (Element u = 0; u < size_; ++u)
    for (Element v = 0; v < size_; ++v) {
      if (u == v || !leq(u, v)) continue;
      bool covered = true;
      for (Element w = 0; w < size_ && covered; ++w)
        if (w != u && w != v && leq(u, w) && leq(w, v)) covered = false;
      if (covered) edges.emplace_back(u, v);
    }
  return edges;
}

}  // namespace localepatch
