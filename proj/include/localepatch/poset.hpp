#pragma once

#include <string>
#include <utility>
#include <vector>

namespace localepatch {

// Elements of a finite poset or frame are dense ids 0..size-1.
using Element = int;

// Finite partial order with a full boolean <= matrix. Construction takes the
// reflexive-transitive closure of the given pairs and rejects cycles between
// distinct elements and duplicate or empty labels.
class FinitePoset {
public:
  static FinitePoset from_relation(std::vector<std::string> labels,
                                   const std::vector<std::pair<Element, Element>>& pairs);
  // Same closure; the name records that the input lists cover edges only.
  static FinitePoset from_hasse(std::vector<std::string> labels,
                                const std::vector<std::pair<Element, Element>>& edges);

  int size() const noexcept { return size_; }
  bool leq(Element u, Element v) const { return leq_[static_cast<size_t>(u) * size_ + v]; }
  const std::string& label(Element u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Cover pairs u -< v, recomputed on demand; ordered by (u, v).
  std::vector<std::pair<Element, Element>> hasse_edges() const;

  bool operator==(const FinitePoset&) const = default;

private:
  FinitePoset(int size, std::vector<bool> leq, std::vector<std::string> labels)
      : size_(size), leq_(std::move(leq)), labels_(std::move(labels)) {}

  int size_ = 0;
  std::vector<bool> leq_;  // row-major
  std::vector<std::string> labels_;
};

}  // namespace localepatch
