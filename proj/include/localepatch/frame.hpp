#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "localepatch/poset.hpp"

namespace localepatch {

// Indexed selection of elements; tags are positions 0..size()-1 and repeats
// are allowed.
struct Family {
  std::vector<Element> members;

  Family() = default;
  Family(std::initializer_list<Element> init) : members(init) {}
  explicit Family(std::vector<Element> init) : members(std::move(init)) {}

  int size() const noexcept { return static_cast<int>(members.size()); }
  bool empty() const noexcept { return members.empty(); }
  Element operator[](int i) const { return members[i]; }
  auto begin() const { return members.begin(); }
  auto end() const { return members.end(); }
  bool operator==(const Family&) const = default;
};

// Finite word over family tags; the empty word is the unit of concatenation.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> init) : letters(init) {}
  explicit Word(std::vector<int> init) : letters(std::move(init)) {}

  static Word epsilon() { return Word{}; }
  bool empty() const noexcept { return letters.empty(); }
  int length() const noexcept { return static_cast<int>(letters.size()); }

  Word concat(const Word& other) const {
    Word out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
    return out;
  }

  bool operator==(const Word&) const = default;
};

// Finite distributive lattice with tabulated meets and joins. The constructor
// verifies the tables against the order (greatest lower bound, least upper
// bound), the bounds, and distributivity, so a constructed value is a frame.
class FiniteFrame {
public:
  FiniteFrame(FinitePoset poset, Element top, Element bottom,
              std::vector<Element> meet_table, std::vector<Element> join_table);

  const FinitePoset& poset() const noexcept { return poset_; }
  int size() const noexcept { return poset_.size(); }
  bool leq(Element u, Element v) const { return poset_.leq(u, v); }
  const std::string& label(Element u) const { return poset_.label(u); }

  Element top() const noexcept { return top_; }
  Element bottom() const noexcept { return bottom_; }
  Element meet(Element u, Element v) const {
    return meet_[static_cast<size_t>(u) * size() + v];
  }
  Element join(Element u, Element v) const {
    return join_[static_cast<size_t>(u) * size() + v];
  }

  bool operator==(const FiniteFrame&) const = default;

private:
  FinitePoset poset_;
  Element top_;
  Element bottom_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

// Computes meets and joins by bounds search; throws NotALattice (with the
// witness pair) or NotDistributive (with the witness triple).
FiniteFrame frame_from_poset(const FinitePoset& p);

// All down-closed subsets of p as bitmasks, sorted ascending. The sort is a
// linear extension of inclusion: a proper subset has a smaller mask.
std::vector<std::uint32_t> enumerate_downsets(const FinitePoset& p);

// The frame of downsets of p ordered by inclusion. Element ids follow
// enumerate_downsets, so 0 is the empty downset and size-1 is all of p.
// Labels render the downset as a set of p's labels. Requires p.size() <= 10.
FiniteFrame downset_frame(const FinitePoset& p);

// Non-bottom elements that are not the join of two strictly smaller ones.
std::vector<Element> join_irreducibles(const FiniteFrame& l);

Element family_join(const FiniteFrame& l, const Family& f);
Element family_meet(const FiniteFrame& l, const Family& f);

// An order isomorphism f → g as an element table, or nullopt. Candidates are
// matched on join-irreducibles first (profile: downset/upset sizes), extended
// to the rest by joins, then fully verified. `forced` pins chosen pairs.
// Deterministic: candidates tried in ascending id order.
std::optional<std::vector<Element>> frame_isomorphism(
    const FiniteFrame& f, const FiniteFrame& g,
    const std::vector<std::pair<Element, Element>>& forced = {});

}  // namespace localepatch
