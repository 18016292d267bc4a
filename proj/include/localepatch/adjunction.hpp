#pragma once

#include <vector>

#include "localepatch/frame_ops.hpp"

namespace localepatch {

struct MonotoneMap {
  const FiniteFrame* source = nullptr;
  const FiniteFrame* target = nullptr;
  std::vector<Element> table;

  Element operator()(Element u) const { return table[u]; }
  bool operator==(const MonotoneMap& o) const {
    return table == o.table && *source == *o.source && *target == *o.target;
  }
};

// Validates totality, range, and monotonicity (NotMonotone with witness pair).
MonotoneMap make_monotone_map(const FiniteFrame& source, const FiniteFrame& target,
                              std::vector<Element> table);

struct PreservationCertificate {
  bool top = false;
  bool bottom = false;
  bool binary_meets = false;
  bool binary_joins = false;
  bool adjunction_law = false;
};

struct FrameHom {
  MonotoneMap map;
  PreservationCertificate preserves;
  MonotoneMap right_adjoint;  // computed and verified at certification time

  Element operator()(Element u) const { return map(u); }
  const FiniteFrame& source() const { return *map.source; }
  const FiniteFrame& target() const { return *map.target; }
};

// g(U) = join of the basis members B with h(B) ≤ U, over a basis of h's
// source; the adjunction law h(V) ≤ U iff V ≤ g(U) is then verified on all
// pairs. Fails with NotJoinPreserving (witness family) when h does not
// preserve bottom or a binary join, in which case no adjoint exists.
MonotoneMap right_adjoint(const MonotoneMap& h, const Basis& b);

// Largest W with W∧u ≤ v: the right adjoint of (−)∧u evaluated at v over the
// all-elements basis.
Element heyting(const FiniteFrame& l, Element u, Element v);

// u ⇒ bottom; a Boolean complement exactly when u is clopen.
Element complement(const FiniteFrame& l, Element u);

// Certifies top/bottom/meet/join preservation and caches the verified right
// adjoint (NotAFrameHom names the violated law and a witness pair).
FrameHom check_frame_hom(const MonotoneMap& h);

// Scott continuity of the right adjoint, checked over the directed subsets of
// the hom's target frame; above the bound the compact-approximation criterion
// certifies it instead.
bool is_perfect(const FrameHom& f, WayBelowMode mode = WayBelowMode::Auto,
                int bound = max_exhaustive_bound());

// The hom's table sends compact opens of the source to compact opens of the
// target.
bool is_spectral_map(const FrameHom& f, WayBelowMode mode = WayBelowMode::Auto,
                     int bound = max_exhaustive_bound());

// All monotone tables source → target, ascending lexicographic order.
std::vector<MonotoneMap> enumerate_monotone_maps(const FiniteFrame& source,
                                                 const FiniteFrame& target);

// The monotone maps that certify as frame homs, same order.
std::vector<FrameHom> enumerate_frame_homs(const FiniteFrame& source,
                                           const FiniteFrame& target);

}  // namespace localepatch
