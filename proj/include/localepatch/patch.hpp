#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "localepatch/nucleus.hpp"

namespace localepatch {

inline constexpr int kMaxNucleusEnumeration = 10;
inline constexpr int kMaxPatchCarrier = 4096;

// All Scott-continuous nuclei on l via pruned search over inflationary
// monotone tables; ascending table order.
std::vector<Nucleus> enumerate_scott_nuclei(const FiniteFrame& l,
                                            int max_size = kMaxNucleusEnumeration);

// The frame of Scott-continuous nuclei on a spectral base. Element i of
// frame() is carrier[i]; carrier is ascending by table, so the identity
// nucleus comes first and the constant-top nucleus last. The base frame is
// borrowed and must outlive the patch.
struct PatchFrame {
  struct Generator {
    Element k1, k2;   // base compacts: the nucleus c_{k1} ∧ o_{k2}
    Element element;  // its carrier id
  };

  const FiniteFrame* base = nullptr;
  std::vector<Nucleus> carrier;
  std::vector<Element> base_compacts;
  std::vector<Generator> generators;
  // For each carrier element, generator indices whose join produces it
  // (identity = empty join).
  std::vector<std::vector<int>> generator_joins;

  const FiniteFrame& frame() const { return *frame_; }
  Element element_of(const Nucleus& j) const;  // invalid_argument if absent
  const Nucleus& nucleus_of(Element e) const { return carrier[e]; }

  std::unique_ptr<const FiniteFrame> frame_;  // heap: stable address across moves
};

struct PatchOptions {
  WayBelowMode mode = WayBelowMode::Auto;
  int bound = max_exhaustive_bound();
  int enum_crosscheck_limit = kMaxNucleusEnumeration;
  int max_carrier = kMaxPatchCarrier;
};

// Carrier = closure of {identity} under joins with the generators c_{K1}∧o_{K2}
// over all compact pairs; cross-checked against enumerate_scott_nuclei when
// the base is small enough; the resulting frame passes full validation, the
// basic-order law, and classifies as Stone.
PatchFrame build_patch(const FiniteFrame& l, const PatchOptions& opts = {});

// ε*: U ↦ c_U, certified as a frame hom from the base into the patch; its
// right adjoint is verified to equal j ↦ j(bottom) and the hom to be perfect.
FrameHom counit(const PatchFrame& p);

struct JohnstoneReport {
  Element element = -1;  // carrier id of the decomposed nucleus
  bool full_ok = false;
  bool restricted_ok = false;
  // (closed part, open part) base-element tags actually used: full form terms
  // (j(K), K) over compacts K; restricted form terms (j(K1), K2) over pairs
  // with K1 ≤ j(K2).
  std::vector<std::pair<Element, Element>> terms_full;
  std::vector<std::pair<Element, Element>> terms_restricted;
};

// Reconstructs j as the join of c_{j(K)} ∧ o_K terms (and the restricted
// form); the booleans report whether the joins land back on j.
JohnstoneReport johnstone_decomposition(const PatchFrame& p, const Nucleus& j);

struct LiftResult {
  PatchFrame patch;  // patch of the hom's source frame
  FrameHom lift;     // patch.frame() → the hom's target frame
  bool commutes = false;
  bool unique = false;
  int uniqueness_search_bound = 0;
  bool exhaustive_search_done = false;
};

// For f a certified spectral hom into a Stone frame (per x_stone, which is
// re-verified by a complement scan): builds f̄*(j) = ⋁_K f(j(K)) ∧ ¬f(K),
// certifies it, checks f̄* ∘ ε* = f, verifies the right adjoint equals
// V ↦ f_* ∘ c_V ∘ f, and establishes uniqueness by the generator argument
// (complement pairs forced, Johnstone decomposition) plus an exhaustive hom
// search when both carriers are ≤ 6.
LiftResult lift_map(const FrameHom& f, const ClassificationReport& x_stone);

// Patch(Down(P)) against the powerset of P: builds both and decides frame
// isomorphism with ε* forced onto downset inclusion. Requires |P| ≤ 5.
bool booleanization_oracle(const FinitePoset& p);

}  // namespace localepatch
