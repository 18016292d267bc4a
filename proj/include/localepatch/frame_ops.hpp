#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localepatch/frame.hpp"

namespace localepatch {

// Cap on |L| for exhaustive directed-subset enumeration. Defaults to 16; the
// LOCALEPATCH_MAX_EXHAUSTIVE environment variable overrides it, clamped to
// [1, 20] so subset bitmasks stay within 32 bits.
int max_exhaustive_bound();

// Exhaustive: enumerate directed subsets, FrameTooLarge above the bound.
// FastPath: use the finite-scale collapse way_below == leq (callers opt in
// knowingly; the collapse itself is verified by the exhaustive mode in tests).
// Auto: Exhaustive when |L| fits the bound, FastPath otherwise.
enum class WayBelowMode { Exhaustive, FastPath, Auto };

// Every nonempty directed subset of l as a bitmask, with its join and the
// bitmask of elements lying below some member.
struct DirectedSubsets {
  std::vector<std::uint32_t> masks;
  std::vector<Element> joins;
  std::vector<std::uint32_t> below;
};

DirectedSubsets enumerate_directed_subsets(const FiniteFrame& l, int bound = max_exhaustive_bound());

bool is_directed(const FiniteFrame& l, const Family& f);

bool way_below(const FiniteFrame& l, Element u, Element v,
               WayBelowMode mode = WayBelowMode::Exhaustive,
               int bound = max_exhaustive_bound());

// Smallest-id W with u∧W = bottom and v∨W = top, if any.
std::optional<Element> well_inside(const FiniteFrame& l, Element u, Element v);

struct ConditionWitness {
  std::string condition;
  std::vector<Element> elements;
  std::string detail;
};

struct ClassificationReport {
  std::vector<Element> compact_opens;
  std::vector<Element> clopens;
  bool is_compact = false;
  bool is_spectral = false;
  bool is_stone = false;
  // sp1/st1: compact top; sp2: compacts meet-closed; sp3/st2: every element is
  // the join of the directed family of compacts/clopens below it; sp4/st3:
  // smallness, trivially satisfied at finite scale and noted as such.
  bool sp1 = false, sp2 = false, sp3 = false, sp4 = false;
  bool st1 = false, st2 = false, st3 = false;
  std::vector<ConditionWitness> witnesses;
  WayBelowMode mode_used = WayBelowMode::Exhaustive;
  std::string smallness_note;
};

ClassificationReport classify(const FiniteFrame& l,
                              WayBelowMode mode = WayBelowMode::Auto,
                              int bound = max_exhaustive_bound());

// A family of members together with, for every element, a directed selection
// of member tags joining to it.
struct Basis {
  const FiniteFrame* frame = nullptr;
  Family members;
  bool injective = false;
  std::vector<std::vector<int>> covers;  // member tags per element

  const std::vector<int>& cover_tags(Element u) const { return covers[u]; }
  Family cover(Element u) const {
    std::vector<Element> out;
    out.reserve(covers[u].size());
    for (int tag : covers[u]) out.push_back(members[tag]);
    return Family(std::move(out));
  }
};

// Basis whose cover of U is all members below U; validates that each cover is
// directed and joins to U (NotABasis with the smallest failing element).
Basis intensional_basis(const FiniteFrame& l, Family members);

// The all-elements basis. On a finite frame every element is a compact open,
// so this has the same members as canonical_spectral_basis without the
// classification pass.
Basis carrier_basis(const FiniteFrame& l);

// Closes b under finite joins (the empty join contributes bottom), dedups the
// closure, and builds covers from it.
Basis directify(const FiniteFrame& l, const Family& b);

Basis canonical_spectral_basis(const FiniteFrame& l,
                               WayBelowMode mode = WayBelowMode::Auto,
                               int bound = max_exhaustive_bound());

// Restricts to the deduplicated image (ascending ids), covers re-tagged.
Basis extensionalize(const Basis& b);

// (forall compact K: K ≤ u implies K ≤ v) — asserted to coincide with u ≤ v.
bool spectral_yoneda_check(const FiniteFrame& l, Element u, Element v,
                           WayBelowMode mode = WayBelowMode::Auto,
                           int bound = max_exhaustive_bound());

}  // namespace localepatch
