#pragma once

#include <string>
#include <vector>

#include "localepatch/frame.hpp"
#include "localepatch/poset.hpp"

namespace localepatch {

// Named lattices usable wherever a file is accepted: CHAIN2, CHAIN3, CHAIN4,
// DIAMOND, DOWNFENCE3 (downsets of the three-element fence a < b > c).
const std::vector<std::string>& catalog_frame_names();
bool is_catalog_frame(const std::string& name);
FiniteFrame catalog_frame(const std::string& name);

// Named posets: the frame carriers above plus N5, M3, FENCE3, ANTICHAIN1..5
// and CHAIN1..CHAIN5 as raw orders. N5 and M3 are lattices but not
// distributive, so frame_from_poset rejects them.
bool is_catalog_poset(const std::string& name);
FinitePoset catalog_poset(const std::string& name);

}  // namespace localepatch
