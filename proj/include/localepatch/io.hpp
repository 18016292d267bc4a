#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "localepatch/adjunction.hpp"
#include "localepatch/frame.hpp"
#include "localepatch/frame_ops.hpp"
#include "localepatch/patch.hpp"
#include "localepatch/poset.hpp"

namespace localepatch {

struct NamedPoset {
  std::string name;
  FinitePoset poset;
};

// Lattice file: {"name": str, "elements": [str...], "hasse"|"leq": [[lo, hi]...]}
// with exactly one of "hasse"/"leq"; pairs name elements by label; unknown
// fields rejected. Also accepts a bare catalog name in place of a document.
NamedPoset load_poset(const std::string& text);
NamedPoset load_poset_file(const std::string& path);

std::string poset_to_json(const std::string& name, const FinitePoset& p);

// Hom file: {"name"?: str, "source": <lattice doc or catalog name>,
// "target": ..., "table": [[src label, tgt label]...]}, table total on the
// source. Frames are heap-held so the struct can move without invalidating
// the map's pointers.
struct LoadedHom {
  std::string name;
  std::unique_ptr<const FiniteFrame> source;
  std::unique_ptr<const FiniteFrame> target;
  MonotoneMap map;  // validated monotone; not yet hom-certified
};

LoadedHom load_hom(const std::string& text);
LoadedHom load_hom_file(const std::string& path);

// Report serialization. Stable field order; labels alongside ids.
nlohmann::ordered_json classification_json(const FiniteFrame& l, const ClassificationReport& r);
std::string classification_text(const FiniteFrame& l, const ClassificationReport& r);

nlohmann::ordered_json nucleus_json(const Nucleus& j);
std::string nucleus_text(const Nucleus& j);

nlohmann::ordered_json patch_json(const PatchFrame& p, const FrameHom& eps,
                                  const ClassificationReport& patch_report);
std::string patch_text(const PatchFrame& p, const FrameHom& eps,
                       const ClassificationReport& patch_report);

nlohmann::ordered_json lift_json(const FrameHom& f, const LiftResult& r);
std::string lift_text(const FrameHom& f, const LiftResult& r);

}  // namespace localepatch
