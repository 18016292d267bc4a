#include "localepatch/catalog.hpp"

#include "localepatch/errors.hpp"

namespace localepatch {

namespace {

FinitePoset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> edges;
  for (int i = 0; i < n; ++i) {
    if (n == 2)
      labels.push_back(i == 0 ? "0" : "1");
    else if (n == 3)
      labels.push_back(i == 0 ? "0" : i == 1 ? "a" : "1");
    else if (n == 4)
      labels.push_back(i == 0 ? "0" : i == 1 ? "a" : i == 2 ? "b" : "1");
    else
      labels.push_back("c" + std::to_string(i));
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return FinitePoset::from_hasse(std::move(labels), edges);
}

FinitePoset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return FinitePoset::from_hasse(std::move(labels), {});
}

FinitePoset diamond() {
  return FinitePoset::from_hasse({"0", "a", "b", "1"},
                                 {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FinitePoset fence3() {
  // a < b > c
  return FinitePoset::from_hasse({"a", "b", "c"}, {{0, 1}, {2, 1}});
}

FinitePoset n5() {
  // 0 < x < z < 1 and 0 < y < 1
  return FinitePoset::from_hasse({"0", "x", "y", "z", "1"},
                                 {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
}

FinitePoset m3() {
  // three incomparable atoms between bounds
  return FinitePoset::from_hasse({"0", "a", "b", "c", "1"},
                                 {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace

const std::vector<std::string>& catalog_frame_names() {
  static const std::vector<std::string> names = {"CHAIN2", "CHAIN3", "CHAIN4", "DIAMOND",
                                                 "DOWNFENCE3"};
  return names;
}

bool is_catalog_frame(const std::string& name) {
  for (const auto& n : catalog_frame_names())
    if (n == name) return true;
  return false;
}

FiniteFrame catalog_frame(const std::string& name) {
  if (name == "CHAIN2") return frame_from_poset(chain(2));
  if (name == "CHAIN3") return frame_from_poset(chain(3));
  if (name == "CHAIN4") return frame_from_poset(chain(4));
  if (name == "DIAMOND") return frame_from_poset(diamond());
  if (name == "DOWNFENCE3") return downset_frame(fence3());
  throw ParseError("unknown catalog frame '" + name + "'");
}

bool is_catalog_poset(const std::string& name) {
  if (is_catalog_frame(name) && name != "DOWNFENCE3") return true;
  if (name == "N5" || name == "M3" || name == "FENCE3") return true;
  if (name.rfind("CHAIN", 0) == 0 || name.rfind("ANTICHAIN", 0) == 0) {
    const std::string digits = name.substr(name.rfind("CHAIN", 0) == 0 ? 5 : 9);
    return digits.size() == 1 && digits[0] >= '1' && digits[0] <= '5';
  }
  return false;
}

FinitePoset catalog_poset(const std::string& name) {
  if (name == "N5") return n5();
  if (name == "M3") return m3();
  if (name == "FENCE3") return fence3();
  if (name == "DIAMOND") return diamond();
  if (name.rfind("ANTICHAIN", 0) == 0 && name.size() == 10)
    return antichain(name[9] - '0');
  if (name.rfind("CHAIN", 0) == 0 && name.size() == 6) return chain(name[5] - '0');
  throw ParseError("unknown catalog poset '" + name + "'");
}

}  // namespace localepatch
