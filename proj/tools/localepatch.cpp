#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "localepatch/catalog.hpp"
#include "localepatch/errors.hpp"
#include "localepatch/io.hpp"
#include "localepatch/patch.hpp"

using namespace localepatch;
using nlohmann::ordered_json;

namespace {

// Exit contract: 0 pass, 1 domain or property failure, 2 parse or input error.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string suite;
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_size = 4;  // ground poset points; downset frames stay within the
                     // exhaustive regime for sizes <= 4
  int count = 20;
  int skip = 0;
  bool oracle = true;
};

NamedPoset load_input(const std::string& input) {
  if (std::filesystem::exists(input)) return load_poset_file(input);
  if (is_catalog_poset(input)) return {input, catalog_poset(input)};
  throw ParseError("no such file or catalog name: '" + input + "'");
}

// Random DAG on 1..max_points nodes, edge probability 40%; the transitive
// closure happens inside from_relation. Seed-stable across platforms.
FinitePoset random_poset(std::mt19937_64& rng, int max_points) {
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_points));
  std::vector<std::pair<Element, Element>> edges;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (rng() % 100 < 40) edges.emplace_back(i, j);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  return FinitePoset::from_relation(std::move(labels), edges);
}

FinitePoset induced_subposet(const FinitePoset& p, const std::vector<Element>& keep) {
  std::vector<std::string> labels;
  for (Element k : keep) labels.push_back(p.label(k));
  std::vector<std::pair<Element, Element>> rel;
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      if (p.leq(keep[i], keep[j])) rel.emplace_back(static_cast<Element>(i),
                                                    static_cast<Element>(j));
  return FinitePoset::from_relation(std::move(labels), rel);
}

// ---------- verify suites ----------
// A suite takes the ground poset, its downset frame, a case-local generator,
// and returns "" on pass or a failure description. Size gates keep every
// suite within the module limits, so a larger case skips the gated part
// rather than erroring.

struct VerifyOptions {
  int max_size = 4;
  bool oracle = true;
};

using SuiteFn = std::function<std::string(const FinitePoset&, const FiniteFrame&,
                                          std::mt19937_64&, const VerifyOptions&)>;

std::string suite_frame_laws(const FinitePoset&, const FiniteFrame& l, std::mt19937_64&,
                             const VerifyOptions&) {
  const FiniteFrame rebuilt = frame_from_poset(l.poset());
  if (!(rebuilt == l)) return "meet/join tables disagree with the bounds-search oracle";
  for (Element u = 0; u < l.size(); ++u)
    for (Element v = 0; v < l.size(); ++v) {
      const Element impl = heyting(l, u, v);
      for (Element w = 0; w < l.size(); ++w)
        if (l.leq(w, impl) != l.leq(l.meet(w, u), v))
          return "heyting galois law fails at " + l.label(u) + "," + l.label(v) + "," +
                 l.label(w);
    }
  return "";
}

std::string suite_bases(const FinitePoset&, const FiniteFrame& l, std::mt19937_64& rng,
                        const VerifyOptions&) {
  const Basis full = carrier_basis(l);
  const Basis canonical = canonical_spectral_basis(l);
  if (!(full.members == canonical.members))
    return "canonical spectral basis is not the whole carrier";
  for (Element u = 0; u < l.size(); ++u)
    if (family_join(l, full.cover(u)) != u)
      return "carrier basis cover misses " + l.label(u);

  // the join closure of the irreducibles, with any extras, recovers the frame
  std::vector<Element> seeds = join_irreducibles(l);
  for (Element u = 0; u < l.size(); ++u)
    if (rng() % 4 == 0) seeds.push_back(u);
  const Basis closed = extensionalize(directify(l, Family(std::move(seeds))));
  if (closed.members.size() != l.size())
    return "join closure of the irreducibles misses elements";

  for (Element u = 0; u < l.size(); ++u)
    for (Element v = 0; v < l.size(); ++v)
      if (spectral_yoneda_check(l, u, v) != l.leq(u, v))
        return "compact-open comparison disagrees with the order at " + l.label(u) + "," +
               l.label(v);
  return "";
}

std::string suite_adjunction(const FinitePoset&, const FiniteFrame& l, std::mt19937_64& rng,
                             const VerifyOptions& o) {
  const FiniteFrame m = downset_frame(random_poset(rng, o.max_size));

  // random monotone table; downset frame ids ascend along a linear extension
  std::vector<Element> t(l.size());
  for (Element u = 0; u < l.size(); ++u) {
    Element lo = m.bottom();
    for (Element v = 0; v < u; ++v)
      if (l.leq(v, u)) lo = m.join(lo, t[v]);
    std::vector<Element> ups;
    for (Element w = 0; w < m.size(); ++w)
      if (m.leq(lo, w)) ups.push_back(w);
    t[u] = ups[rng() % ups.size()];
  }
  const MonotoneMap f = make_monotone_map(l, m, std::move(t));

  bool preserves = f(l.bottom()) == m.bottom();
  for (Element u = 0; u < l.size() && preserves; ++u)
    for (Element v = 0; v < l.size() && preserves; ++v)
      if (f(l.join(u, v)) != m.join(f(u), f(v))) preserves = false;

  bool got = true;
  MonotoneMap g;
  try {
    g = right_adjoint(f, carrier_basis(l));
  } catch (const NotJoinPreserving&) {
    got = false;
  }
  if (got != preserves) return "adjoint existence disagrees with join preservation";
  if (got) {
    for (Element u = 0; u < l.size(); ++u)
      for (Element w = 0; w < m.size(); ++w)
        if (m.leq(f(u), w) != l.leq(u, g(w)))
          return "adjunction law fails at " + l.label(u) + "," + m.label(w);
    for (Element u = 0; u < l.size(); ++u)
      if (!l.leq(u, g(f(u)))) return "unit inequality fails at " + l.label(u);
    for (Element w = 0; w < m.size(); ++w)
      if (!m.leq(f(g(w)), w)) return "counit inequality fails at " + m.label(w);
  }

  for (Element u = 0; u < l.size(); ++u) {
    const Element nu = complement(l, u);
    if (l.meet(u, nu) != l.bottom()) return "complement is not disjoint at " + l.label(u);
    const bool boolean = l.join(u, nu) == l.top();
    if (boolean != well_inside(l, u, u).has_value())
      return "well-inside disagrees with complementation at " + l.label(u);
  }
  return "";
}

std::string suite_nuclei(const FinitePoset&, const FiniteFrame& l, std::mt19937_64& rng,
                         const VerifyOptions& o) {
  const Nucleus id = identity_nucleus(l);
  const Nucleus top = top_nucleus(l);
  for (Element u = 0; u < l.size(); ++u) {
    const Nucleus c = closed_nucleus(l, u);
    const Nucleus op = open_nucleus(l, u);
    if (!(nucleus_meet(c, op) == id))
      return "closed and open parts do not meet to the identity at " + l.label(u);
    const Nucleus pair[2] = {c, op};
    if (!(nucleus_join(l, pair) == top))
      return "closed and open parts do not join to the top at " + l.label(u);
  }

  if (l.size() > kMaxNucleusEnumeration) return "";
  const std::vector<Nucleus> all = enumerate_scott_nuclei(l);
  if (o.oracle) {
    const size_t expect = size_t{1} << join_irreducibles(l).size();
    if (all.size() != expect) return "nucleus count misses the 2^|J| closed form";
  }
  for (int trial = 0; trial < 4 && !all.empty(); ++trial) {
    const Nucleus& a = all[rng() % all.size()];
    const Nucleus& b = all[rng() % all.size()];
    const Nucleus pair[2] = {a, b};
    const Nucleus j = nucleus_join(l, pair);
    if (o.oracle) {
      std::vector<Element> least(l.size(), l.top());
      for (const Nucleus& k : all) {
        bool above = true;
        for (Element u = 0; u < l.size() && above; ++u)
          if (!l.leq(a(u), k(u)) || !l.leq(b(u), k(u))) above = false;
        if (above)
          for (Element u = 0; u < l.size(); ++u) least[u] = l.meet(least[u], k(u));
      }
      if (j.table != least) return "join disagrees with the least-nucleus-above oracle";
    }
    Word w;
    for (int i = 0; i < 4; ++i) w.letters.push_back(static_cast<int>(rng() % 2));
    const Prenucleus ks = word_composite(pair, w);
    for (Element u = 0; u < l.size(); ++u)
      if (!l.leq(ks(u), j(u))) return "word composite escapes the join";
  }
  return "";
}

std::string suite_patch(const FinitePoset&, const FiniteFrame& l, std::mt19937_64&,
                        const VerifyOptions& o) {
  if (l.size() > 16) return "";
  const PatchFrame p = build_patch(l);
  if (!classify(p.frame()).is_stone) return "patch frame is not stone";
  if (o.oracle &&
      p.frame().size() != (1 << static_cast<int>(join_irreducibles(l).size())))
    return "patch size misses the 2^|J| closed form";
  const FrameHom eps = counit(p);
  for (Element e = 0; e < p.frame().size(); ++e) {
    if (eps.right_adjoint(e) != p.nucleus_of(e)(l.bottom()))
      return "counit adjoint is not evaluation at bottom";
    const JohnstoneReport jr = johnstone_decomposition(p, p.nucleus_of(e));
    if (!jr.full_ok || !jr.restricted_ok)
      return "join decomposition fails at " + p.frame().label(e);
  }
  return "";
}

std::string suite_universal(const FinitePoset& ground, const FiniteFrame& l,
                            std::mt19937_64&, const VerifyOptions&) {
  if (l.size() > 16) return "";
  const PatchFrame p = build_patch(l);
  const FrameHom eps = counit(p);
  const LiftResult lr = lift_map(eps, classify(p.frame()));
  if (!lr.commutes || !lr.unique) return "lift of the counit fails the universal property";
  for (Element e = 0; e < lr.patch.frame().size(); ++e)
    if (lr.lift(e) != e) return "lift of the counit is not the identity";
  if (ground.size() <= 5 && !booleanization_oracle(ground))
    return "patch of the downset frame is not the powerset";
  return "";
}

SuiteFn suite_by_name(const std::string& name) {
  if (name == "frame-laws") return suite_frame_laws;
  if (name == "bases") return suite_bases;
  if (name == "adjunction") return suite_adjunction;
  if (name == "nuclei") return suite_nuclei;
  if (name == "patch") return suite_patch;
  return suite_universal;
}

struct CaseReport {
  int index = 0;
  std::string name;
  int ground = 0;
  int frame = 0;
  bool pass = false;
  std::string detail;
  std::string witness;  // minimized ground poset document, failures only
};

std::string run_case(const SuiteFn& fn, const FinitePoset& ground, std::uint64_t case_seed,
                     const VerifyOptions& opts) {
  try {
    const FiniteFrame l = downset_frame(ground);
    std::mt19937_64 rng(case_seed);
    return fn(ground, l, rng, opts);
  } catch (const std::exception& e) {
    return e.what();
  }
}

// Greedy point deletion: keep removing single points while the case still
// fails; the result re-triggers the failure when fed back via --input.
FinitePoset minimize_witness(const SuiteFn& fn, FinitePoset ground, std::uint64_t case_seed,
                             const VerifyOptions& opts) {
  bool shrunk = true;
  while (shrunk && ground.size() > 1) {
    shrunk = false;
    for (Element drop = 0; drop < ground.size(); ++drop) {
      std::vector<Element> keep;
      for (Element i = 0; i < ground.size(); ++i)
        if (i != drop) keep.push_back(i);
      FinitePoset candidate = induced_subposet(ground, keep);
      if (!run_case(fn, candidate, case_seed, opts).empty()) {
        ground = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return ground;
}

int cmd_verify(const RunConfig& cfg) {
  const SuiteFn fn = suite_by_name(cfg.suite);
  const VerifyOptions opts{cfg.max_size, cfg.oracle};

  std::mt19937_64 master(cfg.seed);
  const bool single = !cfg.input.empty();
  const int count = single ? 1 : cfg.count;

  std::vector<CaseReport> reports;
  for (int i = 0; i < count; ++i) {
    CaseReport r;
    r.index = i;
    FinitePoset ground = single ? load_input(cfg.input).poset : random_poset(master, cfg.max_size);
    r.name = single ? load_input(cfg.input).name
                    : "RND" + std::to_string(cfg.seed) + "-" + std::to_string(i);
    const std::uint64_t case_seed = master();
    r.ground = ground.size();
    r.frame = static_cast<int>(enumerate_downsets(ground).size());
    r.detail = run_case(fn, ground, case_seed, opts);
    r.pass = r.detail.empty();
    if (!r.pass) {
      const FinitePoset w = minimize_witness(fn, ground, case_seed, opts);
      r.witness = poset_to_json("WITNESS-" + r.name, w);
    }
    reports.push_back(std::move(r));
  }

  int passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;

  if (cfg.format == "json") {
    ordered_json doc;
    doc["suite"] = cfg.suite;
    doc["seed"] = cfg.seed;
    doc["max_size"] = cfg.max_size;
    doc["oracle"] = cfg.oracle;
    ordered_json cases = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json c;
      c["index"] = r.index;
      c["name"] = r.name;
      c["ground"] = r.ground;
      c["frame"] = r.frame;
      c["pass"] = r.pass;
      if (!r.pass) {
        c["detail"] = r.detail;
        c["witness"] = ordered_json::parse(r.witness);
      }
      cases.push_back(c);
    }
    doc["cases"] = cases;
    doc["passed"] = passed;
    doc["failed"] = count - passed;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "suite: " << cfg.suite << "\n";
    std::cout << "seed: " << cfg.seed << "\n";
    std::cout << "max size: " << cfg.max_size << "\n";
    std::cout << "oracle: " << (cfg.oracle ? "on" : "off") << "\n";
    for (const auto& r : reports) {
      std::cout << "case " << r.index << ": " << r.name << " ground=" << r.ground
                << " frame=" << r.frame << " " << (r.pass ? "pass" : "FAIL") << "\n";
      if (!r.pass) {
        std::cout << "  " << r.detail << "\n";
        std::cout << "  minimized witness:\n" << r.witness;
      }
    }
    std::cout << "result: " << passed << "/" << count << "\n";
  }
  return passed == count ? kPass : kFail;
}

int cmd_check(const RunConfig& cfg) {
  const NamedPoset np = load_input(cfg.input);
  const FiniteFrame f = frame_from_poset(np.poset);
  if (cfg.format == "json") {
    ordered_json doc;
    doc["name"] = np.name;
    doc["ok"] = true;
    doc["size"] = f.size();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ok: " << np.name << " is a distributive lattice with " << f.size()
              << " elements\n";
  }
  return kPass;
}

int cmd_analyze(const RunConfig& cfg) {
  const NamedPoset np = load_input(cfg.input);
  const FiniteFrame f = frame_from_poset(np.poset);
  const ClassificationReport r = classify(f);
  if (cfg.format == "json") {
    ordered_json doc = classification_json(f, r);
    doc["name"] = np.name;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "name: " << np.name << "\n" << classification_text(f, r);
  }
  return kPass;
}

int cmd_patch(const RunConfig& cfg) {
  const NamedPoset np = load_input(cfg.input);
  const FiniteFrame f = frame_from_poset(np.poset);
  const PatchFrame p = build_patch(f);
  const FrameHom eps = counit(p);
  const ClassificationReport r = classify(p.frame());
  if (cfg.format == "json") {
    ordered_json doc = patch_json(p, eps, r);
    doc["name"] = np.name;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "name: " << np.name << "\n" << patch_text(p, eps, r);
  }
  return kPass;
}

int cmd_lift(const RunConfig& cfg) {
  if (!std::filesystem::exists(cfg.input))
    throw ParseError("no such file: '" + cfg.input + "'");
  const LoadedHom h = load_hom_file(cfg.input);
  const FrameHom f = check_frame_hom(h.map);
  const LiftResult r = lift_map(f, classify(*h.target));
  if (cfg.format == "json") {
    ordered_json doc = lift_json(f, r);
    doc["name"] = h.name;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "name: " << h.name << "\n" << lift_text(f, r);
  }
  return (r.commutes && r.unique) ? kPass : kFail;
}

int cmd_gen(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  FinitePoset p = random_poset(rng, cfg.max_size);
  for (int i = 0; i < cfg.skip; ++i) {
    rng();  // the per-case seed draw, matching the verify stream
    p = random_poset(rng, cfg.max_size);
  }
  const std::string doc =
      poset_to_json("RND" + std::to_string(cfg.seed) + "-" + std::to_string(cfg.skip), p);
  if (cfg.output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + cfg.output + "'");
    out << doc;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite pointfree topology workbench: frames, nuclei, patch construction"};
  app.require_subcommand(1);

  RunConfig cfg;
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check", "validate a lattice file or catalog name");
  check->add_option("input", cfg.input, "lattice file or catalog name")->required();
  add_format(check);

  auto* analyze = app.add_subcommand("analyze", "classify a lattice (compact/spectral/stone)");
  analyze->add_option("input", cfg.input, "lattice file or catalog name")->required();
  add_format(analyze);

  auto* patch = app.add_subcommand("patch", "build the patch frame and counit");
  patch->add_option("input", cfg.input, "lattice file or catalog name")->required();
  add_format(patch);

  auto* lift = app.add_subcommand("lift", "lift a hom into a Boolean target through the patch");
  lift->add_option("input", cfg.input, "hom file")->required();
  add_format(lift);

  std::string oracle = "on";
  auto* verify = app.add_subcommand("verify", "run a seeded property campaign");
  verify->add_option("--suite", cfg.suite, "property suite")
      ->required()
      ->check(CLI::IsMember(
          {"frame-laws", "bases", "adjunction", "nuclei", "patch", "universal"}));
  verify->add_option("--seed", cfg.seed, "generator seed");
  verify->add_option("-n,--cases", cfg.count, "number of cases")->check(CLI::PositiveNumber);
  verify->add_option("--max-size", cfg.max_size, "ground poset points")
      ->check(CLI::Range(1, 5));
  verify->add_option("--oracle", oracle, "brute-force oracles")
      ->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--input", cfg.input, "run once on this lattice file instead");
  add_format(verify);

  auto* gen = app.add_subcommand("gen", "emit a seeded random ground poset as a lattice file");
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--max-size", cfg.max_size, "ground poset points")->check(CLI::Range(1, 5));
  gen->add_option("--skip", cfg.skip, "emit the k-th poset of the stream")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("-o,--output", cfg.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  cfg.oracle = (oracle == "on");

  try {
    if (app.got_subcommand(check)) return cmd_check(cfg);
    if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
    if (app.got_subcommand(patch)) return cmd_patch(cfg);
    if (app.got_subcommand(lift)) return cmd_lift(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    return cmd_gen(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
}
