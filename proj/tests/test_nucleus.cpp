#include <doctest.h>

#include <algorithm>

#include "localepatch/catalog.hpp"
#include "localepatch/errors.hpp"
#include "localepatch/nucleus.hpp"
#include "localepatch/patch.hpp"

using namespace localepatch;

TEST_CASE("closed and open nuclei on the three-chain, frozen") {
  const FiniteFrame c3 = catalog_frame("CHAIN3");
  CHECK(identity_nucleus(c3).table == std::vector<Element>{0, 1, 2});
  CHECK(top_nucleus(c3).table == std::vector<Element>{2, 2, 2});
  CHECK(closed_nucleus(c3, 1).table == std::vector<Element>{1, 1, 2});
  CHECK(open_nucleus(c3, 1).table == std::vector<Element>{0, 2, 2});

  const Nucleus c = closed_nucleus(c3, 1);
  CHECK(c.certificate.inflationary);
  CHECK(c.certificate.meet_preserving);
  CHECK(c.certificate.idempotent);
  CHECK(c.certificate.scott_continuous);
}

TEST_CASE("nucleus law rejections carry witnesses") {
  const FiniteFrame c3 = catalog_frame("CHAIN3");
  const FiniteFrame d = catalog_frame("DIAMOND");

  CHECK_THROWS_AS(check_nucleus(c3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_nucleus(c3, {0, 1, 5}), std::invalid_argument);
  try {
    check_nucleus(c3, {1, 2, 2});
    FAIL("expected an idempotency rejection");
  } catch (const NotIdempotent& e) {
    CHECK(e.u == 0);
  }
  try {
    check_nucleus(c3, {0, 0, 2});
    FAIL("expected an inflationarity rejection");
  } catch (const NotInflationary& e) {
    CHECK(e.u == 1);
  }
  try {
    check_nucleus(d, {0, 3, 2, 3});
    FAIL("expected a meet-preservation rejection");
  } catch (const NotMeetPreserving& e) {
    CHECK(e.u == 1);
    CHECK(e.v == 2);
  }
}

TEST_CASE("every nucleus on a small frame is scott continuous") {
  for (const std::string& name : catalog_frame_names()) {
    const FiniteFrame l = catalog_frame(name);
    const DirectedSubsets ds = enumerate_directed_subsets(l);
    for (const Nucleus& j : enumerate_scott_nuclei(l)) {
      CHECK(is_scott_continuous(j, ds));
      CHECK(scott_criterion(j));
    }
  }
}

TEST_CASE("nucleus counts match the join-irreducible exponent") {
  for (const std::string& name : catalog_frame_names()) {
    const FiniteFrame l = catalog_frame(name);
    const size_t expected = size_t{1} << join_irreducibles(l).size();
    CHECK(enumerate_scott_nuclei(l).size() == expected);
  }
}

TEST_CASE("nucleus enumeration on the three-chain and diamond, frozen") {
  const FiniteFrame c3 = catalog_frame("CHAIN3");
  const auto njs = enumerate_scott_nuclei(c3);
  REQUIRE(njs.size() == 4);
  CHECK(njs[0].table == std::vector<Element>{0, 1, 2});
  CHECK(njs[1].table == std::vector<Element>{0, 2, 2});
  CHECK(njs[2].table == std::vector<Element>{1, 1, 2});
  CHECK(njs[3].table == std::vector<Element>{2, 2, 2});

  const FiniteFrame d = catalog_frame("DIAMOND");
  const auto djs = enumerate_scott_nuclei(d);
  REQUIRE(djs.size() == 4);
  CHECK(djs[0].table == std::vector<Element>{0, 1, 2, 3});
  CHECK(djs[1].table == std::vector<Element>{1, 1, 3, 3});
  CHECK(djs[2].table == std::vector<Element>{2, 3, 2, 3});
  CHECK(djs[3].table == std::vector<Element>{3, 3, 3, 3});
  CHECK(djs[1] == closed_nucleus(d, 1));
  CHECK(djs[2] == open_nucleus(d, 1));
  CHECK(djs[2] == closed_nucleus(d, 2));

  CHECK_THROWS_AS(enumerate_scott_nuclei(d, 3), FrameTooLarge);
}

TEST_CASE("brute force over all tables agrees with the pruned enumeration") {
  const FiniteFrame d = catalog_frame("DIAMOND");
  std::vector<std::vector<Element>> oracle;
  for (int code = 0; code < 256; ++code) {
    int c = code;
    std::vector<Element> t(4);
    for (int i = 0; i < 4; ++i) {
      t[i] = c % 4;
      c /= 4;
    }
    try {
      oracle.push_back(check_nucleus(d, t).table);
    } catch (const Error&) {
    }
  }
  std::sort(oracle.begin(), oracle.end());
  const auto pruned = enumerate_scott_nuclei(d);
  REQUIRE(pruned.size() == oracle.size());
  for (size_t i = 0; i < pruned.size(); ++i) CHECK(pruned[i].table == oracle[i]);
}

TEST_CASE("meet and join of complementary closed and open nuclei") {
  for (const std::string& name : catalog_frame_names()) {
    const FiniteFrame l = catalog_frame(name);
    for (Element u = 0; u < l.size(); ++u) {
      const Nucleus c = closed_nucleus(l, u);
      const Nucleus o = open_nucleus(l, u);
      CHECK(nucleus_meet(c, o) == identity_nucleus(l));
      const Nucleus ks[] = {c, o};
      CHECK(nucleus_join(l, ks) == top_nucleus(l));
    }
  }
}

TEST_CASE("nucleus join is the least nucleus above both, exhaustively") {
  for (const std::string& name : {"CHAIN3", "DIAMOND", "CHAIN4"}) {
    const FiniteFrame l = catalog_frame(name);
    const auto all = enumerate_scott_nuclei(l);
    auto pointwise_leq = [&](const Nucleus& a, const Nucleus& b) {
      for (Element u = 0; u < l.size(); ++u)
        if (!l.leq(a(u), b(u))) return false;
      return true;
    };
    for (const Nucleus& a : all)
      for (const Nucleus& b : all) {
        const Nucleus ks[] = {a, b};
        const Nucleus j = nucleus_join(l, ks);
        // least upper bound against the full enumeration
        Nucleus least = top_nucleus(l);
        for (const Nucleus& cand : all)
          if (pointwise_leq(a, cand) && pointwise_leq(b, cand) &&
              pointwise_leq(cand, least))
            least = cand;
        CHECK(j == least);
      }
  }
}

TEST_CASE("the empty join is the identity") {
  const FiniteFrame c3 = catalog_frame("CHAIN3");
  CHECK(nucleus_join(c3, {}) == identity_nucleus(c3));
}

TEST_CASE("word composites apply the first letter first") {
  const FiniteFrame c3 = catalog_frame("CHAIN3");
  const Nucleus ks[] = {closed_nucleus(c3, 1), open_nucleus(c3, 1)};

  CHECK(word_composite(ks, Word{0, 1}).table == std::vector<Element>{2, 2, 2});
  const Prenucleus w = word_composite(ks, Word{1, 0});
  CHECK(w.table == std::vector<Element>{1, 2, 2});
  CHECK(w.inflationary);
  CHECK(w.meet_preserving);
  CHECK(word_composite(ks, Word::epsilon()).table == std::vector<Element>{0, 1, 2});

  try {
    word_composite(ks, Word{0, 2});
    FAIL("expected an unknown-letter rejection");
  } catch (const UnknownTag& e) {
    CHECK(e.tag == 2);
  }
}

TEST_CASE("word closure never exceeds the nucleus join") {
  const FiniteFrame d = catalog_frame("DIAMOND");
  const Nucleus ks[] = {closed_nucleus(d, 1), open_nucleus(d, 2)};
  const Nucleus j = nucleus_join(d, ks);
  for (const Word& s : {Word{0}, Word{1}, Word{0, 1}, Word{1, 0}, Word{0, 1, 0, 1}}) {
    const Prenucleus w = word_composite(ks, s);
    for (Element u = 0; u < d.size(); ++u) CHECK(d.leq(w(u), j(u)));
  }
}

TEST_CASE("pointwise joins require directedness") {
  const FiniteFrame d = catalog_frame("DIAMOND");
  const Nucleus chain[] = {identity_nucleus(d), closed_nucleus(d, 1)};
  CHECK(directed_join_pointwise(d, chain) == closed_nucleus(d, 1));

  const Nucleus split[] = {closed_nucleus(d, 1), closed_nucleus(d, 2)};
  try {
    directed_join_pointwise(d, split);
    FAIL("expected a directedness rejection");
  } catch (const NotDirected& e) {
    CHECK(e.u == 0);
    CHECK(e.v == 1);
  }
  CHECK_THROWS_AS(directed_join_pointwise(d, {}), NotDirected);
}
