#include <doctest.h>

#include <algorithm>
#include <set>

#include "monres/io.hpp"
#include "monres/residue.hpp"

using namespace monres;

namespace {
const MonIdeal m2(2, {{2, 0}, {1, 1}, {0, 2}});

std::vector<std::pair<Exponent, CoeffStatus>> componentSummary(
    const FormalResidue& r) {
  std::vector<std::pair<Exponent, CoeffStatus>> out;
  for (const ResidueComponent& c : r.components)
    out.emplace_back(c.alpha, c.status);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("residue components filter through the shifted membership test") {
  FormalResidue r = residueCurrent(taylorComplex(m2), m2);
  CHECK(componentSummary(r) ==
        std::vector<std::pair<Exponent, CoeffStatus>>{
            {{1, 2}, CoeffStatus::CandidateNonzero},
            {{2, 1}, CoeffStatus::CandidateNonzero},
            {{2, 2}, CoeffStatus::ProvablyZero}});
  CHECK(candidateAlphas(r) == std::vector<Exponent>{{1, 2}, {2, 1}});
}

TEST_CASE("a koszul complex carries a single full component") {
  MonIdeal ci = powersIdeal({2, 3});
  FormalResidue r = residueCurrent(koszulComplex({2, 3}), ci);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].alpha == Exponent{2, 3});
  CHECK(r.components[0].status == CoeffStatus::CandidateNonzero);
}

TEST_CASE("scarf residue of a staircase ideal") {
  MonIdeal staircase(2, {{3, 0}, {1, 1}, {0, 2}});
  FormalResidue r = residueCurrent(scarfComplex(staircase), staircase);
  CHECK(componentSummary(r) ==
        std::vector<std::pair<Exponent, CoeffStatus>>{
            {{1, 2}, CoeffStatus::CandidateNonzero},
            {{3, 1}, CoeffStatus::CandidateNonzero}});
}

TEST_CASE("labels with a zero entry are provably zero in three variables") {
  MonIdeal m2cube(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                      {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  FormalResidue r = residueCurrent(taylorComplex(m2cube), m2cube);
  CHECK(r.components.size() == 20);  // all 3-subsets of 6 generators
  std::set<Exponent> candidates;
  for (const ResidueComponent& c : r.components) {
    if (!c.alpha.allPositive())
      CHECK(c.status == CoeffStatus::ProvablyZero);
    if (c.status == CoeffStatus::CandidateNonzero) {
      CHECK(c.alpha.allPositive());
      candidates.insert(c.alpha);
    }
  }
  CHECK(candidates ==
        std::set<Exponent>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
}

TEST_CASE("monomial action kills a component when a coordinate saturates") {
  CHECK(monomialAnnihilates({2, 0}, {2, 1}));
  CHECK_FALSE(monomialAnnihilates({1, 0}, {2, 1}));
  CHECK_FALSE(monomialAnnihilates({0, 0}, {2, 1}));
  CHECK_THROWS_AS(monomialAnnihilates({1, 0, 0}, {2, 1}), input_error);

  // Same decision as membership in the diagonal ideal.
  for (long b1 = 0; b1 <= 3; ++b1)
    for (long b2 = 0; b2 <= 3; ++b2)
      CHECK(monomialAnnihilates({b1, b2}, {2, 3}) ==
            contains(powersIdeal({2, 3}), {b1, b2}));
}

TEST_CASE("annihilator intersects the diagonal ideals of the candidates") {
  FormalResidue r = residueCurrent(taylorComplex(m2), m2);
  CHECK(annihilator(r) == m2);

  MonIdeal staircase(2, {{3, 0}, {1, 1}, {0, 2}});
  FormalResidue rs = residueCurrent(scarfComplex(staircase), staircase);
  CHECK(annihilator(rs) == staircase);

  FormalResidue empty{m2, {ResidueComponent{{0, 1}, Exponent{1, 2},
                                            CoeffStatus::ProvablyZero}}};
  CHECK_THROWS_AS(annihilator(empty), input_error);
}

TEST_CASE("duality holds for taylor complexes across the corpus") {
  CHECK(dualityCheck(taylorComplex(m2), m2));
  MonIdeal ci = powersIdeal({2, 3});
  CHECK(dualityCheck(koszulComplex({2, 3}), ci));
  for (const IdealDocument& doc : generateCorpus(2, 3))
    CHECK(dualityCheck(taylorComplex(doc.ideal), doc.ideal));
}

TEST_CASE("no generator sits strictly under a candidate label") {
  for (const IdealDocument& doc : generateCorpus(2, 3)) {
    FormalResidue r = residueCurrent(taylorComplex(doc.ideal), doc.ideal);
    for (const Exponent& alpha : candidateAlphas(r)) {
      CHECK(isSubideal(doc.ideal, powersIdeal(alpha)));
      CHECK_FALSE(contains(doc.ideal,
                           alpha.minus(onesExponent(alpha.dim()))));
    }
  }
}

TEST_CASE("candidates cover the irreducible decomposition") {
  for (const IdealDocument& doc : generateCorpus(2, 3)) {
    FormalResidue r = residueCurrent(taylorComplex(doc.ideal), doc.ideal);
    std::vector<Exponent> alphas = candidateAlphas(r);
    for (const Exponent& corner : irreducibleDecomposition(doc.ideal))
      CHECK(std::binary_search(alphas.begin(), alphas.end(), corner));
  }
}

TEST_CASE("residue construction rejects bad inputs") {
  MonIdeal open(2, {{2, 0}, {1, 1}});
  CHECK_THROWS_AS(residueCurrent(taylorComplex(open), open), input_error);

  LabeledComplex broken = taylorComplex(m2).removeFace({1, 2});
  CHECK_THROWS_AS(residueCurrent(broken, m2), input_error);

  MonIdeal m2cube(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                      {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  CHECK_THROWS_AS(residueCurrent(scarfComplex(m2cube), m2cube),
                  input_error);
}
