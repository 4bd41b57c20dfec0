#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "solbraid/analysis.hpp"
#include "support/oracles.hpp"

using namespace solbraid;

namespace {

using Seq = EventuallyPeriodicSeq<int>;

StageBraid stage(int strands, std::vector<int> letters) {
  return StageBraid(BraidWord(strands, std::move(letters)));
}

SolenoidSpec unknot_spec(std::vector<StageBraid> pre, std::vector<StageBraid> cyc) {
  return SolenoidSpec{AmbientCompanion::unknot(),
                      EventuallyPeriodicSeq<StageBraid>(std::move(pre), std::move(cyc))};
}

const SolenoidSpec kPlusSpec = unknot_spec({}, {stage(2, {1})});
const SolenoidSpec kAlternatingSpec = unknot_spec({}, {stage(2, {1}), stage(2, {-1})});

}  // namespace

TEST_CASE("stage and ambient validation") {
  CHECK_THROWS_AS(StageBraid(identity_braid(2)), std::invalid_argument);  // not cyclic
  CHECK_THROWS_AS(StageBraid(identity_braid(1)), std::invalid_argument);  // too few strands
  CHECK_NOTHROW(stage(2, {1, 1, 1}));

  const auto u = AmbientCompanion::unknot();
  CHECK(u.is_unknot());
  CHECK(u.strictly_achiral_known());
  CHECK(u.braid() == identity_braid(1));

  CHECK_THROWS_AS(AmbientCompanion::closed_braid(identity_braid(2)), std::invalid_argument);
  const auto fig8 = AmbientCompanion::closed_braid(BraidWord(3, {1, -2, 1, -2}));
  CHECK_FALSE(fig8.is_unknot());
  CHECK_FALSE(fig8.strictly_achiral_known());
  CHECK(AmbientCompanion::closed_braid(BraidWord(3, {1, -2, 1, -2}), true).strictly_achiral_known());
}

TEST_CASE("type_of reads strand counts") {
  CHECK(type_of(kPlusSpec) == Seq({}, {2}));
  CHECK(type_of(SolenoidSpec{AmbientCompanion::unknot(),
                             {{stage(2, {1})}, {stage(3, {1, 2})}}}) == Seq({2}, {3}));
  CHECK(type_of(unknot_spec({}, {stage(3, {1, -2}), stage(2, {1})})) == Seq({}, {3, 2}));
}

TEST_CASE("supernatural equality of types") {
  CHECK(supernatural_equal(Seq({}, {2}), Seq({}, {4})));
  CHECK_FALSE(supernatural_equal(Seq({}, {2}), Seq({}, {3})));
  CHECK(supernatural_equal(Seq({}, {6}), Seq({}, {2, 3})));
  CHECK(supernatural_equal(Seq({}, {12}), Seq({}, {2, 6, 3})));
  CHECK_FALSE(supernatural_equal(Seq({}, {6}), Seq({}, {2})));
  // prefix entries never matter
  CHECK(supernatural_equal(Seq({5, 7}, {2}), Seq({}, {8})));
  CHECK_THROWS_AS(supernatural_equal(Seq({}, {1}), Seq({}, {2})), std::invalid_argument);
}

TEST_CASE("deletion vs supernatural equivalence") {
  CHECK(deletion_equivalent(Seq({}, {2, 3}), Seq({}, {3, 2})));
  CHECK_FALSE(deletion_equivalent(Seq({}, {2}), Seq({}, {4})));
  CHECK(supernatural_equal(Seq({}, {2}), Seq({}, {4})));
}

TEST_CASE("encode_2adic") {
  CHECK(encode_2adic(kPlusSpec) == Seq({}, {1}));
  CHECK(encode_2adic(kAlternatingSpec) == Seq({}, {1, -1}));
  CHECK(encode_2adic(SolenoidSpec{AmbientCompanion::unknot(),
                                  {{stage(2, {-1})}, {stage(2, {1})}}}) == Seq({-1}, {1}));
  // trefoil stage is not an unknotted thick braid
  CHECK_THROWS_AS(encode_2adic(unknot_spec({}, {stage(2, {1, 1, 1})})), std::invalid_argument);
  // wrong winding number
  CHECK_THROWS_AS(encode_2adic(unknot_spec({}, {stage(3, {1, 2})})), std::invalid_argument);
  // knotted ambient
  const SolenoidSpec knotted_ambient{
      AmbientCompanion::closed_braid(BraidWord(3, {1, -2, 1, -2})),
      EventuallyPeriodicSeq<StageBraid>({}, {stage(2, {1})})};
  CHECK_THROWS_AS(encode_2adic(knotted_ambient), std::invalid_argument);
}

TEST_CASE("2-adic sign sequence classification") {
  const Seq plus({}, {1}), minus({}, {-1}), alt({}, {1, -1});
  CHECK(is_achiral_2adic(alt));
  CHECK_FALSE(is_achiral_2adic(plus));
  CHECK_FALSE(is_achiral_2adic(minus));
  CHECK_FALSE(signseq_equivalent(plus, minus));
  CHECK(signseq_equivalent(alt, Seq({}, {-1, 1})));
  CHECK(signseq_equivalent(Seq({-1, -1}, {1}), plus));
  CHECK_FALSE(is_achiral_2adic(Seq({}, {1, 1, -1})));
  CHECK(negated(alt) == Seq({}, {-1, 1}));
  CHECK_THROWS_AS(is_achiral_2adic(Seq({}, {2})), std::invalid_argument);
}

TEST_CASE("achirality of sign sequences survives re-presentation") {
  std::mt19937 rng(909090);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int it = 0; it < 30; ++it) {
    std::vector<int> pre, cyc;
    const int pl = static_cast<int>(rng() % 3), cl = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < pl; ++i) pre.push_back(coin(rng) ? 1 : -1);
    for (int i = 0; i < cl; ++i) cyc.push_back(coin(rng) ? 1 : -1);
    const Seq s(pre, cyc);
    CHECK(signseq_equivalent(s, s));

    // move the cycle head into the prefix, and double the cycle
    std::vector<int> pre2 = pre;
    pre2.push_back(cyc.front());
    std::vector<int> cyc2(cyc.begin() + 1, cyc.end());
    cyc2.push_back(cyc.front());
    const Seq shifted(pre2, cyc2);
    std::vector<int> doubled = cyc;
    doubled.insert(doubled.end(), cyc.begin(), cyc.end());
    const Seq redoubled(pre, doubled);
    CHECK(same_sequence(s, shifted));
    CHECK(same_sequence(s, redoubled));
    CHECK(is_achiral_2adic(s) == is_achiral_2adic(shifted));
    CHECK(is_achiral_2adic(s) == is_achiral_2adic(redoubled));
  }
}

TEST_CASE("strictly achiral embeddability is a cycle parity condition") {
  CHECK_FALSE(strictly_achiral_embeddable(Seq({}, {2})));
  CHECK(strictly_achiral_embeddable(Seq({}, {3})));
  CHECK(strictly_achiral_embeddable(Seq({}, {3, 5})));
  CHECK(strictly_achiral_embeddable(Seq({2, 4}, {5, 7})));
  CHECK_FALSE(strictly_achiral_embeddable(Seq({}, {3, 4})));
  CHECK_THROWS_AS(strictly_achiral_embeddable(Seq({}, {1})), std::invalid_argument);
}

TEST_CASE("construct_strictly_achiral builds beta beta-mirror stages") {
  const auto spec3 = construct_strictly_achiral(Seq({}, {3}), false);
  CHECK(spec3.ambient.is_unknot());
  CHECK(spec3.stages.prefix.empty());
  REQUIRE(spec3.stages.cycle.size() == 1);
  CHECK(spec3.stages.cycle[0].braid == BraidWord(3, {1, 2, -1, -2}));
  CHECK(verify_strict_achirality(spec3) == Achirality::Yes);

  const auto spec5 = construct_strictly_achiral(Seq({}, {5}), false);
  CHECK(spec5.stages.cycle[0].braid == BraidWord(5, {1, 2, 3, 4, -1, -2, -3, -4}));

  CHECK_THROWS_AS(construct_strictly_achiral(Seq({}, {2}), false), std::invalid_argument);
  CHECK_THROWS_AS(construct_strictly_achiral(Seq({}, {3, 4}), false), std::invalid_argument);

  const auto knotted = construct_strictly_achiral(Seq({}, {3}), true);
  CHECK_FALSE(knotted.ambient.is_unknot());
  CHECK(knotted.ambient.braid() == BraidWord(3, {1, -2, 1, -2}));
  CHECK(knotted.ambient.strictly_achiral_known());
  CHECK(verify_strict_achirality(knotted) == Achirality::Yes);

  // even prefix entries are dropped (a deletion-equivalent type), odd ones kept
  const auto mixed = construct_strictly_achiral(Seq({2, 4, 3}, {5}), false);
  CHECK(type_of(mixed) == Seq({3}, {5}));
  CHECK(deletion_equivalent(type_of(mixed), Seq({2, 4, 3}, {5})));
}

TEST_CASE("constructed stages are cyclic, balanced, and achiral with witness") {
  const std::vector<Seq> family{Seq({}, {3}), Seq({}, {5}), Seq({}, {3, 5}),
                                Seq({}, {7}), Seq({2, 3}, {5})};
  for (const auto& t : family) {
    const auto spec = construct_strictly_achiral(t, false);
    CHECK(verify_strict_achirality(spec) == Achirality::Yes);
    auto check_stage = [](const StageBraid& s) {
      CHECK(is_cyclic(s.braid));
      CHECK(exponent_sum(s.braid) == 0);
      const auto r = is_achiral_braid(s.braid);
      REQUIRE(r.conjugate);
      REQUIRE(r.witness.has_value());
      const auto conj = compose(compose(inverse(*r.witness), s.braid), *r.witness);
      CHECK(braids_equal(conj, mirror(s.braid)));
    };
    for (const auto& s : spec.stages.prefix) check_stage(s);
    for (const auto& s : spec.stages.cycle) check_stage(s);
  }
}

TEST_CASE("verify_strict_achirality three-valued verdicts") {
  // parity obstruction: any even cycle winding is a definitive No
  CHECK(verify_strict_achirality(smale_construct(Seq({}, {2}))) == Achirality::No);
  CHECK(verify_strict_achirality(unknot_spec({}, {stage(3, {1, 2, -1, -2}), stage(2, {1})})) ==
        Achirality::No);

  // nonzero writhe on an odd-strand stage: framing twist uncertain
  CHECK(verify_strict_achirality(unknot_spec({}, {stage(5, {1, 2, 3, 4, -1, -1})})) ==
        Achirality::Unknown);

  // ambient knot without the documented strictly-achiral flag
  const SolenoidSpec flagless{
      AmbientCompanion::closed_braid(BraidWord(3, {1, -2, 1, -2}), false),
      EventuallyPeriodicSeq<StageBraid>({}, {stage(3, {1, 2, -1, -2})})};
  CHECK(verify_strict_achirality(flagless) == Achirality::Unknown);

  // resource limits are contained, never thrown
  const auto spec3 = construct_strictly_achiral(Seq({}, {3}), false);
  Achirality a{};
  CHECK_NOTHROW(a = verify_strict_achirality(spec3, ConjugacyOptions{0}));
  CHECK(a != Achirality::No);
}

TEST_CASE("core_braid folds cables from the ambient") {
  CHECK(core_braid(kPlusSpec, 0) == identity_braid(1));
  CHECK(core_braid(kPlusSpec, 1) == BraidWord(2, {1}));
  CHECK(core_braid(kPlusSpec, 2) == BraidWord(4, {2, 1, 3, 2, 1}));

  const SolenoidSpec fig8_spec{
      AmbientCompanion::closed_braid(BraidWord(3, {1, -2, 1, -2}), true),
      EventuallyPeriodicSeq<StageBraid>({}, {stage(2, {1})})};
  CHECK(core_braid(fig8_spec, 0) == BraidWord(3, {1, -2, 1, -2}));
  CHECK(core_braid(fig8_spec, 1).strands == 6);

  CHECK_THROWS_AS(core_braid(kPlusSpec, -1), std::invalid_argument);

  // the level-2 core of the all-(+1) 2-adic spec closes to the trefoil:
  // the stage writhe feeds the blackboard framing
  CHECK(jones(core_braid(kPlusSpec, 2)) == jones(BraidWord(2, {1, 1, 1})));
  CHECK(alexander(core_braid(kPlusSpec, 2)) == alexander(BraidWord(2, {1, 1, 1})));
  // while the alternating spec stays unknotted at level 2
  CHECK(jones(core_braid(kAlternatingSpec, 2)).is_one());
  CHECK(alexander(core_braid(kAlternatingSpec, 2)).is_one());
}

TEST_CASE("core_braid strand and exponent recursions") {
  const auto smale3 = smale_construct(Seq({}, {3}));
  for (const SolenoidSpec& spec : {kPlusSpec, kAlternatingSpec, smale3}) {
    long long prev_e = exponent_sum(core_braid(spec, 0));
    int prev_strands = core_braid(spec, 0).strands;
    for (int n = 1; n <= 3; ++n) {
      const BraidWord core = core_braid(spec, n);
      const BraidWord& st = spec.stages.at(static_cast<std::size_t>(n - 1)).braid;
      const long long w = st.strands;
      CHECK(core.strands == prev_strands * st.strands);
      CHECK(exponent_sum(core) == w * w * prev_e + exponent_sum(st));
      CHECK(is_cyclic(core));
      prev_e = exponent_sum(core);
      prev_strands = core.strands;
    }
  }
}

TEST_CASE("smale_construct") {
  const auto s2 = smale_construct(Seq({}, {2}));
  CHECK(s2.ambient.is_unknot());
  CHECK(s2.stages.prefix.empty());
  REQUIRE(s2.stages.cycle.size() == 1);
  CHECK(s2.stages.cycle[0].braid == BraidWord(2, {1}));

  const auto s23 = smale_construct(Seq({}, {2, 3}));
  REQUIRE(s23.stages.cycle.size() == 2);
  CHECK(s23.stages.cycle[0].braid == BraidWord(2, {1}));
  CHECK(s23.stages.cycle[1].braid == BraidWord(3, {1, 2}));

  CHECK_THROWS_AS(smale_construct(Seq({2}, {3})), std::invalid_argument);
}

TEST_CASE("smale_enumerate small types") {
  const auto e2 = smale_enumerate(Seq({}, {2}));
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].stages.cycle[0].braid == BraidWord(2, {1}));
  CHECK(e2[1].stages.cycle[0].braid == BraidWord(2, {-1}));
  CHECK_FALSE(signseq_equivalent(encode_2adic(e2[0]), encode_2adic(e2[1])));

  const auto e22 = smale_enumerate(Seq({}, {2, 2}));
  REQUIRE(e22.size() == 3);
  CHECK(e22[0].stages.cycle[0].braid == BraidWord(2, {1}));
  CHECK(e22[0].stages.cycle[1].braid == BraidWord(2, {1}));
  CHECK(e22[1].stages.cycle[0].braid == BraidWord(2, {1}));
  CHECK(e22[1].stages.cycle[1].braid == BraidWord(2, {-1}));
  CHECK(e22[2].stages.cycle[0].braid == BraidWord(2, {-1}));
  CHECK(e22[2].stages.cycle[1].braid == BraidWord(2, {-1}));

  const auto e3 = smale_enumerate(Seq({}, {3}));
  REQUIRE(e3.size() == 3);
  CHECK(e3[0].stages.cycle[0].braid == BraidWord(3, {1, 2}));
  CHECK(e3[1].stages.cycle[0].braid == BraidWord(3, {-1, -2}));
  CHECK(e3[2].stages.cycle[0].braid == BraidWord(3, {1, -2}));

  CHECK(smale_enumerate(Seq({}, {2, 3})).size() == 6);

  CHECK_THROWS_AS(smale_enumerate(Seq({}, {4})), std::invalid_argument);
  CHECK_THROWS_WITH(smale_enumerate(Seq({}, {4})),
                    Catch::Matchers::ContainsSubstring("countably infinite"));
  CHECK_THROWS_AS(smale_enumerate(Seq({2}, {2})), std::invalid_argument);
}

TEST_CASE("smale_enumerate matches necklace counting for 2-adic periods") {
  const std::vector<std::size_t> expected{2, 3, 4, 6};
  for (std::size_t period = 1; period <= 4; ++period) {
    const auto specs = smale_enumerate(Seq({}, std::vector<int>(period, 2)));
    CHECK(specs.size() == expected[period - 1]);

    std::vector<Seq> encodings;
    for (const auto& s : specs) encodings.push_back(encode_2adic(s));
    for (std::size_t i = 0; i < encodings.size(); ++i)
      for (std::size_t j = i + 1; j < encodings.size(); ++j)
        CHECK_FALSE(signseq_equivalent(encodings[i], encodings[j]));

    // every raw tuple is equivalent to exactly one representative
    for (std::size_t mask = 0; mask < (std::size_t{1} << period); ++mask) {
      std::vector<int> cyc;
      for (std::size_t p = 0; p < period; ++p) cyc.push_back((mask >> p) & 1 ? -1 : 1);
      const Seq raw({}, cyc);
      int matches = 0;
      for (const auto& e : encodings) matches += signseq_equivalent(raw, e) ? 1 : 0;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("knotting_report per-level verdicts") {
  const auto plus_report = knotting_report(kPlusSpec, 2);
  REQUIRE(plus_report.levels.size() == 3);
  CHECK(plus_report.levels[0] == KnottingVerdict::Unknotted);
  CHECK(plus_report.levels[1] == KnottingVerdict::Unknotted);
  CHECK(plus_report.levels[2] == KnottingVerdict::Knotted);
  CHECK(plus_report.aggregate == KnottingVerdict::Knotted);
  CHECK_FALSE(plus_report.truncated);

  const auto alt_report = knotting_report(kAlternatingSpec, 2);
  CHECK(alt_report.levels ==
        std::vector<KnottingVerdict>{KnottingVerdict::Unknotted, KnottingVerdict::Unknotted,
                                     KnottingVerdict::Unknotted});
  CHECK(alt_report.aggregate == KnottingVerdict::Unknotted);

  const auto alt3 = knotting_report(kAlternatingSpec, 3);
  REQUIRE(alt3.levels.size() == 4);
  CHECK(alt3.levels[3] == KnottingVerdict::Knotted);
  CHECK(alt3.aggregate == KnottingVerdict::Knotted);

  const SolenoidSpec fig8_spec{
      AmbientCompanion::closed_braid(BraidWord(3, {1, -2, 1, -2}), true),
      EventuallyPeriodicSeq<StageBraid>({}, {stage(2, {1})})};
  const auto fig8_report = knotting_report(fig8_spec, 0);
  CHECK(fig8_report.levels == std::vector<KnottingVerdict>{KnottingVerdict::Knotted});
  CHECK(fig8_report.aggregate == KnottingVerdict::Knotted);

  const auto trivial = knotting_report(kPlusSpec, 0);
  CHECK(trivial.levels == std::vector<KnottingVerdict>{KnottingVerdict::Unknotted});
  CHECK(trivial.aggregate == KnottingVerdict::Unknotted);

  CHECK_THROWS_AS(knotting_report(kPlusSpec, -1), std::invalid_argument);
}

TEST_CASE("knotting_report truncates at the crossing cap") {
  // level-2 core of the (3)-adic construction has 40 crossings > 24 and a
  // 9-strand word that neither destabilizes nor fits a W-class table
  const auto spec3 = construct_strictly_achiral(Seq({}, {3}), false);
  const auto report = knotting_report(spec3, 2);
  CHECK(report.requested_depth == 2);
  CHECK(report.levels ==
        std::vector<KnottingVerdict>{KnottingVerdict::Unknotted, KnottingVerdict::Unknotted});
  CHECK(report.truncated);
  CHECK(report.aggregate == KnottingVerdict::Unknown);
}

TEST_CASE("knotting_report Unknown on an irreducible trivial-invariant braid") {
  const BraidWord b5(5, {1, 2, 3, 4});
  const BraidWord bb5 = compose(b5, mirror(b5));
  CHECK(knottedness_verdict(bb5) == KnottingVerdict::Unknown);
  const SolenoidSpec weird{AmbientCompanion::closed_braid(bb5),
                           EventuallyPeriodicSeq<StageBraid>({}, {stage(2, {1})})};
  const auto report = knotting_report(weird, 0);
  CHECK(report.levels == std::vector<KnottingVerdict>{KnottingVerdict::Unknown});
  CHECK(report.aggregate == KnottingVerdict::Unknown);
}

TEST_CASE("invariant_sequence values and series") {
  const auto alex = invariant_sequence(kPlusSpec, 1, WhichInvariant::Alexander, {1, 1});
  REQUIRE(alex.values.size() == 2);
  CHECK(alex.values[0].is_one());
  CHECK(alex.values[1].is_one());
  CHECK_FALSE(alex.truncated);

  const SolenoidSpec trefoil_companion{
      AmbientCompanion::closed_braid(BraidWord(2, {1, 1, 1})),
      EventuallyPeriodicSeq<StageBraid>({}, {stage(2, {1})})};
  const auto a0 = invariant_sequence(trefoil_companion, 0, WhichInvariant::Alexander, {1});
  LaurentPolynomial expected('t');
  expected += LaurentPolynomial::monomial(1, -1);
  expected += LaurentPolynomial::constant(-1);
  expected += LaurentPolynomial::monomial(1, 1);
  CHECK(a0.values == std::vector<LaurentPolynomial>{expected});

  const auto zero = invariant_sequence(kPlusSpec, 2, WhichInvariant::Jones, {0, 0, 0});
  for (const auto& c : zero.series) CHECK(c.is_zero());

  const auto writhe = invariant_sequence(kPlusSpec, 3, WhichInvariant::Writhe, {1, 1, 1, 1});
  REQUIRE(writhe.values.size() == 4);
  CHECK(writhe.values[0] == LaurentPolynomial::constant(0));
  CHECK(writhe.values[1] == LaurentPolynomial::constant(1));
  CHECK(writhe.values[2] == LaurentPolynomial::constant(5));
  CHECK(writhe.values[3] == LaurentPolynomial::constant(21));

  const auto capped = invariant_sequence(kPlusSpec, 3, WhichInvariant::Jones, {2, 3, 5, 7},
                                         InvariantOptions{10});
  CHECK(capped.requested_depth == 3);
  REQUIRE(capped.values.size() == 3);
  CHECK(capped.truncated);
  CHECK(capped.values[0].is_one());
  CHECK(capped.values[1].is_one());
  CHECK(capped.values[2] == jones(BraidWord(2, {1, 1, 1})));
  REQUIRE(capped.series.size() == 3);
  CHECK(capped.series[2] == capped.values[2] * LaurentPolynomial::constant(5));

  const auto full = invariant_sequence(kAlternatingSpec, 2, WhichInvariant::Jones, {1, 1, 1});
  CHECK(full.values == std::vector<LaurentPolynomial>{LaurentPolynomial::one(),
                                                      LaurentPolynomial::one(),
                                                      LaurentPolynomial::one()});
  CHECK_FALSE(full.truncated);

  CHECK_THROWS_AS(invariant_sequence(kPlusSpec, 2, WhichInvariant::Jones, {1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(invariant_sequence(kPlusSpec, -1, WhichInvariant::Jones, {1}),
                  std::invalid_argument);
}

TEST_CASE("algebraic linking is decided by the ambient linking number") {
  CHECK(algebraically_linked(kPlusSpec, kAlternatingSpec, 1));
  CHECK_FALSE(algebraically_linked(kPlusSpec, kAlternatingSpec, 0));
  CHECK(algebraically_linked(kPlusSpec, kPlusSpec, -3));
}
