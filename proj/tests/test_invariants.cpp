#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "solbraid/burau.hpp"
#include "solbraid/kauffman.hpp"
#include "solbraid/wclass.hpp"
#include "support/oracles.hpp"

using namespace solbraid;

namespace {

LaurentPolynomial lp(char var, std::initializer_list<std::pair<int, long long>> doubled_terms) {
  LaurentPolynomial p(var);
  for (const auto& [e, c] : doubled_terms) p += LaurentPolynomial::monomial_half(c, e, var);
  return p;
}

BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> gen_d(1, strands - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  const int len = len_d(rng);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(gen_d(rng) * (sign_d(rng) ? 1 : -1));
  return BraidWord(strands, std::move(w));
}

bool jones_matches_oracle(const BraidWord& b) {
  return jones(b).terms() == oracles::jones_oracle_doubled(b);
}

}  // namespace

TEST_CASE("kauffman bracket on pinned diagrams") {
  // 0-crossing unknot diagram normalizes to 1
  CHECK(kauffman_bracket(identity_braid(1)) == lp('A', {{0, 1}}));
  // one positive kink: -A^3
  CHECK(kauffman_bracket(BraidWord(2, {1})) == lp('A', {{6, -1}}));
  // 2-component unlink: delta = -A^2 - A^-2
  CHECK(kauffman_bracket(identity_braid(2)) == lp('A', {{4, -1}, {-4, -1}}));
  // trefoil closure: A^-7 - A^-3 - A^5
  CHECK(kauffman_bracket(BraidWord(2, {1, 1, 1})) ==
        lp('A', {{-14, 1}, {-6, -1}, {10, -1}}));
}

TEST_CASE("kauffman bracket agrees with the state-sum oracle") {
  std::mt19937 rng(20260819);
  for (int it = 0; it < 40; ++it) {
    const int strands = 1 + static_cast<int>(rng() % 4);
    const BraidWord b = strands == 1 ? identity_braid(1) : random_word(rng, strands, 8);
    oracles::Poly doubled;
    for (const auto& [e, c] : oracles::bracket_oracle(b)) doubled[2 * e] = c;
    CHECK(kauffman_bracket(b).terms() == doubled);
  }
}

TEST_CASE("kauffman bracket crossing cap") {
  BraidWord b(2, std::vector<int>(30, 1));
  CHECK_THROWS_AS(kauffman_bracket(b), resource_limit_error);
  InvariantOptions opts;
  opts.max_crossings = 30;
  CHECK_NOTHROW(kauffman_bracket(BraidWord(2, std::vector<int>(25, 1)), opts));
}

TEST_CASE("deterministic state partition") {
  const BraidWord b(3, {1, -2, 1, 1, -2, 2, 1});
  const auto whole = kauffman_bracket(b);
  LaurentPolynomial sum('A');
  const std::uint64_t states = std::uint64_t{1} << b.letters.size();
  for (std::uint64_t lo = 0; lo < states; lo += 16)
    sum += detail::bracket_state_range(b, lo, std::min(states, lo + 16));
  CHECK(sum == whole);
}

TEST_CASE("jones on pinned knots and links") {
  // right trefoil
  CHECK(jones(BraidWord(2, {1, 1, 1})) == lp('t', {{2, 1}, {6, 1}, {8, -1}}));
  // left trefoil = inverse-variable image
  CHECK(jones(BraidWord(2, {-1, -1, -1})) == lp('t', {{-2, 1}, {-6, 1}, {-8, -1}}));
  // figure-eight: symmetric
  const BraidWord fig8(3, {1, -2, 1, -2});
  CHECK(jones(fig8) == lp('t', {{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
  // unknot stabilized twice still 1
  CHECK(jones(BraidWord(3, {1, 2})).is_one());
  // 2-component unlink: half-integer exponents
  CHECK(jones(identity_braid(2)) == lp('t', {{-1, -1}, {1, -1}}));
  // (2,5) torus knot
  CHECK(jones(BraidWord(2, {1, 1, 1, 1, 1})) ==
        lp('t', {{4, 1}, {8, 1}, {10, -1}, {12, 1}, {14, -1}}));
}

TEST_CASE("jones matches oracle and mirror rule") {
  std::mt19937 rng(777);
  for (int it = 0; it < 30; ++it) {
    const BraidWord b = random_word(rng, 2 + static_cast<int>(rng() % 2), 8);
    CHECK(jones_matches_oracle(b));
    CHECK(jones(mirror(b)) == jones(b).substitute_inverse());
  }
}

TEST_CASE("jones and alexander are Markov invariant") {
  std::mt19937 rng(424242);
  int knots_seen = 0;
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const BraidWord b = random_word(rng, n, 8);
    const auto vb = jones(b);
    // conjugation by a single generator
    const int g = 1 + static_cast<int>(rng() % (n - 1));
    const BraidWord conj = compose(compose(BraidWord(n, {-g}), b), BraidWord(n, {g}));
    CHECK(jones(conj) == vb);
    // positive and negative stabilization
    std::vector<int> up = b.letters;
    up.push_back(n);
    CHECK(jones(BraidWord(n + 1, up)) == vb);
    up.back() = -n;
    CHECK(jones(BraidWord(n + 1, up)) == vb);
    if (is_cyclic(b)) {
      ++knots_seen;
      const auto ab = alexander(b);
      CHECK(alexander(BraidWord(n + 1, up)) == ab);
      CHECK(alexander(conj) == ab);
    }
  }
  CHECK(knots_seen >= 10);
}

TEST_CASE("alexander on pinned knots") {
  CHECK(alexander(identity_braid(1)).is_one());
  CHECK(alexander(BraidWord(2, {1})).is_one());
  // trefoil: t - 1 + 1/t, symmetric with value 1 at t=1
  CHECK(alexander(BraidWord(2, {1, 1, 1})) == lp('t', {{-2, 1}, {0, -1}, {2, 1}}));
  CHECK(alexander(BraidWord(3, {1, -2})).is_one());
  // figure-eight: -t + 3 - 1/t
  CHECK(alexander(BraidWord(3, {1, -2, 1, -2})) == lp('t', {{-2, -1}, {0, 3}, {2, -1}}));
  // (2,5) torus knot
  CHECK(alexander(BraidWord(2, {1, 1, 1, 1, 1})) ==
        lp('t', {{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
  // mirror invariance of alexander
  CHECK(alexander(BraidWord(2, {-1, -1, -1})) == alexander(BraidWord(2, {1, 1, 1})));
}

TEST_CASE("alexander normalization properties on random knots") {
  std::mt19937 rng(987);
  int seen = 0;
  for (int it = 0; it < 200 && seen < 40; ++it) {
    const BraidWord b = random_word(rng, 2 + static_cast<int>(rng() % 3), 10);
    if (!is_cyclic(b)) continue;
    ++seen;
    const auto d = alexander(b);
    CHECK(d.is_palindromic());
    CHECK(d.eval_at_one() == 1);
  }
  CHECK(seen >= 40);
  CHECK_THROWS_AS(alexander(identity_braid(2)), std::invalid_argument);
}

TEST_CASE("rendering of pinned polynomials") {
  CHECK(alexander(BraidWord(2, {1, 1, 1})).to_string() == "t^-1 - 1 + t");
  CHECK(alexander(identity_braid(1)).to_string() == "1");
  CHECK(jones(identity_braid(2)).to_string() == "-t^-1/2 - t^1/2");
  CHECK(jones(BraidWord(2, {1, 1, 1})).to_string() == "t + t^3 - t^4");
  CHECK(alexander(BraidWord(3, {1, -2, 1, -2})).to_string() == "-t^-1 + 3 - t");
  CHECK(LaurentPolynomial('t').to_string() == "0");
}

TEST_CASE("unknotted-class representatives") {
  const auto reps2 = w_class_representatives(2);
  REQUIRE(reps2.size() == 2);
  CHECK(reps2[0].label == WLabel::Plus2);
  CHECK(reps2[1].label == WLabel::Minus2);
  const auto reps3 = w_class_representatives(3);
  REQUIRE(reps3.size() == 3);
  // every representative closes to the unknot: trivial Jones and Alexander
  for (const auto& r : {reps2[0], reps2[1], reps3[0], reps3[1], reps3[2]}) {
    CHECK(jones(r.representative).is_one());
    CHECK(alexander(r.representative).is_one());
    CHECK(is_cyclic(r.representative));
  }
  // pairwise non-conjugate
  for (const auto& reps : {reps2, reps3})
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        CHECK_FALSE(are_conjugate(reps[i].representative, reps[j].representative).conjugate);
}

TEST_CASE("w_class_of") {
  auto c = w_class_of(BraidWord(2, {1}));
  REQUIRE(c.has_value());
  CHECK(c->label == WLabel::Plus2);
  c = w_class_of(BraidWord(2, {-1}));
  REQUIRE(c.has_value());
  CHECK(c->label == WLabel::Minus2);
  CHECK_FALSE(w_class_of(BraidWord(2, {1, 1, 1})).has_value());
  c = w_class_of(BraidWord(3, {2, -1}));
  REQUIRE(c.has_value());
  CHECK(c->label == WLabel::Mixed3);
  c = w_class_of(BraidWord(3, {2, 1}));
  REQUIRE(c.has_value());
  CHECK(c->label == WLabel::Pos3);
  CHECK_FALSE(w_class_of(BraidWord(3, {1, 2, 1, 2})).has_value());
  CHECK_THROWS_AS(w_class_of(BraidWord(4, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("knottedness verdicts") {
  CHECK(knottedness_verdict(BraidWord(2, {1, 1, 1})) == KnottingVerdict::Knotted);
  CHECK(knottedness_verdict(BraidWord(3, {1, -2, 1, -2})) == KnottingVerdict::Knotted);
  CHECK(knottedness_verdict(BraidWord(2, {1})) == KnottingVerdict::Unknotted);
  CHECK(knottedness_verdict(identity_braid(1)) == KnottingVerdict::Unknotted);
  // destabilization: sigma1 sigma2 on 3 strands reduces to sigma1 on 2
  CHECK(knottedness_verdict(BraidWord(3, {1, 2})) == KnottingVerdict::Unknotted);
  // and a chain of two destabilizations
  CHECK(knottedness_verdict(BraidWord(4, {1, 2, 3})) == KnottingVerdict::Unknotted);
  CHECK_THROWS_AS(knottedness_verdict(identity_braid(2)), std::invalid_argument);
}

TEST_CASE("linking scale") {
  CHECK(linking_scale(1, {2, 2}, {2}) == 8);
  CHECK(linking_scale(0, {3, 5}, {2}) == 0);
  CHECK(linking_scale(-2, {2}, {3, 3}) == -36);
  CHECK_THROWS_AS(linking_scale(1, std::vector<long long>(40, 1000000), {}),
                  resource_limit_error);
}
