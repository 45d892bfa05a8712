#include "fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

using namespace miv;

namespace {

VotingInstance uniform_instance(test::Rng& rng, std::size_t n, std::size_t t) {
  return VotingInstance::unweighted(test::random_profile(rng, n, t));
}

}  // namespace

TEST_CASE("partition construction picks the case bound") {
  test::Rng rng(3);
  const auto t3 = uniform_instance(rng, 5, 3);
  const auto r3 = partition_proposal(t3, IwmSet(t3).canonical());
  CHECK(r3.bound_used == BoundCase::MiddleEll);
  CHECK(r3.bound == Rational(2, 3));
  CHECK(r3.agree_topics.size() == 2);
  CHECK(r3.distance_to_iwm <= Rational(2, 3));

  const auto t5 = uniform_instance(rng, 7, 5);
  const auto r5 = partition_proposal(t5, IwmSet(t5).canonical());
  CHECK(r5.bound_used == BoundCase::SmallEll);
  CHECK(r5.bound == Rational(3, 5));
  CHECK(r5.agree_topics.size() == 3);
  CHECK(r5.distance_to_iwm <= Rational(3, 5));

  const auto big = generate_big_ell(Rational(3, 5));
  const auto rb = partition_proposal(big.instance, Proposal{1, 1});
  CHECK(rb.bound_used == BoundCase::LargeEll);
  CHECK(rb.agree_topics == std::vector<std::size_t>{0});
  CHECK(rb.distance_to_iwm <= Rational(3, 5));
  CHECK(rb.support.weakly_supported());
  CHECK_THROWS_AS(partition_proposal(big.instance, Proposal{1}), DimensionError);
}

TEST_CASE("best supported proposal oracle") {
  const auto intro = test::intro_instance();
  const auto r = best_supported_oracle(intro, Proposal{1, 1, 1});
  REQUIRE(r);
  CHECK(r->distance_to_iwm == Rational(1, 3));
  CHECK(r->proposal == Proposal{1, 1, -1});
  CHECK(r->support.supporters == 4);
  CHECK(r->support.opposers == 1);

  const auto unanimous = VotingInstance::unweighted(PreferenceProfile::from_rows({{1, -1}, {1, -1}}));
  CHECK(best_supported_oracle(unanimous, Proposal{1, -1})->distance_to_iwm == Rational(0));

  const auto big = generate_big_ell(Rational(3, 5));
  const auto b = best_supported_oracle(big.instance, Proposal{1, 1});
  REQUIRE(b);
  CHECK(b->distance_to_iwm >= Rational(3, 5));
  for (const auto& p : test::all_proposals(2)) {
    if (support_tally(big.instance, p).weakly_supported()) CHECK(p[0] == Opinion::Minus);
  }
}

TEST_CASE("oracle matches rational enumeration") {
  test::Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = trial % 2 ? test::random_external(rng, test::uniform(rng, 1, 7), test::uniform(rng, 1, 5))
                                : test::random_internal(rng, test::uniform(rng, 1, 7), test::uniform(rng, 1, 5));
    const test::DistanceTable table(inst);
    const Proposal ref = IwmSet(inst).canonical();
    const auto avg = average_weight_vector(inst).weights;
    for (auto level : {SupportLevel::Weak, SupportLevel::Strict}) {
      std::optional<std::pair<Rational, Proposal>> best;
      for (std::size_t a = 0; a < table.proposals.size(); ++a) {
        const auto s = table.tally(a);
        const bool ok = level == SupportLevel::Weak ? s.supporters >= s.opposers : s.supporters > s.opposers;
        if (!ok) continue;
        const Rational d = weighted_hamming(table.proposals[a], ref, avg);
        if (!best || d < best->first) best = std::make_pair(d, table.proposals[a]);
      }
      const auto got = best_supported_oracle(inst, ref, level);
      CHECK(got.has_value() == best.has_value());
      if (got && best) {
        CHECK(got->distance_to_iwm == best->first);
        CHECK(got->proposal == best->second);
      }
    }
  }
}

TEST_CASE("relevant topics") {
  const std::vector<Rational> w1{Rational(3, 5), Rational(3, 10), Rational(1, 10)};
  CHECK(relevant_topics(w1, RelevanceEngine::BruteForce) == std::vector<std::size_t>{0});
  CHECK(relevant_topics(w1, RelevanceEngine::Knapsack) == std::vector<std::size_t>{0});
  const std::vector<Rational> u5(5, Rational(1, 5));
  CHECK(relevant_topics(u5).size() == 5);
  const std::vector<Rational> halves{Rational(1, 2), Rational(1, 2)};
  CHECK(relevant_topics(halves) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(relevant_topics(std::vector<Rational>{Rational(1, 2)}), InvalidInstance);

  SearchLimits small;
  small.max_knapsack_scale = 4;
  CHECK_THROWS_AS(relevant_topics(u5, RelevanceEngine::Knapsack, small), PrecisionError);

  test::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = test::uniform(rng, 1, trial < 250 ? 10 : 16);
    const auto w = test::random_weights(rng, t, trial % 3 == 0 ? 3 : 40);
    const auto brute = relevant_topics(w, RelevanceEngine::BruteForce);
    CHECK(relevant_topics(w, RelevanceEngine::Knapsack) == brute);
    if (t <= 10) CHECK(brute == test::oracle_relevant(w));
    for (std::size_t i : brute) {
      for (std::size_t j = 0; j < t; ++j) {
        if (w[j] >= w[i]) CHECK(std::find(brute.begin(), brute.end(), j) != brute.end());
      }
    }
  }
}

TEST_CASE("three-fourths check") {
  const auto unanimous = VotingInstance::unweighted(PreferenceProfile::from_rows({{1, -1}, {1, -1}}));
  const auto u = wagner_check(unanimous);
  CHECK(u.average_majority == Rational(1));
  CHECK(u.anscombe_safe);
  CHECK(u.ostrogorski_safe);
  CHECK(u.flipped == std::vector<bool>{false, true});

  const auto intro = wagner_check(test::intro_instance());
  CHECK(intro.average_majority == Rational(3, 5));
  CHECK_FALSE(intro.anscombe_safe);

  test::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = test::uniform(rng, 1, 9);
    const auto inst = trial % 2 ? test::random_external(rng, n, 4) : test::random_internal(rng, n, 4);
    const auto r = wagner_check(inst);
    CHECK(Rational(static_cast<std::int64_t>(n)) * r.average_majority == r.w_ones);
    for (const auto& m : r.majorities) CHECK(m >= Rational(1, 2));
  }
}

TEST_CASE("lower-bound generators") {
  const auto k1 = generate_small_ell(1);
  CHECK(k1.verified);
  CHECK(k1.instance.n() == 19);
  CHECK(k1.instance.t() == 3);
  CHECK(k1.ell == Rational(1, 3));
  CHECK(k1.lower_bound == Rational(2, 3));
  CHECK(k1.instance.voter_weights(0) == std::vector<Rational>{Rational(3, 5), Rational(1, 5), Rational(1, 5)});
  CHECK(k1.instance.voter_weights(18) == std::vector<Rational>(3, Rational(1, 3)));
  for (const auto& p : test::all_proposals(3)) {
    const auto w = average_weight_vector(k1.instance).weights;
    if (weighted_hamming(p, Proposal::all(3, Opinion::Plus), w) < Rational(2, 3)) {
      const auto s = support_tally(k1.instance, p);
      CHECK(s.opposers > s.supporters);
    }
  }

  const auto k2 = generate_small_ell(2);
  CHECK(k2.verified);
  CHECK(k2.instance.t() == 5);
  CHECK(k2.instance.voter_weights(0)[0] == Rational(5, 9));
  CHECK(k2.instance.voter_weights(0)[1] == Rational(1, 9));
  CHECK_THROWS_AS(generate_small_ell(0), ContractError);

  const auto b = generate_big_ell(Rational(3, 5));
  CHECK(b.verified);
  CHECK(b.instance.n() == 13);
  CHECK(b.instance.voter_weights(0) == std::vector<Rational>{Rational(7, 10), Rational(3, 10)});
  CHECK(b.instance.voter_weights(12) == std::vector<Rational>{Rational(18, 35), Rational(17, 35)});
  for (const auto& ell : {Rational(11, 20), Rational(3, 4), Rational(9, 10)}) {
    const auto g = generate_big_ell(ell);
    CHECK(g.verified);
    CHECK(average_weight_vector(g.instance).weights[0] == ell);
  }
  CHECK_THROWS_AS(generate_big_ell(Rational(1, 2)), ContractError);
  CHECK_THROWS_AS(generate_big_ell(Rational(1)), ContractError);
}

TEST_CASE("swap maps") {
  const auto inst = VotingInstance::external(PreferenceProfile::from_rows({{1, 1, -1}, {-1, 1, 1}, {1, -1, 1}}),
                                             {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  const Proposal iwm = IwmSet(inst).canonical();
  const auto self = swap_maps(0, VotingInstance::external(PreferenceProfile::from_rows({{1, 1, 1}}),
                                                          {Rational(1, 2), Rational(1, 3), Rational(1, 6)}),
                              Proposal{1, 1, 1}, Proposal{1, -1, 1});
  CHECK(self.f_plus == Proposal{1, -1, 1});
  for (std::size_t v = 0; v < inst.n(); ++v) {
    for (const auto& p : test::all_proposals(3)) {
      const auto w = inst.weights().external_weights();
      const auto row = inst.profile().row(v);
      if (weighted_inner(p, iwm, w).is_zero() || weighted_inner(row, p, w).is_zero()) {
        CHECK_THROWS_AS(swap_maps(v, inst, iwm, p), ContractError);
        continue;
      }
      const auto s = swap_maps(v, inst, iwm, p);
      CHECK(swap_maps(v, inst, iwm, s.f_plus).f_plus == p);
      CHECK(swap_maps(v, inst, iwm, s.f_minus).f_minus == p);
      CHECK(weighted_inner(row, s.f_plus, w) == weighted_inner(p, iwm, w));
      CHECK(weighted_inner(row, s.f_minus, w) == -weighted_inner(p, iwm, w));
    }
  }
  CHECK_THROWS_AS(swap_maps(0, generate_big_ell(Rational(3, 5)).instance, Proposal{1, 1}, Proposal{1, 1}),
                  ContractError);
}

TEST_CASE("thought-experiment expectations") {
  const auto unanimous = VotingInstance::unweighted(PreferenceProfile::from_rows({{1, 1, 1}, {1, 1, 1}}));
  const auto u = thought_experiment_expectations(unanimous, Proposal{1, 1, 1});
  CHECK(u.ex == u.ey);
  CHECK(u.ex > Rational(0));

  const auto intro = thought_experiment_expectations(test::intro_instance(), Proposal{1, 1, 1});
  CHECK(intro.ex == intro.ey);
  CHECK(intro.ex >= Rational(0));
  CHECK(intro.sample_space == 4);

  // Every topic tied: no strict relevant majority.
  const auto tied = VotingInstance::unweighted(PreferenceProfile::from_rows({{1, -1, 1}, {-1, 1, -1}}));
  const auto z = thought_experiment_expectations(tied, Proposal{1, 1, 1});
  CHECK(z.ex == Rational(0));
  CHECK(z.ey == Rational(0));
}
