#include "fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

using namespace miv;

TEST_CASE("voter and collective comparisons on the intro instance") {
  const auto inst = test::intro_instance();
  const Proposal ones{1, 1, 1};
  const Proposal minus{-1, -1, -1};
  CHECK(voter_compare(inst, 0, minus, ones) == ComparisonSign::Positive);
  CHECK(voter_compare(inst, 0, Proposal{1, -1, -1}, ones) == ComparisonSign::Positive);
  CHECK(voter_compare(inst, 3, ones, ones) == ComparisonSign::Zero);
  CHECK(collective_compare(inst, minus, ones) == ComparisonSign::Positive);
  CHECK(collective_compare(inst, ones, minus) == ComparisonSign::Negative);
  CHECK(collective_compare(inst, ones, ones) == ComparisonSign::Zero);

  const auto unanimous = VotingInstance::unweighted(PreferenceProfile::from_rows({{1, -1}, {1, -1}}));
  CHECK(collective_compare(unanimous, Proposal{1, -1}, Proposal{-1, 1}) == ComparisonSign::Positive);
}

TEST_CASE("support tally trichotomy") {
  const auto tally = support_tally(test::intro_instance(), Proposal{1, 1, 1});
  CHECK(tally.supporters == 2);
  CHECK(tally.opposers == 3);
  CHECK(tally.indifferent == 0);

  const auto half = VotingInstance::external(PreferenceProfile::from_rows({{1, -1}}), {Rational(1, 2), Rational(1, 2)});
  const auto t2 = support_tally(half, Proposal{1, 1});
  CHECK(t2.indifferent == 1);
  CHECK(t2.weakly_supported());
  CHECK_FALSE(t2.strictly_supported());
}

TEST_CASE("issue-wise majorities and ties") {
  const IwmSet intro(test::intro_instance());
  CHECK(intro.all() == std::vector<Proposal>{Proposal{1, 1, 1}});
  CHECK(intro.count() == 1);

  const IwmSet tie(VotingInstance::unweighted(PreferenceProfile::from_rows({{1}, {-1}})));
  CHECK(tie.all() == std::vector<Proposal>{Proposal{1}, Proposal{-1}});
  CHECK(tie.canonical() == Proposal{1});

  const auto big = generate_big_ell(Rational(3, 5));
  CHECK(IwmSet(big.instance).all() == std::vector<Proposal>{Proposal{1, 1}});

  SearchLimits tight;
  tight.max_tied_topics = 2;
  const auto ties3 = VotingInstance::unweighted(PreferenceProfile::from_rows({{1, 1, 1}, {-1, -1, -1}}));
  const IwmSet capped(ties3, tight);
  CHECK_THROWS_AS(capped.all(), CapExceeded);
}

TEST_CASE("comparisons agree with the rational oracle") {
  test::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = test::uniform(rng, 1, 7);
    const std::size_t t = test::uniform(rng, 1, 5);
    const auto inst = trial % 3 == 0   ? VotingInstance::unweighted(test::random_profile(rng, n, t))
                      : trial % 3 == 1 ? test::random_external(rng, n, t)
                                       : test::random_internal(rng, n, t);
    const test::DistanceTable table(inst);
    const auto& ps = table.proposals;
    for (std::size_t a = 0; a < ps.size(); ++a) {
      CHECK(support_tally(inst, ps[a]) == table.tally(a));
      CHECK(is_iwm(inst, ps[a]) == test::oracle_is_iwm(inst, ps[a]));
      const auto st = support_tally(inst, ps[a]);
      CHECK(to_int(collective_compare(inst, ps[a], ps[a].complement())) ==
            (st.supporters > st.opposers ? 1 : (st.supporters < st.opposers ? -1 : 0)));
      CHECK((st.weakly_supported() || support_tally(inst, ps[a].complement()).weakly_supported()));
      for (std::size_t b = 0; b < ps.size(); ++b) {
        const int m = table.margin(a, b);
        CHECK(to_int(collective_compare(inst, ps[a], ps[b])) == (m > 0 ? 1 : (m < 0 ? -1 : 0)));
      }
    }
  }
}

TEST_CASE("paradox detectors") {
  const auto a = detect_anscombe(test::intro_instance());
  CHECK(a.occurs);
  CHECK(*a.witness_iwm == Proposal{1, 1, 1});
  const auto o = detect_ostrogorski(test::intro_instance());
  CHECK(o.occurs);
  CHECK(*o.defeater == Proposal{-1, -1, -1});

  const auto unanimous = VotingInstance::unweighted(PreferenceProfile::from_rows({{1, -1, 1}, {1, -1, 1}}));
  CHECK_FALSE(detect_anscombe(unanimous).occurs);
  CHECK_FALSE(detect_ostrogorski(unanimous).occurs);

  CHECK_FALSE(detect_ostrogorski(VotingInstance::unweighted(test::fig1_profile())).occurs);

  const auto big = generate_big_ell(Rational(3, 5));
  const auto bo = detect_ostrogorski(big.instance);
  CHECK(bo.occurs);
  CHECK(*bo.witness_iwm == Proposal{1, 1});
  CHECK(*bo.defeater == Proposal{-1, 1});
}

TEST_CASE("detectors agree with the oracle and Anscombe implies Ostrogorski") {
  test::Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = test::uniform(rng, 1, 7);
    const std::size_t t = test::uniform(rng, 1, 5);
    const auto inst = trial % 2 ? test::random_external(rng, n, t) : test::random_internal(rng, n, t);
    const test::DistanceTable table(inst);
    std::optional<Proposal> first_anscombe;
    std::optional<std::pair<Proposal, Proposal>> first_ostro;
    for (std::size_t a = 0; a < table.proposals.size(); ++a) {
      const auto& p = table.proposals[a];
      if (!test::oracle_is_iwm(inst, p)) continue;
      if (!first_anscombe && table.margin(table.index_of(p.complement()), a) > 0) first_anscombe = p;
      if (!first_ostro) {
        if (auto d = table.defeater(a)) first_ostro = std::make_pair(p, *d);
      }
    }
    const auto an = detect_anscombe(inst);
    const auto os = detect_ostrogorski(inst);
    CHECK(an.occurs == first_anscombe.has_value());
    if (an.occurs) CHECK(*an.witness_iwm == *first_anscombe);
    CHECK(os.occurs == first_ostro.has_value());
    if (os.occurs) {
      CHECK(*os.witness_iwm == first_ostro->first);
      CHECK(*os.defeater == first_ostro->second);
    }
    if (an.occurs) CHECK(os.occurs);
  }
}

TEST_CASE("external Ostrogorski iff some renormalised restriction shows Anscombe") {
  test::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = test::uniform(rng, 1, 7);
    const std::size_t t = test::uniform(rng, 1, 5);
    const auto inst = test::random_external(rng, n, t);
    const auto& w = inst.weights().external_weights();
    bool restricted = false;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << t) && !restricted; ++s) {
      std::vector<std::size_t> cols;
      Rational total(0);
      for (std::size_t j = 0; j < t; ++j) {
        if ((s >> j) & 1U) {
          cols.push_back(j);
          total += w[j];
        }
      }
      std::vector<std::size_t> rows(n);
      std::iota(rows.begin(), rows.end(), 0);
      std::vector<Rational> ws;
      for (std::size_t j : cols) ws.push_back(w[j] / total);
      const auto sub = VotingInstance::external(inst.profile().submatrix(rows, cols), ws);
      restricted = detect_anscombe(sub).occurs;
    }
    CHECK(detect_ostrogorski(inst).occurs == restricted);
  }
}
