#include "fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

using namespace miv;

TEST_CASE("SSWNF recognition") {
  // Prefix rows (+,-,-), (+,+,-) scrambled to column order 2,0,1.
  const auto scrambled = PreferenceProfile::from_rows({{-1, 1, -1}, {-1, 1, 1}});
  const auto pres = recognize_sswnf(scrambled);
  REQUIRE(pres);
  CHECK(is_presentation(scrambled, *pres));
  CHECK(std::none_of(pres->flip_mask.begin(), pres->flip_mask.end(), [](bool b) { return b; }));

  const auto diag = PreferenceProfile::from_rows({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  CHECK_FALSE(recognize_sswnf(diag).has_value());
}

TEST_CASE("SSW recognition") {
  CHECK_FALSE(recognize_ssw(test::p1a()).has_value());
  CHECK_FALSE(recognize_ssw(test::p2a()).has_value());
  const auto row = PreferenceProfile::from_rows({{1, -1, 1, 1, -1}});
  const auto pres = recognize_ssw(row);
  REQUIRE(pres);
  CHECK(is_presentation(row, *pres));
  const auto fig = recognize_ssw(test::fig1_profile());
  REQUIRE(fig);
  CHECK(is_presentation(test::fig1_profile(), *fig));
  CHECK(is_presentation(test::fig1_profile(), test::fig1b_presentation()));
}

TEST_CASE("recognizers agree with brute force on all small profiles") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t t = 1; t <= 3; ++t) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * t)); ++code) {
        const auto p = test::profile_from_code(n, t, code);
        const auto nf = test::oracle_presented_matrices(p, true);
        const auto all = test::oracle_presented_matrices(p, false);
        CHECK(recognize_sswnf(p).has_value() == !nf.empty());
        CHECK(recognize_ssw(p).has_value() == !all.empty());
        if (!all.empty()) {
          std::set<std::vector<Opinion>> got;
          for (const auto& q : all_presentations(p)) {
            CHECK(is_presentation(p, q));
            got.insert(test::flatten(present(p, q)));
          }
          CHECK(got == all);
          CHECK(all_presentations(p).size() == all.size());
        }
      }
    }
  }
}

TEST_CASE("rotation orbit") {
  const auto one = PreferenceProfile::from_rows({{1, -1}});
  const Orbit orbit = enumerate_orbit({{0, 1}, {false, false}}, one);
  REQUIRE(orbit.presentations.size() == 4);
  std::vector<Proposal> rows;
  for (const auto& p : orbit.presentations) {
    const auto shown = present(one, p);
    rows.emplace_back(std::vector<Opinion>(shown.row(0).begin(), shown.row(0).end()));
  }
  CHECK(rows == std::vector<Proposal>{Proposal{1, -1}, Proposal{-1, -1}, Proposal{-1, 1}, Proposal{1, 1}});
  CHECK(orbit.representative == 1);

  const auto fig = test::fig1_profile();
  const Orbit f = enumerate_orbit(test::fig1b_presentation(), fig);
  CHECK(f.presentations.size() == 12);
  std::set<std::vector<Opinion>> distinct;
  for (const auto& p : f.presentations) distinct.insert(test::flatten(present(fig, p)));
  CHECK(distinct.size() == 12);
  const auto rep = present(fig, f.presentations[f.representative]);
  CHECK(std::all_of(rep.row(0).begin(), rep.row(0).end(), [](Opinion o) { return o == Opinion::Minus; }));

  Presentation cur = test::fig1b_presentation();
  for (int k = 0; k < 12; ++k) cur = rotate(cur);
  CHECK(cur == test::fig1b_presentation());

  CHECK_THROWS_AS(enumerate_orbit({{0, 1, 2}, {false, false, false}},
                                  PreferenceProfile::from_rows({{1, -1, 1}})),
                  ContractError);
}

TEST_CASE("all presentations of a single entry") {
  const auto p = PreferenceProfile::from_rows({{1}});
  CHECK(all_presentations(p).size() == 2);
  CHECK(all_presentations(test::p1a()).empty());
}

TEST_CASE("forbidden catalogue") {
  const auto& cat = forbidden_catalogue();
  CHECK_FALSE(cat.empty());
  for (const auto& e : cat) {
    CHECK(((e.matrix.n() == 3 && e.matrix.t() == 4) || (e.matrix.n() == 4 && e.matrix.t() == 3)));
    CHECK_FALSE(recognize_ssw(e.matrix).has_value());
    CHECK(match_catalogue(e.matrix) == e.id);
  }
  CHECK(match_catalogue(test::p1a()).has_value());
  CHECK(match_catalogue(test::p2a()).has_value());
  CHECK_FALSE(match_catalogue(PreferenceProfile::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})).has_value());
}

TEST_CASE("naive finder") {
  const auto w = find_forbidden_naive(test::p1a());
  REQUIRE(w);
  CHECK(w->rows == std::vector<std::size_t>{0, 1, 2});
  CHECK(w->cols == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_FALSE(find_forbidden_naive(test::fig1_profile()).has_value());
}

TEST_CASE("P2a embedded in a single-switch host") {
  test::Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    const auto host = test::plant_ssw(rng, 8, 8, false, true).profile;
    // Three extra columns, then four extra rows carrying P2a on them.
    const std::size_t n = 12;
    const std::size_t t = 11;
    std::vector<std::size_t> rpos(n);
    std::vector<std::size_t> cpos(t);
    std::iota(rpos.begin(), rpos.end(), 0);
    std::iota(cpos.begin(), cpos.end(), 0);
    std::shuffle(rpos.begin(), rpos.end(), rng);
    std::shuffle(cpos.begin(), cpos.end(), rng);
    std::vector<Opinion> e(n * t);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        Opinion o = test::random_opinion(rng);
        if (i < 8 && j < 8) o = host.at(i, j);
        if (i >= 8 && j >= 8) o = test::p2a().at(i - 8, j - 8);
        e[rpos[i] * t + cpos[j]] = o;
      }
    }
    const PreferenceProfile big(n, t, std::move(e));
    const auto w = find_forbidden_naive(big);
    REQUIRE(w);
    CHECK_FALSE(recognize_ssw(big.submatrix(w->rows, w->cols)).has_value());
    const auto fast = find_forbidden_fast(big);
    CHECK_FALSE(recognize_ssw(big.submatrix(fast.rows, fast.cols)).has_value());
  }
}

TEST_CASE("fast finder") {
  const auto w = find_forbidden_fast(test::p1a());
  CHECK(w.rows.size() == 3);
  CHECK(w.cols.size() == 4);
  CHECK_THROWS_AS(find_forbidden_fast(test::fig1_profile()), ContractError);

  test::Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = test::random_profile(rng, test::uniform(rng, 4, 60), test::uniform(rng, 4, 20));
    if (recognize_ssw(p)) continue;
    FinderStats stats;
    const auto f = find_forbidden_fast(p, &stats);
    const auto sub = p.submatrix(f.rows, f.cols);
    CHECK(match_catalogue(sub) == f.catalogue_id);
    CHECK(find_forbidden_naive(sub).has_value());
    CHECK(stats.recognizer_calls > 0);
  }
}

TEST_CASE("presented column distances are monotone") {
  test::Rng rng(111);
  for (int trial = 0; trial < 100; ++trial) {
    const auto planted = test::plant_ssw(rng, test::uniform(rng, 1, 12), test::uniform(rng, 1, 9), false, false);
    const auto pres = recognize_sswnf(planted.profile);
    REQUIRE(pres);
    const auto& o = pres->column_order;
    const auto& prof = planted.profile;
    for (std::size_t k = 1; k < o.size(); ++k) {
      const auto a = prof.column_distance(o[0], o[k - 1]);
      const auto b = prof.column_distance(o[0], o[k]);
      CHECK(a <= b);
      if (a == b) CHECK(prof.column_distance(o[k - 1], o[k]) == 0);
    }
  }
}
