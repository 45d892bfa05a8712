#include "fixtures.hpp"
#include "../support/oracles.hpp"

#include "miv_cli/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace miv;
using miv::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kIntro = "miv 5 3 unweighted\n+ - -\n- + -\n- - +\n+ + +\n+ + +\n";

}  // namespace

TEST_CASE("instance grammar") {
  const auto inst = parse_instance(kIntro);
  CHECK(inst.n() == 5);
  CHECK(inst.t() == 3);
  CHECK(inst.mode() == WeightMode::Unweighted);
  CHECK(inst.profile() == test::intro_profile());

  const auto ext = parse_instance("# weights\nmiv 2 2 external\n+1 -1\n-1, +1\n0.7 3/10\n");
  CHECK(ext.weights().external_weights() == std::vector<Rational>{Rational(7, 10), Rational(3, 10)});

  test::Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = trial % 2 ? test::random_internal(rng, 3, 4) : test::random_external(rng, 4, 3);
    const auto b = parse_instance(serialize_instance(a));
    CHECK(serialize_instance(b) == serialize_instance(a));
    CHECK(b.profile() == a.profile());
  }

  try {
    (void)parse_instance("miv 2 2 unweighted\n+ -\n+ x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_instance("miv 2 2 unweighted\n+ -\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("miv 1 2 unweighted\n+ -\n+ +\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("miv 1 2 sideways\n+ -\n"), ParseError);
  try {
    (void)parse_instance("miv 1 2 external\n+ -\n1/2 2/5\n");
    FAIL("expected an invariant violation");
  } catch (const InvalidInstance& e) {
    CHECK(std::string(e.what()).find("weights sum 9/10 \xE2\x89\xA0 1") != std::string::npos);
  }
}

TEST_CASE("paradox report on the intro instance") {
  const auto r = run_cli({"paradox", "-", "--json"}, kIntro);
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["findings"]["anscombe"] == true);
  CHECK(doc["findings"]["ostrogorski"] == true);
  CHECK(doc["witnesses"]["anscombe_witness"]["iwm"] == "(+1,+1,+1)");
  CHECK(doc["witnesses"]["ostrogorski_witness"]["defeater"] == "(-1,-1,-1)");
  CHECK(doc["witnesses"]["ostrogorski_witness"]["votes_for_defeater"] == 3);
  CHECK(doc["witnesses"]["ostrogorski_witness"]["votes_for_iwm"] == 2);

  const auto report = cli::AnalysisReport::from_json(doc);
  CHECK(report.to_json() == doc);
  const auto text = run_cli({"paradox", "-"}, kIntro);
  CHECK(text.out == report.to_text());
  CHECK(text.out.find("anscombe=true") != std::string::npos);

  CHECK(run_cli({"paradox", "-", "--assert-safe"}, kIntro).code == 1);
  CHECK(run_cli({"paradox", "-"}, kIntro).out == text.out);
}

TEST_CASE("ssw report") {
  const std::string fig = "miv 3 6 unweighted\n+ + + - + -\n+ - + + - +\n+ + - - + -\n";
  const auto r = run_cli({"ssw", "-", "--json", "--orbits"}, fig);
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["findings"]["single_switch"] == true);
  CHECK(doc["findings"]["orbit_size"] == 12);
  CHECK(doc["witnesses"]["orbit"].size() == 12);
  CHECK(doc["witnesses"]["presentation"]["order"].size() == 6);
  CHECK(doc["witnesses"]["presentation"]["flip_mask"].get<std::string>().size() == 6);

  const std::string p1 = "miv 3 4 unweighted\n- - - -\n+ + - -\n+ - + -\n";
  const auto f = Json::parse(run_cli({"ssw", "-", "--json", "--forbidden"}, p1).out);
  CHECK(f["findings"]["single_switch"] == false);
  CHECK(f["witnesses"]["forbidden"]["rows"] == Json::array({1, 2, 3}));
  const auto nv = Json::parse(run_cli({"ssw", "-", "--json", "--naive"}, p1).out);
  CHECK(nv["witnesses"]["forbidden"]["cols"] == Json::array({1, 2, 3, 4}));
  CHECK(run_cli({"ssw", "-", "--assert-safe"}, p1).code == 1);
}

TEST_CASE("generator pipeline") {
  const auto g = run_cli({"generate", "big-ell", "3/5"});
  REQUIRE(g.code == 0);
  const auto p = run_cli({"paradox", "-", "--json"}, g.out);
  REQUIRE(p.code == 0);
  CHECK(Json::parse(p.out)["findings"]["ostrogorski"] == true);

  const auto s = run_cli({"generate", "small-ell", "1", "--json"});
  CHECK(Json::parse(s.out)["findings"]["verified"] == true);
  CHECK(run_cli({"generate", "big-ell", "1/2"}).code == 2);
}

TEST_CASE("other commands") {
  const auto m = Json::parse(run_cli({"majority", "-", "--json"}, kIntro).out);
  CHECK(m["findings"]["majorities"] == Json::array({"3/5", "3/5", "3/5"}));
  CHECK(m["witnesses"]["iwm"] == "(+1,+1,+1)");

  const auto c = Json::parse(run_cli({"condorcet", "-", "--json", "--proposal", "+++", "--major", "--nss"}, kIntro).out);
  CHECK(c["findings"]["is_condorcet"] == false);
  CHECK(c["witnesses"]["defeater"] == "(-1,-1,-1)");
  CHECK(c["witnesses"]["major_defeater"] == "(-1,-1,-1)");
  CHECK(c["findings"]["negative_sum_subset_exists"] == false);

  const auto rep = Json::parse(run_cli({"represent", "-", "--json", "--oracle"}, kIntro).out);
  CHECK(rep["findings"]["oracle"]["distance_to_iwm"] == "1/3");
  CHECK(rep["findings"]["oracle"]["proposal"] == "(+1,+1,-1)");

  const auto all = Json::parse(run_cli({"represent", "-", "--json"}, kIntro).out);
  CHECK(all["findings"]["wagner"]["average_majority"] == "3/5");
  CHECK(all["findings"]["relevant_topics"] == Json::array({1, 2, 3}));

  const auto sc1 = Json::parse(run_cli({"sc", "-", "--json"}, "3 3\na b c\nb a c\nb c a\n").out);
  CHECK(sc1["findings"]["single_crossing"] == true);
  const auto sc2 = Json::parse(run_cli({"sc", "-", "--json", "--forbidden"}, "3 3\na b c\nc a b\nb c a\n").out);
  CHECK(sc2["findings"]["single_crossing"] == false);
  CHECK(sc2["witnesses"]["forbidden"]["orders"].size() == 3);
  const auto sc3 = Json::parse(run_cli({"sc", "-", "--json"}, kIntro).out);
  CHECK(sc3["findings"]["single_crossing"] == false);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"paradox", "/nonexistent/file.miv"}).code == 2);
  CHECK(run_cli({"paradox", "-"}, "miv 2 2 unweighted\n+ -\n").code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  std::string wide = "miv 1 26 unweighted\n";
  for (int j = 0; j < 26; ++j) wide += "+ ";
  wide += "\n";
  CHECK(run_cli({"condorcet", "-"}, wide).code == 3);
  CHECK(run_cli({"--help"}).code == 0);
}
