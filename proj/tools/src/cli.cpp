#include "miv_cli/cli.hpp"

#include "miv/miv.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace miv::cli {

Json AnalysisReport::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["instance"] = {{"n", n}, {"t", t}, {"mode", mode}};
  doc["findings"] = findings;
  doc["witnesses"] = witnesses;
  return doc;
}

AnalysisReport AnalysisReport::from_json(const Json& doc) {
  AnalysisReport r;
  r.command = doc.at("command").get<std::string>();
  const auto& inst = doc.at("instance");
  r.n = inst.at("n").get<std::size_t>();
  r.t = inst.at("t").get<std::size_t>();
  r.mode = inst.at("mode").get<std::string>();
  r.findings = doc.at("findings");
  r.witnesses = doc.at("witnesses");
  return r;
}

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool all_scalars(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Json& e) { return !e.is_structured(); });
}

void flatten(const std::string& key, const Json& v, std::ostream& os) {
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items()) flatten(key.empty() ? k : key + "." + k, sub, os);
  } else if (v.is_array() && !all_scalars(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(key + "[" + std::to_string(i) + "]", v[i], os);
  } else if (v.is_array()) {
    os << key << "=[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << scalar_text(v[i]);
    os << "]\n";
  } else {
    os << key << '=' << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string AnalysisReport::to_text() const {
  const Json doc = to_json();
  std::ostringstream os;
  os << "command=" << doc["command"].get<std::string>() << '\n';
  flatten("instance", doc["instance"], os);
  flatten("", doc["findings"], os);
  flatten("", doc["witnesses"], os);
  return os.str();
}

namespace {

Json one_based(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(i + 1);
  return a;
}

std::string mask_text(const std::vector<bool>& mask) {
  std::string s;
  for (bool b : mask) s += b ? '1' : '0';
  return s;
}

Json proposal_or_null(const std::optional<Proposal>& p) { return p ? Json(p->to_string()) : Json(nullptr); }

Json presentation_json(const Presentation& p) {
  return {{"order", one_based(p.column_order)}, {"flip_mask", mask_text(p.flip_mask)}};
}

struct Options {
  std::string file;
  bool json = false;
  bool assert_safe = false;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read_input(const std::string& file) {
    if (file == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    std::ifstream f(file, std::ios::binary);
    if (!f) throw InputMissing("cannot open '" + file + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  VotingInstance load(const std::string& file) { return parse_instance(read_input(file)); }

  static AnalysisReport header(const std::string& command, const VotingInstance& inst) {
    AnalysisReport r;
    r.command = command;
    r.n = inst.n();
    r.t = inst.t();
    r.mode = std::string(to_string(inst.mode()));
    return r;
  }

  int emit(const AnalysisReport& r, const Options& o, bool safe) {
    if (o.json) {
      out_ << r.to_json().dump(2) << '\n';
    } else {
      out_ << r.to_text();
    }
    return o.assert_safe && !safe ? kUnsafe : kOk;
  }

  struct InputMissing : Error {
    using Error::Error;
  };

 private:
  std::istream& in_;
  std::ostream& out_;
};

// Voters strictly preferring p to q, and q to p.
std::pair<std::size_t, std::size_t> head_to_head(const VotingInstance& inst, const Proposal& p, const Proposal& q) {
  std::size_t for_p = 0;
  std::size_t for_q = 0;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const auto s = voter_compare(inst, i, p, q);
    if (s == ComparisonSign::Positive) ++for_p;
    if (s == ComparisonSign::Negative) ++for_q;
  }
  return {for_p, for_q};
}

int cmd_majority(Runner& rn, const Options& o) {
  const auto inst = rn.load(o.file);
  auto r = Runner::header("majority", inst);
  const IwmSet iwm(inst);
  Json maj = Json::array();
  for (const auto& m : topic_majorities(inst)) maj.push_back(m.to_string());
  r.findings["majorities"] = maj;
  r.findings["tied_topics"] = one_based(iwm.tied_topics());
  r.findings["iwm_count"] = iwm.count();
  r.witnesses["iwm"] = iwm.canonical().to_string();
  return rn.emit(r, o, true);
}

int cmd_paradox(Runner& rn, const Options& o) {
  const auto inst = rn.load(o.file);
  auto r = Runner::header("paradox", inst);
  const auto a = detect_anscombe(inst);
  const auto b = detect_ostrogorski(inst);
  const auto winner = find_condorcet(inst);

  r.findings["anscombe"] = a.occurs;
  r.findings["ostrogorski"] = b.occurs;
  r.findings["condorcet_winner_exists"] = winner.has_value();
  if (a.occurs) {
    r.witnesses["anscombe_witness"] = {{"iwm", a.witness_iwm->to_string()},
                                         {"supporters", a.witness_tally->supporters},
                                         {"opposers", a.witness_tally->opposers},
                                         {"indifferent", a.witness_tally->indifferent}};
  }
  if (b.occurs) {
    const auto [for_d, for_w] = head_to_head(inst, *b.defeater, *b.witness_iwm);
    r.witnesses["ostrogorski_witness"] = {{"iwm", b.witness_iwm->to_string()},
                                            {"defeater", b.defeater->to_string()},
                                            {"votes_for_defeater", for_d},
                                            {"votes_for_iwm", for_w}};
  }
  r.witnesses["condorcet_winner"] = proposal_or_null(winner);
  return rn.emit(r, o, !a.occurs && !b.occurs);
}

struct CondorcetFlags {
  std::string proposal;
  bool major = false;
  bool nss = false;
};

int cmd_condorcet(Runner& rn, const Options& o, const CondorcetFlags& f) {
  const auto inst = rn.load(o.file);
  auto r = Runner::header("condorcet", inst);
  bool safe = true;
  if (!f.proposal.empty()) {
    const Proposal p = Proposal::parse(f.proposal);
    if (p.size() != inst.t()) throw DimensionError("proposal length does not match topic count");
    const auto c = is_condorcet(inst, p);
    r.findings["is_condorcet"] = c.winner;
    r.witnesses["candidate"] = p.to_string();
    r.witnesses["defeater"] = proposal_or_null(c.defeater);
    safe = c.winner;
  }
  if (f.major) {
    const auto d = solve_major(inst);
    r.findings["major_defeater_exists"] = d.has_value();
    r.witnesses["major_defeater"] = proposal_or_null(d);
    safe = safe && !d;
  }
  if (f.nss) {
    const auto s = solve_nss(inst.profile());
    r.findings["negative_sum_subset_exists"] = s.has_value();
    r.witnesses["negative_sum_subset"] = s ? one_based(*s) : Json(nullptr);
    safe = safe && !s;
  }
  if (f.proposal.empty() && !f.major && !f.nss) {
    const auto w = find_condorcet(inst);
    r.findings["condorcet_winner_exists"] = w.has_value();
    r.witnesses["condorcet_winner"] = proposal_or_null(w);
    safe = w.has_value();
  }
  return rn.emit(r, o, safe);
}

struct SswFlags {
  bool orbits = false;
  bool forbidden = false;
  bool naive = false;
};

int cmd_ssw(Runner& rn, const Options& o, const SswFlags& f) {
  const auto inst = rn.load(o.file);
  const auto& prof = inst.profile();
  auto r = Runner::header("ssw", inst);
  const auto pres = recognize_ssw(prof);
  r.findings["single_switch"] = pres.has_value();
  r.findings["single_switch_no_flip"] = recognize_sswnf(prof).has_value();
  if (pres) {
    const Orbit orbit = enumerate_orbit(*pres, prof);
    r.findings["orbit_size"] = orbit.presentations.size();
    r.witnesses["presentation"] = presentation_json(*pres);
    if (f.orbits) {
      const auto all = all_presentations(prof);
      r.findings["presentation_count"] = all.size();
      r.findings["representative"] = orbit.representative + 1;
      Json members = Json::array();
      for (const auto& p : orbit.presentations) members.push_back(presentation_json(p));
      r.witnesses["orbit"] = members;
    }
  } else if (f.forbidden || f.naive) {
    std::optional<ForbiddenWitness> w;
    if (f.naive) {
      w = find_forbidden_naive(prof);
    } else {
      FinderStats stats;
      w = find_forbidden_fast(prof, &stats);
      r.findings["recognizer_calls"] = stats.recognizer_calls;
    }
    if (w) {
      r.witnesses["forbidden"] = {
          {"rows", one_based(w->rows)}, {"cols", one_based(w->cols)}, {"catalogue_id", w->catalogue_id}};
    }
  }
  return rn.emit(r, o, pres.has_value());
}

int cmd_sc(Runner& rn, const Options& o, bool forbidden) {
  const std::string text = rn.read_input(o.file);
  std::istringstream probe(text);
  std::string first;
  while (probe >> first && first.front() == '#') probe.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
  AnalysisReport r;
  r.command = "sc";
  sc::OrderList list;
  if (first == "miv") {
    const auto inst = parse_instance(text);
    r = Runner::header("sc", inst);
    list = sc::profile_to_orders(inst.profile());
  } else {
    list = sc::OrderList::parse(text);
    r.n = list.t();
    r.t = list.m();
    r.mode = "orders";
  }
  const auto order = sc::recognize_single_crossing(list);
  r.findings["single_crossing"] = order.has_value();
  if (order) {
    r.witnesses["order"] = one_based(*order);
  } else if (forbidden) {
    sc::ScFinderStats stats;
    const auto w = sc::find_forbidden_sc(list, &stats);
    r.findings["recognizer_calls"] = stats.recognizer_calls;
    Json alts = Json::array();
    for (std::size_t a : w.alternatives) alts.push_back(list.alternatives[a]);
    r.witnesses["forbidden"] = {{"orders", one_based(w.orders)}, {"alternatives", alts}};
  }
  return rn.emit(r, o, order.has_value());
}

struct RepresentFlags {
  bool partition = false;
  bool oracle = false;
  bool relevant = false;
  bool wagner = false;
  bool strict = false;
  std::string engine = "knapsack";
};

Json representation_json(const RepresentationReport& rep) {
  return {{"proposal", rep.proposal.to_string()},
          {"distance_to_iwm", rep.distance_to_iwm.to_string()},
          {"bound_case", std::string(to_string(rep.bound_used))},
          {"bound", rep.bound.to_string()},
          {"supporters", rep.support.supporters},
          {"opposers", rep.support.opposers},
          {"indifferent", rep.support.indifferent}};
}

int cmd_represent(Runner& rn, const Options& o, RepresentFlags f) {
  const auto inst = rn.load(o.file);
  auto r = Runner::header("represent", inst);
  if (!f.partition && !f.oracle && !f.relevant && !f.wagner) f.partition = f.relevant = f.wagner = true;
  const IwmSet iwm(inst);
  const Proposal& ref = iwm.canonical();
  r.witnesses["iwm"] = ref.to_string();
  bool safe = true;

  if (f.partition) {
    const auto rep = partition_proposal(inst, ref);
    r.findings["partition"] = representation_json(rep);
    r.witnesses["partition_agree_topics"] = one_based(rep.agree_topics);
  }
  if (f.oracle) {
    const auto rep = best_supported_oracle(inst, ref, f.strict ? SupportLevel::Strict : SupportLevel::Weak);
    r.findings["oracle"] = rep ? representation_json(*rep) : Json(nullptr);
    safe = safe && rep.has_value();
  }
  if (f.relevant) {
    const auto engine = f.engine == "brute" ? RelevanceEngine::BruteForce : RelevanceEngine::Knapsack;
    const auto avg = average_weight_vector(inst);
    r.findings["relevant_topics"] = one_based(relevant_topics(avg.weights, engine));
    r.findings["strict_relevant_majority"] = has_strict_relevant_majority(inst);
  }
  if (f.wagner) {
    const auto w = wagner_check(inst);
    Json maj = Json::array();
    for (const auto& m : w.majorities) maj.push_back(m.to_string());
    r.findings["wagner"] = {{"flipped", mask_text(w.flipped)},
                            {"majorities", maj},
                            {"average_majority", w.average_majority.to_string()},
                            {"w_ones", w.w_ones.to_string()},
                            {"anscombe_safe", w.anscombe_safe},
                            {"ostrogorski_safe", w.ostrogorski_safe}};
    safe = safe && w.anscombe_safe;
  }
  return rn.emit(r, o, safe);
}

int cmd_generate(Runner& rn, std::ostream& out, const Options& o, const std::string& family, const std::string& arg) {
  GeneratedInstance g = [&] {
    if (family == "small-ell") {
      std::size_t k = 0;
      std::istringstream is(arg);
      if (!(is >> k) || !is.eof()) throw ParseError(1, 1, "small-ell expects a non-negative integer k");
      return generate_small_ell(k);
    }
    if (family == "big-ell") return generate_big_ell(Rational::parse(arg));
    throw ContractError("unknown generator family '" + family + "' (use small-ell or big-ell)");
  }();
  if (o.json) {
    auto r = Runner::header("generate", g.instance);
    r.findings = {{"family", family},
                  {"ell", g.ell.to_string()},
                  {"lower_bound", g.lower_bound.to_string()},
                  {"verified", g.verified},
                  {"failure", g.failure}};
    r.witnesses["instance"] = serialize_instance(g.instance);
    return rn.emit(r, o, g.verified);
  }
  out << "# generated " << family << ' ' << arg << ": ell=" << g.ell.to_string()
      << " lower_bound=" << g.lower_bound.to_string() << " verified=" << (g.verified ? "true" : "false") << '\n';
  out << serialize_instance(g.instance);
  return o.assert_safe && !g.verified ? kUnsafe : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of multi-issue binary votes", "miv"};
  app.require_subcommand(1);
  Options o;
  CondorcetFlags cf;
  SswFlags sf;
  bool sc_forbidden = false;
  RepresentFlags rf;
  std::string family;
  std::string gen_arg;

  auto common = [&](CLI::App* sub, bool takes_file = true) {
    if (takes_file) sub->add_option("file", o.file, "instance file, or - for standard input")->required();
    sub->add_flag("--json", o.json, "emit a JSON document");
    sub->add_flag("--assert-safe", o.assert_safe, "exit 1 when the checked property fails");
    return sub;
  };
  auto* majority = common(app.add_subcommand("majority", "per-topic majorities and issue-wise majority proposals"));
  auto* paradox = common(app.add_subcommand("paradox", "Anscombe, Ostrogorski and Condorcet checks"));
  auto* condorcet = common(app.add_subcommand("condorcet", "Condorcet winner and subset-problem searches"));
  condorcet->add_option("--proposal", cf.proposal, "check this proposal, e.g. +-+");
  condorcet->add_flag("--major", cf.major, "search for a proposal beating all-ones");
  condorcet->add_flag("--nss", cf.nss, "search for a column subset with negative sums everywhere");
  auto* ssw = common(app.add_subcommand("ssw", "single-switch recognition, orbits and forbidden subprofiles"));
  ssw->add_flag("--orbits", sf.orbits, "list the rotation orbit");
  ssw->add_flag("--forbidden", sf.forbidden, "locate a forbidden subprofile with the fast finder");
  ssw->add_flag("--naive", sf.naive, "locate a forbidden subprofile by exhaustive scan");
  auto* scmd = common(app.add_subcommand("sc", "single-crossing recognition of an order list or a .miv profile"));
  scmd->add_flag("--forbidden", sc_forbidden, "locate a minimal non-single-crossing sub-list");
  auto* represent = common(app.add_subcommand("represent", "supported proposals near an issue-wise majority"));
  represent->add_flag("--partition", rf.partition, "partition construction");
  represent->add_flag("--oracle", rf.oracle, "exhaustive closest supported proposal");
  represent->add_flag("--strict", rf.strict, "oracle requires strict support");
  represent->add_flag("--relevant", rf.relevant, "relevant topics");
  represent->add_option("--engine", rf.engine, "relevance engine")->check(CLI::IsMember({"knapsack", "brute"}));
  represent->add_flag("--wagner", rf.wagner, "three-fourths safety check");
  auto* generate = common(app.add_subcommand("generate", "print a lower-bound instance"), false);
  generate->add_option("family", family, "small-ell or big-ell")->required()->check(CLI::IsMember({"small-ell", "big-ell"}));
  generate->add_option("parameter", gen_arg, "k for small-ell, ell for big-ell")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Runner rn(in, out);
  try {
    if (*majority) return cmd_majority(rn, o);
    if (*paradox) return cmd_paradox(rn, o);
    if (*condorcet) return cmd_condorcet(rn, o, cf);
    if (*ssw) return cmd_ssw(rn, o, sf);
    if (*scmd) return cmd_sc(rn, o, sc_forbidden);
    if (*represent) return cmd_represent(rn, o, rf);
    if (*generate) return cmd_generate(rn, out, o, family, gen_arg);
  } catch (const CapExceeded& e) {
    err << "miv: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const PrecisionError& e) {
    err << "miv: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "miv: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace miv::cli
