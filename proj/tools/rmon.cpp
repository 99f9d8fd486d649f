// Command-line front end: family construction, structural analysis, and the
// verification suites with certificate output and replay.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rmon/analysis.hpp"
#include "rmon/json_io.hpp"
#include "rmon/mu_tower.hpp"
#include "rmon/verifiers.hpp"

using nlohmann::json;
using namespace rmon;

namespace {

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// g:<n> | i:<n> | j:<a,..>:<b,..> | tower:<k> | path to a monoid JSON file
Monoid monoid_from_spec(const std::string& spec) {
  auto arg = [&](size_t off) { return spec.substr(off); };
  try {
    if (spec.rfind("g:", 0) == 0) return family_gowers(std::stoi(arg(2)));
    if (spec.rfind("i:", 0) == 0) return family_I(std::stoi(arg(2)));
    if (spec.rfind("tower:", 0) == 0) return tower(std::stoi(arg(6))).monoid;
    if (spec.rfind("j:", 0) == 0) {
      size_t colon = spec.find(':', 2);
      if (colon == std::string::npos) {
        throw std::invalid_argument("j spec needs two label lists: j:<a,..>:<b,..>");
      }
      return family_J(split_labels(spec.substr(2, colon - 2)), split_labels(arg(colon + 1)));
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("number out of range in spec '" + spec + "'");
  }
  return load_monoid(spec);
}

int cmd_family(const std::string& spec, const std::string& out_path) {
  Monoid m = monoid_from_spec(spec);
  ValidationReport rep = validate(m);
  std::cout << m.name << ": " << m.size << " elements, identity " << m.label(m.identity)
            << ", " << (rep.ok() ? "valid" : "INVALID: " + rep.summary()) << "\n";
  if (!out_path.empty() && rep.ok()) {
    save_monoid(m, out_path);
    std::cout << "written to " << out_path << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_analyze(const std::string& spec, bool as_json, const std::string& dot_path) {
  Monoid m = monoid_from_spec(spec);
  AnalysisReport rep = analyze(m);
  if (as_json) {
    std::cout << canonical_dump(to_json(rep));
  } else {
    std::cout << render_text(rep);
  }
  if (!dot_path.empty() && rep.x) {
    std::ofstream out(dot_path);
    if (!out) throw std::invalid_argument("cannot write '" + dot_path + "'");
    out << poset_dot(rep.x->poset, m.name);
  }
  return rep.validation.ok() ? 0 : 1;
}

// ---- verify suites ------------------------------------------------------
// Each runner takes its parameters as JSON (so certificates replay through
// the same code path) and returns pass/fail plus a payload.

struct SuiteOutcome {
  bool pass = false;
  json payload;
};

SuiteOutcome run_mu_tower(const json& params) {
  int k = params.at("k").get<int>();
  SuiteOutcome out;
  out.pass = true;
  out.payload["checks"] = json::array();
  for (int j = 1; j <= k; ++j) {
    IsoReport rep = iso_to_concrete(j);
    out.payload["checks"].push_back({{"k", j}, {"ok", rep.ok}, {"detail", rep.detail}});
    out.pass = out.pass && rep.ok;
  }
  return out;
}

SuiteOutcome run_order_recursion(const json& params) {
  RecursionReport rep = order_recursion_check(params.at("n").get<int>());
  return {rep.ok, {{"pairs", rep.pairs}, {"detail", rep.detail}}};
}

SuiteOutcome run_i4_hasse(const json&) {
  HasseReport rep = i4_hasse_check();
  return {rep.ok, {{"detail", rep.detail}}};
}

SuiteOutcome run_strongness(const json& params) {
  Monoid m = monoid_from_spec(params.at("monoid").get<std::string>());
  AnalysisReport rep = analyze(m);
  SuiteOutcome out;
  if (!rep.validation.ok()) {
    out.payload["detail"] = rep.validation.summary();
    return out;
  }
  bool x_ok = !rep.x_strong_witness.has_value();
  out.payload["x_strong"] = x_ok;
  out.pass = x_ok;
  if (rep.y) {
    auto yw = strongness_witness(rep.y->poset);
    out.payload["y_strong"] = !yw.has_value();
    out.payload["pi_max"] = rep.pi.ok;
    out.pass = out.pass && !yw.has_value() && rep.pi.ok;
  } else {
    out.payload["y_note"] = rep.y_note;
  }
  return out;
}

SuiteOutcome run_confluence(const json& params) {
  ConfluenceReport rep =
      confluence_check(params.at("trials").get<int>(), params.at("seed").get<unsigned>());
  return {rep.ok, {{"trials", rep.trials}, {"detail", rep.detail}}};
}

SuiteOutcome run_fk_embedding(const json& params) {
  int na = params.at("a").get<int>(), nb = params.at("b").get<int>();
  std::vector<std::string> as, bs;
  for (int i = 1; i <= na; ++i) as.push_back("a" + std::to_string(i));
  for (int i = 1; i <= nb; ++i) bs.push_back("b" + std::to_string(i));
  EmbedCheckReport rep = reduced_string_embedding_check(as, bs, params.at("maxlen").get<int>());
  return {rep.ok,
          {{"sequences", rep.sequences},
           {"distinct_strings", rep.distinct_strings},
           {"detail", rep.detail}}};
}

SuiteOutcome run_not_ramsey(const json& params) {
  Monoid m = monoid_from_spec(params.at("monoid").get<std::string>());
  Elem a = m.elem_by_label(params.at("a").get<std::string>());
  Elem b = m.elem_by_label(params.at("b").get<std::string>());
  SearchBounds bounds{params.at("max_slot").get<int>(), params.at("max_len").get<int>()};
  NotRamseyReport rep = verify_not_ramsey(m, a, b, bounds, params.value("threads", 1));
  return {rep.ok,
          {{"colcheck", rep.colcheck}, {"pairs", rep.pairs}, {"detail", rep.detail}}};
}

struct TameSetup {
  Monoid m;
  XPoset x;
  ChainForest y;
  int y_point;
  PointedMSet fam;
  Coloring col;
  TameParams tame;
};

TameSetup tame_setup(const json& params) {
  TameSetup s{monoid_from_spec(params.at("monoid").get<std::string>()),
              {}, {}, 0, {}, {}, {}};
  s.x = x_of(s.m);
  s.y = y_of(s.m);
  s.y_point = default_maximal_chain(s.y);
  s.fam = pointed_xm(s.x);
  ColoringContext ctx;
  ctx.family = &s.fam;
  s.col = make_coloring(params.at("coloring").get<std::string>(), ctx);
  s.tame.max_len = params.value("products", 2);
  s.tame.close_suffixes = params.value("close_suffixes", false);
  return s;
}

SuiteOutcome run_tame_search(const json& params) {
  TameSetup s = tame_setup(params);
  SearchBounds bounds{params.at("max_slot").get<int>(), params.at("max_word_len").get<int>()};
  TameSearchResult res =
      search_tame(s.y, s.y_point, s.fam, s.col, params.at("len").get<int>(), bounds, s.tame);
  SuiteOutcome out;
  out.payload["nodes"] = res.nodes;
  if (res.witness) {
    out.pass = true;
    json ws = json::array();
    for (const auto& w : *res.witness) ws.push_back(word_to_json(s.fam, w));
    out.payload["witness"] = ws;
  }
  return out;
}

// Re-validates a stored tame-search witness without searching.
SuiteOutcome replay_tame_witness(const json& cert) {
  TameSetup s = tame_setup(cert.at("params"));
  std::vector<LocatedWord> ws;
  for (const auto& jw : cert.at("witness")) ws.push_back(word_from_json(s.fam, jw));
  TameReport rep = check_tame(s.y, s.y_point, s.fam, s.col, ws, s.tame);
  return {rep.tame, {{"products", rep.products}, {"groups", rep.groups}}};
}

SuiteOutcome run_suite(const std::string& suite, const json& params) {
  if (suite == "mu-tower") return run_mu_tower(params);
  if (suite == "order-recursion") return run_order_recursion(params);
  if (suite == "i4-hasse") return run_i4_hasse(params);
  if (suite == "strongness") return run_strongness(params);
  if (suite == "confluence") return run_confluence(params);
  if (suite == "fk-embedding") return run_fk_embedding(params);
  if (suite == "not-ramsey") return run_not_ramsey(params);
  if (suite == "tame-search") return run_tame_search(params);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

int finish_suite(const std::string& suite, const json& params, const SuiteOutcome& out,
                 const std::string& out_path) {
  std::cout << suite << ": " << (out.pass ? "pass" : "FAIL") << "\n";
  for (auto it = out.payload.begin(); it != out.payload.end(); ++it) {
    std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
  }
  if (!out_path.empty()) {
    json cert = make_certificate(suite, params, out.pass);
    for (auto it = out.payload.begin(); it != out.payload.end(); ++it) {
      cert[it.key()] = it.value();
    }
    write_certificate(out_path, cert);
    std::cout << "certificate written to " << out_path << "\n";
  }
  return out.pass ? 0 : 1;
}

int cmd_replay(const std::string& path) {
  json cert = read_certificate(path);
  std::string suite = cert.at("suite").get<std::string>();
  bool stored_pass = cert.at("verdict").get<std::string>() == "pass";
  SuiteOutcome out;
  if (suite == "tame-search" && cert.contains("witness")) {
    out = replay_tame_witness(cert);
  } else {
    out = run_suite(suite, cert.at("params"));
  }
  bool reproduced = out.pass == stored_pass;
  std::cout << suite << " replay: stored " << (stored_pass ? "pass" : "fail") << ", fresh "
            << (out.pass ? "pass" : "fail") << " -> "
            << (reproduced ? "reproduced" : "MISMATCH") << "\n";
  return reproduced ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite monoid actions, chain forests and Ramsey-type verifiers"};
  app.require_subcommand(1);

  std::string spec, out_path, dot_path, replay_path, coloring = "parity";
  bool as_json = false, close_suffixes = false;
  int k = 4, n = 3, trials = 1000, na = 2, nb = 1, maxlen = 4;
  int max_slot = 8, max_len = 2, threads = 1, seq_len = 2, max_word_len = 2, products = 2;
  unsigned seed = 20240821;
  std::string pair_a, pair_b;

  auto* fam_cmd = app.add_subcommand("family", "build or load a monoid and validate it");
  fam_cmd->add_option("spec", spec,
                      "g:<n> | i:<n> | j:<a,..>:<b,..> | tower:<k> | file.json")
      ->required();
  fam_cmd->add_option("--out", out_path, "write the monoid as JSON");

  auto* an_cmd = app.add_subcommand("analyze", "R-classes, X(M), Y(M) and the Ramsey verdict");
  an_cmd->add_option("spec", spec, "monoid spec")->required();
  an_cmd->add_flag("--json", as_json, "emit the report as JSON");
  an_cmd->add_option("--dot", dot_path, "write X(M) in DOT form");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->require_subcommand(1);
  auto add_cert = [&](CLI::App* c) {
    c->add_option("--out", out_path, "write a certificate");
    return c;
  };
  auto* v_mu = add_cert(ver->add_subcommand("mu-tower", "tower(j) ~ I_j for j = 1..k"));
  v_mu->add_option("--k", k, "tower height");
  auto* v_or = add_cert(ver->add_subcommand("order-recursion",
                                            "recursive order law on I_{n+1}"));
  v_or->add_option("--n", n, "base index");
  add_cert(ver->add_subcommand("i4-hasse", "exact shape of the I_4 order"));
  auto* v_st = add_cert(ver->add_subcommand("strongness",
                                            "strong actions and the pi_max epimorphism"));
  v_st->add_option("--monoid", spec, "monoid spec")->required();
  auto* v_cf = add_cert(ver->add_subcommand("confluence", "rewrite confluence on random posets"));
  v_cf->add_option("--trials", trials, "number of random posets");
  v_cf->add_option("--seed", seed, "RNG seed");
  auto* v_fk = add_cert(ver->add_subcommand("fk-embedding",
                                            "reduced strings embed into the chain semigroup"));
  v_fk->add_option("--a", na, "number of A letters");
  v_fk->add_option("--b", nb, "number of B letters");
  v_fk->add_option("--maxlen", maxlen, "sequence length bound");
  auto* v_nr = add_cert(ver->add_subcommand("not-ramsey",
                                            "two-coloring defeats an incomparable pair"));
  v_nr->add_option("--monoid", spec, "monoid spec")->required();
  v_nr->add_option("--a", pair_a, "first element label")->required();
  v_nr->add_option("--b", pair_b, "second element label")->required();
  v_nr->add_option("--max-slot", max_slot, "largest slot");
  v_nr->add_option("--max-len", max_len, "largest word length");
  v_nr->add_option("--threads", threads, "worker threads");
  auto* v_ts = add_cert(ver->add_subcommand("tame-search",
                                            "first basic sequence on which a coloring is tame"));
  v_ts->add_option("--monoid", spec, "monoid spec")->required();
  v_ts->add_option("--coloring", coloring, "coloring spec");
  v_ts->add_option("--len", seq_len, "sequence length");
  v_ts->add_option("--max-slot", max_slot, "largest slot");
  v_ts->add_option("--max-word-len", max_word_len, "largest word length");
  v_ts->add_option("--products", products, "product length bound");
  v_ts->add_flag("--close-suffixes", close_suffixes, "close the admitted types under suffixes");

  auto* rp = app.add_subcommand("replay", "re-check a certificate");
  rp->add_option("cert", replay_path, "certificate file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fam_cmd->parsed()) return cmd_family(spec, out_path);
    if (an_cmd->parsed()) return cmd_analyze(spec, as_json, dot_path);
    if (rp->parsed()) return cmd_replay(replay_path);
    CLI::App* sub = ver->get_subcommands().front();
    std::string suite = sub->get_name();
    json params;
    if (suite == "mu-tower") params = {{"k", k}};
    if (suite == "order-recursion") params = {{"n", n}};
    if (suite == "i4-hasse") params = json::object();
    if (suite == "strongness") params = {{"monoid", spec}};
    if (suite == "confluence") params = {{"trials", trials}, {"seed", seed}};
    if (suite == "fk-embedding") params = {{"a", na}, {"b", nb}, {"maxlen", maxlen}};
    if (suite == "not-ramsey") {
      params = {{"monoid", spec}, {"a", pair_a},         {"b", pair_b},
                {"max_slot", max_slot}, {"max_len", max_len}, {"threads", threads}};
    }
    if (suite == "tame-search") {
      params = {{"monoid", spec},       {"coloring", coloring},
                {"len", seq_len},       {"max_slot", max_slot},
                {"max_word_len", max_word_len}, {"products", products},
                {"close_suffixes", close_suffixes}};
    }
    return finish_suite(suite, params, run_suite(suite, params), out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
