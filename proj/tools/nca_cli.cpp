#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "nca/bidet.hpp"
#include "nca/error.hpp"
#include "nca/grass.hpp"
#include "nca/json_io.hpp"
#include "nca/partition.hpp"
#include "nca/specht.hpp"
#include "nca/tableau.hpp"
#include "nca/tl.hpp"
#include "nca/verify.hpp"

namespace {

using nca::Json;

int to_int(const std::string& s, const std::string& code) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw nca::error(code, "not an integer: '" + s + "'");
  }
}

std::vector<int> parse_ints(const std::string& s, const std::string& code) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(to_int(tok, code));
  if (out.empty()) throw nca::error(code, "empty list: '" + s + "'");
  return out;
}

// "13,24" with one digit per column, or "1-3,2-11" when columns reach 10.
nca::GrassMonomial parse_monomial(const std::string& s) {
  nca::GrassMonomial m;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    nca::PIndex j;
    if (tok.find('-') != std::string::npos) {
      std::stringstream ts(tok);
      std::string part;
      while (std::getline(ts, part, '-')) j.push_back(to_int(part, "bad-monomial"));
    } else {
      for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw nca::error("bad-monomial", "not a digit in '" + tok + "'");
        j.push_back(ch - '0');
      }
    }
    if (j.empty()) throw nca::error("bad-monomial", "empty factor in '" + s + "'");
    m.push_back(std::move(j));
  }
  if (m.empty()) throw nca::error("bad-monomial", "empty monomial: '" + s + "'");
  return m;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nca::error("io", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw nca::error("bad-json", e.what());
  }
}

// Columns are taken in diagram order. A lambda view (entries 1..n) is
// completed with the canonical filling; a rectangular tableau completes to
// itself.
std::pair<nca::Tableau, nca::Filling> complete_input(const nca::Tableau& t) {
  nca::Partition heights;
  for (const auto& col : t.cols) heights.push_back(static_cast<int>(col.size()));
  for (size_t i = 1; i < heights.size(); ++i)
    if (heights[i] > heights[i - 1])
      throw nca::error("bad-shape", "column heights must not increase");
  nca::Partition lambda = nca::conjugate(heights);
  nca::Filling f = nca::canonical_filling(lambda);
  return {nca::complete_with_filling(t, f), f};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-crossing tableau and straightening calculator"};
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indented output with diagram art");

  std::string shape_s, weight_s, kind = "syt";
  auto* cmd_enum =
      app.add_subcommand("enumerate", "list tableaux or weighted classes");
  cmd_enum->add_option("--shape", shape_s, "partition, e.g. 2,1,1")->required();
  cmd_enum->add_option("--kind", kind, "syt | nct | snct")
      ->check(CLI::IsMember({"syt", "nct", "snct"}));
  cmd_enum->add_option("--weight", weight_s, "content for snct, e.g. 2,1");

  std::string biject_file, direction = "syt-to-nct";
  bool roundtrip = false;
  auto* cmd_biject =
      app.add_subcommand("biject", "reading-preserving SYT <-> NCT map");
  cmd_biject->add_option("input", biject_file, "tableau JSON file")->required();
  cmd_biject->add_option("--direction", direction, "syt-to-nct | nct-to-syt")
      ->check(CLI::IsMember({"syt-to-nct", "nct-to-syt"}));
  cmd_biject->add_flag("--roundtrip", roundtrip, "check the inverse as well");

  std::string target, dec_file;
  auto* cmd_dec = app.add_subcommand("decompose", "expand over a basis family");
  cmd_dec->add_option("--target", target,
                      "specht-nct | specht-syt | bitableau | tl")
      ->required()
      ->check(CLI::IsMember({"specht-nct", "specht-syt", "bitableau", "tl"}));
  cmd_dec->add_option("input", dec_file, "tableau or bitableau JSON file")
      ->required();

  int st_m = 2, st_n = 0;
  std::string monomial_s;
  auto* cmd_str = app.add_subcommand(
      "straighten", "rewrite onto non-crossing monomials in G_{2,n}");
  cmd_str->add_option("--m", st_m, "minor size (must be 2)");
  cmd_str->add_option("--n", st_n, "columns beyond m")->required();
  cmd_str->add_option("--monomial", monomial_s, "e.g. 13,24 or 1-3,2-11")
      ->required();

  int sg_n = 0, sg_steps = 200;
  std::string sg_monomial;
  auto* cmd_sg =
      app.add_subcommand("seagull", "exploratory m=3 rewriting with a step log");
  cmd_sg->add_option("--n", sg_n, "columns beyond 3")->required();
  cmd_sg->add_option("--monomial", sg_monomial, "e.g. 125,346")->required();
  cmd_sg->add_option("--max-steps", sg_steps, "rewrite step cap");

  std::string suite = "all";
  int max_n_flag = 0;
  auto* cmd_ver = app.add_subcommand("verify", "run the verification suites");
  cmd_ver->add_option("--suite", suite, "suite name or 'all'");
  cmd_ver->add_option("--max-n", max_n_flag,
                      "bound cap (default: NCA_MAX_N or 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json env = {{"schema", "nca/1"},
                {"status", "error"},
                {"payload", {{"code", "bad-arguments"}, {"message", e.what()}}},
                {"timing_ms", 0.0},
                {"provenance", "none"}};
    std::cout << env.dump() << "\n";
    return 1;
  }

  Json payload;
  std::string provenance = "none";
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();

  try {
    if (cmd_enum->parsed()) {
      nca::Partition lambda = parse_ints(shape_s, "bad-shape");
      nca::check_partition(lambda);
      if (kind == "snct") {
        provenance = "weighted-class-enumeration";
        if (weight_s.empty())
          throw nca::error("bad-weight", "snct needs --weight");
        std::vector<int> w = parse_ints(weight_s, "bad-weight");
        auto words = nca::weighted_class_words(lambda, w, nca::Family::Nct);
        Json classes = Json::array();
        for (const auto& r : words) classes.push_back(nca::reading_to_json(r));
        payload = {{"shape", shape_s},
                   {"kind", kind},
                   {"count", static_cast<long>(words.size())},
                   {"classes", classes}};
      } else {
        provenance =
            kind == "nct" ? "nct-enumeration" : "syt-enumeration";
        std::vector<nca::Tableau> ts = kind == "nct"
                                           ? nca::enumerate_nct(lambda)
                                           : nca::enumerate_syt(lambda);
        Json arr = Json::array();
        Json art = Json::array();
        for (const auto& t : ts) {
          arr.push_back(nca::tableau_to_json(t));
          if (pretty) art.push_back(nca::diagram_art(t));
        }
        payload = {{"shape", shape_s},
                   {"kind", kind},
                   {"count", static_cast<long>(ts.size())},
                   {"tableaux", arr}};
        if (pretty) payload["art"] = art;
      }
    } else if (cmd_biject->parsed()) {
      provenance = "reading-preserving-bijection";
      nca::Tableau t = nca::tableau_from_json(read_json_file(biject_file));
      auto [completed, f] = complete_input(t);
      bool to_nct = direction == "syt-to-nct";
      nca::Tableau tc;
      if (to_nct) {
        tc = completed;
        if (!nca::is_syt(tc))
          throw nca::error("not-in-family", "input is not a standard tableau");
      } else {
        // a diagram view completes through the chain construction; standard
        // placement of the frozen entries need not stay non-crossing
        if (t.entry_count() < f.total()) {
          if (!nca::is_nct(t))
            throw nca::error("not-in-family",
                             "input is not a non-crossing tableau");
          tc = nca::complete_as_nct(t, f);
        } else {
          tc = t;
        }
        if (!nca::is_nct(tc))
          throw nca::error("not-in-family",
                           "input is not a non-crossing tableau");
      }
      nca::Tableau image = to_nct ? nca::syt_to_nct(tc) : nca::nct_to_syt(tc);
      if (nca::reading_of(image) != nca::reading_of(tc))
        throw nca::error("internal", "bijection changed the reading");
      payload = {{"direction", direction},
                 {"input", nca::tableau_to_json(tc)},
                 {"image", nca::tableau_to_json(image)},
                 {"reading", nca::reading_to_json(nca::reading_of(tc))}};
      if (roundtrip) {
        nca::Tableau back =
            to_nct ? nca::nct_to_syt(image) : nca::syt_to_nct(image);
        if (back != tc)
          throw nca::error("internal", "round trip failed to restore the input");
        payload["roundtrip"] = true;
      }
      if (pretty) {
        payload["input_art"] = nca::diagram_art(tc);
        payload["image_art"] = nca::diagram_art(image);
      }
    } else if (cmd_dec->parsed()) {
      if (target == "tl") {
        provenance = "crossing-resolution";
        nca::Tableau t = nca::tableau_from_json(read_json_file(dec_file));
        nca::ResolveResult rr = nca::resolve_crossings(t);
        payload = {{"target", target},
                   {"input", nca::tableau_to_json(t)},
                   {"states", static_cast<long>(rr.states.size())},
                   {"coefficients", nca::tl_element_to_json(rr.coefficients)}};
      } else if (target == "bitableau") {
        provenance = "noncrossing-bideterminant-expansion";
        nca::Bitableau b = nca::bitableau_from_json(read_json_file(dec_file));
        nca::BidetElement e = nca::decompose_bideterminant(b);
        payload = {{"target", target},
                   {"input", nca::bitableau_to_json(b)},
                   {"terms", static_cast<long>(e.size())},
                   {"element", nca::bidet_element_to_json(e)}};
      } else {
        nca::Tableau t = nca::tableau_from_json(read_json_file(dec_file));
        auto [completed, f] = complete_input(t);  // validates the shape
        (void)completed;
        nca::SpechtElement e;
        if (target == "specht-nct") {
          provenance = "nct-basis-decomposition";
          e = nca::decompose_into_nct(t, f);
        } else {
          provenance = "garnir-straightening";
          e = nca::garnir_expand(nca::movable_part(t, f.n));
        }
        payload = {{"target", target},
                   {"input", nca::tableau_to_json(t)},
                   {"terms", static_cast<long>(e.size())},
                   {"element", nca::specht_element_to_json(e)}};
      }
    } else if (cmd_str->parsed()) {
      provenance = "grassmann-straightening";
      if (st_m != 2)
        throw nca::error("unsupported", "straightening is for m = 2 only");
      nca::GrassMonomial M = nca::canonical_monomial(parse_monomial(monomial_s));
      nca::check_monomial(M, 2, st_n);
      nca::GrassElement e = nca::straighten_g2n(M);
      payload = {{"monomial", nca::grass_monomial_to_json(M)},
                 {"n", st_n},
                 {"terms", static_cast<long>(e.size())},
                 {"element", nca::grass_element_to_json(e)}};
    } else if (cmd_sg->parsed()) {
      provenance = "exploratory-rewriting";
      nca::GrassMonomial M =
          nca::canonical_monomial(parse_monomial(sg_monomial));
      nca::check_monomial(M, 3, sg_n);
      nca::SeagullResult r = nca::seagull_rewrite(M, sg_n, sg_steps);
      payload = {{"monomial", nca::grass_monomial_to_json(M)},
                 {"n", sg_n},
                 {"finished", r.finished},
                 {"log", r.log},
                 {"element", nca::grass_element_to_json(r.element)}};
    } else if (cmd_ver->parsed()) {
      provenance = "verification-suites";
      int bound = max_n_flag;
      if (bound <= 0) {
        if (const char* envv = std::getenv("NCA_MAX_N")) {
          bound = std::atoi(envv);
          if (bound <= 0)
            throw nca::error("bad-arguments",
                             "NCA_MAX_N must be a positive integer");
        } else {
          bound = 6;
        }
      }
      auto results = nca::run_suites(suite, bound);
      Json rep = Json::array();
      bool all_pass = true;
      std::string failed;
      for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (!r.pass) failed += (failed.empty() ? "" : ", ") + r.suite;
        rep.push_back({{"suite", r.suite},
                       {"pass", r.pass},
                       {"checks", r.checks},
                       {"detail", r.detail},
                       {"ms", r.ms}});
      }
      payload = {{"bound", bound}, {"pass", all_pass}, {"suites", rep}};
      if (!all_pass) {
        ok = false;
        payload["code"] = "verification-failed";
        payload["message"] = "failing suites: " + failed;
      }
    }
  } catch (const nca::error& e) {
    ok = false;
    payload = {{"code", e.code()}, {"message", e.what()}};
  } catch (const std::exception& e) {
    ok = false;
    payload = {{"code", "internal"}, {"message", e.what()}};
  }

  auto t1 = std::chrono::steady_clock::now();
  Json env = {
      {"schema", "nca/1"},
      {"status", ok ? "ok" : "error"},
      {"payload", payload},
      {"timing_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()},
      {"provenance", provenance},
  };
  std::cout << (pretty ? env.dump(2) : env.dump()) << "\n";
  return ok ? 0 : 1;
}
