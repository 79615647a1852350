// Command-line front end: braid, foldmap, theta and verdict analyses with
// machine-readable JSON reports on stdout and a short summary on stderr.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "prem/io.hpp"
#include "prem/refs.hpp"

namespace {

using prem::io::Json;

constexpr const char* kVersion = "0.1.0";

Json load_inline_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{'))
    return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot open " + arg);
  return Json::parse(in);
}

Json report_skeleton(const std::string& command, const Json& input, int cap) {
  Json r;
  r["tool"] = "premtool";
  r["version"] = kVersion;
  r["command"] = command;
  r["cap"] = cap;
  r["input"] = input;
  r["input_digest"] = prem::io::digest(input);
  r["results"] = Json::object();
  return r;
}

void emit(const Json& report, const std::string& summary) {
  std::cout << report.dump(2) << "\n";
  std::cerr << summary << "\n";
}

// Runs one flagged analysis, turning precondition failures into a per-flag
// error entry instead of aborting the whole report.
template <typename F>
void run_flag(Json& results, const std::string& key, F&& f) {
  try {
    results[key] = f();
  } catch (const std::exception& e) {
    results[key] = Json{{"error", e.what()}};
  }
}

int cmd_braid(const std::string& braid_arg, int strands, int cap, int level,
              bool permutation, bool linking, bool trivial, bool hb_trivial,
              bool humphries) {
  const Json input = load_inline_or_file(braid_arg);
  const prem::BraidWord b = prem::io::braid_from_json(input, strands);
  Json report = report_skeleton("braid", input, cap);
  report["strands"] = b.strands;
  Json& results = report["results"];

  if (permutation)
    run_flag(results, "permutation", [&] {
      const prem::Permutation p = prem::permutation_of(b);
      return Json{{"images", prem::io::permutation_to_json(p)},
                  {"order", p.order()},
                  {"paper_ref", prem::refs::kSymmetricProjection}};
    });
  if (linking)
    run_flag(results, "linking", [&] {
      return Json{{"matrix", prem::linking_matrix(b)},
                  {"paper_ref", prem::refs::kLinking}};
    });
  if (trivial)
    run_flag(results, "trivial", [&] {
      return Json{{"value", prem::is_trivial_braid(b)},
                  {"paper_ref", prem::refs::kArtin}};
    });
  if (hb_trivial)
    run_flag(results, "hb_trivial", [&] {
      const bool value = prem::hb_is_trivial(b);
      Json j{{"value", value}, {"paper_ref", prem::refs::kReducedFaithfulness}};
      if (value)
        j["assumptions"] = Json::array({prem::refs::kReducedEqualityAssumption});
      return j;
    });
  if (humphries)
    run_flag(results, "humphries", [&] {
      const auto cert = prem::humphries_certificate(b);
      return Json{
          {"verdict", cert.verdict == prem::HumphriesCertificate::InfiniteOrder
                          ? "INFINITE_ORDER"
                          : "NO_CONCLUSION"},
          {"permutation", prem::io::permutation_to_json(cert.permutation)},
          {"permutation_order", cert.permutation_order},
          {"divisor_witness", cert.divisor_witness},
          {"paper_ref", prem::refs::kHumphries}};
    });
  if (level > 0)
    run_flag(results, "level", [&] {
      Json j = prem::io::level_image_to_json(
          prem::level_image(prem::artin_action(b), level));
      j["paper_ref"] = prem::refs::kTowers;
      return j;
    });

  emit(report, "braid on " + std::to_string(b.strands) + " strands, " +
                   std::to_string(b.letters.size()) + " letters analyzed");
  return 0;
}

// Region-label word of a loop on the standard model, disks written A, B, C...
std::string standard_letters(const prem::FoldModel& model,
                             const prem::CrossingWord& loop) {
  std::string word(1, static_cast<char>('A' + loop.base));
  int region = loop.base;
  for (const auto& c : loop.crossings) {
    region = c.inward ? c.circle : model.exterior_region();
    if (region != model.exterior_region())
      word += static_cast<char>('A' + region);
  }
  return word;
}

int cmd_foldmap(const std::string& arrangement_file, const std::string& loop_file,
                int cap, bool do_pullback, bool do_monodromy, bool do_winding,
                bool do_alternation) {
  const Json arr_json = load_inline_or_file(arrangement_file);
  const Json loop_json = load_inline_or_file(loop_file);
  Json input{{"arrangement", arr_json}, {"loop", loop_json}};
  Json report = report_skeleton("foldmap", input, cap);
  Json& results = report["results"];

  const prem::FoldModel model =
      prem::FoldModel::validate(prem::io::arrangement_from_json(arr_json));
  Json fibers = Json::object();
  for (int region : model.regions())
    fibers[std::to_string(region)] = model.fiber(region);
  results["validated"] = Json{{"fibers", fibers},
                              {"paper_ref", prem::refs::kNestedModel}};

  std::optional<prem::CrossingWord> loop;
  std::optional<std::string> letter_word;
  if (loop_json.is_object() && loop_json.contains("word"))
    letter_word = loop_json.at("word").get<std::string>();
  else
    loop = prem::io::crossing_word_from_json(loop_json);

  if (do_pullback)
    run_flag(results, "pullback", [&] {
      if (!loop) throw std::invalid_argument("pullback needs a crossing word");
      const prem::PullbackGraph pg = prem::pullback(model, *loop);
      Json comps = Json::array();
      for (const auto& c : pg.components) {
        Json folds = Json::array();
        for (const auto& f : c.folds)
          folds.push_back(Json{{"crossing", f.crossing_index},
                               {"circle", f.circle},
                               {"kind", f.birth ? "birth" : "merge"}});
        comps.push_back(Json{{"closed", c.closed},
                             {"marked", c.marked},
                             {"strands", c.strand_count},
                             {"folds", folds},
                             {"birth_circles", c.birth_circles}});
      }
      return Json{{"components", pg.components.size()},
                  {"component_data", comps},
                  {"paper_ref", prem::refs::kPullback}};
    });
  if (do_monodromy)
    run_flag(results, "monodromy", [&] {
      if (!loop) throw std::invalid_argument("monodromy needs a crossing word");
      const auto frame = prem::BasepointFrame::natural(model, loop->base);
      const prem::Permutation p = prem::monodromy(model, *loop, frame);
      return Json{{"images", prem::io::permutation_to_json(p)},
                  {"order", p.order()},
                  {"paper_ref", prem::refs::kMonodromy}};
    });
  if (do_winding)
    run_flag(results, "winding", [&] {
      std::string word;
      if (letter_word) {
        word = *letter_word;
      } else {
        if (!model.standard())
          throw std::invalid_argument("winding applies to the standard model");
        word = standard_letters(model, *loop);
      }
      return Json{{"word", word},
                  {"value", prem::winding_invariant(word)},
                  {"paper_ref", prem::refs::kWordGroup}};
    });
  if (do_alternation)
    run_flag(results, "alternation", [&] {
      if (!loop) throw std::invalid_argument("alternation needs a crossing word");
      const auto cert = prem::alternation_certificate(model, *loop);
      Json pairs = Json::array();
      for (const auto& [a, b] : cert.interleaved_pairs)
        pairs.push_back(Json::array({a, b}));
      return Json{{"verdict",
                   cert.verdict == prem::AlternationCertificate::Obstructed
                       ? "OBSTRUCTED"
                       : "INCONCLUSIVE"},
                  {"interleaved_pairs", pairs},
                  {"diagnostics", cert.diagnostics},
                  {"paper_ref", prem::refs::kAlternation}};
    });

  emit(report, "foldmap analysis complete");
  return 0;
}

int cmd_theta(const std::string& input_arg, int cap) {
  const Json input = load_inline_or_file(input_arg);
  const prem::DoubleCosetSum sum = prem::io::theta_from_json(input);
  Json report = report_skeleton("theta", input, cap);
  const prem::CanonicalSum canon = prem::canonicalize(sum, cap);
  Json surviving = Json::array();
  for (const auto& p : canon.surviving)
    surviving.push_back(Json{{"sign", p.sign},
                             {"representative", prem::io::word_to_json(p.word)}});
  report["results"]["theta"] =
      Json{{"zero", canon.surviving.empty()},
           {"surviving", surviving},
           {"representative_bound", canon.representative_bound},
           {"paper_ref", prem::refs::kThetaMoves}};
  emit(report, canon.surviving.empty()
                   ? "theta = 0"
                   : "theta != 0 with " + std::to_string(canon.surviving.size()) +
                         " surviving double cosets");
  return 0;
}

int cmd_verdict(long long torsion, const std::string& perm_arg, int cap) {
  const Json perm_json = load_inline_or_file(perm_arg);
  Json input{{"torsion_order", torsion}, {"permutation", perm_json}};
  Json report = report_skeleton("verdict", input, cap);
  const prem::PremVerdict v =
      prem::prem_verdict(torsion, prem::io::permutation_from_json(perm_json));
  report["results"]["verdict"] =
      Json{{"verdict", v.verdict == prem::PremVerdict::Not2Prem ? "NOT_2PREM"
                                                                : "NO_CONCLUSION"},
           {"permutation", prem::io::permutation_to_json(v.monodromy)},
           {"permutation_order", v.permutation_order},
           {"divisor_witness", v.divisor_witness},
           {"order_consistent", v.order_consistent},
           {"paper_ref", prem::refs::kVerdict}};
  emit(report, v.verdict == prem::PremVerdict::Not2Prem
                   ? "NOT_2PREM: torsion with monodromy order divisible by 2, 3 or 5"
                   : "NO_CONCLUSION");
  return 0;
}

int cmd_selftest(int cap) {
  Json report = report_skeleton("selftest", Json::object(), cap);
  Json checks = Json::array();
  int failed = 0;
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back(Json{{"name", name}, {"ok", ok}});
    if (!ok) ++failed;
  };

  using namespace prem;
  check("free reduction", reduce({1, -1}, 1).is_identity());
  check("magnus generator",
        magnus_expand(FreeWord::generator(2, 1), 2).coefficient({1}) == 1);
  check("artin braid relation",
        artin_action(BraidWord(3, {1, 2, 1})) ==
            artin_action(BraidWord(3, {2, 1, 2})));
  check("commutator projects to a 3-cycle",
        permutation_of(BraidWord(3, {1, 2, -1, -2})).order() == 3);
  check("humphries on the commutator",
        humphries_certificate(BraidWord(3, {1, 2, -1, -2})).verdict ==
            HumphriesCertificate::InfiniteOrder);
  check("winding of BCAB", winding_invariant("BCAB") == 1);
  {
    DoubleCosetSum s;
    s.rank = 2;
    s.subgroup_generators = {FreeWord::generator(2, 1)};
    s.points = {SignedPoint{+1, FreeWord::generator(2, 2)},
                SignedPoint{-1, FreeWord::generator(2, 2)}};
    check("theta cancellation", is_zero(s));
  }

  report["results"]["selftest"] =
      Json{{"checks", checks}, {"failed", failed}};
  emit(report, failed ? "selftest FAILED" : "selftest passed");
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Obstruction toolkit for fold maps, braids and string links"};
  app.require_subcommand(1);
  int cap = 4;
  app.add_option("--cap", cap, "truncation level for all nilpotent quotients")
      ->check(CLI::PositiveNumber);

  // braid
  std::string braid_arg;
  int strands = 0, level = 0;
  bool f_perm = false, f_link = false, f_triv = false, f_hb = false,
       f_hum = false;
  CLI::App* braid = app.add_subcommand("braid", "analyze a braid word");
  braid->add_option("braid", braid_arg, "signed letter list, inline or a file")
      ->required();
  braid->add_option("--strands", strands, "strand count (default: inferred)");
  braid->add_flag("--permutation", f_perm, "underlying permutation");
  braid->add_flag("--linking", f_link, "linking matrix (pure braids)");
  braid->add_flag("--trivial", f_triv, "triviality in the braid group");
  braid->add_flag("--hb-trivial", f_hb, "triviality in the homotopy braid group");
  braid->add_flag("--humphries", f_hum, "torsion certificate");
  braid->add_option("--level", level, "nilpotent tower level image");

  // foldmap
  std::string arrangement_file, loop_file;
  bool f_pull = false, f_mono = false, f_wind = false, f_alt = false;
  CLI::App* foldmap = app.add_subcommand("foldmap", "analyze a fold-map model");
  foldmap->add_option("arrangement", arrangement_file, "arrangement JSON")
      ->required();
  foldmap->add_option("loop", loop_file, "crossing-word JSON")->required();
  foldmap->add_flag("--pullback", f_pull, "pullback components");
  foldmap->add_flag("--monodromy", f_mono, "monodromy permutation");
  foldmap->add_flag("--winding", f_wind, "winding invariant of the region word");
  foldmap->add_flag("--alternation", f_alt, "alternation certificate");

  // theta
  std::string theta_arg;
  CLI::App* theta = app.add_subcommand("theta", "canonicalize a double-coset sum");
  theta->add_option("input", theta_arg, "theta JSON, inline or a file")
      ->required();

  // verdict
  long long torsion = 0;
  std::string perm_arg;
  CLI::App* verdict = app.add_subcommand("verdict", "torsion obstruction verdict");
  verdict->add_option("--torsion", torsion, "verified finite order, >= 2")
      ->required();
  verdict->add_option("--permutation", perm_arg, "monodromy image, 1-based")
      ->required();

  CLI::App* selftest = app.add_subcommand("selftest", "built-in sanity battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (braid->parsed())
      return cmd_braid(braid_arg, strands, cap, level, f_perm, f_link, f_triv,
                       f_hb, f_hum);
    if (foldmap->parsed())
      return cmd_foldmap(arrangement_file, loop_file, cap, f_pull, f_mono,
                         f_wind, f_alt);
    if (theta->parsed()) return cmd_theta(theta_arg, cap);
    if (verdict->parsed()) return cmd_verdict(torsion, perm_arg, cap);
    if (selftest->parsed()) return cmd_selftest(cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
