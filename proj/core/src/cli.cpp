#include "hyptube/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyptube/bounds.hpp"
#include "hyptube/format.hpp"
#include "json.hpp"

namespace hyptube {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOracleResolution = 256;

Json number(double x) { return std::isfinite(x) ? Json(round_significant(x)) : Json(nullptr); }

Json number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string show_word(const GroupPresentation& group, const Word& w) {
  const std::string s = group.format_word(w);
  return s.empty() ? "1" : s;
}

std::string show_length(const ComplexDistance& c) {
  return format_number(c.d) + " + " + format_number(c.theta) + "i";
}

Json length_json(const ComplexDistance& c) {
  return Json{{"d", number(c.d)}, {"theta", number(c.theta)}};
}

Json header(std::string_view command) {
  return Json{{"schema", kReportSchema}, {"schema_version", kReportSchemaVersion},
              {"command", command}};
}

const std::string& geodesic_name(const GroupFile& file, const RunConfig& config) {
  if (config.geodesic) {
    for (const NamedGeodesic& g : file.geodesics) {
      if (g.name == *config.geodesic) return g.name;
    }
    throw Error(ErrorKind::InvalidArgument, "no geodesic named " + *config.geodesic);
  }
  if (file.geodesics.empty()) throw Error(ErrorKind::InvalidArgument, "the file names no geodesic");
  return file.geodesics.front().name;
}

void check_config(const RunConfig& c) {
  if (c.max_word_length < 0) throw Error(ErrorKind::InvalidArgument, "--max-word-length must be ≥ 0");
  if (!(c.cutoff > 0.0)) throw Error(ErrorKind::InvalidArgument, "--cutoff must be positive");
  if (!(c.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be positive");
  if (c.budget == 0) throw Error(ErrorKind::InvalidArgument, "--budget must be positive");
}

std::string tube_line(const GroupPresentation& group, const TubeRadius& r) {
  if (r.unbounded()) return "unbounded (horizon " + std::to_string(r.horizon) + ")";
  return format_number(*r.radius) + " (horizon " + std::to_string(r.horizon) + ", witness " +
         show_word(group, r.witness->word) + ")";
}

int tube_exit(TubeVerdict v) {
  switch (v) {
    case TubeVerdict::Holds: return exit_code::kAffirmative;
    case TubeVerdict::Fails: return exit_code::kNegative;
    case TubeVerdict::Inconclusive: break;
  }
  return exit_code::kInconclusive;
}

int verdict_exit(VerdictKind v) {
  switch (v) {
    case VerdictKind::Noncoalesceable: return exit_code::kAffirmative;
    case VerdictKind::Coalescing: return exit_code::kNegative;
    case VerdictKind::Inconclusive: break;
  }
  return exit_code::kInconclusive;
}

struct Output {
  std::ostringstream text;
  Json json;
};

RunResult finish(Output& out, const RunConfig& config, int code) {
  if (config.format == OutputFormat::Json) return {out.json.dump(2) + "\n", code};
  return {out.text.str(), code};
}

// ---------------------------------------------------------------------------

RunResult cmd_info(const GroupFile& file, const RunConfig& config) {
  Output out{{}, header("info")};
  const GroupPresentation& group = file.presentation;

  auto describe = [&](const Isometry& g, Json& j) {
    const IsometryKind kind = classify(g, config.tol);
    j["kind"] = to_string(kind);
    std::string line = to_string(kind);
    if (kind == IsometryKind::Loxodromic) {
      const ComplexDistance len = complex_length(g, config.tol);
      j["complex_length"] = length_json(len);
      line += ", complex length " + show_length(len);
    } else {
      const Complex tr = g.trace();
      j["trace"] = Json{{"re", number(tr.real())}, {"im", number(tr.imag())}};
      line += ", trace " + format_number(tr.real()) + " + " + format_number(tr.imag()) + "i";
    }
    return line;
  };

  out.json["name"] = file.name ? Json(*file.name) : Json(nullptr);
  if (file.name) out.text << "group: " << *file.name << '\n';

  Json gens = Json::array();
  for (const Generator& g : group.generators()) {
    Json j{{"name", std::string(1, g.name)}};
    out.text << "generator " << g.name << ": " << describe(g.matrix, j) << '\n';
    gens.push_back(std::move(j));
  }
  out.json["generators"] = std::move(gens);

  Json geos = Json::array();
  for (std::size_t i = 0; i < file.geodesics.size(); ++i) {
    Json j{{"name", file.geodesics[i].name}, {"word", show_word(group, file.words[i])}};
    out.text << "geodesic " << file.geodesics[i].name << " = " << show_word(group, file.words[i])
             << ": " << describe(group.element(file.words[i]), j) << '\n';
    geos.push_back(std::move(j));
  }
  out.json["geodesics"] = std::move(geos);
  return finish(out, config, exit_code::kAffirmative);
}

RunResult cmd_spectrum(const GroupFile& file, const RunConfig& config) {
  Output out{{}, header("spectrum")};
  const std::string& name = geodesic_name(file, config);
  const GroupPresentation& group = file.presentation;
  const LiftSet lifts =
      lifts_of_geodesic(group, file.geodesic(name), config.max_word_length, config.tol);
  const OrthoSpectrum spectrum = ortho_spectrum(lifts, config.cutoff, kAllDepths, config.tol);

  out.text << "geodesic: " << name << '\n';
  out.text << "horizon: " << lifts.horizon << '\n';
  out.text << "cutoff: " << format_number(config.cutoff) << '\n';
  out.text << "lifts: " << lifts.lifts.size() << '\n';
  out.json["geodesic"] = name;
  out.json["horizon"] = lifts.horizon;
  out.json["cutoff"] = number(config.cutoff);
  out.json["lift_count"] = lifts.lifts.size();

  out.text << "spectrum (" << spectrum.entries.size() << "):\n";
  Json entries = Json::array();
  for (const OrthoEntry& e : spectrum.entries) {
    out.text << "  " << format_number(e.distance.d) << "  " << format_number(e.distance.theta)
             << "  " << show_word(group, e.word) << '\n';
    entries.push_back(Json{{"d", number(e.distance.d)},
                           {"theta", number(e.distance.theta)},
                           {"word", show_word(group, e.word)}});
  }
  out.json["spectrum"] = std::move(entries);

  out.text << "degenerate lifts (" << spectrum.issues.size() << "):\n";
  Json issues = Json::array();
  for (const LiftIssue& issue : spectrum.issues) {
    const std::string w = show_word(group, lifts.lifts[issue.index].word);
    out.text << "  " << w << "  " << to_string(issue.kind) << '\n';
    issues.push_back(Json{{"word", w}, {"kind", to_string(issue.kind)}});
  }
  out.json["degenerate_lifts"] = std::move(issues);
  return finish(out, config, exit_code::kAffirmative);
}

RunResult cmd_tube(const GroupFile& file, const RunConfig& config) {
  Output out{{}, header("tube")};
  const std::string& name = geodesic_name(file, config);
  const GroupPresentation& group = file.presentation;
  const LiftSet lifts =
      lifts_of_geodesic(group, file.geodesic(name), config.max_word_length, config.tol);
  const TubeCheck check = check_log3_tube(lifts, config.cutoff, config.tol);

  out.text << "geodesic: " << name << '\n';
  out.text << "tube radius: " << tube_line(group, check.radius) << '\n';
  out.text << "log3/2 tube: " << to_string(check.verdict) << '\n';
  out.text << "spectrum stable: " << yes_no(check.stable) << '\n';
  out.text << "degenerate lifts: " << yes_no(check.degenerate_lifts) << '\n';

  out.json["geodesic"] = name;
  out.json["tube_radius"] = number(check.radius.radius);
  out.json["horizon"] = check.radius.horizon;
  out.json["tube_witness"] =
      check.radius.witness ? Json(show_word(group, check.radius.witness->word)) : Json(nullptr);
  out.json["tube_verdict"] = to_string(check.verdict);
  out.json["spectrum_stable"] = check.stable;
  out.json["degenerate_lifts"] = check.degenerate_lifts;
  return finish(out, config, tube_exit(check.verdict));
}

RunResult cmd_insulator(const GroupFile& file, const RunConfig& config) {
  Output out{{}, header("insulator")};
  const std::string& name = geodesic_name(file, config);
  const GroupPresentation& group = file.presentation;
  const LiftSet lifts =
      lifts_of_geodesic(group, file.geodesic(name), config.max_word_length, config.tol);
  const InsulatorFamily family = build_family(lifts, config.cutoff, config.tol);
  const Verdict verdict = noncoalesceable(family, config.budget, {true, config.tol, kTangencyTol});

  out.text << "geodesic: " << name << '\n';
  out.text << "horizon: " << lifts.horizon << '\n';
  out.json["geodesic"] = name;
  out.json["horizon"] = lifts.horizon;

  out.text << "family (" << family.members.size() << "):\n";
  Json members = Json::array();
  for (const InsulatorMember& m : family.members) {
    out.text << "  " << format_number(m.ortho.d) << "  " << show_word(group, m.word) << '\n';
    members.push_back(Json{{"d", number(m.ortho.d)}, {"word", show_word(group, m.word)}});
  }
  out.json["family"] = std::move(members);
  out.text << "lifts without midplane: " << family.issues.size() << '\n';
  out.json["family_issues"] = family.issues.size();

  out.text << "insulator: " << to_string(verdict.kind) << " (" << to_string(verdict.basis) << ")\n";
  out.text << "triples tested: " << verdict.triples_tested << '\n';
  out.text << "near tangencies: " << verdict.near_tangencies << '\n';
  out.text << "degenerate tests: " << verdict.degenerate_tests << '\n';
  out.json["verdict"] = to_string(verdict.kind);
  out.json["basis"] = to_string(verdict.basis);
  out.json["triples_tested"] = verdict.triples_tested;
  out.json["near_tangencies"] = verdict.near_tangencies;
  out.json["degenerate_tests"] = verdict.degenerate_tests;

  if (verdict.kind == VerdictKind::Coalescing) {
    std::vector<CircleOnSphere> circles;
    Json words = Json::array();
    out.text << "coalescing triple:";
    for (std::size_t m : verdict.triple) {
      circles.push_back(family.members[m].circle);
      words.push_back(show_word(group, family.members[m].word));
      out.text << ' ' << show_word(group, family.members[m].word);
    }
    out.text << '\n';
    out.json["coalescing_triple"] = std::move(words);

    std::string oracle;
    try {
      const bool connected =
          flood_fill_oracle(circles, family.p_plus, family.p_minus, kOracleResolution, config.seed);
      oracle = connected ? "disagrees" : "agrees";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GuardBandSwallowedPoint) throw;
      oracle = "unresolved";
    }
    out.text << "raster cross-check: " << oracle << '\n';
    out.json["raster_cross_check"] = oracle;
  }
  return finish(out, config, verdict_exit(verdict.kind));
}

RunResult cmd_check(const GroupFile& file, const RunConfig& config) {
  Output out{{}, header("check")};
  const std::string& name = geodesic_name(file, config);
  const GroupPresentation& group = file.presentation;
  const ReportParams params{config.max_word_length, config.cutoff, config.budget, config.tol};
  const HypothesisReport r = hypothesis_report(group, file.geodesic(name), params);
  std::ostringstream& t = out.text;
  Json& j = out.json;

  t << "geodesic: " << name << " = " << r.geodesic_word << '\n';
  t << "complex length: " << show_length(r.core_length) << '\n';
  t << "horizon: " << r.params.max_word_length << '\n';
  t << "cutoff: " << format_number(r.params.cutoff) << '\n';
  t << "lifts: " << r.lift_count << '\n';
  t << "stabilizer elements: " << r.stabilizer_count << '\n';
  t << "relations found: " << r.relation_count << '\n';
  t << "conditioning warning: " << yes_no(r.conditioning_warning) << '\n';
  t << "frontier displacement: "
    << (r.frontier_displacement ? format_number(*r.frontier_displacement) : "none") << '\n';
  j["geodesic"] = name;
  j["word"] = r.geodesic_word;
  j["complex_length"] = length_json(r.core_length);
  j["horizon"] = r.params.max_word_length;
  j["cutoff"] = number(r.params.cutoff);
  j["lift_count"] = r.lift_count;
  j["stabilizer_count"] = r.stabilizer_count;
  j["relation_count"] = r.relation_count;
  j["conditioning_warning"] = r.conditioning_warning;
  j["frontier_displacement"] = number(r.frontier_displacement);

  t << "tube radius: " << tube_line(group, r.tube.radius) << '\n';
  t << "log3/2 tube: " << to_string(r.tube.verdict) << '\n';
  t << "spectrum stable: " << yes_no(r.tube.stable) << '\n';
  t << "degenerate lifts: " << yes_no(r.tube.degenerate_lifts) << '\n';
  j["tube_radius"] = number(r.tube.radius.radius);
  j["tube_witness"] = r.tube_witness_word.empty() && r.tube.radius.unbounded()
                          ? Json(nullptr)
                          : Json(r.tube_witness_word.empty() ? "1" : r.tube_witness_word);
  j["tube_verdict"] = to_string(r.tube.verdict);
  j["spectrum_stable"] = r.tube.stable;
  j["degenerate_lifts"] = r.tube.degenerate_lifts;

  t << "long geodesic guarantee (length > " << format_number(thresholds::kLongLength)
    << "): " << yes_no(r.long_guarantee) << '\n';
  t << "short geodesic guarantee, meyerhoff (length < "
    << format_number(thresholds::kMeyerhoffLength) << "): " << yes_no(r.meyerhoff_guarantee) << '\n';
  t << "short geodesic guarantee, gehring-martin (length < "
    << format_number(thresholds::kGehringMartinLength)
    << "): " << yes_no(r.gehring_martin_guarantee) << '\n';
  j["long_guarantee"] = r.long_guarantee;
  j["meyerhoff_guarantee"] = r.meyerhoff_guarantee;
  j["gehring_martin_guarantee"] = r.gehring_martin_guarantee;

  t << "insulator family: " << r.family_size << " members, " << r.family_issues
    << " lifts without midplane\n";
  t << "insulator: " << to_string(r.insulator.kind) << " (" << to_string(r.insulator.basis)
    << ", " << r.insulator.triples_tested << " triples tested, " << r.insulator.near_tangencies
    << " near tangencies, " << r.insulator.degenerate_tests << " degenerate tests)\n";
  j["family_size"] = r.family_size;
  j["family_issues"] = r.family_issues;
  j["insulator_verdict"] = to_string(r.insulator.kind);
  j["insulator_basis"] = to_string(r.insulator.basis);
  j["triples_tested"] = r.insulator.triples_tested;
  j["near_tangencies"] = r.insulator.near_tangencies;
  j["degenerate_tests"] = r.insulator.degenerate_tests;
  if (!r.coalescing_words.empty()) {
    t << "coalescing triple:";
    for (const std::string& w : r.coalescing_words) t << ' ' << (w.empty() ? "1" : w);
    t << '\n';
  }
  j["coalescing_triple"] = r.coalescing_words.empty() ? Json(nullptr) : Json(r.coalescing_words);

  t << "conclusion: " << to_string(r.conclusion) << '\n';
  t << "assumptions:\n";
  for (const std::string& a : r.assumptions) t << "  - " << a << '\n';
  j["conclusion"] = to_string(r.conclusion);
  j["assumptions"] = r.assumptions;

  int code = exit_code::kInconclusive;
  if (r.conclusion == Conclusion::HypothesisHolds) {
    code = exit_code::kAffirmative;
  } else if (r.tube.verdict == TubeVerdict::Fails && r.insulator.kind == VerdictKind::Coalescing) {
    code = exit_code::kNegative;
  }
  return finish(out, config, code);
}

RunResult cmd_lemma120(const RunConfig& config) {
  if (!(config.step > 0.0) || !(config.from > 0.0) || config.to < config.from) {
    throw Error(ErrorKind::InvalidArgument, "lemma120 needs 0 < from ≤ to and step > 0");
  }
  Output out{{}, header("lemma120")};
  std::vector<double> ds;
  const auto count = static_cast<long>(std::floor((config.to - config.from) / config.step + 1e-9));
  for (long i = 0; i <= count; ++i) ds.push_back(config.from + static_cast<double>(i) * config.step);
  const double special = thresholds::kLog3Half;
  const auto pos = std::lower_bound(ds.begin(), ds.end(), special);
  if (pos == ds.end() || *pos != special) ds.insert(pos, special);

  out.text << "distance  visual angle (degrees)\n";
  Json rows = Json::array();
  for (double d : ds) {
    const double deg = visual_angle(d) * 180.0 / std::numbers::pi;
    out.text << format_number(d) << "  " << format_number(deg) << '\n';
    rows.push_back(Json{{"d", number(d)}, {"angle_degrees", number(deg)}});
  }
  out.json["log3_half"] = number(special);
  out.json["rows"] = std::move(rows);
  out.text << "log3/2 = " << format_number(special) << '\n';
  return finish(out, config, exit_code::kAffirmative);
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::SyntaxError:
    case ErrorKind::BadDeterminant:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::DuplicateName:
    case ErrorKind::NotLoxodromic:
      return exit_code::kInputError;
    default:
      return exit_code::kFailure;
  }
}

RunResult run(std::string_view command, const std::optional<GroupFile>& file,
              const RunConfig& config) {
  try {
    check_config(config);
    if (command == "lemma120") return cmd_lemma120(config);
    if (command != "info" && command != "spectrum" && command != "tube" &&
        command != "insulator" && command != "check") {
      throw Error(ErrorKind::InvalidArgument, "unknown command " + std::string(command));
    }
    if (!file) throw Error(ErrorKind::InvalidArgument, std::string(command) + " needs a group file");
    if (command == "info") return cmd_info(*file, config);
    if (command == "spectrum") return cmd_spectrum(*file, config);
    if (command == "tube") return cmd_tube(*file, config);
    if (command == "insulator") return cmd_insulator(*file, config);
    return cmd_check(*file, config);
  } catch (const Error& e) {
    return {std::string("error: ") + e.what() + "\n", exit_code_for(e.kind())};
  }
}

}  // namespace hyptube
