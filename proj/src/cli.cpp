#include "hyparr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hyparr/error.hpp"
#include "hyparr/gen.hpp"
#include "hyparr/json_io.hpp"
#include "hyparr/mc.hpp"
#include "hyparr/verify.hpp"

namespace hyparr {

namespace {

using nlohmann::json;

json point_json(std::span<const Rational> v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

Chamber chamber_from_signs(const Arrangement& a, const std::string& text) {
  const SignVector s = SignVector::parse(text);
  if (s.size() != a.size()) throw ParseError("sign vector '" + text + "' has the wrong length");
  if (s.has_zero()) throw FaceNotOfChamber("sign vector '" + text + "' has a zero entry, chambers have none");
  auto w = feasible(a.dim(), cell_constraints(a, s, false));
  if (!w) throw FaceNotOfChamber("sign vector '" + text + "' is not a chamber of the arrangement");
  return Chamber{s, std::move(*w)};
}

Vector point_for(const Arrangement& a, const std::string& text) {
  Vector x = parse_point(text);
  if (x.size() != a.dim()) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(a.dim()));
  }
  return x;
}

struct Common {
  std::string input;
  bool as_json = false;
  std::size_t max_hyperplanes = 24;

  Limits limits() const { return Limits{max_hyperplanes}; }
  Arrangement load() const { return read_arrangement_file(input); }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_charpoly(const Common& c, std::optional<std::size_t> level, const std::string& method, std::ostream& out) {
  const Arrangement a = c.load();
  CharPoly chi;
  if (level) {
    chi = char_poly_level(a, *level);
  } else if (method == "moebius") {
    chi = char_poly_moebius(a);
  } else {
    chi = char_poly_whitney(a, c.limits());
  }
  const auto abs = chi.abs();
  if (c.as_json) {
    json j{{"coeffs", chi.coeffs}, {"a", abs}, {"polynomial", chi.str()}};
    if (level) j["level"] = *level;
    emit(out, j);
  } else {
    out << "chi: " << chi.str() << "\n";
    out << "coeffs: " << join(chi.coeffs) << "\n";
    out << "a: " << join(abs) << "\n";
  }
  return kExitOk;
}

int cmd_chambers(const Common& c, std::ostream& out) {
  const Arrangement a = c.load();
  const auto chambers = enumerate_chambers(a, c.limits());
  json arr = json::array();
  for (const auto& ch : chambers) {
    const auto kind = classify_chamber(a, ch);
    if (c.as_json) {
      arr.push_back({{"signs", ch.signs.str()},
                     {"witness", point_json(ch.witness)},
                     {"kind", to_string(kind)},
                     {"bounded", kind == ChamberKind::Bounded}});
    } else {
      out << ch.signs.str() << "  witness=" << format_point(ch.witness) << "  " << to_string(kind)
          << "  bounded=" << (kind == ChamberKind::Bounded ? "yes" : "no") << "\n";
    }
  }
  if (c.as_json) {
    emit(out, {{"count", chambers.size()}, {"chambers", arr}});
  } else {
    out << "count: " << chambers.size() << "\n";
  }
  return kExitOk;
}

int cmd_faces(const Common& c, const std::string& chamber, std::optional<std::size_t> level, std::ostream& out) {
  const Arrangement a = c.load();
  std::vector<Face> faces;
  if (level) {
    faces = enumerate_Rj(a, *level, c.limits());
  } else {
    if (chamber.empty()) throw ParseError("faces needs --chamber or --level");
    faces = faces_of_chamber(a, chamber_from_signs(a, chamber));
  }
  json arr = json::array();
  for (const auto& f : faces) {
    if (c.as_json) {
      arr.push_back({{"signs", f.signs.str()}, {"dim", f.dim}, {"witness", point_json(f.witness)}});
    } else {
      out << f.signs.str() << "  dim=" << f.dim << "  witness=" << format_point(f.witness) << "\n";
    }
  }
  std::vector<std::int64_t> counts(a.dim() + 1, 0);
  for (const auto& f : faces) ++counts[f.dim];
  if (c.as_json) {
    emit(out, {{"faces", arr}, {"counts_by_dim", counts}});
  } else {
    out << "counts_by_dim: " << join(counts) << "\n";
  }
  return kExitOk;
}

int cmd_project(const Common& c, const std::string& chamber, const std::string& point, std::ostream& out) {
  const Arrangement a = c.load();
  const Chamber ch = chamber_from_signs(a, chamber);
  const Vector x = point_for(a, point);
  const auto r = metric_project(a, ch, x);
  if (c.as_json) {
    emit(out, {{"point", point_json(r.point)}, {"face", r.face.signs.str()}, {"k", r.k}});
  } else {
    out << "point: " << format_point(r.point) << "\n";
    out << "face: " << r.face.signs.str() << "\n";
    out << "k: " << r.k << "\n";
  }
  return kExitOk;
}

int cmd_phi(const Common& c, const std::string& point, std::optional<std::size_t> level, std::ostream& out) {
  AnalysisOptions opts{c.limits(), level.has_value()};
  const Analysis an(c.load(), opts);
  const Vector x = point_for(an.arrangement(), point);
  if (level) {
    const auto counts = phi_level(an, *level, x);
    std::vector<bool> ex;
    for (std::size_t k = 0; k <= *level; ++k) ex.push_back(in_exceptional_level(an, k, *level, x).member);
    const auto a = an.level_a(*level);
    if (c.as_json) {
      emit(out, {{"level", *level}, {"phi", counts}, {"a", a}, {"exceptional", ex}});
    } else {
      out << "phi: " << join(counts) << "\n";
      out << "a: " << join(a) << "\n";
      out << "exceptional:";
      for (std::size_t k = 0; k < ex.size(); ++k) out << " k" << k << "=" << (ex[k] ? "yes" : "no");
      out << "\n";
    }
    return kExitOk;
  }
  const PhiProfile pr = phi(an, x);
  std::vector<bool> ex;
  for (std::size_t k = 0; k <= an.dim(); ++k) ex.push_back(in_exceptional(an, k, x).member);
  if (c.as_json) {
    json per = json::array();
    for (std::size_t i = 0; i < pr.per_chamber.size(); ++i) {
      per.push_back({{"chamber", an.chambers()[i].signs.str()}, {"k", pr.per_chamber[i]}});
    }
    emit(out, {{"phi", pr.counts},
               {"a", an.a()},
               {"histogram", pr.histogram},
               {"exceptional", ex},
               {"per_chamber", per}});
  } else {
    out << "phi: " << join(pr.counts) << "\n";
    out << "a: " << join(an.a()) << "\n";
    out << "histogram: " << join(pr.histogram) << "\n";
    out << "exceptional:";
    for (std::size_t k = 0; k < ex.size(); ++k) out << " k" << k << "=" << (ex[k] ? "yes" : "no");
    out << "\n";
    for (std::size_t i = 0; i < pr.per_chamber.size(); ++i) {
      out << "  " << an.chambers()[i].signs.str() << " k=" << pr.per_chamber[i] << "\n";
    }
  }
  return kExitOk;
}

std::vector<Report> verify_one(const Analysis& an, const std::vector<Vector>& points, bool all) {
  std::vector<Report> reports;
  reports.push_back(verify_zaslavsky(an));
  for (const auto& x : points) {
    reports.push_back(verify_theorem_main(an, x));
    if (!all) continue;
    for (std::size_t j = 0; j <= an.dim(); ++j) reports.push_back(verify_theorem_j_level(an, j, x));
    for (std::size_t i = 0; i < an.chambers().size(); ++i) {
      if (classify_chamber(an.arrangement(), an.chambers()[i]) == ChamberKind::HasLine) continue;
      reports.push_back(verify_mcmullen(an, i, x));
    }
    if (an.arrangement().is_linear()) reports.push_back(verify_prop_k0(an, x));
  }
  return reports;
}

int cmd_verify(const Common& c, const std::vector<std::string>& inputs, bool corpus, const std::vector<std::string>& pts,
               std::size_t n_points, std::uint64_t seed, bool all, std::ostream& out) {
  std::vector<std::pair<std::string, Arrangement>> work;
  for (const auto& path : inputs) work.emplace_back(path, read_arrangement_file(path));
  if (corpus) {
    for (auto& e : standard_corpus()) work.emplace_back(e.name, std::move(e.arrangement));
  }
  if (work.empty()) throw ParseError("verify needs -i FILE or --corpus");

  bool ok = true;
  json arr = json::array();
  for (auto& [name, a] : work) {
    const Analysis an(std::move(a), AnalysisOptions{c.limits(), all});
    std::vector<Vector> points;
    for (const auto& p : pts) points.push_back(point_for(an.arrangement(), p));
    if (pts.empty()) points = test_points(an, n_points, seed);
    const auto reports = verify_one(an, points, all);
    std::size_t checks = 0, failed = 0;
    json rj = json::array();
    for (const auto& r : reports) {
      checks += r.checks.size();
      if (!r.passed()) {
        ++failed;
        if (!c.as_json) out << r.to_text();
      }
      if (c.as_json) rj.push_back(r.to_json());
    }
    ok = ok && failed == 0;
    if (c.as_json) {
      arr.push_back({{"name", name}, {"passed", failed == 0}, {"reports", rj}});
    } else {
      out << (failed == 0 ? "PASS " : "FAIL ") << name << ": " << reports.size() << " reports, " << checks
          << " checks, " << failed << " failed reports\n";
    }
  }
  if (c.as_json) emit(out, {{"passed", ok}, {"arrangements", arr}});
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_gen(const std::string& kind, std::size_t dim, std::size_t count, std::uint64_t seed, bool linear,
            const std::string& output, std::ostream& out) {
  const Arrangement a = generate(GeneratorSpec{parse_kind(kind), dim, count, seed, linear});
  if (output.empty() || output == "-") {
    write_arrangement(out, a);
  } else {
    std::ofstream f(output);
    if (!f) throw ParseError("cannot open '" + output + "' for writing");
    write_arrangement(f, a);
  }
  return kExitOk;
}

int cmd_intrinsic(const Common& c, std::size_t samples, std::uint64_t seed, std::optional<std::size_t> level,
                  double z, const std::string& reference, std::ostream& out) {
  const Analysis an(c.load(), AnalysisOptions{c.limits(), level.has_value()});
  KlivansSwartzOptions opts{samples, seed, level, z, std::nullopt};
  const std::size_t j = level.value_or(an.dim());
  if (reference == "orthant") {
    if (level && *level != an.dim()) throw BadParams("orthant reference applies to chambers only");
    opts.per_cell_reference = orthant_intrinsic(an.dim());
  } else if (reference == "uniform") {
    const auto a = level ? an.level_a(j) : an.a();
    const double cells = static_cast<double>(level ? an.Rj(j).size() : an.chambers().size());
    std::vector<double> ref;
    for (auto v : a) ref.push_back(static_cast<double>(v) / cells);
    opts.per_cell_reference = ref;
  } else if (reference != "none") {
    throw BadParams("reference must be none, orthant or uniform");
  }
  const auto est = estimate_intrinsic_volumes(an, samples, seed, level);
  const Report r = verify_klivans_swartz(an, est, opts);
  if (c.as_json) {
    json cells = json::array();
    for (std::size_t i = 0; i < est.cells.size(); ++i) {
      json nu = json::array(), se = json::array();
      for (std::size_t k = 0; k <= j; ++k) {
        nu.push_back(est.nu(i, k));
        se.push_back(est.std_error(i, k));
      }
      cells.push_back({{"cell", est.cells[i].str()}, {"counts", est.counts[i]}, {"nu", nu}, {"std_error", se}});
    }
    emit(out, {{"samples", est.samples},
               {"seed", est.seed},
               {"level", j},
               {"aggregate", est.aggregate},
               {"resampled", est.resampled},
               {"cells", cells},
               {"report", r.to_json()}});
  } else {
    for (std::size_t i = 0; i < est.cells.size(); ++i) {
      out << est.cells[i].str() << "  nu=";
      for (std::size_t k = 0; k <= j; ++k) out << (k ? "," : "") << est.nu(i, k);
      out << "  se=";
      for (std::size_t k = 0; k <= j; ++k) out << (k ? "," : "") << est.std_error(i, k);
      out << "\n";
    }
    out << "aggregate: " << join(est.aggregate) << "\n";
    out << "resampled: " << est.resampled << "\n";
    out << r.to_text();
  }
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperplane arrangement toolkit", "hyparr"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("-i,--input", common.input, "arrangement JSON file");
    if (needs_input) opt->required();
    sub->add_flag("--json", common.as_json, "structured output");
    sub->add_option("--max-hyperplanes", common.max_hyperplanes, "refuse enumerations beyond this many hyperplanes");
  };

  std::optional<std::size_t> level;
  std::string method = "whitney", chamber, point, kind, output, reference = "none";
  std::vector<std::string> inputs, points;
  std::size_t n_points = 20, dim = 2, count = 0, samples = 10000;
  std::uint64_t seed = 1;
  bool all = false, corpus = false, linear = false;
  double z = 4.0;

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  add_common(charpoly, true);
  charpoly->add_option("--level", level, "j-th level polynomial");
  charpoly->add_option("--method", method, "whitney or moebius")->check(CLI::IsMember({"whitney", "moebius"}));

  auto* chambers = app.add_subcommand("chambers", "list chambers");
  add_common(chambers, true);

  auto* faces = app.add_subcommand("faces", "faces of a chamber, or all j-faces");
  add_common(faces, true);
  faces->add_option("--chamber", chamber, "chamber sign vector, e.g. +-");
  faces->add_option("--level", level, "list R_j instead");

  auto* project = app.add_subcommand("project", "metric projection onto a chamber");
  add_common(project, true);
  project->add_option("--chamber", chamber, "chamber sign vector")->required();
  project->add_option("--point", point, "comma-separated rationals")->required();

  auto* phicmd = app.add_subcommand("phi", "phi profile at a point");
  add_common(phicmd, true);
  phicmd->add_option("--point", point, "comma-separated rationals")->required();
  phicmd->add_option("--level", level, "level j sums");

  auto* verify = app.add_subcommand("verify", "machine-check the identities");
  verify->add_option("-i,--input", inputs, "arrangement JSON files");
  verify->add_flag("--json", common.as_json, "structured output");
  verify->add_option("--max-hyperplanes", common.max_hyperplanes, "size cap");
  verify->add_flag("--corpus", corpus, "also run the built-in corpus");
  verify->add_option("--point", points, "explicit points (repeatable)");
  verify->add_option("--points", n_points, "number of seeded points");
  verify->add_option("--seed", seed, "seed for the points");
  verify->add_flag("--all", all, "all checks, not just the main theorem and chamber counts");

  auto* gen = app.add_subcommand("gen", "generate an arrangement");
  gen->add_option("--kind", kind, "boolean|braid_A|type_B|type_D|dihedral|parallel_pair|triangle|random")->required();
  gen->add_option("--dim", dim, "ambient dimension");
  gen->add_option("--count", count, "lines (dihedral) or hyperplanes (random)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_flag("--linear", linear, "random: zero offsets");
  gen->add_option("-o,--output", output, "output file (default stdout)");

  auto* intrinsic = app.add_subcommand("intrinsic", "Monte Carlo intrinsic volumes");
  add_common(intrinsic, true);
  intrinsic->add_option("--samples", samples, "sample count");
  intrinsic->add_option("--seed", seed, "seed");
  intrinsic->add_option("--level", level, "use R_j faces");
  intrinsic->add_option("--z", z, "band width in standard errors");
  intrinsic->add_option("--reference", reference, "none|orthant|uniform");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*charpoly) return cmd_charpoly(common, level, method, out);
    if (*chambers) return cmd_chambers(common, out);
    if (*faces) return cmd_faces(common, chamber, level, out);
    if (*project) return cmd_project(common, chamber, point, out);
    if (*phicmd) return cmd_phi(common, point, level, out);
    if (*verify) return cmd_verify(common, inputs, corpus, points, n_points, seed, all, out);
    if (*gen) return cmd_gen(kind, dim, count, seed, linear, output, out);
    if (*intrinsic) return cmd_intrinsic(common, samples, seed, level, z, reference, out);
  } catch (const SizeLimit& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const StatisticalFailure& e) {
    err << "statistical check failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Inconsistent& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace hyparr
