#include "sym2chab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sym2chab/chabauty.hpp"
#include "sym2chab/curves.hpp"
#include "sym2chab/density.hpp"
#include "sym2chab/montecarlo.hpp"
#include "sym2chab/series.hpp"

namespace sym2chab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  int genus = 0;
  bool genus_set = false;
  std::int64_t precision = kDefaultPrecision;
  int truncation = 0;  // 0: default for the genus
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string model = "long";
  std::string curve;
  std::string selmer;
  std::uint64_t trials = 100000;
  std::string image;
  std::string rank_model = "poonen-rains";
  unsigned threads = 0;
  bool allow_unseeded = false;
  std::string file;
};

// Bad flags or unreadable input, reported with exit code 2.
struct InputError : Error {
  using Error::Error;
};

int effective_truncation(const Options& o) { return o.truncation ? o.truncation : default_truncation(o.genus); }

int require_genus(const Options& o) {
  if (!o.genus_set) throw InputError("--genus is required for " + o.command);
  if (o.genus < 2) throw InputError("--genus: must be at least 2, got " + std::to_string(o.genus));
  return o.genus;
}

ModelKind model_kind(const Options& o) { return o.model == "short" ? ModelKind::ShortW : ModelKind::LongW; }

// Short models are read as members of the scaled family f = 4^{2g+1} h(x/4) + 4^{2g}.
std::optional<CurveModel> long_model_of(const CurveModel& c) {
  if (c.kind() == ModelKind::LongW) return c;
  return unscale_from_family(c);
}

CurveModel read_curve(const Options& o, bool long_only) {
  const int g = require_genus(o);
  if (o.curve.empty()) throw InputError("--curve is required for " + o.command);
  std::optional<CurveModel> c;
  try {
    const auto coeffs = parse_coefficient_list(o.curve);
    c = CurveModel(g, model_kind(o), std::vector<DyadicRational>(coeffs.begin(), coeffs.end()));
  } catch (const Error& e) {
    throw InputError(std::string("--curve: ") + e.what());
  }
  if (!long_only) return *c;
  auto h = long_model_of(*c);
  if (!h) throw InputError("--curve: f is not 4^{2g+1} h(x/4) + 4^{2g} for an integral h");
  return *h;
}

Json config_json(const Options& o) {
  Json c;
  c["genus"] = o.genus_set ? Json(o.genus) : Json(nullptr);
  c["precision"] = o.precision;
  c["truncation"] = o.genus_set && o.genus >= 2 ? Json(effective_truncation(o)) : Json(o.truncation);
  c["seed"] = o.seed ? Json(*o.seed) : Json(nullptr);
  c["format"] = o.format;
  c["model"] = o.model;
  if (o.command == "criterion" || o.command == "scan") c["selmer"] = o.selmer;
  if (o.command == "scan") c["file"] = o.file;
  if (o.command == "simulate") {
    c["trials"] = o.trials;
    c["image"] = o.image;
    c["rank_model"] = o.rank_model;
    c["threads"] = o.threads;
    c["allow_unseeded"] = o.allow_unseeded;
  }
  if (o.command != "density" && o.command != "simulate" && o.command != "scan") c["curve"] = o.curve;
  return c;
}

template <class T>
Json strings_of(const std::vector<T>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(x.to_string());
  return arr;
}

Json points_json(const std::vector<ProjPtF2>& pts) { return strings_of(pts); }

// ---------------------------------------------------------------------------
// Commands. Each fills `result` and returns the exit code.

int cmd_check_good(const Options& o, Json& result) {
  const auto h = read_curve(o, true);
  const auto r = is_good(h);
  result["curve"] = h.polynomial_string();
  result["exponents"] = r.exponents;
  result["s0"] = r.s0;
  result["s1"] = r.s1;
  result["s2"] = r.s2;
  result["contains_0_and_top"] = r.contains_0_and_top;
  result["s0_even"] = r.s0_even;
  result["s12_odd"] = r.s12_odd;
  result["good"] = r.good;
  return r.good ? kSuccess : kMathFailure;
}

int cmd_points(const Options& o, Json& result) {
  const auto h = read_curve(o, true);
  const auto f2 = enumerate_points(h, FiniteField::F2);
  const auto f4 = enumerate_points(h, FiniteField::F4);
  bool above = true;
  for (const auto& p : f4)
    if (!p.at_infinity && !in_f2(p.x)) above = false;
  const auto classes = enumerate_sym2_classes(h);
  result["curve"] = h.polynomial_string();
  result["good"] = is_good(h).good;
  result["points_f2"] = strings_of(f2);
  result["count_f2"] = f2.size();
  result["points_f4"] = strings_of(f4);
  result["count_f4"] = f4.size();
  result["only_above_0_1_inf"] = above;
  result["sym2_classes"] = strings_of(classes);
  result["torsion_ok"] = torsion_condition_holds(classes);
  return kSuccess;
}

int cmd_polygon(const Options& o, Json& result) {
  const auto input = read_curve(o, false);
  const auto f = input.kind() == ModelKind::LongW ? complete_square(input) : input;
  const auto np = newton_polygon(f);
  result["polynomial"] = f.polynomial_string();
  result["from_long_model"] = input.kind() == ModelKind::LongW;
  Json vertices = Json::array();
  for (const auto& [i, v] : np.vertices) vertices.push_back("(" + std::to_string(i) + "," + std::to_string(v) + ")");
  result["vertices"] = vertices;
  Json slopes = Json::array();
  for (const auto& s : np.slopes) slopes.push_back(std::to_string(s.num) + "/" + std::to_string(s.den));
  result["slopes"] = slopes;
  result["irreducible_by_polygon"] = np.irreducible_by_polygon;
  return kSuccess;
}

int cmd_expand(const Options& o, Json& result) {
  const auto h = read_curve(o, true);
  const int T = effective_truncation(o);
  result["curve"] = h.polynomial_string();
  result["s_of_t"] = expand_s_of_t(h, T, o.precision).dump();
  Json omega;
  const auto basis = omega_basis_at_infinity(h, T, o.precision);
  for (std::size_t j = 0; j < basis.size(); ++j) omega[std::to_string(j + 1)] = basis[j].dump();
  result["omega"] = omega;
  const auto change = basis_change_matrix(h, std::max(T, 2 * h.genus() + 2), o.precision);
  Json entries = Json::array();
  for (const auto& row : change.entries) {
    Json r = Json::array();
    for (const auto& a : row) r.push_back(a.dump());
    entries.push_back(r);
  }
  result["basis_change"] = entries;
  result["basis_change_mod2"] = change.mod2.row_strings();
  result["det_odd"] = change.det_odd;
  return kSuccess;
}

Json certificate_json(const DiskCertificate& c) {
  Json d;
  d["disk"] = to_string(c.disk);
  d["floor"] = c.floor.to_string();
  d["truncation"] = c.truncation;
  Json surv = Json::array();
  for (const auto& [j, i] : c.survivors) surv.push_back("(" + std::to_string(j) + "," + std::to_string(i) + ")");
  d["survivors"] = surv;
  d["tail"] = {{"threshold", c.tail.threshold},
               {"floor", c.tail.floor.to_string()},
               {"gap_ok", c.tail.gap_ok},
               {"monotone_ok", c.tail.monotone_ok}};
  d["image"] = points_json(c.image);
  Json wit = Json::array();
  for (const auto& w : c.witnesses) wit.push_back(w.description + " -> " + projectivize(w.point).to_string());
  d["witnesses"] = wit;
  const auto re = recheck(c);
  d["recheck"] = re.accepted ? "accepted" : "rejected: " + re.reason;
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    terms.push_back("j=" + std::to_string(t.component) + " i=" + std::to_string(t.index) + " v(c)" +
                    (t.coeff_exact ? "=" : ">=") + std::to_string(t.coeff_valuation) +
                    " v(i+1)=" + std::to_string(t.denominator_valuation) + " net=" + t.net.to_string() +
                    (t.survivor ? " survivor" : ""));
  }
  d["terms"] = terms;
  return d;
}

int cmd_certify(const Options& o, Json& result) {
  const auto h = read_curve(o, true);
  result["curve"] = h.polynomial_string();
  const auto img = assemble_rholog(h, effective_truncation(o), o.precision);
  result["disks"] = Json::array(
      {certificate_json(img.infinity), certificate_json(img.zero_pair), certificate_json(img.one_pair)});
  result["basis_change_mod2"] = img.basis_change_mod2.row_strings();
  result["pascal_mod2"] = pascal_mod2(h.genus()).row_strings();
  result["points"] = points_json(img.points);
  result["cardinality"] = img.cardinality();
  const bool all_accepted =
      recheck(img.infinity).accepted && recheck(img.zero_pair).accepted && recheck(img.one_pair).accepted;
  result["certified"] = all_accepted;
  return all_accepted ? kSuccess : kMathFailure;
}

SelmerInput read_selmer(const Options& o) {
  if (o.selmer.empty()) throw InputError("--selmer is required for " + o.command);
  try {
    return load_selmer_file(o.selmer);
  } catch (const Error& e) {
    throw InputError("--selmer: " + std::string(e.what()));
  }
}

int cmd_criterion(const Options& o, Json& result) {
  const auto h = read_curve(o, true);
  const auto sel = read_selmer(o);
  if (sel.genus != h.genus())
    throw InputError("--selmer: genus " + std::to_string(sel.genus) + " does not match --genus " +
                     std::to_string(h.genus()));
  const auto img = assemble_rholog(h, effective_truncation(o), o.precision);
  const bool torsion = torsion_condition_holds(sym2_classes(h));
  const auto v = criterion(img, sel, torsion);
  result["curve"] = h.polynomial_string();
  result["points"] = points_json(img.points);
  result["cardinality"] = img.cardinality();
  result["selmer_rank"] = sel.rank();
  result["selmer_rows"] = sel.rows.row_strings();
  result["sigma_injective"] = v.sigma_injective;
  result["disjoint"] = v.disjoint;
  result["torsion_ok"] = v.torsion_ok;
  result["overall"] = v.overall;
  result["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  return v.overall ? kSuccess : kMathFailure;
}

std::string comparison_word(int c) { return c == 0 ? "equality" : (c > 0 ? "greater" : "less"); }

int cmd_density(const Options& o, Json& result) {
  const int g = require_genus(o);
  const auto frac = goodness_fraction(g);
  const auto fam = family_density(g);
  const auto delta = delta_lower_bound(g);
  const std::int64_t det = scaling_determinant_exponent(g);
  result["goodness_fraction"] = frac.to_string();
  result["goodness_fraction_exp"] = frac.to_exponent_string();
  result["scaling_determinant"] = "4^" + std::to_string(det);
  result["scaling_exponent_matches_2g2_3g_1"] = det == 2LL * g * g + 3LL * g + 1;
  result["family_density"] = fam.to_string();
  result["family_density_exp"] = fam.to_exponent_string();
  result["delta_lower_bound"] = delta.value.to_string();
  result["delta_lower_bound_exp"] = delta.value.to_exponent_string();
  result["reference"] = delta.reference.to_exponent_string();
  result["comparison_with_reference"] = comparison_word(delta.comparison);
  result["vacuous"] = delta.vacuous;
  return kSuccess;
}

RankModel parse_rank_model(const std::string& text) {
  if (text == "poonen-rains") return RankModel::poonen_rains();
  if (text.rfind("fixed:", 0) == 0) {
    try {
      std::size_t used = 0;
      const int r = std::stoi(text.substr(6), &used);
      if (used == text.size() - 6 && r >= 0) return RankModel::fixed(r);
    } catch (const std::exception&) {
    }
  }
  throw InputError("--rank-model: expected 'poonen-rains' or 'fixed:R', got '" + text + "'");
}

std::vector<ProjPtF2> read_image_file(const std::string& path, int g) {
  std::ifstream in(path);
  if (!in) throw InputError("--image: cannot open '" + path + "'");
  std::vector<ProjPtF2> pts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string bits;
    if (!(fields >> bits)) continue;
    try {
      const auto v = F2Vec::parse(bits);
      if (v.size() != static_cast<std::size_t>(g))
        throw ParseError("point has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(g));
      pts.push_back(projectivize(v));
    } catch (const Error& e) {
      throw InputError("--image: line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// The first good pattern in mask order; its image stands in when no --image file is given.
CurveModel default_good_curve(int g) {
  for (std::uint64_t mask = 0;; ++mask)
    if (is_good_pattern(g, mask)) return pattern_curve(g, mask);
}

int cmd_simulate(const Options& o, Json& result) {
  const int g = require_genus(o);
  if (!o.seed && !o.allow_unseeded) throw InputError("--seed is required (or pass --allow-unseeded)");
  SimConfig cfg;
  cfg.genus = g;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.rank_model = parse_rank_model(o.rank_model);
  cfg.threads = o.threads;
  cfg.strict = !o.allow_unseeded;
  std::vector<ProjPtF2> image;
  std::string source;
  if (!o.image.empty()) {
    image = read_image_file(o.image, g);
    source = o.image;
  } else {
    const auto h = default_good_curve(g);
    image = assemble_rholog(h, effective_truncation(o), o.precision).points;
    source = "h = " + h.polynomial_string();
  }
  const auto rep = run_trials(cfg, image);
  const double floor = rep.floor.to_double();
  const bool meets = rep.proportion >= floor - 3.0 * rep.sigma;
  result["label"] = rep.label;
  result["rank_model"] = rep.rank_model;
  result["mean_nonzero_selmer_elements"] = cfg.rank_model.mean_nonzero_elements();
  result["image_source"] = source;
  result["image"] = points_json(image);
  result["image_cardinality"] = rep.image_cardinality;
  result["preimage_size"] = rep.preimage_size;
  result["trials"] = rep.trials;
  result["seed"] = rep.seed;
  result["passes"] = rep.passes;
  result["proportion"] = rep.proportion;
  result["sigma"] = rep.sigma;
  result["half_width_95"] = rep.half_width;
  result["floor"] = rep.floor.to_string();
  result["floor_value"] = floor;
  result["meets_floor_within_3_sigma"] = meets;
  return meets ? kSuccess : kMathFailure;
}

struct ScanRow {
  int line = 0;
  std::optional<CurveModel> curve;
  std::string parse_error;
  Json row;
  int code = kSuccess;
};

void analyse_row(ScanRow& r, const Options& o, const std::optional<SelmerInput>& sel) {
  Json row;
  row["line"] = r.line;
  row["genus"] = r.curve->genus();
  row["curve"] = r.curve->polynomial_string();
  const auto long_model = long_model_of(*r.curve);
  const bool integral = long_model && long_model->is_integral();
  const bool good = integral && is_good(*long_model).good;
  row["good"] = good;
  if (integral) {
    row["points_f2"] = enumerate_points(*long_model, FiniteField::F2).size();
    row["points_f4"] = enumerate_points(*long_model, FiniteField::F4).size();
  } else {
    row["points_f2"] = nullptr;
    row["points_f4"] = nullptr;
  }
  row["cardinality"] = nullptr;
  if (!long_model) {
    row["verdict"] = "outside the scaled family";
  } else if (!good) {
    row["verdict"] = "not good";
  } else {
    try {
      const CurveModel& h = *long_model;
      const int T = o.truncation ? o.truncation : default_truncation(h.genus());
      const auto img = assemble_rholog(h, T, o.precision);
      row["cardinality"] = img.cardinality();
      if (sel && sel->genus == h.genus()) {
        const auto v = criterion(img, *sel, torsion_condition_holds(sym2_classes(h)));
        row["verdict"] = v.overall ? "pass" : "fail";
        if (!v.overall) r.code = kMathFailure;
      } else {
        row["verdict"] = "certified";
      }
    } catch (const Error& e) {
      row["verdict"] = std::string("certificate failed: ") + e.what();
      r.code = kMathFailure;
    }
  }
  r.row = std::move(row);
}

int cmd_scan(const Options& o, Json& result) {
  if (o.file.empty()) throw InputError("scan needs a curve file");
  std::ifstream in(o.file);
  if (!in) throw InputError("cannot open curve file '" + o.file + "'");
  std::optional<SelmerInput> sel;
  if (!o.selmer.empty()) sel = read_selmer(o);

  std::vector<ScanRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    ScanRow r;
    r.line = line_no;
    try {
      r.curve = parse_curve_line(line, model_kind(o));
    } catch (const Error& e) {
      r.parse_error = e.what();
    }
    rows.push_back(std::move(r));
  }

  const unsigned workers = std::max(1U, o.threads ? o.threads : std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < rows.size(); k += workers)
        if (rows[k].curve) analyse_row(rows[k], o, sel);
    });
  }
  for (auto& t : pool) t.join();

  int code = kSuccess;
  Json table = Json::array();
  Json errors = Json::array();
  std::uint64_t curves = 0, good = 0;
  for (const auto& r : rows) {
    if (!r.curve) {
      errors.push_back("line " + std::to_string(r.line) + ": " + r.parse_error);
      code = kUsageError;
      continue;
    }
    ++curves;
    if (r.row["good"].get<bool>()) ++good;
    table.push_back(r.row);
    if (code == kSuccess) code = r.code;
  }
  result["rows"] = table;
  result["parse_errors"] = errors;
  result["curves"] = curves;
  result["good"] = good;
  if (curves == 0) {
    result["goodness_fraction"] = nullptr;
  } else {
    const std::uint64_t d = std::gcd(good, curves);
    result["goodness_fraction"] = std::to_string(good / d) + "/" + std::to_string(curves / d);
  }
  return code;
}

// ---------------------------------------------------------------------------
// Rendering. Text output is the JSON document flattened to "path: value" lines, so both
// formats always carry the same fields.

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& path, std::ostream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (v.is_array()) {
    const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars && !v.empty() && !v.front().is_string()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
      out << path << ": " << s << "]\n";
      return;
    }
    if (v.empty()) {
      out << path << ": []\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << scalar_text(v) << "\n";
}

void render(const Json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  out << "# sym2chab " << doc["command"].get<std::string>() << "\n";
  flatten(doc["config"], "config", out);
  if (doc.contains("result")) flatten(doc["result"], "", out);
  if (doc.contains("error")) out << "error: " << doc["error"].get<std::string>() << "\n";
  out << "exit_code: " << doc["exit_code"].get<int>() << "\n";
}

int run(const Options& o, Json& result) {
  if (o.command == "check-good") return cmd_check_good(o, result);
  if (o.command == "points") return cmd_points(o, result);
  if (o.command == "polygon") return cmd_polygon(o, result);
  if (o.command == "expand") return cmd_expand(o, result);
  if (o.command == "certify") return cmd_certify(o, result);
  if (o.command == "criterion") return cmd_criterion(o, result);
  if (o.command == "density") return cmd_density(o, result);
  if (o.command == "simulate") return cmd_simulate(o, result);
  if (o.command == "scan") return cmd_scan(o, result);
  throw InputError("unknown command '" + o.command + "'");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::uint64_t seed = 0;
  CLI::App app{"Certified Chabauty analysis for symmetric squares of odd hyperelliptic curves at p = 2",
               "sym2chab"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* s) {
    s->add_option("--genus", o.genus, "Genus g >= 2");
    s->add_option("--precision", o.precision, "Absolute 2-adic precision in digits")->check(CLI::Range(4, 4096));
    s->add_option("--truncation", o.truncation, "Series truncation order T (default max(2g+6, 16))")
        ->check(CLI::Range(2, 1024));
    s->add_option("--seed", seed, "RNG seed");
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--model", o.model, "Curve model: long (y^2 + y = h) or short (y^2 = f)")
        ->check(CLI::IsMember({"long", "short"}));
  };
  auto add_curve = [&](CLI::App* s) { s->add_option("--curve", o.curve, "Coefficients c_1,...,c_{2g+1}"); };

  std::vector<CLI::App*> subs;
  auto* check = app.add_subcommand("check-good", "Evaluate the goodness conditions on h mod 2");
  auto* points = app.add_subcommand("points", "Points of the special fibre over F_2 and F_4");
  auto* polygon = app.add_subcommand("polygon", "Newton polygon of f (h + 1/4 for long models)");
  auto* expand = app.add_subcommand("expand", "Local expansions at infinity and the basis change");
  auto* certify = app.add_subcommand("certify", "Certify rho o log on the three residue polydisks");
  auto* crit = app.add_subcommand("criterion", "Check the Selmer criterion against the certified image");
  auto* density = app.add_subcommand("density", "Exact family densities");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the Selmer sampling model");
  auto* scan = app.add_subcommand("scan", "Batch analysis of a curve file");
  for (auto* s : {check, points, polygon, expand, certify, crit}) add_curve(s);
  for (auto* s : {check, points, polygon, expand, certify, crit, density, simulate, scan}) {
    add_common(s);
    subs.push_back(s);
  }
  crit->add_option("--selmer", o.selmer, "Selmer file: 'g r' then r bit strings");
  scan->add_option("--selmer", o.selmer, "Selmer file applied to curves of matching genus");
  scan->add_option("file", o.file, "Curve file, one 'g; c_1, ..., c_{2g+1}' per line")->required();
  scan->add_option("--threads", o.threads, "Worker threads (0: hardware)");
  simulate->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--image", o.image, "File of image points, one bit string per line");
  simulate->add_option("--rank-model", o.rank_model, "poonen-rains or fixed:R");
  simulate->add_option("--threads", o.threads, "Worker threads (0: hardware)");
  simulate->add_flag("--allow-unseeded", o.allow_unseeded, "Permit a run without --seed");

  std::vector<std::string> argv_store{"sym2chab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  for (auto* s : subs) {
    if (!s->parsed()) continue;
    o.command = s->get_name();
    o.genus_set = s->get_option("--genus")->count() > 0;
    if (s->get_option("--seed")->count() > 0) o.seed = seed;
  }

  Json doc;
  doc["command"] = o.command;
  doc["config"] = config_json(o);
  Json result = Json::object();
  int code = kSuccess;
  std::string error;
  try {
    code = run(o, result);
  } catch (const InputError& e) {
    code = kUsageError;
    error = e.what();
  } catch (const ParseError& e) {
    code = kUsageError;
    error = e.what();
  } catch (const DimensionMismatch& e) {
    code = kUsageError;
    error = e.what();
  } catch (const GenusTooSmall& e) {
    code = kUsageError;
    error = e.what();
  } catch (const SeedMissing& e) {
    code = kUsageError;
    error = e.what();
  } catch (const RankTooLarge& e) {
    code = kUsageError;
    error = e.what();
  } catch (const Error& e) {
    // NotGood, CertificateFailure and numerical breakdowns are mathematical outcomes.
    code = kMathFailure;
    error = e.what();
  }
  doc["config"] = config_json(o);
  if (error.empty() || !result.empty()) doc["result"] = result;
  if (!error.empty()) {
    doc["error"] = error;
    err << "sym2chab " << o.command << ": " << error << "\n";
  }
  doc["exit_code"] = code;
  render(doc, o.format, out);
  return code;
}

}  // namespace sym2chab::cli
