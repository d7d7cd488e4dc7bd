#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/report_json.hpp"

namespace ordlines::cli {

namespace {

Rational rational_arg(const std::string& text, const char* name) {
  Rational r;
  if (!parse_rational(text, r)) throw UsageError(std::string("--") + name + ": malformed rational '" + text + "'");
  return r;
}

std::pair<std::size_t, std::size_t> index_pair(const std::string& text, const char* name) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    return {std::stoul(text.substr(0, comma)), std::stoul(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError(std::string("--") + name + " expects I,J, got '" + text + "'");
  }
}

Point apex_arg(const std::string& text, const PointSet& set) {
  std::vector<Scalar> coords;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Scalar s;
    if (!parse_scalar(token, set.field(), s)) throw UsageError("--apex: cannot read '" + token + "'");
    coords.push_back(std::move(s));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return Point(set.kind(), std::move(coords));
}

void write_text_summary(std::ostream& out, const SpanSummary& s) {
  out << "n: " << s.n << "\n"
      << "spanned lines: " << s.num_lines << "\n"
      << "ordinary lines: " << s.ordinary << "\n"
      << "max collinear: " << s.max_collinear << "\n";
  for (const auto& [k, count] : s.t) out << "t[" << k << "] = " << count << "\n";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct Options {
  // gen
  std::string construction;
  std::size_t m = 10, n = 20, k = 2, a = 3, b = 3;
  int dim = 3;
  std::string alpha = "1/2";
  std::uint64_t seed = 1;
  std::int64_t bound = kDefaultCoordinateBound;
  std::string output;
  // file-based commands
  std::string file;
  bool json = false;
  bool planes = false;
  bool degrees = false;
  std::size_t center = 0;
  bool trace = false;
  std::string line1, line2, apex;
  // constants
  std::optional<std::string> c_alpha;
  std::string c_beta = "2/3", c_gamma = "1/9";
  bool grid = false;
  // search
  std::size_t iters = 10000;
  std::string init, trace_out, temperature = "2", decay = "999/1000";
  std::vector<unsigned> weights;
  std::size_t max_bits = 64;
};

int cmd_gen(const Options& o, std::ostream& out) {
  std::optional<PointSet> set;
  const std::string& c = o.construction;
  if (c == "skew") {
    set = gen_two_skew(o.m);
  } else if (c == "near-coplanar") {
    set = gen_near_coplanar(o.n, o.k, o.seed, o.bound);
  } else if (c == "coplanar-heavy") {
    set = gen_coplanar_heavy(o.n, rational_arg(o.alpha, "alpha"), o.seed, o.bound);
  } else if (c == "random") {
    set = gen_random(o.n, o.dim, o.bound, o.seed);
  } else if (c == "grid") {
    set = gen_grid2d(o.a, o.b);
  } else if (c == "hesse") {
    set = gen_hesse();
  } else {
    throw UsageError("unknown construction '" + c + "'");
  }
  if (o.output.empty() || o.output == "-") {
    out << write_pointset(*set);
  } else {
    write_pointset_file(o.output, *set);
  }
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  PointSet set = read_pointset_file(o.file);
  SpanSummary s = span_summary(set);
  std::optional<PlaneSummary> planes;
  bool collinear = all_collinear(set);
  if (o.planes && set.kind() == PointKind::affine3 && !collinear) planes = plane_summary(set);
  std::vector<std::size_t> degrees;
  if (o.degrees) degrees = point_degrees(set);

  if (o.json) {
    Json j{{"file", o.file},
           {"label", set.label()},
           {"kind", to_string(set.kind())},
           {"field", to_string(set.field())},
           {"span", to_json(s)}};
    if (o.planes) j["planes"] = planes ? to_json(*planes) : Json(nullptr);
    if (o.degrees) j["degrees"] = degrees;
    emit(out, j);
    return kExitOk;
  }
  if (!set.label().empty()) out << "set: " << set.label() << "\n";
  out << "kind: " << to_string(set.kind()) << " field: " << to_string(set.field()) << "\n";
  write_text_summary(out, s);
  if (o.planes) {
    if (planes) {
      out << "spanned planes: " << planes->plane_counts.size() << "\n"
          << "max coplanar: " << planes->max_coplanar << "\n";
    } else if (set.kind() != PointKind::affine3) {
      out << "planes: only defined for 3D sets\n";
    } else {
      out << "planes: undefined, all points are collinear\n";
    }
  }
  if (o.degrees) {
    out << "degrees:";
    for (auto d : degrees) out << ' ' << d;
    out << "\n";
  }
  return kExitOk;
}

int cmd_project(const Options& o, std::ostream& out) {
  PointSet set = read_pointset_file(o.file);
  ProjectionImage img = project_from(set, o.center);
  std::optional<KellyTraceReport> trace;
  if (o.trace) trace = kelly_trace(set, o.center);
  if (o.json) {
    Json j{{"file", o.file}, {"projection", to_json(img)}};
    if (trace) j["trace"] = to_json(*trace);
    emit(out, j);
    return kExitOk;
  }
  ImagePoints q = image_point_set(img);
  out << "center: " << o.center << " " << set[o.center].to_string() << "\n"
      << "|Q1| = " << q.points.size() << "\n"
      << "|Q2| = " << q.unique_count() << "\n";
  for (const auto& g : img.groups) {
    out << "  " << g.image.to_string() << " <-";
    for (auto s : g.sources) out << ' ' << s;
    out << "\n";
  }
  if (trace) {
    out << "image lines: " << trace->q1_lines << "\n"
        << "|L1| = " << trace->l1_size << "\n"
        << "ordinary lines found: " << trace->found_ordinary.size() << "\n";
    for (const auto& p : trace->planes) {
      out << "  plane over " << p.image_line.to_string() << ": " << p.plane_points << " points, "
          << p.ordinary_found << " ordinary\n";
    }
  }
  return kExitOk;
}

std::pair<CanonLine3, CanonLine3> richest_skew_pair(const PointSet& set) {
  auto lines = spanned_lines(set);
  std::stable_sort(lines.begin(), lines.end(), [](const SpannedLine& x, const SpannedLine& y) {
    return x.members.size() > y.members.size();
  });
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_product = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::size_t product = lines[i].members.size() * lines[j].members.size();
      if (best && product <= best_product) break;
      if (skew(std::get<CanonLine3>(lines[i].line), std::get<CanonLine3>(lines[j].line))) {
        best = {i, j};
        best_product = product;
        break;
      }
    }
  }
  if (!best) throw UsageError("no two spanned lines of the set are skew");
  return {std::get<CanonLine3>(lines[best->first].line), std::get<CanonLine3>(lines[best->second].line)};
}

int cmd_verify(const std::string& which, const Options& o, std::ostream& out) {
  PointSet set = read_pointset_file(o.file);
  Json j{{"file", o.file}, {"check", which}};
  int status = kExitOk;
  std::string text;

  if (which == "sylvester-gallai") {
    auto r = verify_sylvester_gallai(set);
    j["result"] = to_json(r);
    if (!r.holds && set.field() == Field::rational) status = kExitGuaranteeFailed;
    text = std::string("sylvester-gallai: ") + (r.holds ? "holds" : "fails") +
           " (ordinary = " + std::to_string(r.ordinary) + (r.collinear ? ", collinear set" : "") +
           ")" + (r.witness ? "\nwitness: " + r.witness->to_string() : std::string());
  } else if (which == "skew-bound") {
    std::pair<CanonLine3, CanonLine3> lines = [&] {
      if (o.line1.empty() != o.line2.empty()) throw UsageError("give both --line1 and --line2, or neither");
      if (o.line1.empty()) return richest_skew_pair(set);
      auto [a, b] = index_pair(o.line1, "line1");
      auto [c, d] = index_pair(o.line2, "line2");
      for (auto idx : {a, b, c, d}) {
        if (idx >= set.size()) throw UsageError("line index " + std::to_string(idx) + " out of range");
      }
      return std::pair{canon_line3(set[a], set[b]), canon_line3(set[c], set[d])};
    }();
    auto r = verify_skew_bound(set, lines.first, lines.second);
    j["lines"] = {lines.first.to_string(), lines.second.to_string()};
    j["result"] = to_json(r);
    if (!r.holds) status = kExitGuaranteeFailed;
    text = "skew-bound: ordinary " + std::to_string(r.lhs) + " >= " + std::to_string(r.on_first) +
           "*" + std::to_string(r.on_second) + " - " + std::to_string(r.n) + " = " +
           std::to_string(r.rhs) + (r.holds ? ": holds" : ": FAILS");
  } else if (which == "almost-coplanar") {
    auto r = verify_almost_coplanar(set, o.k);
    j["result"] = to_json(r);
    text = "almost-coplanar: ordinary " + std::to_string(r.count) + " vs bound " + r.bound.get_str() +
           (r.holds ? ": meets bound" : ": below bound") + "\nnote: " + r.caveat;
  } else if (which == "concurrent") {
    if (o.apex.empty()) throw UsageError("concurrent needs --apex");
    auto r = concurrent_lines_probe(set, apex_arg(o.apex, set));
    j["result"] = to_json(r);
    if (!r.holds) status = kExitGuaranteeFailed;
    text = "concurrent: covered by " + std::to_string(r.contained_in) + " lines through the apex, " +
           std::to_string(r.ordinary_avoiding_apex) + " ordinary lines avoid it" +
           (r.guarantee_applies ? (r.holds ? " (guarantee holds)" : " (guarantee FAILS)") : "");
  } else if (which == "small-lines") {
    auto r = small_line_counts(set);
    j["result"] = to_json(r);
    text = "lines with <= 3 points: " + std::to_string(r.lines_le3) + "\nlines with <= 4 points: " +
           std::to_string(r.lines_le4) + "\nn^2: " + std::to_string(r.n_squared);
  } else if (which == "beck") {
    auto r = beck_report(set);
    j["result"] = to_json(r);
    text = "lines/n^2 = " + r.ratio_lines.get_str() + " (gamma 1/9 " +
           (r.gamma_reached ? "reached" : "not reached") + ")\nmax collinear/n = " +
           r.ratio_collinear.get_str() + " (beta 2/3 hypothesis " +
           (r.beta_hypothesis ? "met" : "not met") + ")";
  } else {
    throw UsageError("unknown check '" + which + "'");
  }
  j["exit_status"] = status;
  if (o.json) {
    emit(out, j);
  } else {
    out << text << "\n";
  }
  return status;
}

int cmd_constants(const Options& o, std::ostream& out) {
  const Rational beta = rational_arg(o.c_beta, "beta");
  const Rational gamma = rational_arg(o.c_gamma, "gamma");
  if (o.grid) {
    Json rows = Json::array();
    bool ok = true;
    for (long i = 1; i <= 99; ++i) {
      Rational alpha(i, 100);
      alpha.canonicalize();
      auto c = bound_constants(alpha, beta, gamma);
      bool row_ok = c.mu < alpha && alpha < c.nu && sgn(c.mu) > 0 && sgn(c.d_alpha) > 0;
      ok = ok && row_ok;
      if (o.json) {
        Json row = to_json(c);
        row["checks_hold"] = row_ok;
        rows.push_back(std::move(row));
      } else {
        out << "alpha=" << alpha.get_str() << " mu=" << c.mu.get_str() << " nu=" << c.nu.get_str()
            << " d_alpha=" << c.d_alpha.get_str() << (row_ok ? "" : "  CHECK FAILED") << "\n";
      }
    }
    if (o.json) emit(out, Json{{"grid", std::move(rows)}, {"all_hold", ok}});
    return ok ? kExitOk : kExitGuaranteeFailed;
  }
  if (!o.c_alpha) throw UsageError("constants needs --alpha (or --grid)");
  auto c = bound_constants(rational_arg(*o.c_alpha, "alpha"), beta, gamma);
  if (o.json) {
    emit(out, to_json(c));
    return kExitOk;
  }
  auto line = [&](const char* name, const Rational& v) {
    out << name << " = " << v.get_str() << "\n";
  };
  line("alpha", c.alpha);
  line("beta", c.beta);
  line("gamma", c.gamma);
  line("alpha0", c.alpha0);
  line("c_alpha0", c.c_alpha0);
  line("mu", c.mu);
  line("nu", c.nu);
  line("gamma_prime_case1", c.gamma_prime_case1);
  line("gamma_prime_case2b", c.gamma_prime_case2b);
  line("d_case1", c.d_case1);
  line("d_case2a", c.d_case2a);
  line("d_case2b", c.d_case2b);
  line("d_alpha", c.d_alpha);
  return kExitOk;
}

int cmd_boroczky(const Options& o, std::ostream& out) {
  auto s = boroczky_model(o.m);
  if (o.json) {
    emit(out, to_json(s));
    return kExitOk;
  }
  out << "m: " << s.m << "\nn: " << s.n << "\nordinary lines: " << s.ordinary << "\n";
  for (const auto& [k, count] : s.t) out << "t[" << k << "] = " << count << "\n";
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig config;
  config.n = o.n;
  config.alpha = rational_arg(o.alpha, "alpha");
  config.iterations = o.iters;
  config.seed = o.seed;
  config.coordinate_bound = o.bound;
  config.initial_temperature = rational_arg(o.temperature, "temperature");
  config.decay = rational_arg(o.decay, "decay");
  config.max_coordinate_bits = o.max_bits;
  if (!o.weights.empty()) {
    if (o.weights.size() != 4) throw UsageError("--weights expects four values");
    config.weights = {o.weights[0], o.weights[1], o.weights[2], o.weights[3]};
  }
  if (!o.init.empty()) {
    config.initial = read_pointset_file(o.init);
    config.n = config.initial->size();
  }
  if (o.output.empty()) throw UsageError("search needs -o FILE");

  SearchResult r = minimize_ordinary(config);
  write_pointset_file(o.output, r.best);

  Json j{{"command", "search"},
         {"params",
          {{"n", config.n},
           {"alpha", config.alpha.get_str()},
           {"iterations", config.iterations},
           {"seed", config.seed},
           {"bound", config.coordinate_bound},
           {"temperature", config.initial_temperature.get_str()},
           {"decay", config.decay.get_str()},
           {"weights",
            {config.weights.perturb, config.weights.snap_to_line, config.weights.snap_to_plane,
             config.weights.restart_point}},
           {"init", o.init.empty() ? Json(nullptr) : Json(o.init)}}},
         {"output", o.output},
         {"result", to_json(r)}};
  const std::string trace_path = o.trace_out.empty() ? o.output + ".json" : o.trace_out;
  std::ofstream trace(trace_path);
  if (!trace) throw UsageError("cannot write " + trace_path);
  trace << j.dump(2) << "\n";

  if (o.json) {
    emit(out, j);
  } else {
    out << "best ordinary count: " << r.best_count << " (initial " << r.initial_count << ")\n"
        << "ratio to n^2: " << r.ratio.get_str() << "\n"
        << "max coplanar: " << r.max_coplanar << " (cap " << r.cap << ")\n"
        << "accepted moves: " << r.accepted_moves << " of " << r.iterations << "\n"
        << "wrote " << o.output << " and " << trace_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ordinary-line and spanned-line laboratory", "ordlines"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a named construction as a point-set file");
  gen->add_option("--construction", o.construction, "Construction")
      ->required()
      ->check(CLI::IsMember({"skew", "near-coplanar", "coplanar-heavy", "random", "grid", "hesse"}));
  gen->add_option("--m", o.m, "Points per skew line");
  gen->add_option("--n", o.n, "Number of points");
  gen->add_option("--k", o.k, "Points off the plane (near-coplanar)");
  gen->add_option("--alpha", o.alpha, "Coplanar fraction, rational (coplanar-heavy)");
  gen->add_option("--dim", o.dim, "Dimension for random sets")->check(CLI::IsMember({2, 3}));
  gen->add_option("--a", o.a, "Grid columns");
  gen->add_option("--b", o.b, "Grid rows");
  gen->add_option("--seed", o.seed, "Seed");
  gen->add_option("--bound", o.bound, "Numerator/denominator bound of random coordinates");
  gen->add_option("-o,--output", o.output, "Output file (stdout when omitted)");

  auto* stats = app.add_subcommand("stats", "Spanned-line histogram of a point-set file");
  stats->add_option("file", o.file)->required();
  stats->add_flag("--planes", o.planes, "Also count spanned planes (3D)");
  stats->add_flag("--degrees", o.degrees, "Also print point degrees");
  stats->add_flag("--json", o.json, "JSON output");

  auto* project = app.add_subcommand("project", "Radial projection from one point of a 3D set");
  project->add_option("file", o.file)->required();
  project->add_option("--center", o.center, "Index of the projection center")->required();
  project->add_flag("--trace", o.trace, "Run the ordinary-line trace over the image");
  project->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check a bound or theorem on a point-set file");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> checks;
  for (const char* name :
       {"sylvester-gallai", "skew-bound", "almost-coplanar", "concurrent", "small-lines", "beck"}) {
    auto* sub = verify->add_subcommand(name);
    sub->add_option("file", o.file)->required();
    sub->add_flag("--json", o.json, "JSON output");
    checks.emplace_back(name, sub);
  }
  checks[1].second->add_option("--line1", o.line1, "First line as point indices I,J");
  checks[1].second->add_option("--line2", o.line2, "Second line as point indices K,L");
  checks[2].second->add_option("--k", o.k, "Points allowed off the heaviest plane")->required();
  checks[3].second->add_option("--apex", o.apex, "Apex coordinates, e.g. \"0 0\"")->required();

  auto* constants = app.add_subcommand("constants", "Exact constants of the lower bounds");
  constants->add_option("--alpha", o.c_alpha, "Coplanar fraction alpha");
  constants->add_option("--beta", o.c_beta, "Collinear fraction beta")->capture_default_str();
  constants->add_option("--gamma", o.c_gamma, "Spanned-lines constant gamma")->capture_default_str();
  constants->add_flag("--grid", o.grid, "Evaluate alpha = 1/100 .. 99/100");
  constants->add_flag("--json", o.json, "JSON output");

  auto* boroczky = app.add_subcommand("boroczky", "Count lines of the conic-plus-line model");
  boroczky->add_option("--m", o.m, "Points on the conic (even, >= 4)")->required();
  boroczky->add_flag("--json", o.json, "JSON output");

  auto* search = app.add_subcommand("search", "Anneal toward few ordinary lines under a coplanar cap");
  search->add_option("--n", o.n, "Number of points");
  search->add_option("--alpha", o.alpha, "Cap: at most floor(alpha*n) coplanar")->required();
  search->add_option("--iters", o.iters, "Iterations")->required();
  search->add_option("--seed", o.seed, "Seed")->required();
  search->add_option("--init", o.init, "Initial point-set file");
  search->add_option("--bound", o.bound, "Coordinate bound")->default_val(10);
  search->add_option("--temperature", o.temperature, "Initial temperature (rational)");
  search->add_option("--decay", o.decay, "Geometric temperature decay (rational)");
  search->add_option("--weights", o.weights, "perturb,snap-line,snap-plane,restart")->delimiter(',');
  search->add_option("--max-bits", o.max_bits, "Largest coordinate numerator/denominator width");
  search->add_option("-o,--output", o.output, "Best set output file")->required();
  search->add_option("--trace", o.trace_out, "JSON trace file (default: OUTPUT.json)");
  search->add_flag("--json", o.json, "Also print the JSON trace");

  std::vector<std::string> argv_storage{"ordlines"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (project->parsed()) return cmd_project(o, out);
    if (verify->parsed()) {
      for (const auto& [name, sub] : checks) {
        if (sub->parsed()) return cmd_verify(name, o, out);
      }
    }
    if (constants->parsed()) return cmd_constants(o, out);
    if (boroczky->parsed()) return cmd_boroczky(o, out);
    if (search->parsed()) return cmd_search(o, out);
  } catch (const InvariantViolation& e) {
    err << "ordlines: internal invariant violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "ordlines: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "ordlines: no command\n";
  return kExitUsage;
}

}  // namespace ordlines::cli
