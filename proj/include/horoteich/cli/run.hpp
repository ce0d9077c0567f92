// Copyright 2026 The horoteich Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "horoteich/cli/config.hpp"
#include "horoteich/cli/plot.hpp"
#include "horoteich/cli/record.hpp"
#include "horoteich/curvegraph.hpp"
#include "horoteich/horolab.hpp"
#include "horoteich/kernel.hpp"
#include "horoteich/origami.hpp"
#include "horoteich/torus.hpp"

namespace horoteich::cli {

enum ExitCode { kSuccess = 0, kInputError = 1, kUncertified = 2 };

struct Outcome {
  Json result;
  bool certified = true;
};

/// Command-line frontend. Each subcommand prints one record:
/// {command, inputs, certified, result}.
class Runner {
 public:
  Runner() : app_("horoteich: extremal length, horospheres and curve graphs on tori and origamis", "horoteich") {
    app_.set_help_flag("--help", "Print help");
    app_.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--tol,--tolerance", tol_, "Tolerance (default 1e-9)");
    app_.add_option("--cap", cap_, "Enumeration cap (default 1e6)");
    app_.add_option("--seed", seed_, "Random seed");
    app_.add_option("--format", format_, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app_.add_option("--output", output_, "Write the record to this file");
    app_.add_flag("--timestamp", timestamp_, "Add a UTC timestamp field");
    app_.add_option("--config", unused_, "INI job file with [origami] and [job] sections");
    define_torus();
    define_origami();
    define_horolab();
  }

  std::set<std::string> subcommand_names() const {
    std::set<std::string> out;
    for (const auto& [name, job] : jobs_) out.insert(name);
    return out;
  }

  int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    try {
      args = expand_config(raw, subcommand_names());
    } catch (const InvalidInput& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
      app_.parse(rev);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        out << app_.help();
        return kSuccess;
      }
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
    sub_ = app_.get_subcommands().front();
    const std::string name = sub_->get_name();
    Json record;
    record["command"] = name;
    record["inputs"] = echo_inputs();
    try {
      if (!(tol_ > 0.0)) throw InvalidInput("tolerance must be positive");
      if (cap_ < 1) throw InvalidInput("enumeration cap must be at least 1");
      Outcome o = jobs_.at(name)();
      record["certified"] = o.certified;
      record["result"] = std::move(o.result);
      emit(record, out);
      return o.certified ? kSuccess : kUncertified;
    } catch (const BudgetExhausted& e) {
      record["certified"] = false;
      record["result"] = {{"diagnostic", e.what()}, {"best", approx(e.best(), 0.0)}};
      emit(record, out);
      err << "uncertified: " << e.what() << "\n";
      return kUncertified;
    } catch (const ConsistencyFailure& e) {
      record["certified"] = false;
      record["result"] = {{"diagnostic", e.what()}};
      emit(record, out);
      err << "uncertified: " << e.what() << "\n";
      return kUncertified;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }

 private:
  using Job = std::function<Outcome()>;

  CLI::App app_;
  CLI::App* sub_ = nullptr;
  double tol_ = 1e-9;
  std::size_t cap_ = 1'000'000;
  std::uint64_t seed_ = 0;
  std::string format_ = "json";
  std::string output_;
  std::string unused_;
  bool timestamp_ = false;
  bool kerckhoff_ = false;
  std::map<std::string, std::string> values_;
  std::map<std::string, Job> jobs_;

  CLI::App* command(const std::string& name, const std::string& help, Job job) {
    jobs_[name] = std::move(job);
    return app_.add_subcommand(name, help);
  }

  void opts(CLI::App* sub, const std::vector<std::pair<std::string, std::string>>& list) {
    for (const auto& [name, help] : list) sub->add_option("--" + name, values_[name], help);
  }

  void origami_opts(CLI::App* sub) {
    opts(sub, {{"h", "Right-neighbor permutation, 1-based, e.g. [2,1,3]"},
               {"v", "Top-neighbor permutation, 1-based, e.g. [3,2,1]"},
               {"n", "Number of squares (checked against the permutations)"}});
  }

  std::optional<std::string> arg(const std::string& name) const {
    const CLI::Option* opt = sub_->get_option_no_throw("--" + name);
    if (!opt || opt->count() == 0) return std::nullopt;
    return values_.at(name);
  }
  std::string need(const std::string& name) const {
    if (auto v = arg(name)) return *v;
    throw InvalidInput("--" + name + " is required");
  }
  std::string get(const std::string& name, const std::string& fallback) const { return arg(name).value_or(fallback); }

  origami::Origami surface() const {
    std::optional<int> n;
    if (auto t = arg("n")) n = static_cast<int>(curvegraph::detail::parse_int(*t, "n"));
    return parse_origami(get("h", ""), get("v", ""), n);
  }

  Json echo_inputs() const {
    Json in = Json::object();
    for (const CLI::App* a : {static_cast<const CLI::App*>(&app_), static_cast<const CLI::App*>(sub_)}) {
      for (const CLI::Option* opt : a->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "-h,--help") continue;
        std::string joined;
        for (const auto& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
        in[opt->get_single_name()] = joined;
      }
    }
    return in;
  }

  void emit(Json& record, std::ostream& out) const {
    if (timestamp_) {
      const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      char buf[32];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      record["timestamp"] = buf;
    }
    const std::string text = format_ == "csv" ? to_csv(record) : record.dump(2) + "\n";
    if (output_.empty()) {
      out << text;
      return;
    }
    std::ofstream f(output_);
    if (!f) throw InvalidInput("cannot write output file '" + output_ + "'");
    f << text;
  }

  // ---- torus ----

  void define_torus() {
    auto* ext = command("torus-ext", "Extremal length of a weighted torus curve", [this] {
      const auto [x, y] = parse_exact_point(need("tau"));
      const torus::TorusCurve c = parse_curve(get("curve", "1,0"));
      const Rational w = parse_positive_rational(get("weight", "1"), "weight");
      const Rational e = torus::extremal_length_exact(x, y, torus::WeightedTorusFoliation(w, c));
      return Outcome{{{"curve", curve_string(c)}, {"ext", exact(e)}}, true};
    });
    opts(ext, {{"tau", "Point of H^2 as a+bi"}, {"curve", "Primitive curve p,q (default 1,0)"},
               {"weight", "Transverse weight (default 1)"}});

    auto* dist = command("torus-dist", "Teichmuller distance by Kerckhoff enumeration", [this] {
      const auto t1 = parse_upper_half_point(need("tau1")), t2 = parse_upper_half_point(need("tau2"));
      const auto k = torus::kerckhoff_distance(t1, t2, tol_, cap_);
      return Outcome{{{"distance", bracketed(k.value, Bracket(k.value, std::max(k.value, k.upper)))},
                      {"closed_form", approx(k.closed_form, 1e-12)},
                      {"witness", curve_string(k.witness)},
                      {"nodes", exact_count(k.nodes)}},
                     k.upper - k.value <= tol_ + 1e-15};
    });
    opts(dist, {{"tau1", "First point a+bi"}, {"tau2", "Second point a+bi"}});

    auto* tan = command("tangency", "Tangency of two torus horospheres (l1 l2 = i^2)", [this] {
      const torus::HoroSpec h1(parse_curve(need("curve1")), parse_positive_rational(need("level1"), "level1"));
      const torus::HoroSpec h2(parse_curve(need("curve2")), parse_positive_rational(need("level2"), "level2"));
      const auto rep = torus::tangency_check(h1, h2);
      Json r{{"tangent", rep.tangent},
             {"intersection", exact(torus::intersection(h1.curve(), h2.curve()))},
             {"level_product", exact(rep.product)},
             {"i_squared", exact(rep.i_squared)},
             {"relation", rep.tangent ? "Tangent" : (rep.product < rep.i_squared ? "DisjointBalls" : "Overlapping")}};
      if (rep.point) {
        r["point"] = point(*rep.point, 1e-10);
        r["ext1"] = approx(torus::extremal_length(*rep.point, h1.curve()), 1e-10);
        r["ext2"] = approx(torus::extremal_length(*rep.point, h2.curve()), 1e-10);
      }
      return Outcome{r, true};
    });
    opts(tan, {{"curve1", "First curve p,q"}, {"level1", "First level (rational)"},
               {"curve2", "Second curve p,q"}, {"level2", "Second level (rational)"}});

    auto* tri = command("triple", "Levels of three pairwise tangent horospheres", [this] {
      Json r;
      if (auto list = arg("i")) {
        const auto i = parse_rational_list(*list);
        if (i.size() != 3) throw InvalidInput("--i needs three intersection numbers i_ab,i_ag,i_bg");
        const auto lv = horolab::triple_solve(i[0], i[1], i[2]);
        r = {{"r", exact(lv.r)}, {"s", exact(lv.s)}, {"t", exact(lv.t)},
             {"products_exact", lv.r * lv.s == i[0] * i[0] && lv.r * lv.t == i[1] * i[1] && lv.s * lv.t == i[2] * i[2]}};
        return Outcome{r, r["products_exact"].get<bool>()};
      }
      const auto a = parse_curve(need("alpha")), b = parse_curve(need("beta")), g = parse_curve(need("gamma"));
      const auto rz = torus::triple_tangency(a, b, g);
      r = {{"r", exact(rz.levels.r)}, {"s", exact(rz.levels.s)}, {"t", exact(rz.levels.t)}};
      const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
      const std::array<const char*, 3> names{"alpha_beta", "alpha_gamma", "beta_gamma"};
      bool ok = true;
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& p = rz.tangent_points[k];
        const auto& h1 = rz.horospheres[pairs[k].first];
        const auto& h2 = rz.horospheres[pairs[k].second];
        const double e1 = std::abs(h1.excess(p)) / h1.level_d(), e2 = std::abs(h2.excess(p)) / h2.level_d();
        ok = ok && e1 <= 1e-10 && e2 <= 1e-10;
        r["points"][names[k]] = {{"point", point(p, 1e-10)}, {"relative_residual", approx(std::max(e1, e2), 0.0)}};
      }
      r["on_both_horospheres"] = ok;
      return Outcome{r, ok};
    });
    opts(tri, {{"i", "Intersection numbers i_ab,i_ag,i_bg"},
               {"alpha", "Curve p,q (geometric realization)"},
               {"beta", "Curve p,q"},
               {"gamma", "Curve p,q"}});

    auto* ratio = command("ratio-curve", "Curve gamma with i(alpha,gamma)/i(beta,gamma) near a target", [this] {
      const auto a = parse_curve(need("alpha")), b = parse_curve(need("beta"));
      const double target = parse_real(need("target"), "target"), eps = parse_real(get("eps", "1e-3"), "eps");
      const auto res = torus::ratio_curve_search(a, b, target, eps, cap_);
      const Rational err = res.ratio - rational_from_double(target);
      return Outcome{{{"curve", curve_string(res.curve)},
                      {"i_alpha", exact(torus::intersection(a, res.curve))},
                      {"i_beta", exact(torus::intersection(b, res.curve))},
                      {"ratio", exact(res.ratio)},
                      {"error", exact(err < 0 ? Rational(-err) : err)},
                      {"depth", exact_count(res.depth)}},
                     true};
    });
    opts(ratio, {{"alpha", "Curve p,q"}, {"beta", "Curve p,q"}, {"target", "Target ratio > 0"},
                 {"eps", "Accuracy (default 1e-3)"}});

    auto* bus = command("busemann", "Busemann function of a ray toward a torus curve", [this] {
      const auto x0 = parse_upper_half_point(need("x0")), x = parse_upper_half_point(need("x"));
      const torus::WeightedTorusFoliation f(parse_positive_rational(get("weight", "1"), "weight"),
                                            parse_curve(get("curve", "1,0")));
      const double closed = torus::busemann(x0, f, x);
      const auto est = horolab::busemann_estimate(x0, f, x, horolab::TorusBackend{}, tol_);
      Json seq = Json::array();
      for (const auto& [t, d] : est.sequence) seq.push_back({{"t", exact(static_cast<std::int64_t>(t))}, {"D", bracketed(d)}});
      Json r{{"closed_form", approx(closed, 1e-14 * (1.0 + std::abs(closed)))},
             {"estimate", approx(est.value, tol_)},
             {"difference", approx(est.value - closed, tol_)},
             {"sequence", seq}};
      if (!est.trace.empty()) r["trace"] = est.trace;
      bool ok = est.certified;
      if (kerckhoff_) {
        const auto lim = torus::busemann_limit(x0, f, x, std::max(tol_, 1e-7));
        Json ks = Json::array();
        for (const auto& [t, d] : lim.sequence) ks.push_back({{"t", exact(static_cast<std::int64_t>(t))}, {"D", approx(d, std::max(tol_, 1e-7))}});
        r["kerckhoff_limit"] = {{"value", lim.value}, {"tolerance", std::max(tol_, 1e-7)}, {"monotone", lim.monotone},
                                {"sequence", ks}};
        ok = ok && lim.monotone;
      }
      return Outcome{r, ok};
    });
    opts(bus, {{"x0", "Ray base point a+bi"}, {"x", "Evaluation point a+bi"}, {"curve", "Curve p,q (default 1,0)"},
               {"weight", "Weight (default 1)"}});
    bus->add_flag("--kerckhoff", kerckhoff_, "Also evaluate the limit with Kerckhoff-enumerated distances");

    auto* ball = command("ball-limit", "Metric balls B(G(t), t) versus the Busemann sub-level set", [this] {
      const auto x0 = parse_upper_half_point(need("x0"));
      const torus::WeightedTorusFoliation f(parse_positive_rational(get("weight", "1"), "weight"),
                                            parse_curve(get("curve", "1,0")));
      std::vector<UpperHalfPoint> pts;
      if (auto list = arg("points")) {
        pts = parse_point_list(*list);
      } else {
        const auto n = curvegraph::detail::parse_int(get("samples", "50"), "samples");
        if (n < 1) throw InvalidInput("samples must be at least 1");
        std::mt19937_64 rng(seed_);
        std::uniform_real_distribution<double> re(-2.0, 2.0), logim(std::log(0.25), std::log(4.0));
        for (std::int64_t k = 0; k < n; ++k) {
          const double a = re(rng);
          pts.emplace_back(a, std::exp(logim(rng)));
        }
      }
      const double tmax = parse_real(get("tmax", "1048576"), "tmax");
      const auto rep = torus::metric_ball_limit_check(x0, f, pts, tmax, tol_);
      auto name = [](torus::BallMembership m) {
        return m == torus::BallMembership::Inside ? "inside" : m == torus::BallMembership::Outside ? "outside" : "inconclusive";
      };
      Json samples = Json::array();
      for (const auto& s : rep.samples) {
        std::string trail;
        for (auto m : s.membership) trail += m == torus::BallMembership::Inside ? 'I' : m == torus::BallMembership::Outside ? 'O' : '?';
        samples.push_back({{"x", point(s.x, 0.0)},
                           {"busemann", approx(s.busemann, 1e-14)},
                           {"limit", name(s.limit)},
                           {"membership", trail},
                           {"nested", s.nested},
                           {"stabilized", s.stabilized}});
      }
      return Outcome{{{"samples", samples}, {"inconclusive", exact_count(rep.inconclusive.size())}, {"all_ok", rep.all_ok}},
                     rep.all_ok};
    });
    opts(ball, {{"x0", "Ray base point a+bi"}, {"curve", "Curve p,q (default 1,0)"}, {"weight", "Weight (default 1)"},
                {"points", "Sample points a+bi;c+di;..."}, {"samples", "Random sample count (default 50)"},
                {"tmax", "Largest time t = 2^k (default 2^20)"}});

    auto* plot = command("torus-plot", "SVG of extremal-length level sets (horocycles)", [this] {
      const auto c = parse_curve(get("curve", "1,0"));
      std::vector<Rational> levels;
      for (const auto& s : split(need("levels"), ',')) levels.push_back(parse_positive_rational(s, "level"));
      PlotWindow w;
      w.xmin = parse_real(get("xmin", "-2"), "xmin");
      w.xmax = parse_real(get("xmax", "2"), "xmax");
      w.ymax = parse_real(get("ymax", "3"), "ymax");
      w.width = static_cast<int>(curvegraph::detail::parse_int(get("width", "800"), "width"));
      if (w.width < 16) throw InvalidInput("plot width must be at least 16 pixels");
      const std::string path = need("plot");
      const std::string svg = horocycle_svg(c, levels, w);
      std::ofstream f(path);
      if (!f) throw InvalidInput("cannot write plot file '" + path + "'");
      f << svg;
      Json hs = Json::array();
      for (const auto& l : levels) {
        const Horocycle h = horocycle(c, l);
        if (h.line) {
          hs.push_back({{"level", exact(l)}, {"kind", "line"}, {"height", exact(h.radius)}});
        } else {
          hs.push_back({{"level", exact(l)}, {"kind", "circle"}, {"tangent_at", exact(h.center_x)}, {"radius", exact(h.radius)}});
        }
      }
      return Outcome{{{"plot", path}, {"horocycles", hs}}, true};
    });
    opts(plot, {{"curve", "Curve p,q (default 1,0)"}, {"levels", "Comma-separated positive levels"},
                {"plot", "SVG output path"}, {"xmin", "Left edge (default -2)"}, {"xmax", "Right edge (default 2)"},
                {"ymax", "Top edge (default 3)"}, {"width", "Width in pixels (default 800)"}});
  }

  // ---- origami ----

  static Json cylinder_list(const origami::Origami& o, origami::Axis axis) {
    Json out = Json::array();
    for (const auto& c : origami::cylinders(o, axis)) {
      std::vector<int> sq;
      for (int s : c.members) sq.push_back(s + 1);
      out.push_back({{"squares", sq}, {"circumference", exact(c.circumference)}, {"height", exact(c.height)},
                     {"exact", true}});
    }
    return out;
  }

  static std::string cylinder_summary(const origami::Origami& o, origami::Axis axis) {
    std::string s;
    for (const auto& c : origami::cylinders(o, axis)) s += (s.empty() ? "" : "+") + std::to_string(c.circumference);
    return s;
  }

  static Json trace_info(const origami::CurveTrace& t) {
    const auto key = origami::isotopy_key(t);
    return {{"descriptor", curvegraph::payload_descriptor(t)},
            {"direction", std::to_string(t.direction().x) + "," + std::to_string(t.direction().y)},
            {"holonomy", std::to_string(t.holonomy().x) + "," + std::to_string(t.holonomy().y)},
            {"chords", exact_count(t.segments().size())},
            {"cylinder", exact(static_cast<std::int64_t>(key.cylinder))}};
  }

  Mat2<Rational> marking() const {
    return arg("deform") ? parse_rational_matrix(*arg("deform")) : Mat2<Rational>::identity();
  }

  void define_origami() {
    auto* info = command("origami-info", "Genus, cone points and cylinders of an origami", [this] {
      const origami::Origami o = surface();
      Json cones = Json::array();
      for (int k = 0; k < o.vertex_count(); ++k) {
        if (o.singular(k)) {
          cones.push_back({{"cone_angle_over_2pi", exact(static_cast<std::int64_t>(o.cone_angle(k)))},
                           {"order", exact(static_cast<std::int64_t>(o.cone_angle(k) - 1))}});
        }
      }
      const origami::MarkedFlatSurface<Rational> x(o);
      const auto orbit = origami::sl2z_orbit(o, cap_);
      return Outcome{{{"h_cycles", origami::cycles_string(o.h())},
                      {"v_cycles", origami::cycles_string(o.v())},
                      {"squares", exact(static_cast<std::int64_t>(o.n()))},
                      {"genus", exact(static_cast<std::int64_t>(o.genus()))},
                      {"area", exact(static_cast<std::int64_t>(o.area()))},
                      {"vertices", exact(static_cast<std::int64_t>(o.vertex_count()))},
                      {"cone_points", cones},
                      {"cylinders",
                       {{"H", cylinder_summary(o, origami::Axis::Horizontal)},
                        {"V", cylinder_summary(o, origami::Axis::Vertical)},
                        {"horizontal", cylinder_list(o, origami::Axis::Horizontal)},
                        {"vertical", cylinder_list(o, origami::Axis::Vertical)}}},
                      {"ext_vertical", exact(origami::ext_vertical(x))},
                      {"ext_horizontal", exact(origami::ext_horizontal(x))},
                      {"sl2z_orbit_size", exact_count(orbit.size())}},
                     true};
    });
    origami_opts(info);

    auto* flow = command("origami-flow", "Geodesic or horocycle flow of a marked origami", [this] {
      const origami::Origami o = surface();
      const std::string kind = get("kind", "geodesic");
      const Mat2<Rational> m0 = marking();
      if (kind == "horocycle") {
        const origami::MarkedFlatSurface<Rational> x(o, m0);
        const auto y = origami::horocycle_flow(x, parse_rational(need("param")));
        const auto& d = y.deform();
        const Rational ev = origami::ext_vertical(y), eh = origami::ext_horizontal(y);
        return Outcome{{{"kind", kind},
                        {"marking", {exact(d.a), exact(d.b), exact(d.c), exact(d.d)}},
                        {"ext_vertical", exact(ev)},
                        {"ext_horizontal", exact(eh)},
                        {"ext_product", exact(ev * eh)}},
                       true};
      }
      if (kind != "geodesic") throw InvalidInput("--kind must be geodesic or horocycle");
      const Mat2<double> md{to_double(m0.a), to_double(m0.b), to_double(m0.c), to_double(m0.d)};
      const origami::MarkedFlatSurface<double> x(o, md);
      const auto y = origami::geodesic_flow(x, parse_real(need("param"), "param"));
      const auto& d = y.deform();
      const double ev = origami::ext_vertical(y), eh = origami::ext_horizontal(y);
      const double rel = 1e-13;
      return Outcome{{{"kind", kind},
                      {"marking",
                       {approx(d.a, rel * std::abs(d.a)), approx(d.b, rel * std::abs(d.b)),
                        approx(d.c, rel * std::abs(d.c)), approx(d.d, rel * std::abs(d.d))}},
                      {"ext_vertical", approx(ev, rel * ev)},
                      {"ext_horizontal", approx(eh, rel * eh)},
                      {"ext_product", approx(ev * eh, 2 * rel * ev * eh)}},
                     true};
    });
    origami_opts(flow);
    opts(flow, {{"kind", "geodesic (default) or horocycle"}, {"param", "Flow time t or horocycle parameter s"},
                {"deform", "Initial marking a,b,c,d (default identity)"}});

    auto* inter = command("origami-intersect", "Exact crossing number of two closed geodesics", [this] {
      const origami::Origami o = surface();
      const auto t1 = parse_trace(o, need("c1")), t2 = parse_trace(o, need("c2"));
      return Outcome{{{"c1", trace_info(t1)}, {"c2", trace_info(t2)}, {"crossings", exact(origami::crossing_number(t1, t2))}},
                     true};
    });
    origami_opts(inter);
    opts(inter, {{"c1", "Curve: H<k>, V<k>, dx,dy or dx,dy@square:L|B:offset"}, {"c2", "Second curve"}});

    auto* growth = command("growth-check", "Quadratic growth of Ext along the horocycle flow", [this] {
      const origami::Origami o = surface();
      const auto t = parse_trace(o, get("curve", "H1"));
      std::vector<double> s;
      if (auto list = arg("s")) {
        s = parse_real_list(*list, "s");
      } else {
        for (int k = 0; k <= 6; ++k) {
          s.push_back(std::ldexp(1.0, k));
          s.push_back(-std::ldexp(1.0, k));
        }
      }
      const Mat2<Rational> m0 = marking();
      const origami::MarkedFlatSurface<double> x(o, {to_double(m0.a), to_double(m0.b), to_double(m0.c), to_double(m0.d)});
      const auto rep = origami::horocycle_growth_check(t, x, s);
      Json samples = Json::array();
      for (const auto& g : rep.samples) {
        Json e{{"s", approx(g.s, 0.0)}, {"lo", approx(g.lo, 1e-15 * g.lo)}, {"linear_bound", approx(g.linear_bound, 1e-15 * g.linear_bound)}, {"ok", g.ok}};
        if (g.quadratic_bound) e["quadratic_bound"] = approx(*g.quadratic_bound, 1e-15 * *g.quadratic_bound);
        samples.push_back(e);
      }
      return Outcome{{{"curve", trace_info(t)},
                      {"i_vertical", approx(rep.i_v, 1e-15 * rep.i_v)},
                      {"i_horizontal", approx(rep.i_h, 1e-15 * rep.i_h)},
                      {"area", approx(rep.area, 1e-15 * rep.area)},
                      {"threshold", approx(rep.threshold, 1e-15 * rep.threshold)},
                      {"samples", samples},
                      {"fit", {{"coefficients", rep.fit}, {"tolerance", rep.fit_residual}}},
                      {"fit_residual", approx(rep.fit_residual, 0.0)},
                      {"violations", {{"s", rep.violations}, {"exact", true}}},
                      {"ok", rep.ok}},
                     rep.ok};
    });
    origami_opts(growth);
    opts(growth, {{"curve", "Curve (default H1)"}, {"s", "Horocycle parameters s1,s2,..."},
                  {"deform", "Base marking a,b,c,d (default identity)"}});

    auto* walsh = command("walsh-e", "Walsh functional E_F(gamma) = sum i(F_j,gamma)^2 / i(F_j,G)", [this] {
      if (arg("h") || arg("v")) return walsh_origami();
      return walsh_torus();
    });
    origami_opts(walsh);
    opts(walsh, {{"tau", "Torus base point x0 = a+bi"}, {"curve", "Torus curve F p,q (default 1,0)"},
                 {"weight", "Torus weight (default 1)"}, {"gamma", "Test curve (torus p,q or origami descriptor)"},
                 {"x", "Torus point: also compose the Walsh Busemann function at x"},
                 {"weights", "Origami: weights of the vertical cylinders (default widths)"},
                 {"deform", "Origami base marking a,b,c,d (default identity)"}});
  }

  Outcome walsh_torus() const {
    const auto [re, im] = parse_exact_point(need("tau"));
    const UpperHalfPoint x0 = parse_upper_half_point(need("tau"));
    const torus::WeightedTorusFoliation f(parse_positive_rational(get("weight", "1"), "weight"),
                                          parse_curve(get("curve", "1,0")));
    const auto gamma = parse_curve(need("gamma"));
    const Rational a = Rational(f.curve.p()) + Rational(f.curve.q()) * re, b = Rational(f.curve.q()) * im;
    const Rational ext0 = f.weight * f.weight * (a * a + b * b) / im;
    const Rational i_fg = f.weight * Rational(torus::intersection(f.curve, gamma));
    const Rational e = i_fg * i_fg / ext0;
    Json r{{"E", exact(e)}, {"i_F_gamma", exact(i_fg)}, {"i_F_G", exact(ext0)}, {"single_component", true},
           {"reduction_holds", e == i_fg * i_fg / ext0}};
    bool ok = true;
    if (auto xs = arg("x")) {
      const UpperHalfPoint x = parse_upper_half_point(*xs);
      const auto wb = torus::walsh_busemann(x0, f, x, 1e-12, cap_);
      const double closed = torus::busemann(x0, f, x);
      const bool agree = std::abs(wb.value - closed) <= std::max(tol_, 1e-12);
      r["walsh_busemann"] = bracketed(wb.value, Bracket(std::min(wb.lower, wb.value), std::max(wb.upper, wb.value)));
      r["busemann_closed_form"] = approx(closed, 1e-14 * (1.0 + std::abs(closed)));
      r["agree"] = agree;
      ok = agree;
    }
    return {r, ok};
  }

  Outcome walsh_origami() const {
    const origami::Origami o = surface();
    const auto gamma = parse_trace(o, need("gamma"));
    auto comps = origami::vertical_foliation(o).components();
    if (auto ws = arg("weights")) {
      const auto w = parse_rational_list(*ws);
      if (w.size() != comps.size()) {
        throw InvalidInput("--weights needs " + std::to_string(comps.size()) + " entries, one per vertical cylinder");
      }
      for (std::size_t j = 0; j < w.size(); ++j) comps[j].weight = w[j];
    }
    const origami::MulticurveFoliation f(o, comps);
    const origami::MarkedFlatSurface<Rational> x(o, marking());
    const Rational e = origami::walsh_E(f, gamma, x);
    Json parts = Json::array();
    for (std::size_t j = 0; j < f.components().size(); ++j) {
      const Rational w = f.components()[j].weight;
      parts.push_back({{"weight", exact(w)},
                       {"i_core_gamma", exact(origami::crossing_number(f.cores()[j], gamma))},
                       {"i_core_G", exact(origami::i_with_foliation(f.cores()[j], origami::Axis::Horizontal, x))}});
    }
    Json r{{"gamma", trace_info(gamma)}, {"E", exact(e)}, {"components", parts},
           {"single_component", f.indecomposable()}};
    if (f.indecomposable()) {
      const Rational ig = f.components()[0].weight * Rational(origami::crossing_number(f.cores()[0], gamma));
      const Rational iG = f.components()[0].weight * origami::i_with_foliation(f.cores()[0], origami::Axis::Horizontal, x);
      r["reduction_holds"] = e == ig * ig / iG;
    }
    return {r, true};
  }

  // ---- horolab and curve graphs ----

  origami::MulticurveFoliation parse_foliation(const origami::Origami& o, const std::string& text) const {
    if (text == "vertical") return origami::vertical_foliation(o);
    if (text == "horizontal") return origami::horizontal_foliation(o);
    if (!text.empty() && (text[0] == 'H' || text[0] == 'V')) {
      const auto axis = text[0] == 'H' ? origami::Axis::Horizontal : origami::Axis::Vertical;
      const auto cyl = origami::cylinders(o, axis);
      const std::int64_t k = curvegraph::detail::parse_int(text.substr(1), "cylinder index");
      if (k < 1 || k > static_cast<std::int64_t>(cyl.size())) throw InvalidInput("cylinder " + text + " out of range");
      return origami::MulticurveFoliation(o, {{Rational(1), cyl[static_cast<std::size_t>(k - 1)]}});
    }
    throw InvalidInput("foliation '" + text + "' must be vertical, horizontal, H<k> or V<k>");
  }

  template <class B>
  static Outcome relation_record(const horolab::HoroSpec<typename B::Foliation>& h1,
                                 const horolab::HoroSpec<typename B::Foliation>& h2, const B& b) {
    const auto rel = horolab::classify(h1, h2, b);
    Json r{{"relation", horolab::tag_name(rel.tag)}, {"intersection", exact(rel.intersection)}, {"reason", rel.reason}};
    if (rel.bracket) r["sup_bracket"] = bracketed(*rel.bracket);
    const auto probe = horolab::inclusion_probe(h1, h2, b);
    Json p{{"question", "HB(1) inside HB(2)"}, {"outcome", horolab::outcome_name(probe.outcome)},
           {"samples", exact_count(probe.samples)}};
    if (probe.sup_bound) p["sup_bound"] = exact(*probe.sup_bound);
    if (probe.outcome == horolab::ProbeOutcome::ExcludedWitness) {
      p["witness_parameter"] = approx(probe.witness_parameter, 0.0);
      p["witness_ext"] = bracketed(probe.witness_ext);
    }
    r["probe"] = p;
    return {r, rel.tag != horolab::RelationTag::Undecided};
  }

  void define_horolab() {
    auto* rel = command("relation", "Relation of two horoballs (disjoint, tangent, overlapping, nested)", [this] {
      const Rational l1 = parse_positive_rational(need("level1"), "level1");
      const Rational l2 = parse_positive_rational(need("level2"), "level2");
      const Rational w1 = parse_positive_rational(get("weight1", "1"), "weight1");
      const Rational w2 = parse_positive_rational(get("weight2", "1"), "weight2");
      if (arg("h") || arg("v")) {
        const horolab::OrigamiBackend b(surface());
        const horolab::HoroSpec<origami::MulticurveFoliation> h1(parse_foliation(b.surface(), need("f1")).scaled(w1), l1);
        const horolab::HoroSpec<origami::MulticurveFoliation> h2(parse_foliation(b.surface(), need("f2")).scaled(w2), l2);
        return relation_record(h1, h2, b);
      }
      const horolab::HoroSpec<torus::WeightedTorusFoliation> h1(
          torus::WeightedTorusFoliation(w1, parse_curve(need("curve1"))), l1);
      const horolab::HoroSpec<torus::WeightedTorusFoliation> h2(
          torus::WeightedTorusFoliation(w2, parse_curve(need("curve2"))), l2);
      return relation_record(h1, h2, horolab::TorusBackend{});
    });
    origami_opts(rel);
    opts(rel, {{"curve1", "Torus curve p,q"}, {"curve2", "Torus curve p,q"}, {"level1", "Level of HS(1)"},
               {"level2", "Level of HS(2)"}, {"weight1", "Weight of foliation 1 (default 1)"},
               {"weight2", "Weight of foliation 2 (default 1)"},
               {"f1", "Origami foliation: vertical, horizontal, H<k>, V<k>"}, {"f2", "Origami foliation"}});

    auto* cg = command("curve-graph", "Curve graph of a finite curve set", [this] { return curve_graph(); });
    origami_opts(cg);
    opts(cg, {{"torus-curves", "Torus curves p,q;p,q;..."}, {"curves", "Origami curves separated by ';'"},
              {"directions", "Origami directions dx,dy;...: every class found in each"},
              {"table", "Read the curve set from a table file"}, {"table-out", "Write the curve set table"},
              {"distance", "Graph distance between two vertex ids u,v"},
              {"sigma", "Vertex map as the images of the vertices in order: id,id,..."},
              {"remark", "Re-marking matrix a,b,c,d: check the induced automorphism"}});
  }

  Outcome curve_graph() const {
    auto build = [this]() {
      if (auto path = arg("table")) {
        std::ifstream f(*path);
        if (!f) throw InvalidInput("cannot read table '" + *path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return curvegraph::parse_table(ss.str());
      }
      if (auto list = arg("torus-curves")) {
        std::vector<torus::TorusCurve> cs;
        for (const auto& s : split(*list, ';')) cs.push_back(parse_curve(s));
        return curvegraph::CurveSet::from_torus(cs);
      }
      const origami::Origami o = surface();
      std::vector<origami::CurveTrace> ts;
      if (auto list = arg("curves")) {
        for (const auto& s : split(*list, ';')) ts.push_back(parse_trace(o, s));
      }
      if (auto list = arg("directions")) {
        for (const auto& s : split(*list, ';')) {
          const auto [dx, dy] = curvegraph::detail::parse_pair(s, "direction");
          if (dx == 0 && dy == 0) throw InvalidInput("direction must be nonzero");
          for (auto& t : curvegraph::direction_curves(o, {dx, dy})) ts.push_back(std::move(t));
        }
      }
      if (ts.empty()) throw InvalidInput("curve-graph needs --curves, --directions, --torus-curves or --table");
      return curvegraph::CurveSet::from_traces(ts);
    };
    const curvegraph::CurveSet cs = build();
    const curvegraph::CurveGraph g = curvegraph::build_graph(cs);
    Json vs = Json::array();
    for (const auto& v : cs.vertices()) vs.push_back({{"id", v.id}, {"payload", curvegraph::payload_descriptor(v.payload)}});
    Json es = Json::array();
    for (const auto& [u, v] : g.edges()) es.push_back({cs.vertex(u).id, cs.vertex(v).id});
    std::size_t components = 0;
    std::vector<bool> seen(cs.size(), false);
    for (std::size_t u = 0; u < cs.size(); ++u) {
      if (seen[u]) continue;
      ++components;
      const auto d = curvegraph::distances_from(g, u);
      for (std::size_t v = 0; v < cs.size(); ++v) seen[v] = seen[v] || d[v].has_value();
    }
    Json r{{"surface", cs.kind() == curvegraph::SurfaceKind::Torus ? "torus" : "origami"},
           {"vertices", vs},
           {"i_matrix", int_matrix(cs.i_matrix())},
           {"edges", es},
           {"edge_count", exact_count(g.edge_count())},
           {"components", exact_count(components)},
           {"verified", cs.verify()}};
    auto index = [&](const std::string& id) {
      const std::size_t k = cs.index_of(id);
      if (k == cs.size()) throw InvalidInput("unknown vertex id '" + id + "'");
      return k;
    };
    if (auto d = arg("distance")) {
      const auto ids = split(*d, ',');
      if (ids.size() != 2) throw InvalidInput("--distance needs two vertex ids u,v");
      const auto dist = curvegraph::graph_distance(g, index(ids[0]), index(ids[1]));
      r["distance"] = dist ? Json{{"value", *dist}, {"exact", true}, {"reachable", true}}
                           : Json{{"reachable", false}, {"exact", true}};
    }
    if (auto s = arg("sigma")) {
      std::vector<std::size_t> sigma;
      for (const auto& id : split(*s, ',')) sigma.push_back(index(id));
      r["automorphism"] = curvegraph::automorphism_check(g, sigma);
    }
    if (auto m = arg("remark")) {
      const auto rep = curvegraph::check_invariance(cs, parse_int_matrix(*m));
      Json sig = Json::array();
      for (std::size_t k : rep.sigma) sig.push_back(cs.vertex(k).id);
      r["remark"] = {{"matrix", *m}, {"sigma", sig}, {"automorphism", rep.automorphism}, {"i_matches", rep.i_matches}};
    }
    if (auto path = arg("table-out")) {
      std::ofstream f(*path);
      if (!f) throw InvalidInput("cannot write table '" + *path + "'");
      f << curvegraph::to_table(cs);
      r["table"] = *path;
    }
    return {r, true};
  }
};

/// Runs one invocation; returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r;
  return r.run(args, out, err);
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace horoteich::cli
