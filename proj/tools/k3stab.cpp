// k3stab: command-line front end.
#include "k3stab/io/config.hpp"
#include "k3stab/io/csv.hpp"
#include "k3stab/io/manifest.hpp"
#include "k3stab/io/parse.hpp"
#include "k3stab/io/svg.hpp"
#include "k3stab/isometries.hpp"
#include "k3stab/largevolume.hpp"
#include "k3stab/regions.hpp"
#include "k3stab/tilt.hpp"
#include "k3stab/walls.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace k3stab;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string vec_str(const Vec<Rational>& v) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) out += (k ? "," : "") + v(k).str();
  return out + ")";
}

std::string point_str(const TubePointQ& p) { return "beta=" + vec_str(p.beta) + " omega=" + vec_str(p.omega); }

json vectors_json(const std::vector<MukaiVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_string(v));
  return a;
}

// Output files go through the manifest; stdout otherwise.
struct Sink {
  io::RunManifest manifest;
  std::string manifest_path;

  void put(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") std::cout << bytes;
    else manifest.emit(path, bytes);
  }
  void finish() {
    if (!manifest_path.empty()) {
      manifest.library_version = kVersion;
      std::ofstream(manifest_path) << manifest.json();
    }
  }
};

struct Common {
  std::string config;
  int threads = 1;
  std::string manifest;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "surface configuration file")->required();
  sub->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--manifest", c.manifest, "write a JSON run manifest here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical shadow of Bridgeland stability conditions on K3 and abelian surfaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common common;
  Sink sink;

  // roots
  std::string roots_point = "beta=0; omega=H", roots_bound = "1", roots_floor = "-2", roots_out, roots_cap;
  bool roots_spherical = false, roots_positive = false;
  auto* roots = app.add_subcommand("roots", "enumerate classes with (v,v) >= floor and |Z(v)| <= bound");
  add_common(roots, common);
  roots->add_option("--point", roots_point, "tube-domain point \"beta=..; omega=..\"");
  roots->add_option("--bound", roots_bound, "bound m on |Z(v)|");
  roots->add_option("--floor", roots_floor, "lower bound on (v,v)");
  roots->add_flag("--spherical", roots_spherical, "only (v,v) = -2");
  roots->add_flag("--positive-rank", roots_positive, "only r > 0");
  roots->add_option("--box-cap", roots_cap, "refuse boxes with more lattice points");
  roots->add_option("--out-csv", roots_out, "CSV output (default stdout)");

  // region
  std::string region_point, region_bound = "1000";
  auto* region = app.add_subcommand("region", "region membership report for exp(beta + i omega)");
  add_common(region, common);
  region->add_option("--point", region_point, "tube-domain point")->required();
  region->add_option("--search-bound", region_bound, "enumeration radius cap");

  // walls
  std::string walls_class, walls_window = "-1/4,1/4,1/10,3", walls_csv, walls_svg;
  std::string b0 = "0", w0 = "0", db = "H", dw = "H";
  int walls_grid = 32;
  auto* walls = app.add_subcommand("walls", "hole walls and numerical walls in a 2-D slice");
  add_common(walls, common);
  walls->add_option("--class", walls_class, "Mukai vector r,d..,s for numerical walls");
  walls->add_option("--window", walls_window, "x0,x1,y0,y1");
  walls->add_option("--grid", walls_grid, "sampling resolution per axis")->check(CLI::Range(2, 4096));
  walls->add_option("--base-beta", b0, "beta at x = 0");
  walls->add_option("--base-omega", w0, "omega at y = 0");
  walls->add_option("--dir-beta", db, "beta direction");
  walls->add_option("--dir-omega", dw, "omega direction");
  walls->add_option("--out-csv", walls_csv, "CSV output (default stdout)");
  walls->add_option("--out-svg", walls_svg, "SVG output");

  // act
  std::string act_word, act_vector, act_point;
  auto* act = app.add_subcommand("act", "apply a word in shift, twist, refl to N(X)");
  add_common(act, common);
  act->add_option("--word", act_word, "e.g. \"shift,twist:1,refl:1,0,1\"")->required();
  act->add_option("--vector", act_vector, "Mukai vector to transform");
  act->add_option("--point", act_point, "tube-domain point to transform");

  // reduce
  std::string reduce_point;
  int reduce_steps = 1000;
  auto* reduce = app.add_subcommand("reduce", "reflect omega into the ample chamber");
  add_common(reduce, common);
  reduce->add_option("--point", reduce_point, "tube-domain point")->required();
  reduce->add_option("--max-steps", reduce_steps, "reflection budget");

  // heart
  std::string heart_point, heart_sheaf, heart_depth = "4";
  auto* heart = app.add_subcommand("heart", "torsion-pair split and heart phases of a mock sheaf");
  add_common(heart, common);
  heart->add_option("--point", heart_point, "tube-domain point")->required();
  heart->add_option("--sheaf", heart_sheaf, "CSV with columns kind,r,d..,s")->required();
  heart->add_option("--search-depth", heart_depth, "|Z| bound for the stability function check");

  // large-volume
  std::string lv_e, lv_a, lv_point, lv_n;
  int lv_nmax = 100;
  auto* lv = app.add_subcommand("large-volume", "twisted slopes and the limit omega -> n omega");
  add_common(lv, common);
  lv->add_option("--ve", lv_e, "Mukai vector of E")->required();
  lv->add_option("--va", lv_a, "Mukai vector of A")->required();
  lv->add_option("--point", lv_point, "tube-domain point")->required();
  lv->add_option("--n-max", lv_nmax, "largest n scanned")->check(CLI::Range(1, 1000000));
  lv->add_option("--n", lv_n, "evaluate the gap at this n as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const SurfaceConfig cfg = io::load_config(common.config);
    sink.manifest.config_path = common.config;
    sink.manifest_path = common.manifest;
    auto param = [&](const std::string& k, const std::string& v) { sink.manifest.parameters[k] = v; };
    param("threads", std::to_string(common.threads));

    if (*roots) {
      sink.manifest.command = "roots";
      param("point", roots_point);
      param("bound", roots_bound);
      param("floor", roots_floor);
      EnumerationQuery q;
      q.omega = exp_class(cfg, io::parse_point(cfg, roots_point));
      q.bound_m = parse_rational(roots_bound);
      q.norm_floor = parse_integer(roots_floor);
      q.spherical_only = roots_spherical;
      q.rank_positive_only = roots_positive;
      q.threads = common.threads;
      if (!roots_cap.empty()) q.box_cap = parse_integer(roots_cap);
      sink.put(roots_out, io::write_csv(io::roots_table(cfg, enumerate_bounded(cfg, q))));
    } else if (*region) {
      sink.manifest.command = "region";
      param("point", region_point);
      RegionOptions opt;
      opt.search_bound = parse_rational(region_bound);
      opt.threads = common.threads;
      const TubePointQ p = io::parse_point(cfg, region_point);
      RegionReport rep = region_report(cfg, exp_class(cfg, p), opt);
      json j;
      j["point"] = point_str(p);
      for (auto [k, v] : {std::pair{"in_P", rep.in_P}, {"in_P_plus", rep.in_P_plus}, {"in_P0", rep.in_P0},
                          {"in_Q", rep.in_Q}, {"in_K", rep.in_K}, {"in_L", rep.in_L}, {"degenerate", rep.degenerate},
                          {"complete", rep.complete}})
        j[k] = v;
      j["p0_witnesses"] = vectors_json(rep.p0_witnesses);
      j["l_witnesses"] = vectors_json(rep.l_witnesses);
      if (rep.q_normalization) {
        const auto& qn = *rep.q_normalization;
        json n;
        json beta = json::array(), omega = json::array();
        for (Eigen::Index k = 0; k < qn.point.beta.size(); ++k) {
          beta.push_back(qn.point.beta(k).str());
          omega.push_back(qn.point.omega(k).str());
        }
        n["beta"] = beta;
        n["omega"] = omega;
        n["irrational"] = qn.irrational;
        j["q_normalization"] = n;
      }
      j["notes"] = rep.notes;
      sink.put("", j.dump(2) + "\n");
    } else if (*walls) {
      sink.manifest.command = "walls";
      param("class", walls_class);
      param("window", walls_window);
      param("grid", std::to_string(walls_grid));
      param("slice", b0 + ";" + w0 + ";" + db + ";" + dw);
      Slice2D slice(cfg, io::parse_ns_class(cfg, b0), io::parse_ns_class(cfg, w0), io::parse_ns_class(cfg, db),
                    io::parse_ns_class(cfg, dw), io::parse_window(walls_window));
      WallOptions opt;
      opt.grid = walls_grid;
      opt.threads = common.threads;
      std::vector<Wall> all = hole_walls(cfg, slice, opt);
      if (!walls_class.empty()) {
        auto num = numerical_walls(cfg, slice, io::parse_mukai(cfg, walls_class), opt);
        all.insert(all.end(), num.begin(), num.end());
      }
      std::sort(all.begin(), all.end(), wall_less);
      io::CsvTable t = io::walls_table(all);
      t.comments.push_back("every wall is a potential wall; realization by semistable objects is not decided");
      t.comments.push_back("window " + walls_window + " grid " + std::to_string(walls_grid));
      sink.put(walls_csv, io::write_csv(t));
      if (!walls_svg.empty()) sink.put(walls_svg, io::walls_svg(slice, all, chamber_sample(slice, all, walls_grid)));
    } else if (*act) {
      sink.manifest.command = "act";
      param("word", act_word);
      IsometryWord w = io::parse_word(cfg, act_word);
      IsometryCertificate cert = verify_hodge_isometry(cfg, w);
      std::ostringstream out;
      out << "word: " << to_string(w) << "\n";
      out << "matrix:\n" << cert.matrix << "\n";
      out << "preserves pairing: " << (cert.preserves_pairing ? "yes" : "no") << "\n";
      out << "integral inverse: " << (cert.integral_inverse ? "yes" : "no") << "\n";
      if (!act_vector.empty()) {
        MukaiVec v = io::parse_mukai(cfg, act_vector);
        out << "vector: " << to_string(v) << " -> " << to_string(apply_word(cfg, w, v)) << "\n";
      }
      if (!act_point.empty()) {
        ComplexMukaiVec om = exp_class(cfg, io::parse_point(cfg, act_point));
        ComplexMukaiVec im = apply_word_complex(cfg, w, om);
        out << "Omega: " << to_string(om.re) << " + i" << to_string(om.im) << " -> " << to_string(im.re) << " + i"
            << to_string(im.im) << "\n";
        RegionReport rep = region_report(cfg, im, {});
        out << "image in Q(X): " << (rep.in_Q ? "yes" : "no") << ", in P+: " << (rep.in_P_plus ? "yes" : "no") << "\n";
      }
      sink.put("", out.str());
    } else if (*reduce) {
      sink.manifest.command = "reduce";
      param("point", reduce_point);
      ReductionResult res = reduce_to_ample_chamber(cfg, io::parse_point(cfg, reduce_point), reduce_steps);
      std::ostringstream out;
      out << "before: " << point_str(res.trace.front()) << "\n";
      out << "after: " << point_str(res.point) << "\n";
      out << "word: " << to_string(res.word) << "\n";
      out << "steps: " << res.word.size() << "\n";
      out << "verified: " << (res.verified ? "yes" : "no") << "\n";
      sink.put("", out.str());
      if (!res.converged) throw DomainError("no ample chamber reached within " + std::to_string(reduce_steps) + " steps");
    } else if (*heart) {
      sink.manifest.command = "heart";
      param("point", heart_point);
      param("sheaf", heart_sheaf);
      const TubePointQ p = io::parse_point(cfg, heart_point);
      MockSheaf m = io::mock_sheaf_from_table(cfg, io::read_csv(read_file(heart_sheaf)));
      auto [t, f] = torsion_pair_split(cfg, m, p);
      std::ostringstream out;
      out << "cut beta.omega = " << cfg.dot<Rational>(p.beta, p.omega) << "\n";
      auto show = [&](const char* name, const MockSheaf& part, HeartPosition pos) {
        for (const auto& x : part.factors) {
          Phase ph = heart_phase(cfg, x.v, p, pos);
          out << name << " " << to_string(x.v) << " " << to_string(x.kind) << " Z=" << to_string(ph.charge())
              << " phase " << ph.bracket() << "\n";
        }
      };
      show("T", t, HeartPosition::InT);
      show("F[1]", f, HeartPosition::InFShifted);
      StabilityCheck sc = check_stability_function(cfg, p, parse_rational(heart_depth), common.threads);
      out << "stability function: " << (sc.ok ? "yes" : "no");
      if (sc.witness) out << " (witness " << to_string(*sc.witness) << ")";
      out << "\n";
      sink.put("", out.str());
    } else if (*lv) {
      sink.manifest.command = "large-volume";
      param("ve", lv_e);
      param("va", lv_a);
      param("point", lv_point);
      param("n_max", std::to_string(lv_nmax));
      const TubePointQ p = io::parse_point(cfg, lv_point);
      MukaiVec ve = io::parse_mukai(cfg, lv_e), va = io::parse_mukai(cfg, lv_a);
      TwistedSlopes se = twisted_slopes(cfg, ve, p), sa = twisted_slopes(cfg, va, p);
      std::ostringstream out;
      out << "E: " << to_string(ve) << " " << to_string(se) << " limit phase " << to_string(asymptotic_phase_class(cfg, ve, p)) << "\n";
      out << "A: " << to_string(va) << " " << to_string(sa) << " limit phase " << to_string(asymptotic_phase_class(cfg, va, p)) << "\n";
      out << "twisted A <= E: " << (twisted_leq(sa, se) ? "yes" : "no") << "\n";
      out << "gap(n) = " << to_string(GaussianRational(-(se.nu - sa.nu), 0)) << " + n*" << (se.mu - sa.mu) << "i\n";
      if (!lv_n.empty()) out << "gap(" << lv_n << ") = " << to_string(large_volume_gap(cfg, ve, va, p, parse_rational(lv_n))) << "\n";
      auto n0 = phase_order_threshold(cfg, ve, va, p, lv_nmax);
      out << "threshold: " << (n0 ? std::to_string(*n0) : std::string("none up to ") + std::to_string(lv_nmax)) << "\n";
      sink.put("", out.str());
    }
    sink.finish();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationCapError& e) {
    std::cerr << "enumeration refused: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
