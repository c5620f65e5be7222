#include "doctest.h"
#include "support.hpp"

#include "k3stab/io/config.hpp"
#include "k3stab/io/csv.hpp"
#include "k3stab/io/manifest.hpp"
#include "k3stab/io/parse.hpp"
#include "k3stab/io/svg.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace k3stab;
using namespace fixture;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "k3stab_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string cfg_path(const std::string& name) { return source_dir() + "/configs/" + name; }

// Runs the CLI with stdout and stderr captured to files; returns the exit code.
int run(const std::string& args, std::string* out = nullptr, std::string* err = nullptr) {
  fs::path o = scratch("stdout.txt"), e = scratch("stderr.txt");
  std::string cmd = std::string("\"") + K3STAB_CLI + "\" " + args + " >\"" + o.string() + "\" 2>\"" + e.string() + "\"";
  int status = std::system(cmd.c_str());
  if (out) *out = slurp(o);
  if (err) *err = slurp(e);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config files parse into the expected lattices") {
  auto q = io::load_config(cfg_path("quartic_line.cfg"));
  CHECK(q.picard_rank() == 2);
  CHECK(q.ns_gram() == quartic_line().ns_gram());
  REQUIRE(q.curves().size() == 1);
  CHECK(q.curves()[0] == ivec({0, 1}));
  CHECK(io::load_config(cfg_path("deg2.cfg")).ns_gram() == deg2().ns_gram());
  CHECK(io::load_config(cfg_path("abelian.cfg")).is_abelian());
  // text round trip
  auto again = io::parse_config(io::config_text(q));
  CHECK(again.ns_gram() == q.ns_gram());
  CHECK(again.ample() == q.ample());
  CHECK(again.curves() == q.curves());
}

TEST_CASE("config errors name the problem") {
  CHECK_THROWS_AS(io::parse_config("surface_type = k3\nrank = 1\n"), ConfigError);
  CHECK_THROWS_AS(io::parse_config("surface_type = k5\nrank = 1\ngram = 2\nample = 1\n"), ConfigError);
  CHECK_THROWS_AS(io::parse_config("surface_type = k3\nrank = 1\ngram = 3\nample = 1\n"), ConfigError);
  CHECK_THROWS_AS(io::parse_config("surface_type = k3\nrank = 1\ngram = 2\nample = 1\ncolour = red\n"), ConfigError);
  CHECK_THROWS_AS(io::parse_config("surface_type = k3\nrank = 2\ngram = 2\nample = 1\n"), ConfigError);
  CHECK_THROWS_AS(io::load_config("/nonexistent/k3.cfg"), ConfigError);
  CHECK_NOTHROW(io::parse_config("# comment\nsurface_type = k3   # trailing\nrank = 1\ngram = 2\nample = 1\n"));
}

TEST_CASE("parsing flags") {
  auto q = quartic_line();
  CHECK(io::parse_ns_class(q, "3H+2C") == qvec({3, 2}));
  CHECK(io::parse_ns_class(q, "1,-1/2") == qvec({1, Rational(-1, 2)}));
  CHECK(io::parse_ns_class(q, "0") == qvec({0, 0}));
  CHECK(io::parse_ns_class(q, "-1/2*e2") == qvec({0, Rational(-1, 2)}));
  CHECK_THROWS_AS(io::parse_ns_class(q, "2D"), ConfigError);
  CHECK(io::parse_mukai(q, "1,0,1,2") == mv({1, 0, 1, 2}));
  CHECK_THROWS_AS(io::parse_mukai(q, "1,0,1"), ConfigError);
  auto p = io::parse_point(q, "beta=1/2H; omega=2H+C");
  CHECK(p.beta == qvec({Rational(1, 2), 0}));
  CHECK(p.omega == qvec({2, 1}));
  CHECK(io::parse_point(deg2(), "omega=H").beta == qvec({0}));
  CHECK_THROWS_AS(io::parse_point(deg2(), "beta=H"), ConfigError);
  Rect r = io::parse_window("-0.25,1/4,1/10,3");
  CHECK(r.x0 == Rational(-1, 4));
  CHECK(r.y1 == 3);
  CHECK_THROWS_AS(io::parse_window("1,0,0,1"), ConfigError);
  auto w = io::parse_word(deg2(), "shift,twist:1,refl:1,0,1");
  CHECK(w.size() == 3);
  CHECK(to_string(w) == "shift twist:1 refl:1,0,1");
  CHECK_THROWS_AS(io::parse_word(deg2(), "spin:1"), ConfigError);
  for (Relation rel : {Relation::Negative, Relation::NonPositive, Relation::Zero, Relation::NonZero,
                       Relation::NonNegative, Relation::Positive})
    CHECK(io::parse_relation(io::to_string(rel)) == rel);
}

TEST_CASE("CSV quoting and comments round trip") {
  io::CsvTable t;
  t.header = {"a", "b"};
  t.rows = {{"1,2", "plain"}, {"say \"hi\"", ""}};
  t.comments = {"note one"};
  std::string text = io::write_csv(t);
  CHECK(text == "a,b\n\"1,2\",plain\n\"say \"\"hi\"\"\",\n# note one\n");
  auto back = io::read_csv(text);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK(back.comments == t.comments);
}

TEST_CASE("roots and walls tables round trip") {
  auto cfg = deg2();
  EnumerationQuery q;
  q.omega = exp_class(cfg, point(qvec({0}), qvec({2})));
  q.bound_m = 5;
  q.spherical_only = true;
  auto res = enumerate_bounded(cfg, q);
  auto table = io::roots_table(cfg, res);
  CHECK(io::roots_from_table(cfg, io::read_csv(io::write_csv(table))) == res.vectors);

  Slice2D slice = Slice2D::ample_slice(cfg, Rect{Rational(-1, 2), Rational(1, 2), Rational(1, 10), Rational(2)});
  auto walls = hole_walls(cfg, slice);
  REQUIRE(walls.size() > 1);
  std::string text = io::write_csv(io::walls_table(walls));
  auto back = io::walls_from_table(cfg, io::read_csv(text));
  REQUIRE(back.size() == walls.size());
  for (std::size_t k = 0; k < walls.size(); ++k) {
    CHECK(back[k].witness == walls[k].witness);
    CHECK(back[k].locus == walls[k].locus);
    CHECK(back[k].segments == walls[k].segments);
    REQUIRE(back[k].conditions.size() == walls[k].conditions.size());
    for (std::size_t c = 0; c < walls[k].conditions.size(); ++c) {
      CHECK(back[k].conditions[c].poly == walls[k].conditions[c].poly);
      CHECK(back[k].conditions[c].rel == walls[k].conditions[c].rel);
    }
  }
  CHECK(io::write_csv(io::walls_table(back)) == text);

  MockSheaf m{{{mv({0, 0, 1}), FactorKind::TorsionDim0}, {mv({1, 1, 0}), FactorKind::TorsionFreeSemistable}}};
  CHECK(io::mock_sheaf_from_table(cfg, io::read_csv(io::write_csv(io::mock_sheaf_table(cfg, m)))) == m);
}

TEST_CASE("SVG output has one path per polyline and the chamber layer") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, Rect{Rational(-1, 2), Rational(1, 2), Rational(1, 10), Rational(2)});
  auto walls = hole_walls(cfg, slice);
  auto chambers = chamber_sample(slice, walls, 8);
  std::string svg = io::walls_svg(slice, walls, chambers);
  std::size_t polylines = 0;
  for (const auto& w : walls) polylines += w.segments.size();
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = svg.find(needle); at != std::string::npos; at = svg.find(needle, at + 1)) ++n;
    return n;
  };
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count("<path") >= polylines);
  CHECK(count("class=\"hole\"") == polylines);
  CHECK(count("<g class=\"chambers\"") == 1);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("manifest hashes") {
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  io::RunManifest m;
  m.config_path = "x.cfg";
  m.command = "walls";
  m.parameters["grid"] = "32";
  fs::path out = scratch("artifact.csv");
  m.emit(out, "a,b\n");
  CHECK(slurp(out) == "a,b\n");
  auto j = nlohmann::json::parse(m.json());
  CHECK(j["command"] == "walls");
  CHECK(j["outputs"].size() == 1);
  CHECK(j["outputs"][0]["sha256"] == io::sha256_hex("a,b\n"));
}

TEST_CASE("CLI exit codes and outputs") {
  std::string out, err;
  CHECK(run("region --config " + cfg_path("deg2.cfg") + " --point \"beta=0; omega=2H\"", &out) == 0);
  auto report = nlohmann::json::parse(out);
  CHECK(report["in_L"] == true);

  CHECK(run("roots --config " + cfg_path("abelian.cfg") + " --spherical --bound 10", &out) == 0);
  auto table = io::read_csv(out);
  CHECK(table.rows.empty());
  bool policy = false;
  for (const auto& c : table.comments) policy = policy || c.find("abelian") != std::string::npos;
  CHECK(policy);

  CHECK(run("roots --config /nonexistent.cfg", nullptr, &err) == 2);
  CHECK_FALSE(err.empty());
  CHECK(run("roots --config " + cfg_path("deg2.cfg") + " --bogus", nullptr, &err) == 2);
  CHECK(run("region --config " + cfg_path("deg2.cfg") + " --point \"beta=0; omega=0\"", nullptr, &err) == 3);
  CHECK(err.find("omega^2 > 0") != std::string::npos);
  CHECK(run("act --config " + cfg_path("deg2.cfg") + " --word refl:1,0,0 --vector 0,0,1", nullptr, &err) == 3);
  CHECK(run("roots --config " + cfg_path("deg2.cfg") + " --point \"beta=0; omega=H\" --bound 40 --box-cap 10", nullptr,
            &err) == 4);

  CHECK(run("act --config " + cfg_path("deg2.cfg") + " --word refl:1,0,1 --vector 0,0,1", &out) == 0);
  CHECK(out.find("(0,0,1) -> (-1,0,0)") != std::string::npos);
  CHECK(run("reduce --config " + cfg_path("quartic_line.cfg") + " --point \"beta=0; omega=3H+2C\"", &out) == 0);
  CHECK(out.find("omega=(3,1)") != std::string::npos);
  CHECK(out.find("verified: yes") != std::string::npos);

  fs::path sheaf = scratch("sheaf.csv");
  std::ofstream(sheaf) << "kind,r,d1,s\ntorsion0,0,0,1\nfree,1,1,0\nfree,1,-1,0\n";
  CHECK(run("heart --config " + cfg_path("deg2.cfg") + " --point \"beta=0; omega=2H\" --sheaf " + sheaf.string(), &out) ==
        0);
  CHECK_FALSE(out.empty());
  CHECK(run("large-volume --config " + cfg_path("deg2.cfg") + " --ve 1,1,0 --va 1,1,1 --point \"beta=0; omega=H\"",
            &out) == 0);
  CHECK(out.find("threshold: none") != std::string::npos);
}

TEST_CASE("CLI roots output re-reads and the manifest hashes it") {
  fs::path csv = scratch("roots.csv"), manifest = scratch("roots.json");
  REQUIRE(run("roots --config " + cfg_path("deg2.cfg") +
              " --point \"beta=0; omega=2H\" --bound 5 --spherical --positive-rank --out-csv " + csv.string() +
              " --manifest " + manifest.string()) == 0);
  auto cfg = deg2();
  CHECK(io::roots_from_table(cfg, io::read_csv(slurp(csv))) ==
        std::vector<MukaiVec>{mv({1, -1, 2}), mv({1, 0, 1}), mv({1, 1, 2})});
  auto j = nlohmann::json::parse(slurp(manifest));
  CHECK(j["outputs"][0]["sha256"] == io::sha256_hex(slurp(csv)));
}
