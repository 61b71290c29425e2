#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <sys/wait.h>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "linklab/census.hpp"
#include "linklab/errors.hpp"

using namespace linklab;
using namespace linklab::cli;

namespace {

const std::string kData = LINKLAB_TEST_DATA;
const std::string kCli = LINKLAB_CLI;

struct Run {
  int code;
  std::string out, err;
};

std::string read_file(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the installed binary; captures stdout, stderr and the exit status.
Run shell(const std::string& args) {
  const std::string o = "cli_test_stdout.txt", e = "cli_test_stderr.txt";
  const int status = std::system((kCli + " " + args + " >" + o + " 2>" + e).c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(o), read_file(e)};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("ranges") {
  CHECK(parse_range("2..5") == std::vector<long>{2, 3, 4, 5});
  CHECK(parse_range("10,12,20..21") == std::vector<long>{10, 12, 20, 21});
  CHECK_THROWS_AS(parse_range("5..2"), DomainError);
  CHECK_THROWS_AS(parse_range("x"), DomainError);
}

TEST_CASE("sample is deterministic per seed") {
  const auto a = shell("sample --class alternating --n 10 --count 100 --seed 7 --format pd");
  const auto b = shell("sample --class alternating --n 10 --count 100 --seed 7 --format pd");
  const auto c = shell("sample --class alternating --n 10 --count 100 --seed 8 --format pd");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(lines(a.out).size() == 101);

  // worker count changes nothing but the stream assignment recorded per row
  GlobalOptions g;
  g.seed = 7;
  g.streams = 3;
  SampleOptions o;
  o.cls = "uniform";
  o.n = 6;
  o.count = 12;
  std::ostringstream x, y, err;
  cmd_sample(g, o, x, err);
  cmd_sample(g, o, y, err);
  CHECK(x.str() == y.str());
  const auto doc = nlohmann::json::parse(x.str());
  CHECK(doc.at("manifest").at("records").size() == 12);
  CHECK(doc.at("diagrams").size() == 12);
  CHECK(doc.at("manifest").at("records")[4].at("stream_id") == 1);
}

TEST_CASE("manifest file") {
  const auto r = shell("sample --class q4v --n 5 --count 9 --seed 3 --out cli_sample.json");
  REQUIRE(r.code == 0);
  const auto m = nlohmann::json::parse(read_file("cli_sample.json.manifest.json"));
  CHECK(m.at("count") == 9);
  CHECK(m.at("records").size() == 9);
  CHECK(m.at("seed") == 3);
}

TEST_CASE("infeasible requests") {
  const auto r = shell("sample --class sq --n 20 --count 1");
  CHECK(r.code == 4);
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(shell("census --formula nope").code == 1);
  CHECK(shell("sample --n 3 --class bogus").code != 0);
}

TEST_CASE("census output") {
  GlobalOptions g;
  CensusOptions o;
  o.formula = "sq";
  o.n = "2..5";
  std::ostringstream out, err;
  REQUIRE(cmd_census(g, o, out, err) == 0);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "# linklab-csv v1");
  CHECK(ls[2] == "sq,2,1");
  CHECK(ls[3] == "sq,3,2");
  CHECK(ls[4] == "sq,4,6");
  CHECK(ls[5] == "sq,5,22");

  CensusOptions t;
  t.table = "n=20 m=2..4";
  std::ostringstream tout;
  REQUIRE(cmd_census(g, t, tout, err) == 0);
  const auto tl = lines(tout.str());
  REQUIRE(tl.size() == 5);
  // exact rationals parse back and agree with the decimal column
  for (std::size_t i = 2; i < tl.size(); ++i) {
    const auto f = split(tl[i]);
    REQUIRE(f.size() == 4);
    const mpq_class q(f[2]);
    CHECK(q.get_d() == doctest::Approx(std::stod(f[3])).epsilon(1e-6));
    CHECK(q == mpq_class(4) / std::stol(f[1]) * prob_root_face(20, std::stol(f[1])).value);
  }

  CensusOptions tp;
  tp.formula = "tangle_prob";
  tp.n = "1";
  tp.p = "2";
  tp.big_n = "50";
  std::ostringstream pout;
  REQUIRE(cmd_census(g, tp, pout, err) == 0);
  const auto row = split(lines(pout.str()).back());
  CHECK(std::stod(row[5]) == doctest::Approx(0.513627).epsilon(1e-6));
}

TEST_CASE("stats rows respect the face identities") {
  // loop-free diagrams have n+2 faces of degree >= 2 and 4n corners, so the means must too
  GlobalOptions g;
  StatsOptions o;
  o.observable = "facetype";
  o.cls = "alternating";
  o.n = "5";
  o.count = 40;
  std::ostringstream out, err;
  REQUIRE(cmd_stats(g, o, out, err) == 0);
  double faces = 0, corners = 0;
  for (const auto& l : lines(out.str())) {
    const auto f = split(l);
    if (f.size() < 5 || f[1].empty() || f[1][0] != 'F') continue;
    const double k = std::stod(f[1].substr(1));
    faces += std::stod(f[3]);
    corners += k * std::stod(f[3]);
  }
  CHECK(faces == doctest::Approx(7));
  CHECK(corners == doctest::Approx(20));

  StatsOptions v;
  v.observable = "volume";
  std::ostringstream vout;
  CHECK_THROWS_AS(cmd_stats(g, v, vout, err), MissingDataError);
}

TEST_CASE("bigon counts are right-skewed at small n") {
  // direction only: skewness standard error is about sqrt(6 / count) = 0.02
  GlobalOptions g;
  g.seed = 99;
  StatsOptions o;
  o.observable = "bigons";
  o.cls = "sq";
  o.n = "8";
  o.count = 15000;
  std::ostringstream out, err;
  REQUIRE(cmd_stats(g, o, out, err) == 0);
  const auto f = split(lines(out.str()).back());
  REQUIRE(f[1] == "F2");
  // exact mean is 2n P(8,2)
  const double exact = mpq_class(expected_m_gons(8, 2)).get_d();
  const double se = std::sqrt(std::stod(f[4]) / 15000);
  CHECK(std::abs(std::stod(f[3]) - exact) < 3 * se);
  CHECK(std::stod(f[5]) > 0.1);
}

TEST_CASE("embed is reproducible and calibrated") {
  const auto a = shell("embed --tangle builtin:square --N 20 --samples 2000 --seed 11");
  const auto b = shell("embed --tangle builtin:square --N 20 --samples 2000 --seed 11");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  GlobalOptions g;
  EmbedOptions o;
  o.big_n = 12;
  o.samples = 400;
  std::size_t within = 0, within1 = 0;
  double zsum = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    g.seed = seed;
    std::ostringstream out, err;
    REQUIRE(cmd_embed(g, o, out, err) == 0);
    const double z = std::stod(split(lines(out.str()).back()).back());
    within += std::abs(z) < 3 ? 1 : 0;
    within1 += std::abs(z) < 1 ? 1 : 0;
    zsum += z;
  }
  CHECK(within >= 19);
  // about 68% should fall inside one sigma; Binomial(20, 0.68) is below 8 with probability < 1%
  CHECK(within1 >= 8);
  CHECK(std::abs(zsum / std::sqrt(20.0)) < 4);
}

TEST_CASE("embed lint") {
  std::ofstream bad("cli_bad_tangle.json");
  // a path of two edges: its only face revisits the middle vertex
  bad << R"({"n_darts":4,"alpha":[1,0,3,2],"nu":[0,2,1,3],"root":0})";
  bad.close();
  const auto r = shell("embed --tangle cli_bad_tangle.json --N 10");
  CHECK(r.code == 2);
  CHECK(r.err.find("self-avoiding") != std::string::npos);
}

TEST_CASE("join volumes") {
  const std::string d = kData + "/diagrams.pd", v = kData + "/volumes.csv";
  const auto r = shell("join-volumes --diagrams " + d + " --volumes " + v);
  REQUIRE(r.code == 0);
  CHECK(r.err.find("violations 0") != std::string::npos);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() >= 4);
  std::size_t checked = 0;
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const auto f = split(rows[i]);
    if (f.back() == "NA") continue;
    ++checked;
    CHECK(f.back() == "1");
  }
  CHECK(checked >= 4);
  CHECK(shell("join-volumes --diagrams " + d + " --volumes " + v).out == r.out);

  const auto empty = shell("join-volumes --diagrams " + d + " --volumes " + kData + "/volumes_empty.csv");
  CHECK(empty.code == 0);
  CHECK(empty.err.find("warning") != std::string::npos);

  // a deliberately wrong volume is reported
  std::ofstream w("cli_wrong_volumes.csv");
  w << "diagram_id,volume\n4_1,99.0\n";
  w.close();
  CHECK(shell("join-volumes --diagrams " + d + " --volumes cli_wrong_volumes.csv").code == 3);
}

TEST_CASE("export round trip") {
  const std::string d = kData + "/diagrams.pd";
  const auto js = shell("export --in " + d + " --format json --out cli_export.json");
  REQUIRE(js.code == 0);
  const auto back = shell("export --in cli_export.json --format pd");
  REQUIRE(back.code == 0);
  std::vector<std::string> orig;
  for (const auto& l : lines(read_file(d)))
    if (!l.empty() && l[0] != '#') orig.push_back(l);
  CHECK(lines(back.out) == orig);
  const auto csv = shell("export --in " + d + " --format csv");
  CHECK(lines(csv.out).size() == orig.size() + 2);
}
