#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <moore2/cli.hpp>

using namespace moore2;

namespace {

struct CliResult {
  int rc = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"moore2"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  CliResult r;
  r.rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// scratch files live in the test working directory and are overwritten freely
std::string scratch(const std::string& name, const std::string& bytes) {
  std::string path = "cli_scratch_" + name;
  std::ofstream f(path, std::ios::binary);
  f << bytes;
  return path;
}

}  // namespace

TEST_CASE("cli: build reports") {
  auto r = run_cli({"build", "diff", "--q", "2"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("order 7\n") != std::string::npos);
  REQUIRE(r.out.find("diameter 2\n") != std::string::npos);
  REQUIRE(r.err.empty());

  r = run_cli({"build", "diff", "--set", "0,1,4,14,16", "--mod", "21"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("order 21\n") != std::string::npos);
  REQUIRE(r.out.find("edges 50\n") != std::string::npos);
  REQUIRE(r.out.find("degrees 4:5 5:16\n") != std::string::npos);

  r = run_cli({"build", "brown-aug", "--q", "4"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("order 22\n") != std::string::npos);
  REQUIRE(r.out.find("degrees 5:22\n") != std::string::npos);

  r = run_cli({"build", "bilinear", "--q", "2", "--alpha", "1"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("order 7\n") != std::string::npos);
  REQUIRE(r.out.find("degrees 2:3 3:4\n") != std::string::npos);

  r = run_cli({"build", "hybrid", "--q", "2"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("order 49\n") != std::string::npos);
  REQUIRE(r.out.find("max_degree 10\n") != std::string::npos);
  REQUIRE(r.out.find("diameter 2\n") != std::string::npos);
}

TEST_CASE("cli: json report") {
  auto r = run_cli({"build", "brown", "--q", "3", "--json"});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["order"] == 13);
  REQUIRE(j["edges"] == 24);  // q(q+1)^2/2 with q = 3
  REQUIRE(j["diameter"] == 2);
  REQUIRE(j["max_degree"] == 4);
  REQUIRE(j["moore_bound"] == 17);
  REQUIRE(j["moore_gap"] == 4);
  REQUIRE(j["histogram"]["3"] == 4);
  REQUIRE(j["histogram"]["4"] == 9);
}

TEST_CASE("cli: bad input exits 2 with a one-line diagnostic") {
  auto r = run_cli({"build", "hybrid", "--q", "4"});
  REQUIRE(r.rc == 2);
  REQUIRE(r.err.find("p=21 is not prime") != std::string::npos);
  REQUIRE(r.out.empty());

  r = run_cli({"build", "diff", "--q", "6"});
  REQUIRE(r.rc == 2);
  REQUIRE_FALSE(r.err.empty());

  r = run_cli({"build", "diff"});
  REQUIRE(r.rc == 2);
  REQUIRE(r.err.find("--q") != std::string::npos);

  r = run_cli({"build", "diff", "--set", "0,1,3"});
  REQUIRE(r.rc == 2);  // --set without --mod

  r = run_cli({"frobnicate"});
  REQUIRE(r.rc == 2);

  r = run_cli({"export", "diff", "--q", "2", "--format", "tikz"});
  REQUIRE(r.rc == 2);
  REQUIRE(r.err.find("unknown format") != std::string::npos);
}

TEST_CASE("cli: help exits 0") {
  auto r = run_cli({"--help"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("build") != std::string::npos);
  REQUIRE(r.out.find("verify") != std::string::npos);
  REQUIRE(r.out.find("iso") != std::string::npos);
}

TEST_CASE("cli: verify pds") {
  auto r = run_cli({"verify", "pds", "--set", "0,1,3", "--mod", "7"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("valid yes\n") != std::string::npos);

  r = run_cli({"verify", "pds", "--set", "0,1,2", "--mod", "7"});
  REQUIRE(r.rc == 1);
  REQUIRE(r.out.find("valid no\n") != std::string::npos);
  REQUIRE(r.out.find("residue 1 has multiplicity 2, expected 1") != std::string::npos);

  r = run_cli({"verify", "pds", "--set", "0,1,2", "--mod", "7", "--json"});
  REQUIRE(r.rc == 1);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["valid"] == false);
  REQUIRE(j["multiplicities"].size() == 7);
  REQUIRE_FALSE(j["failures"].empty());
}

TEST_CASE("cli: verify rds") {
  auto r = run_cli({"verify", "rds", "--p", "5"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("valid yes\n") != std::string::npos);

  r = run_cli({"verify", "rds", "--p", "4"});
  REQUIRE(r.rc == 2);

  r = run_cli({"verify", "rds", "--p", "13", "--json"});
  REQUIRE(r.rc == 0);
  REQUIRE(nlohmann::json::parse(r.out)["valid"] == true);
}

TEST_CASE("cli: verify graph from files") {
  auto g6 = scratch("brown3.g6", to_graph6(brown_graph(3)) + "\n");
  auto r = run_cli({"verify", "graph", g6.c_str()});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("order 13\n") != std::string::npos);
  REQUIRE(r.out.find("diameter 2\n") != std::string::npos);

  auto path = scratch("p4.edges", "4 3\n0 1\n1 2\n2 3\n");
  r = run_cli({"verify", "graph", path.c_str()});
  REQUIRE(r.rc == 1);  // diameter 3
  REQUIRE(r.out.find("diameter 3\n") != std::string::npos);

  auto disc = scratch("disc.edges", "4 1\n0 1\n");
  r = run_cli({"verify", "graph", disc.c_str()});
  REQUIRE(r.rc == 1);
  REQUIRE(r.out.find("diameter infinite\n") != std::string::npos);

  r = run_cli({"verify", "graph", "no_such_file_anywhere"});
  REQUIRE(r.rc == 2);
  REQUIRE(r.err.find("cannot open file") != std::string::npos);
}

TEST_CASE("cli: export formats and determinism") {
  auto a = run_cli({"export", "diff", "--q", "3", "--format", "graph6"});
  auto b = run_cli({"export", "diff", "--q", "3", "--format", "graph6"});
  REQUIRE(a.rc == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out == to_graph6(diff_graph(singer_set(3))) + "\n");

  auto e = run_cli({"export", "brown", "--q", "2", "--format", "edges"});
  REQUIRE(e.rc == 0);
  REQUIRE(e.out == to_edge_list(brown_graph(2)));

  auto d = run_cli({"export", "brown", "--q", "2", "--format", "dot"});
  REQUIRE(d.rc == 0);
  REQUIRE(d.out.find("label=\"(0,1,1)\"") != std::string::npos);

  // --out writes the same bytes to a file
  auto path = std::string("cli_scratch_out.g6");
  auto f = run_cli({"export", "diff", "--q", "3", "--format", "graph6", "--out", path.c_str()});
  REQUIRE(f.rc == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  REQUIRE(buf.str() == a.out);
}

TEST_CASE("cli: iso singer-brown") {
  auto r = run_cli({"iso", "singer-brown", "--q", "4"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("# q 4\n") != std::string::npos);
  REQUIRE(r.out.find("0 -> (1,0,1)\n") != std::string::npos);
  auto f = certificate_from_text(r.out);
  REQUIRE(f.map == singer_to_brown(4).map);

  r = run_cli({"iso", "singer-brown", "--q", "3", "--json"});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["verified"] == true);
  REQUIRE(j["map"].size() == 13);

  r = run_cli({"iso", "singer-brown", "--q", "6"});
  REQUIRE(r.rc == 2);
}

TEST_CASE("cli: iso general") {
  auto g1 = scratch("k4.g6", "C~");
  auto g2 = scratch("k4b.edges", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto r = run_cli({"iso", "general", g1.c_str(), g2.c_str()});
  REQUIRE(r.rc == 0);
  auto f = certificate_from_text(r.out);
  REQUIRE(f.map.size() == 4);

  auto g3 = scratch("p4.g6", "Ch");
  r = run_cli({"iso", "general", g1.c_str(), g3.c_str()});
  REQUIRE(r.rc == 1);
  REQUIRE(r.out.find("not isomorphic") != std::string::npos);

  r = run_cli({"iso", "general", g1.c_str(), g3.c_str(), "--json"});
  REQUIRE(r.rc == 1);
  REQUIRE(nlohmann::json::parse(r.out)["isomorphic"] == false);
}

TEST_CASE("cli: iso check round trip") {
  auto dpath = scratch("diff2.edges", to_edge_list(diff_graph(singer_brown_set(2))));
  auto bpath = scratch("brown2.edges", to_edge_list(brown_graph(2)));
  auto cert = run_cli({"iso", "singer-brown", "--q", "2", "--out", "cli_scratch_cert2.txt"});
  REQUIRE(cert.rc == 0);
  REQUIRE(cert.out.find("verified bijection on 7 vertices") != std::string::npos);

  auto r = run_cli({"iso", "check", dpath.c_str(), bpath.c_str(), "cli_scratch_cert2.txt"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.find("certificate valid") != std::string::npos);

  // tamper with the certificate: swap two image points
  std::ifstream in("cli_scratch_cert2.txt");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto f = certificate_from_text(text);
  std::swap(f.map[0], f.map[1]);
  auto bad = scratch("cert2_bad.txt", certificate_to_text(f, 2));
  r = run_cli({"iso", "check", dpath.c_str(), bpath.c_str(), bad.c_str()});
  REQUIRE(r.rc == 1);
  REQUIRE(r.out.find("certificate invalid") != std::string::npos);
}
