#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "support/fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PINPOINT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Workspace {
  fs::path dir = fs::path(PINPOINT_SCRATCH) / "cli";
  fs::path o1 = dir / "in" / "o1.ont";
  fs::path o3 = dir / "in" / "o3.ont";

  Workspace() {
    fs::remove_all(dir);
    fs::create_directories(dir / "in");
    std::ofstream(o1, std::ios::binary) << fixtures::kO1;
    std::ofstream(o3, std::ios::binary) << fixtures::kO3;
  }
  std::string q(const fs::path& p) const { return "'" + p.string() + "'"; }
};

}  // namespace

TEST_CASE("query commands print comma-joined ids") {
  Workspace w;
  const std::string g = " --goal '(sub A C)'";
  CHECK(run("classify " + w.q(w.o1)).out == "(sub A B)\n(sub A C)\n(sub B C)\n");
  CHECK(run("core " + w.q(w.o1) + g).out == "\n");
  CHECK(run("core " + w.q(w.o3) + g).out == "ax1\n");
  CHECK(run("just " + w.q(w.o1) + g).out == "ax3\n");
  for (const char* m : {"blackbox", "hst", "musmem", "brute"}) {
    Run r = run("union " + w.q(w.o1) + g + " --method " + m);
    CHECK(r.code == 0);
    CHECK(r.out == "ax1,ax2,ax3\n");
  }
  CHECK(run("union " + w.q(w.o3) + g).out == "ax1,ax2,ax3,ax4\n");
  CHECK(run("justifications " + w.q(w.o3) + g).out == "ax1,ax2\nax1,ax3,ax4\n");
  CHECK(run("repairs " + w.q(w.o1) + g).out == "ax1,ax4\nax2,ax4\n");
  CHECK(run("trace " + w.q(w.o3) + g).out.rfind("R_init; ; ; A [= A\n", 0) == 0);
  CHECK(run("dimacs " + w.q(w.o3) + g).out.rfind("c axiom ax1 var 1\n", 0) == 0);
}

TEST_CASE("exit codes") {
  Workspace w;
  CHECK(run("core " + w.q(w.o1) + " --goal '(sub C A)'").code == 3);
  CHECK(run("core " + w.q(w.o1) + " --goal '(sub C'").code == 2);
  const fs::path bad = w.dir / "bad.ont";
  std::ofstream(bad) << "(sub A B)\n(sub A\n";
  CHECK(run("classify " + w.q(bad)).code == 2);
  const fs::path dup = w.dir / "dup.ont";
  std::ofstream(dup) << "a: (sub A B)\na: (sub B C)\n";
  CHECK(run("classify " + w.q(dup)).code == 2);
  CHECK(run("classify " + w.q(w.dir / "missing.ont")).code == 1);
  CHECK(run("union " + w.q(w.o1) + " --goal '(sub A C)' --method fast").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("gen writes a parseable deterministic ontology") {
  Workspace w;
  const fs::path a = w.dir / "a.ont", b = w.dir / "b.ont";
  CHECK(run("gen --seed 4 --size 9 --profile alc --out " + w.q(a)).code == 0);
  CHECK(run("gen --seed 4 --size 9 --profile alc --out " + w.q(b)).code == 0);
  CHECK(read(a) == read(b));
  CHECK(pinpoint::parse_ontology(read(a)).size() == 9);
  CHECK(run("gen --seed 4 --size 0 --profile el --out " + w.q(a)).code == 1);
  CHECK(run("gen --seed 4 --size 3 --profile owl --out " + w.q(a)).code == 1);
}

TEST_CASE("bench output is byte-identical across runs") {
  Workspace w;
  for (int seed = 1; seed <= 3; ++seed) {
    run("gen --seed " + std::to_string(seed) + " --size 9 --profile " +
        (seed % 2 ? "alc" : "el") + " --out " + w.q(w.dir / "in" / ("g" + std::to_string(seed) + ".ont")));
  }
  const fs::path a = w.dir / "a.csv", b = w.dir / "b.csv";
  CHECK(run("bench " + w.q(w.dir / "in") + " --methods blackbox,musmem,brute --out " + w.q(a)).code == 0);
  CHECK(run("bench " + w.q(w.dir / "in") + " --methods blackbox,musmem,brute --out " + w.q(b)).code == 0);
  const std::string text = read(a);
  CHECK(text == read(b));
  CHECK(text.rfind("ontology,goal,method,module_size,core_size,just_size,union_size,"
                   "n_justifications,oracle_calls,time_ms\n",
                   0) == 0);
  CHECK(text.find("o1.ont,(sub A C),brute,3,0,1,3,2,") != std::string::npos);
  CHECK(run("bench " + w.q(w.dir / "nope") + " --out " + w.q(a)).code == 1);
}
