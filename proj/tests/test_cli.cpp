// Integration checks for the command-line driver. Runs the built binary
// (argv[1]) against scratch files and asserts on exact output lines and
// exit codes. Plain main: each failed expectation prints and counts.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_dir;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string out_file = (g_dir / "cmd.out").string();
  const std::string cmd = g_cli + " " + args + " >" + out_file + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream f(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  res.out = buf.str();
  return res;
}

void expect(bool ok, const std::string& label, const RunResult& res) {
  if (ok) {
    std::printf("ok: %s\n", label.c_str());
  } else {
    ++g_failures;
    std::printf("FAIL: %s\n  exit=%d output:\n%s\n", label.c_str(),
                res.exit_code, res.out.c_str());
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string path(const std::string& leaf) { return (g_dir / leaf).string(); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cli-binary>\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() /
          ("loopforge-cli-" + std::to_string(::getpid()));
  fs::create_directories(g_dir);

  // --- construct ----------------------------------------------------------
  auto r = run("construct cyclic 1 --out " + path("z1.loop"));
  expect(r.exit_code == 0 && slurp(path("z1.loop")) == "1\n0\n",
         "construct cyclic 1 writes the trivial table", r);

  r = run("construct chein --base sym3 --out " + path("m12.loop"));
  expect(r.exit_code == 0 && contains(r.out, "order=12"),
         "construct chein --base sym3", r);

  r = run("construct sym 3 --out " + path("s3.loop"));
  expect(r.exit_code == 0, "construct sym 3", r);
  r = run("construct cyclic 4 --out " + path("z4.loop"));
  expect(r.exit_code == 0, "construct cyclic 4", r);
  r = run("construct cml81 --out " + path("cml81.loop"));
  expect(r.exit_code == 0 && contains(r.out, "order=81"), "construct cml81", r);

  r = run("construct nonesuch 3 --out " + path("x.loop"));
  expect(r.exit_code == 2, "unknown family exits 2", r);
  r = run("construct cyclic --out " + path("x.loop"));
  expect(r.exit_code == 2, "missing parameter exits 2", r);

  // --- map ----------------------------------------------------------------
  r = run("map inversion --loop " + path("s3.loop") + " --out " +
          path("inv.map"));
  expect(r.exit_code == 0 && slurp(path("inv.map")) == "6\n0 1 2 4 3 5\n",
         "map inversion emits the inversion permutation", r);

  r = run("construct semidirect --base " + path("s3.loop") + " --order 2" +
          " --action " + path("inv.map") + " --materialize --out " +
          path("m12b.loop"));
  expect(r.exit_code == 0 && slurp(path("m12b.loop")) == slurp(path("m12.loop")),
         "semidirect with the inversion action equals the doubled table", r);

  // --- check --------------------------------------------------------------
  r = run("check " + path("m12.loop") + " --moufang --group");
  expect(r.exit_code == 1 &&
             r.out == "PROPERTY moufang PASS witness=-\n"
                      "PROPERTY group FAIL witness=1,2,6\n",
         "check reports the doubled table Moufang but not associative", r);

  r = run("check " + path("z4.loop") + " --group");
  expect(r.exit_code == 0 && r.out == "PROPERTY group PASS witness=-\n",
         "check --group on an abelian table", r);

  r = run("check " + path("s3.loop") + " --commutative --nucleus");
  expect(r.exit_code == 1 &&
             contains(r.out, "PROPERTY commutative FAIL witness=1,2") &&
             contains(r.out, "INFO nucleus size=6"),
         "commutativity witness and nucleus report", r);

  {
    std::ofstream bad(path("bad.loop"));
    // identity present, duplicate entry in row 1
    bad << "3\n0 1 2\n1 1 0\n2 0 1\n";
  }
  r = run("check " + path("bad.loop") + " --group");
  expect(r.exit_code == 2 && contains(r.out, "not-latin-square"),
         "malformed file exits 2", r);

  r = run("check " + path("absent.loop") + " --group");
  expect(r.exit_code == 2, "missing file exits 2", r);

  // --- semiaut ------------------------------------------------------------
  r = run("construct cyclic 2 --out " + path("z2.loop"));
  r = run("semiaut " + path("z2.loop"));
  expect(r.exit_code == 0 &&
             r.out == "0 1  BOTH\n"
                      "1 0  MOVES_IDENTITY\n"
                      "# total=2 auto=0 anti=0 both=1 proper=0 "
                      "moves_identity=1\n",
         "semiaut on the 2-element table", r);

  r = run("semiaut " + path("s3.loop"));
  expect(r.exit_code == 0 &&
             contains(r.out, "# total=12 auto=6 anti=6 both=0 proper=0 "
                             "moves_identity=0"),
         "semiaut counts on the symmetric table", r);

  r = run("semiaut " + path("s3.loop") + " --budget 5");
  expect(r.exit_code == 2 && contains(r.out, "budget-exhausted"),
         "exhausted enumeration budget exits 2", r);

  // --- verify -------------------------------------------------------------
  {
    std::ofstream sub(path("s3.subset"));
    sub << "12\n0 1 2 3 4 5\n";
  }
  r = run("verify theorem1 --loop " + path("m12.loop") + " --normal " +
          path("s3.subset") + " --u 6");
  expect(r.exit_code == 0 && r.out == "VERIFY theorem1 PASS pairs=144\n",
         "factorization law on the doubled table", r);

  {
    std::ofstream sub(path("n27.subset"));
    sub << "81\n";
    for (int i = 0; i < 81; i += 3) sub << i << " ";
    sub << "\n";
  }
  r = run("verify theorem1 --loop " + path("cml81.loop") + " --normal " +
          path("n27.subset") + " --u 1");
  expect(r.exit_code == 1 &&
             r.out == "VERIFY theorem1 FAIL hypothesis=order-divisible-by-3\n",
         "three-divisible complement is diagnosed", r);

  r = run("verify remark2 --loop " + path("m12.loop"));
  expect(r.exit_code == 0 && contains(r.out, "VERIFY remark2 PASS"),
         "cube-factorization sweep on the doubled table", r);

  r = run("map identity --loop " + path("s3.loop") + " --out " + path("id.map"));
  r = run("verify theorem2 --base " + path("s3.loop") +
          " --order 2 --f1 " + path("inv.map") + " --alpha-exp 1 --beta " +
          path("id.map"));
  expect(r.exit_code == 0 && contains(r.out, "VERIFY theorem2 PASS"),
         "twisted isomorphism with the identity conjugator", r);

  r = run("verify corollary --base " + path("s3.loop") + " --order 2 --f1 " +
          path("inv.map") + " --f2 " + path("inv.map"));
  expect(r.exit_code == 0 &&
             contains(r.out, "VERIFY corollary PASS path=theorem2 j=1"),
         "self-conjugacy goes through the exponent-twist path", r);

  // --- census -------------------------------------------------------------
  r = run("census --bases s3,z5 --orders 2,4");
  const std::string first_census = r.out;
  expect(r.exit_code == 0 &&
             contains(r.out,
                      "base\th\taction_index\taction_class\tresult_class\tops") &&
             contains(r.out, "s3\t2\t1\tANTI\tMOUFANG_NONASSOC"),
         "census contains the inversion row", r);
  {
    // every z5 row is a group
    std::istringstream lines(first_census);
    std::string line;
    bool all_group = true;
    int z5_rows = 0;
    while (std::getline(lines, line))
      if (line.rfind("z5\t", 0) == 0) {
        ++z5_rows;
        if (!contains(line, "GROUP")) all_group = false;
      }
    RunResult dummy;
    dummy.out = first_census;
    expect(all_group && z5_rows == 6, "all z5 census rows are groups", dummy);
  }

  r = run("census --bases s3,z5 --orders 2,4");
  expect(r.out == first_census, "census rerun is byte-identical", r);

  // determinism across worker counts
  ::setenv("LOOPFORGE_THREADS", "1", 1);
  const auto one = run("census --bases s3,q8 --orders 2,4");
  ::setenv("LOOPFORGE_THREADS", "4", 1);
  const auto four = run("census --bases s3,q8 --orders 2,4");
  ::unsetenv("LOOPFORGE_THREADS");
  expect(one.exit_code == 0 && one.out == four.out,
         "census output is worker-count independent", one);

  r = run("census --bases z3 --orders 3");
  expect(r.exit_code == 2 && contains(r.out, "coprimality-violation"),
         "census with h divisible by 3 exits 2", r);

  if (g_failures == 0) std::printf("all cli checks passed\n");
  fs::remove_all(g_dir);
  return g_failures == 0 ? 0 : 1;
}
