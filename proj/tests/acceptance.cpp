// Acceptance gate: eleven numbered checks, one PASS/FAIL line each, exit 0
// only if every check passes. argv[1] is the path to the command-line
// driver (used by the determinism check).
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "loopforge/catalog.hpp"
#include "loopforge/io.hpp"
#include "loopforge/subloop.hpp"

using namespace loopforge;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int k, const char* label, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" error: ") + e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (!ok) ++g_failures;
  std::printf("CRITERION %2d %s %s (%.2fs)%s\n", k, ok ? "PASS" : "FAIL",
              label, dt, note.c_str());
  std::fflush(stdout);
}

bool check(bool cond, const char* what) {
  if (!cond) std::printf("  failed: %s\n", what);
  return cond;
}

std::string run_capture(const std::string& cmd, int* exit_code = nullptr) {
  const std::string out_file =
      (fs::temp_directory_path() /
       ("loopforge-acc-" + std::to_string(::getpid()) + ".out"))
          .string();
  const int raw = std::system((cmd + " >" + out_file + " 2>&1").c_str());
  if (exit_code) *exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream f(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  fs::remove(out_file);
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  // 1. The inversion extension of S3 obeys the three doubled-group laws and
  //    matches the direct doubling construction.
  criterion(1, "doubled-table equivalence of the inversion extension", [] {
    const auto s3 = symmetric(3);
    const auto mat = materialize(ExtensionSpec(s3, 2, inversion_map(s3)));
    const int n = 6;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (mat.mul(n + x, y) != n + s3.mul(x, s3.inverse(y))) return false;
        if (mat.mul(x, n + y) != n + s3.mul(y, x)) return false;
        if (mat.mul(n + x, n + y) != s3.mul(s3.inverse(y), x)) return false;
      }
    const auto cs3 = chein_double(s3);
    return check(mat.same_table(cs3), "entrywise equality") &&
           check(are_isomorphic(mat, cs3).status == IsoStatus::isomorphic,
                 "isomorphism");
  });

  // 2. The order-12 double is Moufang under all four identities but not a
  //    group, with a concrete witness.
  criterion(2, "Moufang/associativity profile of the order-12 double", [] {
    const auto cs3 = chein_double(symmetric(3));
    const auto mouf = is_moufang(cs3, MoufangMode::all_four);
    const auto grp = is_group(cs3);
    return check(mouf.holds, "all-four Moufang scan") &&
           check(mouf.checked == 4 * 1728, "full 1728-triple coverage x4") &&
           check(!grp.holds, "associativity must fail") &&
           check(grp.witness.size() == 3, "witness triple reported") &&
           check(cs3.mul(cs3.mul(grp.witness[0], grp.witness[1]),
                         grp.witness[2]) !=
                     cs3.mul(grp.witness[0],
                             cs3.mul(grp.witness[1], grp.witness[2])),
                 "witness violates associativity");
  });

  // 3. The factorization law holds over every decomposition pair in the
  //    split, nonsplit and twisted-group instances.
  criterion(3, "factorization law over all decompositions", [] {
    const auto cs3 = chein_double(symmetric(3));
    const auto r1 =
        verify_theorem1(cs3, make_subset(cs3, {0, 1, 2, 3, 4, 5}), 6);
    const auto z4 = cyclic(4);
    const auto r2 = verify_theorem1(z4, make_subset(z4, {0, 2}), 1);
    const auto g20 =
        materialize(ExtensionSpec(cyclic(5), 4, make_mapping({0, 2, 4, 1, 3})));
    const auto r3 =
        verify_theorem1(g20, make_subset(g20, {0, 1, 2, 3, 4}), 5);
    return check(r1.pass && r1.pairs_checked == 144, "split double") &&
           check(r2.pass && r2.pairs_checked == 64, "nonsplit Z4") &&
           check(r3.pass && r3.pairs_checked == 400, "order-20 twist");
  });

  // 4. Group criterion biconditional across the full census.
  criterion(4, "group criterion biconditional over the census", [] {
    std::vector<std::pair<std::string, CayleyTable>> bases;
    bases.emplace_back("z5", cyclic(5));
    bases.emplace_back("z3", cyclic(3));
    bases.emplace_back("s3", symmetric(3));
    bases.emplace_back("q8", quaternion8());
    const auto census = converse_census(bases, {2, 4});
    if (!check(census.rows.size() == 78, "expected 78 rows")) return false;
    for (const auto& row : census.rows) {
      const bool is_grp = row.result_class == "GROUP";
      const bool predicted = row.base_is_group && row.action_is_automorphism;
      if (is_grp != predicted) {
        std::printf("  violation: %s h=%d idx=%d\n", row.base.c_str(), row.h,
                    row.action_index);
        return false;
      }
    }
    return true;
  });

  // 5. Semi-automorphism enumerations with the classification splits.
  criterion(5, "semi-automorphism enumeration counts", [] {
    const auto split = [](const CayleyTable& L) {
      std::map<std::string, int> s;
      for (const auto& m : enumerate_semiautomorphisms(L)) {
        ++s["total"];
        if (m(0) != 0) {
          ++s["movers"];
          continue;
        }
        const auto c = classify(L, m);
        if (c.is_automorphism && c.is_anti_automorphism)
          ++s["both"];
        else if (c.is_automorphism)
          ++s["auto"];
        else if (c.is_anti_automorphism)
          ++s["anti"];
        else
          ++s["proper"];
      }
      return s;
    };
    auto z2 = split(cyclic(2));
    auto z3 = split(cyclic(3));
    auto s3 = split(symmetric(3));
    if (!check(z2["total"] == 2, "two maps on the 2-element table")) return false;
    if (!check(z3["total"] == 2, "two maps on the 3-element table")) return false;
    if (!check(s3["total"] == 12 && s3["auto"] == 6 && s3["anti"] == 6 &&
                   s3["proper"] == 0,
               "6+6 split with no proper maps"))
      return false;
    // regression baseline: 48 maps, every one an automorphism or an
    // anti-automorphism
    auto a4 = split(alternating(4));
    std::printf("  alternating-group baseline: total=%d auto=%d anti=%d "
                "proper=%d movers=%d\n",
                a4["total"], a4["auto"], a4["anti"], a4["proper"],
                a4["movers"]);
    return check(a4["total"] == 48 && a4["auto"] == 24 && a4["anti"] == 24 &&
                     a4["proper"] == 0 && a4["movers"] == 0,
                 "every map is an automorphism or anti-automorphism");
  });

  // 6. The order-6655 twisted extension: a genuine proper semi-automorphism
  //    action, Moufang by a million-triple sample, nonassociative by witness.
  criterion(6, "order-6655 twisted extension behaves as constructed", [] {
    const auto u11 = u3_group(11);
    const auto f = rajah_semiauto(11, 3);
    const auto cls = classify(u11, f);
    if (!check(cls.is_semi_automorphism, "full 1331^2 pair scan x2")) return false;
    if (!check(!cls.is_automorphism && cls.homo_witness[0] >= 0,
               "binary-law witness"))
      return false;
    if (!check(!cls.is_anti_automorphism && cls.anti_witness[0] >= 0,
               "anti-law witness"))
      return false;
    const auto spec = rajah_loop(11, 3);
    if (!check(spec.order() == 6655, "order 5*11^3")) return false;
    const auto mouf =
        lazy_is_moufang(spec, ScanPolicy{128, 1'000'000, kDefaultSeed});
    if (!check(mouf.holds && mouf.samples == 1'000'000,
               "sampled Moufang scan clean"))
      return false;
    const auto grp = lazy_is_group(spec, ScanPolicy{128, 10'000, kDefaultSeed});
    if (!check(!grp.holds, "associativity violation found")) return false;
    const long long x = grp.witness[0], y = grp.witness[1], z = grp.witness[2];
    std::printf("  nonassociativity witness: (%lld, %lld, %lld)\n", x, y, z);
    return check(spec.product_index(spec.product_index(x, y), z) !=
                     spec.product_index(x, spec.product_index(y, z)),
                 "witness recomputes");
  });

  // 7. Order-81: two commutative Moufang tables of exponent 3, identical
  //    decomposition data, distinct loops; the verifier refuses the
  //    three-divisible complement.
  criterion(7, "order-81 pair shows the coprimality hypothesis is necessary", [] {
    const auto cml = cml81_nonassociative();
    const auto assoc = cml81_associative();
    for (const auto* L : {&cml, &assoc}) {
      if (!check(is_commutative(*L).holds, "commutative")) return false;
      if (!check(is_moufang(*L, MoufangMode::all_four).holds,
                 "full 81^3 Moufang scan"))
        return false;
      if (!check(exponent(*L) == 3, "exponent 3")) return false;
    }
    if (!check(are_isomorphic(cml, assoc).status == IsoStatus::not_isomorphic,
               "the two tables are not isomorphic"))
      return false;
    std::vector<int> x1zero;
    for (int i = 0; i < 81; i += 3) x1zero.push_back(i);
    for (const auto* L : {&cml, &assoc}) {
      const auto N = make_subset(*L, x1zero);
      if (!check(is_normal(*L, N), "kernel subloop normal")) return false;
      if (!check(are_isomorphic(induced_table(*L, N),
                                elementary_abelian(3, 3))
                         .status == IsoStatus::isomorphic,
                 "kernel is the rank-3 elementary table"))
        return false;
      if (!check(are_isomorphic(quotient(*L, N).table, cyclic(3)).status ==
                     IsoStatus::isomorphic,
                 "quotient of order 3"))
        return false;
      if (!check(is_identity(conjugation_map(*L, 1)),
                 "conjugation action trivial"))
        return false;
    }
    try {
      verify_theorem1(cml, make_subset(cml, x1zero), 1);
      return check(false, "verifier must reject");
    } catch (const hypothesis_error& e) {
      return check(e.which() == Hypothesis::order_divisible_by_three,
                   "order-divisible-by-3 diagnostic");
    }
  });

  // 8. Cube-factorization sweep passes on the four designated tables.
  criterion(8, "cube-factorization sweep", [] {
    return check(verify_remark2(symmetric(3)).pass, "symmetric table") &&
           check(verify_remark2(chein_double(symmetric(3))).pass,
                 "order-12 double") &&
           check(verify_remark2(quaternion8()).pass, "quaternion table") &&
           check(verify_remark2(cml81_nonassociative()).pass,
                 "order-81 commutative table");
  });

  // 9. The exponent-twisted isomorphism verifies on both designated
  //    instances.
  criterion(9, "exponent-twisted extension isomorphisms", [] {
    const auto z5 = cyclic(5);
    const auto r1 = theorem2_isomorphism(z5, 4, make_mapping({0, 2, 4, 1, 3}),
                                         3, identity_mapping(5));
    const auto s3 = symmetric(3);
    const auto r2 = theorem2_isomorphism(s3, 2, inversion_map(s3), 1,
                                         conjugation_map(s3, 1));
    return check(r1.pass, "order-20 pair") && check(r2.pass, "order-12 pair");
  });

  // 10. Every inner mapping generator of every catalog Moufang table is a
  //     semi-automorphism.
  criterion(10, "inner mapping generators are semi-automorphisms", [] {
    for (const auto& [name, table] : moufang_catalog_small()) {
      if (table.order() > 81) continue;
      std::set<std::vector<int>> seen;
      for (const auto& gen : inner_generators(table))
        seen.insert(gen.map.images);
      for (const auto& images : seen)
        if (!classify(table, Mapping{images}).is_semi_automorphism) {
          std::printf("  counterexample in %s\n", name.c_str());
          return false;
        }
    }
    return true;
  });

  // 11. Reruns and worker counts cannot change any command's bytes.
  criterion(11, "byte-identical output across reruns and worker counts", [&] {
    if (cli.empty()) return check(false, "cli path not supplied");
    const auto dir = fs::temp_directory_path() /
                     ("loopforge-acc-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string m12 = (dir / "m12.loop").string();
    run_capture(cli + " construct chein --base sym3 --out " + m12);
    const std::vector<std::string> cmds = {
        cli + " census --bases s3,q8,z5 --orders 2,4",
        cli + " semiaut " + m12 + " --identity-fixing",
        cli + " check " + m12 + " --moufang --group --commutative",
        cli + " check " + m12 + " --group --sample 5000 --seed 99",
    };
    bool ok = true;
    for (const auto& cmd : cmds) {
      ::setenv("LOOPFORGE_THREADS", "1", 1);
      const auto a = run_capture(cmd);
      const auto a2 = run_capture(cmd);
      ::setenv("LOOPFORGE_THREADS", "4", 1);
      const auto b = run_capture(cmd);
      ::unsetenv("LOOPFORGE_THREADS");
      if (a != a2 || a != b) {
        std::printf("  divergent output: %s\n", cmd.c_str());
        ok = false;
      }
    }
    fs::remove_all(dir);
    return ok;
  });

  std::printf(g_failures == 0 ? "acceptance: all criteria pass\n"
                              : "acceptance: %d criteria FAILED\n",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
