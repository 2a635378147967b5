#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopforge/catalog.hpp"
#include "loopforge/io.hpp"
#include "loopforge/subloop.hpp"

namespace lf = loopforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string join_ints(const std::vector<int>& v, char sep = ',') {
  if (v.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? std::string(1, sep) : "") << v[i];
  return out.str();
}

// File if it exists, otherwise a catalog name.
lf::CayleyTable load_base(const std::string& ref) {
  if (std::filesystem::exists(ref)) return lf::read_loop_file(ref);
  return lf::catalog_loop(ref);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct CheckArgs {
  std::string file;
  bool group = false, moufang = false, all_four = false, commutative = false,
       nucleus = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = lf::kDefaultSeed;
};

std::string scan_suffix(const lf::ScanReport& rep) {
  if (!rep.sampled) return "";
  return " sampled=" + std::to_string(rep.samples) +
         " seed=" + std::to_string(rep.seed);
}

int run_check(const CheckArgs& args) {
  const lf::LoadedLoop loaded = lf::load_loop_any(args.file);
  const lf::ScanPolicy policy{128, args.sample, args.seed};
  bool any_fail = false;
  const auto report = [&](const char* prop, const lf::ScanReport& rep) {
    std::cout << "PROPERTY " << prop << (rep.holds ? " PASS" : " FAIL")
              << " witness=" << join_ints(rep.witness) << scan_suffix(rep)
              << "\n";
    any_fail = any_fail || !rep.holds;
  };
  if (loaded.spec) {
    if (args.commutative || args.nucleus)
      lf::fail(lf::errc::cap_exceeded,
               "lazy extension: only --moufang/--group scans are available");
    if (args.moufang)
      report("moufang", lf::lazy_is_moufang(*loaded.spec, policy));
    if (args.group) report("group", lf::lazy_is_group(*loaded.spec, policy));
    return any_fail ? kExitFail : kExitPass;
  }
  const lf::CayleyTable& L = *loaded.table;
  if (args.moufang)
    report("moufang",
           lf::is_moufang(L,
                          args.all_four ? lf::MoufangMode::all_four
                                        : lf::MoufangMode::single,
                          policy));
  if (args.group) report("group", lf::is_group(L, policy));
  if (args.commutative) report("commutative", lf::is_commutative(L));
  if (args.nucleus) {
    const lf::SubsetHandle nuc = lf::nucleus(L, policy);
    std::cout << "INFO nucleus size=" << nuc.size()
              << " members=" << join_ints(nuc.members) << "\n";
  }
  return any_fail ? kExitFail : kExitPass;
}

struct SemiautArgs {
  std::string file;
  std::uint64_t budget = 50'000'000;
  bool identity_fixing = false;
};

int run_semiaut(const SemiautArgs& args) {
  const lf::CayleyTable L = lf::read_loop_file(args.file);
  const auto maps = lf::enumerate_semiautomorphisms(
      L, lf::SemiAutOptions{args.budget, args.identity_fixing});
  std::size_t autos = 0, antis = 0, boths = 0, propers = 0, movers = 0;
  for (const auto& m : maps) {
    std::string tag;
    if (m(0) != 0) {
      tag = "MOVES_IDENTITY";
      ++movers;
    } else {
      const lf::MapClass c = lf::classify(L, m);
      if (c.is_automorphism && c.is_anti_automorphism) {
        tag = "BOTH";
        ++boths;
      } else if (c.is_automorphism) {
        tag = "AUTO";
        ++autos;
      } else if (c.is_anti_automorphism) {
        tag = "ANTI";
        ++antis;
      } else {
        tag = "PROPER";
        ++propers;
      }
    }
    std::cout << join_ints(m.images, ' ') << "  " << tag << "\n";
  }
  std::cout << "# total=" << maps.size() << " auto=" << autos
            << " anti=" << antis << " both=" << boths << " proper=" << propers
            << " moves_identity=" << movers << "\n";
  return kExitPass;
}

struct ConstructArgs {
  std::string family;
  std::vector<int> params;
  std::string base, action, out;
  int order = 0, q = 0, k = 0;
  bool materialize = false;
};

int run_construct(const ConstructArgs& args) {
  const auto need_params = [&](std::size_t k) {
    if (args.params.size() != k)
      lf::fail(lf::errc::malformed,
               args.family + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (args.out.empty()) lf::fail(lf::errc::malformed, "--out is required");
  std::optional<lf::CayleyTable> table;
  if (args.family == "cyclic") {
    need_params(1);
    table = lf::cyclic(args.params[0]);
  } else if (args.family == "abelian") {
    need_params(2);
    table = lf::elementary_abelian(args.params[0], args.params[1]);
  } else if (args.family == "sym") {
    need_params(1);
    table = lf::symmetric(args.params[0]);
  } else if (args.family == "alt") {
    need_params(1);
    table = lf::alternating(args.params[0]);
  } else if (args.family == "q8") {
    need_params(0);
    table = lf::quaternion8();
  } else if (args.family == "dihedral") {
    need_params(1);
    table = lf::dihedral(args.params[0]);
  } else if (args.family == "chein") {
    need_params(0);
    if (args.base.empty()) lf::fail(lf::errc::malformed, "chein needs --base");
    table = lf::chein_double(load_base(args.base));
  } else if (args.family == "u3") {
    need_params(0);
    if (args.q == 0) lf::fail(lf::errc::malformed, "u3 needs --q");
    table = lf::u3_group(args.q);
  } else if (args.family == "cml81") {
    need_params(0);
    table = lf::cml81_nonassociative();
  } else if (args.family == "cml81-assoc") {
    need_params(0);
    table = lf::cml81_associative();
  } else if (args.family == "semidirect") {
    need_params(0);
    if (args.base.empty() || args.action.empty() || args.order <= 0)
      lf::fail(lf::errc::malformed,
               "semidirect needs --base, --order and --action");
    const lf::CayleyTable base = load_base(args.base);
    const lf::Mapping action = lf::read_map_file(args.action);
    const lf::ExtensionSpec spec(base, args.order, action);
    if (args.materialize || spec.order() <= 4096) {
      table = lf::materialize(spec, args.materialize
                                        ? static_cast<int>(spec.order())
                                        : 4096);
    } else {
      if (!std::filesystem::exists(args.base) ||
          !std::filesystem::exists(args.action))
        lf::fail(lf::errc::malformed,
                 "a lazy descriptor needs --base/--action to be files");
      lf::write_extension_descriptor(args.out, args.base, args.order,
                                     args.action);
      std::cout << "WROTE descriptor " << args.out << " order=" << spec.order()
                << "\n";
      return kExitPass;
    }
  } else {
    lf::fail(lf::errc::malformed, "unknown family: " + args.family);
  }
  lf::write_loop_file(args.out, *table);
  std::cout << "WROTE loop " << args.out << " order=" << table->order() << "\n";
  return kExitPass;
}

struct MapArgs {
  std::string kind, loop, out;
  int u = 0, k = 0, q = 0;
};

int run_map(const MapArgs& args) {
  if (args.out.empty()) lf::fail(lf::errc::malformed, "--out is required");
  std::optional<lf::Mapping> map;
  if (args.kind == "rajah") {
    if (args.q == 0) lf::fail(lf::errc::malformed, "rajah needs --q and --k");
    map = lf::rajah_semiauto(args.q, args.k);
  } else {
    if (args.loop.empty()) lf::fail(lf::errc::malformed, "--loop is required");
    const lf::CayleyTable L = load_base(args.loop);
    if (args.kind == "identity")
      map = lf::identity_mapping(L.order());
    else if (args.kind == "inversion")
      map = lf::inversion_map(L);
    else if (args.kind == "conj")
      map = lf::conjugation_map(L, args.u);
    else if (args.kind == "power")
      map = lf::power_map(L, args.k);
    else
      lf::fail(lf::errc::malformed, "unknown map kind: " + args.kind);
  }
  lf::write_map_file(args.out, *map);
  std::cout << "WROTE map " << args.out << " degree=" << map->degree() << "\n";
  return kExitPass;
}

struct VerifyArgs {
  std::string kind, loop, normal, base, f1, f2, beta;
  int u = -1, order = 0, alpha_exp = 1;
  std::uint64_t sample = 0, seed = lf::kDefaultSeed, budget = 50'000'000;
};

int run_verify(const VerifyArgs& args) {
  const lf::ScanPolicy policy{128, args.sample, args.seed};
  const auto emit = [&](const std::string& verdict) {
    std::cout << "VERIFY " << args.kind << " " << verdict << "\n";
  };
  try {
    if (args.kind == "theorem1") {
      const lf::CayleyTable G = lf::read_loop_file(args.loop);
      const lf::LoadedSubset sub = lf::read_subset_file(args.normal);
      if (sub.order != G.order())
        lf::fail(lf::errc::parent_mismatch,
                 "subset declares a different parent order");
      if (args.u < 0 || args.u >= G.order())
        lf::fail(lf::errc::malformed, "--u out of range");
      const lf::SubsetHandle N = lf::make_subset(G, sub.members);
      const lf::Theorem1Report rep = lf::verify_theorem1(G, N, args.u, policy);
      if (rep.pass) {
        emit("PASS pairs=" + std::to_string(rep.pairs_checked));
        return kExitPass;
      }
      emit("FAIL witness=" + join_ints(rep.witness));
      return kExitFail;
    }
    if (args.kind == "remark2") {
      const lf::CayleyTable G = lf::read_loop_file(args.loop);
      const lf::Remark2Report rep = lf::verify_remark2(G, policy);
      std::string suffix;
      if (rep.sampled)
        suffix = " sampled=" + std::to_string(rep.samples) +
                 " seed=" + std::to_string(rep.seed);
      if (rep.pass) {
        emit("PASS triples=" + std::to_string(rep.checked) + suffix);
        return kExitPass;
      }
      emit("FAIL witness=" + join_ints(rep.witness) + suffix);
      return kExitFail;
    }
    if (args.kind == "theorem2") {
      const lf::CayleyTable base = load_base(args.base);
      const lf::Mapping f1 = lf::read_map_file(args.f1);
      const lf::Mapping beta = lf::read_map_file(args.beta);
      const lf::Theorem2Result res =
          lf::theorem2_isomorphism(base, args.order, f1, args.alpha_exp, beta);
      if (res.pass) {
        emit("PASS order=" + std::to_string(res.g1.order()));
        return kExitPass;
      }
      emit("FAIL witness=" + join_ints(res.witness));
      return kExitFail;
    }
    if (args.kind == "corollary") {
      const lf::CayleyTable base = load_base(args.base);
      const lf::Mapping f1 = lf::read_map_file(args.f1);
      const lf::Mapping f2 = lf::read_map_file(args.f2);
      const lf::CorollaryResult res = lf::corollary_check(
          base, args.order, f1, f2, lf::SemiAutOptions{args.budget, false});
      const char* path = res.path == lf::CorollaryPath::theorem2
                             ? "theorem2"
                             : "isomorphism";
      std::string iso = res.extensions_isomorphic ? "yes" : "no";
      if (res.fallback_status == lf::IsoStatus::indeterminate &&
          !res.extensions_isomorphic)
        iso = "indeterminate";
      emit(std::string("PASS path=") + path + " j=" + std::to_string(res.j) +
           " conjugator-class=" +
           (res.beta_is_automorphism ? "AUTO" : "SEMI") +
           " extensions-isomorphic=" + iso);
      return kExitPass;
    }
    lf::fail(lf::errc::malformed, "unknown verify kind: " + args.kind);
  } catch (const lf::hypothesis_error& e) {
    emit(std::string("FAIL hypothesis=") + lf::hypothesis_name(e.which()));
    return kExitFail;
  } catch (const lf::loop_error& e) {
    if (e.code() == lf::errc::not_conjugate) {
      emit("FAIL reason=not-conjugate");
      return kExitFail;
    }
    throw;
  }
}

struct CensusArgs {
  std::string bases, orders, out, json_out;
};

int run_census(const CensusArgs& args) {
  std::vector<std::pair<std::string, lf::CayleyTable>> bases;
  for (const auto& name : split_csv(args.bases))
    bases.emplace_back(name, load_base(name));
  std::vector<int> orders;
  for (const auto& h : split_csv(args.orders)) orders.push_back(std::stoi(h));
  if (bases.empty() || orders.empty())
    lf::fail(lf::errc::malformed, "census needs --bases and --orders");
  const lf::Census census = lf::converse_census(bases, orders);

  std::ostringstream tsv;
  tsv << "base\th\taction_index\taction_class\tresult_class\tops\n";
  for (const auto& row : census.rows)
    tsv << row.base << "\t" << row.h << "\t" << row.action_index << "\t"
        << row.action_class << "\t" << row.result_class << "\t" << row.ops
        << "\n";
  for (const auto& annex : census.annex)
    tsv << "# annex moves-identity base=" << annex.base
        << " images=" << join_ints(annex.action.images) << "\n";
  if (args.out.empty()) {
    std::cout << tsv.str();
  } else {
    std::ofstream f(args.out, std::ios::binary);
    f << tsv.str();
    std::cout << "WROTE census " << args.out << " rows=" << census.rows.size()
              << "\n";
  }
  if (!args.json_out.empty()) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : census.rows)
      j["rows"].push_back({{"base", row.base},
                           {"h", row.h},
                           {"action_index", row.action_index},
                           {"action", row.action.images},
                           {"action_class", row.action_class},
                           {"result_class", row.result_class},
                           {"ops", row.ops}});
    j["annex"] = nlohmann::json::array();
    for (const auto& annex : census.annex)
      j["annex"].push_back(
          {{"base", annex.base}, {"images", annex.action.images}});
    std::ofstream f(args.json_out, std::ios::binary);
    f << j.dump(2) << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Moufang loop toolkit"};
  app.require_subcommand(1);

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "build a catalog loop");
  construct->add_option("family", cons.family)->required();
  construct->add_option("params", cons.params);
  construct->add_option("--base", cons.base);
  construct->add_option("--order", cons.order);
  construct->add_option("--action", cons.action);
  construct->add_option("--q", cons.q);
  construct->add_option("--k", cons.k);
  construct->add_flag("--materialize", cons.materialize);
  construct->add_option("--out", cons.out)->required();

  MapArgs map;
  auto* mapcmd = app.add_subcommand("map", "emit a mapping file");
  mapcmd->add_option("kind", map.kind)->required();
  mapcmd->add_option("--loop", map.loop);
  mapcmd->add_option("--u", map.u);
  mapcmd->add_option("--k", map.k);
  mapcmd->add_option("--q", map.q);
  mapcmd->add_option("--out", map.out)->required();

  CheckArgs check;
  auto* checkcmd = app.add_subcommand("check", "structural property scans");
  checkcmd->add_option("file", check.file)->required();
  checkcmd->add_flag("--group", check.group);
  checkcmd->add_flag("--moufang", check.moufang);
  checkcmd->add_flag("--all-four", check.all_four);
  checkcmd->add_flag("--commutative", check.commutative);
  checkcmd->add_flag("--nucleus", check.nucleus);
  checkcmd->add_option("--sample", check.sample);
  checkcmd->add_option("--seed", check.seed);

  SemiautArgs semiaut;
  auto* semicmd =
      app.add_subcommand("semiaut", "enumerate and classify semi-automorphisms");
  semicmd->add_option("file", semiaut.file)->required();
  semicmd->add_flag("--enumerate", "listing is always enumerated");
  semicmd->add_flag("--classify", "annotations are always computed");
  semicmd->add_option("--budget", semiaut.budget);
  semicmd->add_flag("--identity-fixing", semiaut.identity_fixing);

  VerifyArgs verify;
  auto* verifycmd = app.add_subcommand("verify", "check the factorization laws");
  verifycmd->add_option("kind", verify.kind)->required();
  verifycmd->add_option("--loop", verify.loop);
  verifycmd->add_option("--normal", verify.normal);
  verifycmd->add_option("--u", verify.u);
  verifycmd->add_option("--base", verify.base);
  verifycmd->add_option("--order", verify.order);
  verifycmd->add_option("--f1", verify.f1);
  verifycmd->add_option("--f2", verify.f2);
  verifycmd->add_option("--beta", verify.beta);
  verifycmd->add_option("--alpha-exp", verify.alpha_exp);
  verifycmd->add_option("--sample", verify.sample);
  verifycmd->add_option("--seed", verify.seed);
  verifycmd->add_option("--budget", verify.budget);

  CensusArgs census;
  auto* censuscmd = app.add_subcommand("census", "extension classification table");
  censuscmd->add_option("--bases", census.bases)->required();
  censuscmd->add_option("--orders", census.orders)->required();
  censuscmd->add_option("--out", census.out);
  censuscmd->add_option("--json", census.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(cons);
    if (*mapcmd) return run_map(map);
    if (*checkcmd) return run_check(check);
    if (*semicmd) return run_semiaut(semiaut);
    if (*verifycmd) return run_verify(verify);
    if (*censuscmd) return run_census(census);
  } catch (const lf::loop_error& e) {
    std::cerr << "error: " << e.what() << " [" << lf::errc_name(e.code())
              << "]\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
