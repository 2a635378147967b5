#include <algorithm>
#include <numeric>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "loopforge/catalog.hpp"
#include "loopforge/semiaut.hpp"

using namespace loopforge;

namespace {

// Independent oracle: filter all n! bijections by a direct check of the
// defining law in both bracketings. Only usable for tiny orders.
bool semi_by_definition(const CayleyTable& L, const std::vector<int>& f) {
  for (int a = 0; a < L.order(); ++a)
    for (int b = 0; b < L.order(); ++b) {
      const int fafb_fa = L.mul(L.mul(f[a], f[b]), f[a]);
      const int fa_fbfa = L.mul(f[a], L.mul(f[b], f[a]));
      if (f[L.mul(L.mul(a, b), a)] != fafb_fa) return false;
      if (f[L.mul(a, L.mul(b, a))] != fa_fbfa) return false;
    }
  return true;
}

std::vector<std::vector<int>> all_semis_brute(const CayleyTable& L) {
  std::vector<int> perm(L.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (semi_by_definition(L, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("mapping algebra", "[mapping]") {
  const auto z5 = cyclic(5);
  const auto inv5 = inversion_map(z5);
  CHECK(is_identity(compose(inv5, invert(inv5))));
  CHECK(is_identity(power(inv5, 2)));
  CHECK(mapping_order(inv5) == 2);
  CHECK(power(inv5, -1) == inv5);
  CHECK(power(inv5, 3) == inv5);

  const auto r = rajah_semiauto(11, 3);
  CHECK(is_identity(power(r, 5)));
  CHECK(mapping_order(r) == 5);
  // order by cycle lcm agrees with iterated composition
  Mapping it = r;
  int k = 1;
  while (!is_identity(it)) {
    it = compose(r, it);
    ++k;
  }
  CHECK(k == mapping_order(r));

  REQUIRE_THROWS_AS(compose(inv5, identity_mapping(6)), loop_error);
  REQUIRE_THROWS_AS(make_mapping({0, 0, 1}), loop_error);
}

TEST_CASE("classification of named maps", "[mapping][classify]") {
  const auto s3 = symmetric(3);
  const auto z5 = cyclic(5);

  const auto cid = classify(s3, identity_mapping(6));
  CHECK(cid.is_automorphism);
  CHECK(cid.is_semi_automorphism);
  CHECK_FALSE(cid.is_anti_automorphism);  // anti iff commutative
  CHECK(cid.order == 1);

  const auto cid5 = classify(z5, identity_mapping(5));
  CHECK(cid5.is_automorphism);
  CHECK(cid5.is_anti_automorphism);

  const auto cinv = classify(s3, inversion_map(s3));
  CHECK(cinv.is_anti_automorphism);
  CHECK(cinv.is_semi_automorphism);
  CHECK_FALSE(cinv.is_automorphism);
  CHECK(cinv.homo_witness[0] >= 0);
  CHECK(cinv.order == 2);

  // flag implications over every bijection of Z4
  const auto z4 = cyclic(4);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    const auto c = classify(z4, make_mapping(perm));
    if (c.is_automorphism) CHECK(c.is_semi_automorphism);
    if (c.is_anti_automorphism) CHECK(c.is_semi_automorphism);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("semi-automorphism enumeration matches the brute-force oracle",
          "[semiaut][oracle]") {
  for (const auto& L : {cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6),
                        elementary_abelian(2, 2), symmetric(3)}) {
    INFO(L.name());
    const auto expected = all_semis_brute(L);
    const auto got = enumerate_semiautomorphisms(L);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got[i].images == expected[i]);
  }
}

TEST_CASE("semi-automorphism counts and classes", "[semiaut][counts]") {
  const auto census = [](const CayleyTable& L, SemiAutOptions opts = {}) {
    struct Split {
      int total = 0, autos = 0, antis = 0, boths = 0, propers = 0, movers = 0;
    } s;
    for (const auto& m : enumerate_semiautomorphisms(L, opts)) {
      ++s.total;
      if (m(0) != 0) {
        ++s.movers;
        continue;
      }
      const auto c = classify(L, m);
      if (c.is_automorphism && c.is_anti_automorphism)
        ++s.boths;
      else if (c.is_automorphism)
        ++s.autos;
      else if (c.is_anti_automorphism)
        ++s.antis;
      else
        ++s.propers;
    }
    return s;
  };

  const auto z2 = census(cyclic(2));
  CHECK(z2.total == 2);
  CHECK(z2.movers == 1);  // the swap satisfies the law but moves 0

  const auto z3 = census(cyclic(3));
  CHECK(z3.total == 2);
  CHECK(z3.boths == 2);
  CHECK(z3.movers == 0);

  const auto z5 = census(cyclic(5));
  CHECK(z5.total == 4);  // x -> cx for each unit c
  CHECK(z5.boths == 4);

  // on an elementary abelian 2-group aba = b, so every bijection qualifies
  const auto k4 = census(elementary_abelian(2, 2));
  CHECK(k4.total == 24);
  CHECK(k4.boths == 6);
  CHECK(k4.movers == 18);

  const auto s3 = census(symmetric(3));
  CHECK(s3.total == 12);
  CHECK(s3.autos == 6);
  CHECK(s3.antis == 6);
  CHECK(s3.propers == 0);
  CHECK(s3.movers == 0);

  const auto q8 = census(quaternion8());
  CHECK(q8.total == 96);
  CHECK(q8.autos == 24);
  CHECK(q8.antis == 24);
  CHECK(q8.propers == 0);
  CHECK(q8.movers == 48);

  // every semi-automorphism of the alternating group is an automorphism or
  // an anti-automorphism; counts recorded as a regression baseline
  const auto a4 = census(alternating(4));
  CHECK(a4.total == 48);
  CHECK(a4.autos == 24);
  CHECK(a4.antis == 24);
  CHECK(a4.propers == 0);
  CHECK(a4.movers == 0);

  // identity-fixing filter
  const auto q8fix = census(quaternion8(), SemiAutOptions{50'000'000, true});
  CHECK(q8fix.total == 48);
  CHECK(q8fix.movers == 0);
}

TEST_CASE("enumeration output is a group under composition",
          "[semiaut][closure]") {
  for (const auto& L : {symmetric(3), quaternion8()}) {
    const auto maps = enumerate_semiautomorphisms(L);
    const auto member = [&](const Mapping& m) {
      return std::binary_search(maps.begin(), maps.end(), m);
    };
    CHECK(member(identity_mapping(L.order())));
    for (const auto& a : maps) {
      CHECK(member(invert(a)));
      for (const auto& b : maps) CHECK(member(compose(a, b)));
    }
  }
}

TEST_CASE("automorphism backtracking agrees with the homomorphism subset",
          "[semiaut][automorphism]") {
  for (const auto& L :
       {cyclic(5), symmetric(3), quaternion8(), alternating(4)}) {
    INFO(L.name());
    std::vector<Mapping> homo;
    for (const auto& m : enumerate_semiautomorphisms(L))
      if (classify(L, m).is_automorphism) homo.push_back(m);
    const auto direct = enumerate_automorphisms(L);
    CHECK(homo == direct);
  }
}

TEST_CASE("enumeration budget exhaustion is reported", "[semiaut][budget]") {
  try {
    enumerate_semiautomorphisms(symmetric(3), SemiAutOptions{5, false});
    FAIL("expected budget_exhausted");
  } catch (const loop_error& e) {
    CHECK(e.code() == errc::budget_exhausted);
  }
}

TEST_CASE("conjugation maps", "[mapping][conjugation]") {
  // abelian: conjugation is trivial
  CHECK(is_identity(conjugation_map(cyclic(6), 4)));

  // on a group the map must match p g p^-1 computed from the table
  const auto s3 = symmetric(3);
  for (int u = 0; u < 6; ++u) {
    const auto c = conjugation_map(s3, u);
    for (int g = 0; g < 6; ++g)
      CHECK(c(g) == s3.mul(s3.mul(u, g), s3.inverse(u)));
    CHECK(classify(s3, c).is_automorphism);
  }

  // the adjoined involution of the doubled table inverts the base block
  const auto cs3 = chein_double(s3);
  const auto c6 = conjugation_map(cs3, 6);
  const auto inv = inversion_map(s3);
  for (int x = 0; x < 6; ++x) CHECK(c6(x) == inv(x));

  // the two bracketings disagree on the order-5 nonassociative fixture
  const CayleyTable l5(5,
                       {0, 1, 2, 3, 4,  //
                        1, 0, 3, 4, 2,  //
                        2, 3, 4, 0, 1,  //
                        3, 4, 1, 2, 0,  //
                        4, 2, 0, 1, 3},
                       "l5");
  CHECK_NOTHROW(conjugation_map(l5, 0));
  CHECK_NOTHROW(conjugation_map(l5, 1));
  for (int u : {2, 3, 4}) {
    try {
      conjugation_map(l5, u);
      FAIL("expected ambiguous_conjugation");
    } catch (const loop_error& e) {
      CHECK(e.code() == errc::ambiguous_conjugation);
    }
  }

  REQUIRE_THROWS_AS(conjugation_map(s3, 17), loop_error);
}

TEST_CASE("conjugations of Moufang tables are semi-automorphisms",
          "[mapping][conjugation][semiaut]") {
  for (const auto& [name, table] : moufang_catalog_small()) {
    if (table.order() > 27) continue;
    INFO(name);
    for (int u = 0; u < table.order(); ++u) {
      const auto c = classify(table, conjugation_map(table, u));
      CHECK(c.is_semi_automorphism);
    }
  }
}

TEST_CASE("inner mapping generators", "[mapping][inner]") {
  const auto s3 = symmetric(3);
  const auto gens = inner_generators(s3);
  CHECK(gens.size() == 2u * 36 + 6);

  // in a group every inner generator is an automorphism
  for (const auto& g : gens) CHECK(classify(s3, g.map).is_automorphism);

  // on the nonassociative double every generator still satisfies the
  // semi-automorphism law
  const auto cs3 = chein_double(s3);
  for (const auto& g : inner_generators(cs3)) {
    INFO(g.kind << " x=" << g.x << " y=" << g.y);
    CHECK(classify(cs3, g.map).is_semi_automorphism);
  }
}

TEST_CASE("power maps", "[mapping][power]") {
  const auto z6 = cyclic(6);
  CHECK(power_map(z6, 5).images == inversion_map(z6).images);
  CHECK(is_identity(power_map(z6, 7)));  // x^7 = x when x^6 = e
  CHECK(power_map(z6, 1) == identity_mapping(6));
}
