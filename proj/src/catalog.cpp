#include "loopforge/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "loopforge/subloop.hpp"

namespace loopforge {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CayleyTable permutation_group(int n, bool even_only, std::string name) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, int> index;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    index[p] = static_cast<int>(perms.size());
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int g = static_cast<int>(perms.size());
  std::vector<int> flat(static_cast<std::size_t>(g) * g);
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) {
      for (int i = 0; i < n; ++i) comp[i] = perms[x][perms[y][i]];
      flat[static_cast<std::size_t>(x) * g + y] = index.at(comp);
    }
  return CayleyTable(g, std::move(flat), std::move(name));
}

}  // namespace

CayleyTable cyclic(int n) {
  if (n < 1) fail(errc::malformed, "cyclic order must be positive");
  if (n > 4096) fail(errc::cap_exceeded, "cyclic order above table cap");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  return CayleyTable(n, std::move(flat), "z" + std::to_string(n));
}

CayleyTable elementary_abelian(int p, int k) {
  if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (k < 1) fail(errc::malformed, "exponent must be positive");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > 4096) fail(errc::cap_exceeded, "group order above table cap");
  }
  const int nn = static_cast<int>(n);
  std::vector<int> flat(static_cast<std::size_t>(nn) * nn);
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y) {
      int xs = x, ys = y, out = 0, weight = 1;
      for (int i = 0; i < k; ++i) {
        out += (xs + ys) % p * weight;
        xs /= p;
        ys /= p;
        weight *= p;
      }
      flat[static_cast<std::size_t>(x) * nn + y] = out;
    }
  return CayleyTable(nn, std::move(flat),
                     "e" + std::to_string(p) + "_" + std::to_string(k));
}

CayleyTable symmetric(int n) {
  if (n < 1 || n > 4) fail(errc::malformed, "symmetric group degree must be 1..4");
  return permutation_group(n, false, "s" + std::to_string(n));
}

CayleyTable alternating(int n) {
  if (n < 1 || n > 4) fail(errc::malformed, "alternating group degree must be 1..4");
  return permutation_group(n, true, "a" + std::to_string(n));
}

CayleyTable quaternion8() {
  // Index = 2*axis + sign: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k.
  // axis_mul[a][b] = (sign, axis) of basis product.
  static const int axis_mul[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<int> flat(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
      const int s = (sx + sy + axis_mul[ax][ay][0]) % 2;
      flat[static_cast<std::size_t>(x) * 8 + y] = 2 * axis_mul[ax][ay][1] + s;
    }
  return CayleyTable(8, std::move(flat), "q8");
}

CayleyTable dihedral(int n) {
  if (n < 1) fail(errc::malformed, "dihedral parameter must be positive");
  if (2 * n > 4096) fail(errc::cap_exceeded, "dihedral order above table cap");
  const int g = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(g) * g);
  // Element f*n + a is s^f r^a; (s^f1 r^a1)(s^f2 r^a2) = s^(f1+f2) r^(±a1+a2).
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) {
      const int f1 = x / n, a1 = x % n, f2 = y / n, a2 = y % n;
      const int f = (f1 + f2) % 2;
      const int a = ((f2 ? n - a1 : a1) + a2) % n;
      flat[static_cast<std::size_t>(x) * g + y] = f * n + a;
    }
  return CayleyTable(g, std::move(flat), "d" + std::to_string(n));
}

CayleyTable chein_double(const CayleyTable& N) {
  const ScanReport assoc = is_group(N, ScanPolicy{.cap = 4096});
  if (!assoc.holds) fail(errc::not_a_group, "chein doubling needs a group base");
  const int n = N.order();
  const int g = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(g) * g);
  const auto at = [&](int x, int y) -> int& {
    return flat[static_cast<std::size_t>(x) * g + y];
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      at(x, y) = N.mul(x, y);
      at(x, n + y) = n + N.mul(y, x);                 // x(yu) = (yx)u
      at(n + x, y) = n + N.mul(x, N.inverse(y));      // (xu)y = (xy^-1)u
      at(n + x, n + y) = N.mul(N.inverse(y), x);      // (xu)(yu) = y^-1 x
    }
  const std::string base_name = N.name().empty() ? "base" : N.name();
  return CayleyTable(g, std::move(flat), "chein_" + base_name);
}

PrimeField::PrimeField(int q_) : q(q_) {
  if (!is_prime(q) || q == 2)
    fail(errc::not_prime, "field modulus " + std::to_string(q) +
                              " must be an odd prime");
}

int PrimeField::inv(int a) const {
  a = ((a % q) + q) % q;
  if (a == 0) fail(errc::malformed, "0 has no inverse");
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  fail(errc::internal_inconsistency, "inverse not found");
}

int PrimeField::order(int a) const {
  a = ((a % q) + q) % q;
  if (a == 0) fail(errc::malformed, "0 has no multiplicative order");
  int acc = a;
  for (int k = 1; k < q; ++k) {
    if (acc == 1) return k;
    acc = acc * a % q;
  }
  fail(errc::internal_inconsistency, "order not found");
}

int u3_index(const UnipotentCoord& e, int q) { return e.c * q * q + e.b * q + e.a; }

UnipotentCoord u3_coord(int index, int q) {
  return UnipotentCoord{index % q, index / q % q, index / (q * q)};
}

UnipotentCoord u3_product(const UnipotentCoord& x, const UnipotentCoord& y,
                          int q) {
  return UnipotentCoord{(x.a + y.a) % q, (x.b + y.b) % q,
                        (x.c + y.c + x.a * y.b) % q};
}

CayleyTable u3_group(int q, int cap) {
  const PrimeField F(q);
  const long long n = static_cast<long long>(q) * q * q;
  if (n > cap)
    fail(errc::cap_exceeded, "q^3 = " + std::to_string(n) +
                                 " exceeds table cap " + std::to_string(cap));
  const int nn = static_cast<int>(n);
  std::vector<int> flat(static_cast<std::size_t>(nn) * nn);
  parallel_for(static_cast<std::size_t>(nn), [&](std::size_t x) {
    const UnipotentCoord cx = u3_coord(static_cast<int>(x), q);
    for (int y = 0; y < nn; ++y)
      flat[x * nn + y] = u3_index(u3_product(cx, u3_coord(y, q), q), q);
  });
  return CayleyTable(nn, std::move(flat), "u3_" + std::to_string(q));
}

Mapping rajah_semiauto(int q, int k) {
  const PrimeField F(q);
  if (k < 1 || k >= q) fail(errc::malformed, "k must lie in 1..q-1");
  const int p = F.order(k);
  if (!is_prime(p) || p == 3)
    fail(errc::bad_order, "ord(k) = " + std::to_string(p) +
                              " must be a prime other than 3");
  const int kinv = F.inv(k);
  // (k^-2 - k) / 2
  const int coef = F.mul(F.sub(F.mul(kinv, kinv), k), F.inv(2));
  const int n = q * q * q;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const UnipotentCoord e = u3_coord(i, q);
    const UnipotentCoord img{F.mul(e.a, kinv), F.mul(e.b, kinv),
                             F.add(F.mul(e.c, k), F.mul(F.mul(e.a, e.b), coef))};
    images[i] = u3_index(img, q);
  }
  return make_mapping(std::move(images));
}

ExtensionSpec rajah_loop(int q, int k) {
  const PrimeField F(q);
  const int p = F.order(k);
  return ExtensionSpec(u3_group(q), p, rajah_semiauto(q, k),
                       "rajah_" + std::to_string(q) + "_" + std::to_string(k));
}

namespace {

CayleyTable build_cml81() {
  const int n = 81;
  const auto digits = [](int x) {
    return std::array<int, 4>{x % 3, x / 3 % 3, x / 9 % 3, x / 27};
  };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const auto xd = digits(x);
    for (int y = 0; y < n; ++y) {
      const auto yd = digits(y);
      const int correction = (xd[0] - yd[0]) * (xd[1] * yd[2] - xd[2] * yd[1]);
      const int d4 = ((xd[3] + yd[3] + correction) % 3 + 3) % 3;
      flat[static_cast<std::size_t>(x) * n + y] =
          (xd[0] + yd[0]) % 3 + (xd[1] + yd[1]) % 3 * 3 +
          (xd[2] + yd[2]) % 3 * 9 + d4 * 27;
    }
  }
  CayleyTable table(n, std::move(flat), "cml81");

  // Construction gate; every claim the table is used for is checked here.
  if (!is_commutative(table).holds)
    fail(errc::internal_inconsistency, "cml81 gate: not commutative");
  if (exponent(table) != 3)
    fail(errc::internal_inconsistency, "cml81 gate: exponent is not 3");
  if (!is_moufang(table, MoufangMode::single).holds)
    fail(errc::internal_inconsistency, "cml81 gate: not Moufang");
  if (is_group(table).holds)
    fail(errc::internal_inconsistency, "cml81 gate: unexpectedly associative");
  if (are_isomorphic(table, elementary_abelian(3, 4)).status !=
      IsoStatus::not_isomorphic)
    fail(errc::internal_inconsistency,
         "cml81 gate: not distinguished from the elementary abelian group");
  return table;
}

}  // namespace

CayleyTable cml81_nonassociative() {
  static const CayleyTable table = build_cml81();
  return table;
}

CayleyTable cml81_associative() {
  return elementary_abelian(3, 4).with_name("cml81_assoc");
}

CayleyTable catalog_loop(const std::string& name) {
  const auto num = [&](std::size_t from) {
    if (from >= name.size())
      fail(errc::malformed, "catalog name " + name + " needs a parameter");
    return std::stoi(name.substr(from));
  };
  if (name == "q8") return quaternion8();
  if (name == "cml81") return cml81_nonassociative();
  if (name == "cml81-assoc" || name == "cml81assoc") return cml81_associative();
  if (name.rfind("chein_", 0) == 0)
    return chein_double(catalog_loop(name.substr(6)));
  if (name.rfind("u3_", 0) == 0) return u3_group(num(3));
  if (name.rfind("cyclic", 0) == 0) return cyclic(num(6));
  if (name.rfind("sym", 0) == 0) return symmetric(num(3));
  if (name.rfind("alt", 0) == 0) return alternating(num(3));
  if (name.rfind("dihedral", 0) == 0) return dihedral(num(8));
  if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'c') &&
      std::isdigit(static_cast<unsigned char>(name[1])))
    return cyclic(num(1));
  if (name.size() >= 2 && name[0] == 's' &&
      std::isdigit(static_cast<unsigned char>(name[1])))
    return symmetric(num(1));
  if (name.size() >= 2 && name[0] == 'a' &&
      std::isdigit(static_cast<unsigned char>(name[1])))
    return alternating(num(1));
  if (name.size() >= 2 && name[0] == 'd' &&
      std::isdigit(static_cast<unsigned char>(name[1])))
    return dihedral(num(1));
  if (name.size() >= 2 && name[0] == 'e') {
    const auto sep = name.find('_');
    if (sep != std::string::npos)
      return elementary_abelian(std::stoi(name.substr(1, sep - 1)),
                                std::stoi(name.substr(sep + 1)));
  }
  fail(errc::malformed, "unknown catalog name: " + name);
}

std::vector<std::pair<std::string, CayleyTable>> moufang_catalog_small() {
  std::vector<std::pair<std::string, CayleyTable>> out;
  const auto add = [&](CayleyTable t) { out.emplace_back(t.name(), std::move(t)); };
  for (int n : {1, 2, 3, 4, 5, 6, 8, 9}) add(cyclic(n));
  add(elementary_abelian(2, 2));
  add(elementary_abelian(2, 3));
  add(elementary_abelian(3, 2));
  add(symmetric(3));
  add(symmetric(4));
  add(alternating(4));
  add(quaternion8());
  add(dihedral(4));
  add(dihedral(5));
  add(u3_group(3));
  add(chein_double(cyclic(3)));
  add(chein_double(cyclic(4)));
  add(chein_double(symmetric(3)));
  add(chein_double(alternating(4)));
  add(chein_double(quaternion8()));
  add(cml81_associative());
  add(cml81_nonassociative());
  return out;
}

}  // namespace loopforge
