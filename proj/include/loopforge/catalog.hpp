#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopforge/extension.hpp"

namespace loopforge {

CayleyTable cyclic(int n);
CayleyTable elementary_abelian(int p, int k);
CayleyTable symmetric(int n);    // n <= 4
CayleyTable alternating(int n);  // n <= 4
CayleyTable quaternion8();
CayleyTable dihedral(int n);  // order 2n

// Doubles a group N to the order-2|N| loop on N + Nu with the laws
//   (xu)y = (xy^-1)u,  x(yu) = (yx)u,  (xu)(yu) = y^-1 x.
// Block layout: x at x, xu at |N| + x.
CayleyTable chein_double(const CayleyTable& N);

// Arithmetic mod an odd prime q.
struct PrimeField {
  int q;
  explicit PrimeField(int q);
  int add(int a, int b) const { return (a + b) % q; }
  int sub(int a, int b) const { return ((a - b) % q + q) % q; }
  int mul(int a, int b) const { return a * b % q; }
  int inv(int a) const;
  // Multiplicative order of a in F_q*.
  int order(int a) const;
};

// (a, b, c) coordinates of the unit upper triangular matrix
// [[1,a,c],[0,1,b],[0,0,1]]; flat index c*q^2 + b*q + a.
struct UnipotentCoord {
  int a = 0, b = 0, c = 0;
};

int u3_index(const UnipotentCoord& e, int q);
UnipotentCoord u3_coord(int index, int q);
// (a,b,c) * (a',b',c') = (a+a', b+b', c+c'+a*b') mod q.
UnipotentCoord u3_product(const UnipotentCoord& x, const UnipotentCoord& y,
                          int q);

// Order q^3 table of the unit upper triangular group over F_q.
CayleyTable u3_group(int q, int cap = 4096);

// (a,b,c) -> (a/k, b/k, ck + ab(k^-2 - k)/2) mod q. Requires ord(k) to be a
// prime other than 3.
Mapping rajah_semiauto(int q, int k);

// Cyclic extension of u3_group(q) by Z_ord(k) acting via rajah_semiauto;
// order ord(k) * q^3, evaluated lazily.
ExtensionSpec rajah_loop(int q, int k);

// The two commutative Moufang loops of order 81 and exponent 3. The
// nonassociative one lives on (Z_3)^4 with product
//   (x1..x4)(y1..y4) = (x1+y1, x2+y2, x3+y3, x4+y4+(x1-y1)(x2y3-x3y2)),
// and its constructor verifies order, commutativity, exponent, the Moufang
// law over all 81^3 triples, nonassociativity, and non-isomorphy to the
// elementary abelian one before returning.
CayleyTable cml81_nonassociative();
CayleyTable cml81_associative();

// Resolves names like z6, e3_4, s3, a4, q8, d4, u3_11, chein_s3, cml81,
// cml81-assoc.
CayleyTable catalog_loop(const std::string& name);

// Moufang catalog members of order <= 81, for sweep-style property tests.
std::vector<std::pair<std::string, CayleyTable>> moufang_catalog_small();

}  // namespace loopforge
