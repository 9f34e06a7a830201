#include <gtest/gtest.h>

#include <array>
#include <utility>
#include <vector>

#include "jkep/cayley_dickson.hpp"
#include "jkep/jordan.hpp"
#include "jkep/jordan_checks.hpp"

using namespace jkep;

namespace {

const std::vector<std::pair<std::string, std::size_t>> kCatalogue = {
    {"real", 1},     {"spin:1", 2},   {"spin:2", 3},   {"spin:3", 4},   {"spin:8", 9},
    {"herm-r:2", 3}, {"herm-r:3", 6}, {"herm-r:4", 10}, {"herm-c:2", 4}, {"herm-c:3", 9},
    {"herm-h:2", 6}, {"herm-h:3", 15}, {"albert", 27}};

Element<> make(const AlgebraPtr& alg, std::vector<Rational> c) { return Element<>(alg, std::move(c)); }

// Complex rationals for an independent 2x2 hermitian-matrix oracle.
struct Cq {
  Rational re, im;
};
Cq operator*(const Cq& a, const Cq& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cq operator+(const Cq& a, const Cq& b) { return {a.re + b.re, a.im + b.im}; }
using M2 = std::array<std::array<Cq, 2>, 2>;

M2 herm2(const std::vector<Rational>& c) {
  // basis order: E11, E22, (E12 + E21), (i E12 - i E21)
  M2 m;
  m[0][0] = {c[0], 0};
  m[1][1] = {c[1], 0};
  m[0][1] = {c[2], c[3]};
  m[1][0] = {c[2], -c[3]};
  return m;
}

M2 matmul(const M2& a, const M2& b) {
  M2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

}  // namespace

TEST(Catalogue, DimensionsMatchFamilies) {
  for (const auto& [sel, dim] : kCatalogue) {
    auto alg = parse_algebra(sel);
    EXPECT_EQ(alg->dim(), dim) << sel;
    EXPECT_EQ(alg->dim(), expected_dim(alg->family(), alg->family() == Family::Albert ? 3 : alg->n())) << sel;
    EXPECT_EQ(alg->selector(), sel);
  }
}

TEST(Catalogue, RejectsBadSelectors) {
  for (const char* bad : {"", "foo", "spin", "spin:0", "spin:x", "herm-r:1", "herm-c:0", "herm-h:1", "spin:3x"})
    EXPECT_THROW(parse_algebra(bad), ConfigurationError) << bad;
  EXPECT_THROW(make_algebra(Family::Spin, 0), ConfigurationError);
}

TEST(Catalogue, GramIsRationalDiagonalWithUnitNormalisation) {
  auto alg = parse_algebra("herm-c:3");
  // E_ii has norm 1/n, off-diagonal hermitian units 2/n.
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(alg->gram()[i], Rational(1, 3));
  for (std::size_t i = 3; i < alg->dim(); ++i) EXPECT_EQ(alg->gram()[i], Rational(2, 3));
  auto spin = parse_algebra("spin:5");
  for (const auto& g : spin->gram()) EXPECT_EQ(g, 1);
}

TEST(CayleyDickson, QuaternionsAssociativeOctonionsAlternative) {
  RationalSampler rng(11);
  auto rnd = [&](std::size_t k) {
    std::vector<Rational> v(k);
    for (auto& x : v) x = rng.next();
    return v;
  };
  CayleyDickson h(4), o(8);
  EXPECT_EQ(h.unit(1, 2).unit, 3u);  // i j = k
  EXPECT_EQ(h.unit(1, 2).sign, 1);
  EXPECT_EQ(h.unit(2, 1).sign, -1);
  bool octonion_nonassociative = false;
  for (int t = 0; t < 30; ++t) {
    auto a = rnd(4), b = rnd(4), c = rnd(4);
    EXPECT_EQ(h.multiply(h.multiply(a, b), c), h.multiply(a, h.multiply(b, c)));
    auto x = rnd(8), y = rnd(8), z = rnd(8);
    EXPECT_EQ(o.multiply(o.multiply(x, x), y), o.multiply(x, o.multiply(x, y)));
    EXPECT_EQ(o.multiply(o.multiply(y, x), x), o.multiply(y, o.multiply(x, x)));
    if (o.multiply(o.multiply(x, y), z) != o.multiply(x, o.multiply(y, z))) octonion_nonassociative = true;
    // |xy|^2 = |x|^2 |y|^2
    auto norm2 = [](const std::vector<Rational>& v) {
      Rational s = 0;
      for (const auto& c : v) s += c * c;
      return s;
    };
    EXPECT_EQ(norm2(o.multiply(x, y)), norm2(x) * norm2(y));
  }
  EXPECT_TRUE(octonion_nonassociative);
}

TEST(Product, RealIsOrdinaryMultiplication) {
  auto alg = parse_algebra("real");
  EXPECT_EQ(mul(make(alg, {Rational(3, 2)}), make(alg, {Rational(-4)}))[0], Rational(-6));
  EXPECT_EQ(inner(make(alg, {Rational(2, 3)}), make(alg, {Rational(5)})), Rational(10, 3));
  EXPECT_EQ(unit_element(alg)[0], 1);
}

TEST(Product, SpinFactorRule) {
  auto alg = parse_algebra("spin:3");
  // (0; e1) o (0; e2) = 0
  EXPECT_TRUE(mul(basis_element(alg, 1), basis_element(alg, 2)).is_zero());
  RationalSampler rng(5);
  for (int t = 0; t < 50; ++t) {
    auto a = random_element(alg, rng), b = random_element(alg, rng);
    // (s,u)o(t,v) = (st + u.v, sv + tu)
    std::vector<Rational> expect(4);
    expect[0] = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    for (int i = 1; i < 4; ++i) expect[i] = a[0] * b[i] + b[0] * a[i];
    EXPECT_EQ(mul(a, b).coords(), expect);
  }
}

TEST(Product, HermRealOffDiagonalUnit) {
  auto alg = parse_algebra("herm-r:2");  // E11, E22, E12+E21
  auto r = mul(basis_element(alg, 0), basis_element(alg, 2));
  EXPECT_EQ(r.coords(), (std::vector<Rational>{0, 0, Rational(1, 2)}));
}

TEST(Product, HermComplexMatchesMatrixOracle) {
  auto alg = parse_algebra("herm-c:2");
  RationalSampler rng(17);
  for (int t = 0; t < 50; ++t) {
    auto a = random_element(alg, rng), b = random_element(alg, rng);
    M2 ma = herm2(a.coords()), mb = herm2(b.coords());
    M2 p = matmul(ma, mb), q = matmul(mb, ma);
    std::vector<Rational> expect{(p[0][0].re + q[0][0].re) / 2, (p[1][1].re + q[1][1].re) / 2,
                                 (p[0][1].re + q[0][1].re) / 2, (p[0][1].im + q[0][1].im) / 2};
    EXPECT_EQ(mul(a, b).coords(), expect);
    EXPECT_TRUE(is_zero(p[0][0].im + q[0][0].im));
  }
}

TEST(Product, MismatchedAlgebrasThrow) {
  auto a = parse_algebra("spin:3"), b = parse_algebra("spin:3");
  EXPECT_THROW(mul(unit_element(a), unit_element(b)), DimensionError);
  EXPECT_THROW(inner(unit_element(a), unit_element(b)), DimensionError);
  EXPECT_THROW(Element<>(a, std::vector<Rational>(3)), DimensionError);
}

TEST(Metric, UnitNormAndOrthogonalBasisEverywhere) {
  for (const auto& [sel, dim] : kCatalogue) {
    auto alg = parse_algebra(sel);
    auto e = unit_element(alg);
    EXPECT_EQ(inner(e, e), 1) << sel;
    EXPECT_EQ(trace_form(e, e), 1) << sel;
    if (dim > 10) continue;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        EXPECT_TRUE(is_zero(trace_form(basis_element(alg, i), basis_element(alg, j)))) << sel;
  }
}

TEST(Triple, UnitIdentities) {
  RationalSampler rng(3);
  for (const char* sel : {"spin:3", "herm-c:2", "herm-h:2"}) {
    auto alg = parse_algebra(sel);
    auto e = unit_element(alg);
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(alg, rng), c = random_element(alg, rng);
      EXPECT_EQ(triple(e, e, a), a);
      EXPECT_EQ(triple(a, e, a), mul(a, a));
      EXPECT_EQ(triple(a, e, c), triple(c, e, a));
    }
  }
}

TEST(Triple, SpinTwoRoutesAgree) {
  auto alg = parse_algebra("spin:3");
  auto u = basis_element(alg, 1), v = basis_element(alg, 2);
  auto direct = triple(u, v, u);
  EXPECT_EQ(direct, apply(S_op(u, v), u));
  // {u v u} = 2u(uv) - v u^2 = -v for orthonormal vectors with u^2 = e
  EXPECT_EQ(direct, -v);
}

TEST(Operators, SEqualsLWhenOneArgumentIsUnit) {
  RationalSampler rng(23);
  for (const auto& [sel, dim] : kCatalogue) {
    auto alg = parse_algebra(sel);
    auto e = unit_element(alg);
    EXPECT_EQ(S_op(e, e), Endo::identity(dim)) << sel;
    auto a = random_element(alg, rng);
    EXPECT_EQ(S_op(a, e), L_op(a)) << sel;
    EXPECT_EQ(S_op(e, a), L_op(a)) << sel;
  }
}

TEST(Operators, AdjointOfSuvIsSvuHermComplex) {
  auto alg = parse_algebra("herm-c:2");
  RationalSampler rng(29);
  for (int t = 0; t < 50; ++t) {
    auto u = random_element(alg, rng), v = random_element(alg, rng);
    // independent transpose against the Gram: <S x | y> = <x | S' y>
    Endo s = S_op(u, v), sv = S_op(v, u);
    const auto& g = alg->gram();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g[i] * s(i, j), sv(j, i) * g[j]);
  }
}

TEST(Axioms, CommutativityAndJordanIdentityAllFamilies) {
  for (const auto& [sel, dim] : kCatalogue) {
    auto alg = parse_algebra(sel);
    auto rep = verify_jordan(alg, dim > 10 ? 20 : 60, 1234);
    EXPECT_TRUE(rep.ok()) << sel << "\n" << rep.to_json().dump(1);
  }
}

TEST(Axioms, FullBasisMultilinearityForSmallAlgebras) {
  // dim <= 6: Jordan identity linearised over all basis pairs via a = e_i + e_j.
  for (const char* sel : {"spin:2", "herm-r:2", "herm-c:2", "herm-r:3", "herm-h:2"}) {
    auto alg = parse_algebra(sel);
    const std::size_t d = alg->dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          auto a = basis_element(alg, i) + basis_element(alg, j), b = basis_element(alg, k);
          auto a2 = mul(a, a);
          ASSERT_EQ(mul(a, mul(a2, b)), mul(a2, mul(a, b))) << sel;
        }
  }
}

TEST(StructureRelation, HoldsExactly) {
  EXPECT_TRUE(verify_structure_relation(parse_algebra("real"), 20, 1).ok());
  EXPECT_TRUE(verify_structure_relation(parse_algebra("spin:3"), 100, 2).ok());
  EXPECT_TRUE(verify_structure_relation(parse_algebra("herm-h:2"), 30, 3).ok());
}

TEST(StructureRelation, AlbertSample) {
  auto rep = verify_structure_relation(parse_algebra("albert"), 25, 4);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.relations().at("eq6").passed, 25u);
}

TEST(StructureRelation, DetectsABrokenIdentity) {
  // Sanity: the comparison is not vacuous. Swapping roles on the right side fails.
  auto alg = parse_algebra("spin:3");
  RationalSampler rng(8);
  auto a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng),
       d = random_element(alg, rng);
  EXPECT_NE(commutator(S_op(a, b), S_op(c, d)), S_op(triple(a, b, c), d) - S_op(c, triple(a, b, d)));
}

TEST(Export, JsonRoundTripsRationals) {
  auto alg = parse_algebra("herm-r:2");
  auto j = algebra_to_json(*alg);
  EXPECT_EQ(j["family"], "herm-r");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["c"][0][2][2], "1/2");
  EXPECT_EQ(j["gram"][2], "1/1");
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t g = 0; g < 3; ++g)
        EXPECT_EQ(parse_rational(j["c"][a][b][g].get<std::string>()), alg->structure_constant(a, b, g));
  EXPECT_TRUE(algebra_to_json(*parse_algebra("albert"))["n"].is_null());
}

TEST(Rationals, ParseForms) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1/0"), ConfigurationError);
  EXPECT_THROW(parse_rational("abc"), ConfigurationError);
  EXPECT_THROW(parse_rational(""), ConfigurationError);
  EXPECT_EQ(to_pq(Rational(3)), "3/1");
}

TEST(Rationals, SamplerIsReproducibleAndInRange) {
  RationalSampler a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    Rational x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_LE(abs(x), 9);
    EXPECT_TRUE(x.get_den() == 1 || x.get_den() == 2 || x.get_den() == 3);
  }
}
