#include <gtest/gtest.h>

#include "jkep/phase_checks.hpp"

using namespace jkep;

namespace {

Polynomial var(std::size_t i) { return Polynomial::variable(i); }

Polynomial random_cubic(RationalSampler& rng, std::size_t nvars) {
  Polynomial p(rng.next());
  for (int t = 0; t < 6; ++t) {
    Polynomial m(rng.next_nonzero());
    const int deg = 1 + static_cast<int>(rng.next_index(3));
    for (int k = 0; k < deg; ++k) m = m * var(rng.next_index(nvars));
    p += m;
  }
  return p;
}

}  // namespace

TEST(Polynomial, ArithmeticAndNormalForm) {
  const Polynomial x = var(0), y = var(1);
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_TRUE((x * y - y * x).is_zero());
  EXPECT_EQ(((x + y) * (x + y)).size(), 3u);
  EXPECT_EQ((x * x * y).derivative(0), Rational(2) * x * y);
  EXPECT_EQ((x * x * y).total_degree(), 3);
  EXPECT_EQ((x * x * y).evaluate({Rational(2), Rational(1, 3)}), Rational(4, 3));
  EXPECT_EQ(Polynomial::multiply(x + y, x + 1, 1), x + y);
}

TEST(Polynomial, ShortAndHashProductsAgree) {
  RationalSampler rng(11);
  for (int t = 0; t < 20; ++t) {
    const Polynomial a = random_cubic(rng, 4), b = random_cubic(rng, 4), c = random_cubic(rng, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(var(2) * a, a * var(2));
  }
}

TEST(Jet, TruncationTracksOrder) {
  // (1 + t)^3 to order 2 is 1 + 3t + 3t^2.
  const Jet j(Polynomial(Rational(1)) + var(0), 2);
  const Jet cube = j * j * j;
  EXPECT_EQ(cube.poly(), Polynomial(Rational(1)) + Rational(3) * var(0) + Rational(3) * var(0) * var(0));
  EXPECT_EQ(cube.derivative(0).order(), 1);
  EXPECT_EQ(cube.derivative(0).derivative(0).value(), Rational(6));
  EXPECT_THROW(cube.derivative(0).derivative(0).derivative(0).derivative(0).value(), InvariantViolation);
}

TEST(Poisson, BracketAxiomsOnRandomCubics) {
  auto alg = parse_algebra("herm-c:2");  // non-trivial Gram weights
  const auto m = exact_model(alg);
  const std::size_t n = 2 * alg->dim();
  RationalSampler rng(3);
  for (int t = 0; t < 10; ++t) {
    const Polynomial f = random_cubic(rng, n), g = random_cubic(rng, n), h = random_cubic(rng, n);
    EXPECT_TRUE((m.poisson(f, g) + m.poisson(g, f)).is_zero());
    EXPECT_EQ(m.poisson(f, g * h), m.poisson(f, g) * h + g * m.poisson(f, h));
    const Polynomial jac = m.poisson(f, m.poisson(g, h)) + m.poisson(g, m.poisson(h, f)) + m.poisson(h, m.poisson(f, g));
    EXPECT_TRUE(jac.is_zero());
  }
}

TEST(Poisson, CanonicalPairsCarryInverseGram) {
  auto alg = parse_algebra("herm-c:3");
  const auto m = exact_model(alg);
  const std::size_t d = alg->dim();
  for (std::size_t a = 0; a < d; ++a) {
    EXPECT_EQ(m.poisson(var(a), var(d + a)), Polynomial(1 / alg->gram()[a]));
    EXPECT_TRUE(m.poisson(var(a), var(d + (a + 1) % d)).is_zero());
    EXPECT_TRUE(m.poisson(var(a), var((a + 1) % d)).is_zero());
  }
}

TEST(Poisson, QuotientRuleMatchesHandComputation) {
  auto alg = parse_algebra("real");
  const auto m = exact_model(alg);
  const Polynomial x = var(0), p = var(1);
  // {p, 1/x} = -d/dx(1/x) = 1/x^2
  EXPECT_EQ(m.poisson(Observable<Polynomial>(p), Observable<Polynomial>(Polynomial(1), x)),
            Observable<Polynomial>(Polynomial(1), x * x));
  // equal denominators: {p/x, xp/x} = {p/x, p} = -p/x^2
  EXPECT_EQ(m.poisson(Observable<Polynomial>(p, x), Observable<Polynomial>(x * p, x)),
            Observable<Polynomial>(-p, x * x));
}

TEST(MomentFunctions, RealCaseByHand) {
  auto alg = parse_algebra("real");
  const auto m = exact_model(alg);
  const auto e = unit_element(alg);
  const Polynomial x = var(0), p = var(1);
  using O = Observable<Polynomial>;
  EXPECT_EQ(m.moment_X(e), O(x * p * p));
  EXPECT_EQ(m.moment_Y(e), O(x));
  EXPECT_EQ(m.moment_S(e, e), O(x * p));
  EXPECT_EQ(m.poisson(m.moment_X(e), m.moment_Y(e)), O(Rational(-2) * x * p));
  EXPECT_EQ(m.hamiltonian(), O(x * p * p * Rational(1, 2) - Polynomial(1), x));
  EXPECT_EQ(m.hamiltonian(), O(p * p * Rational(1, 2)) - O(Polynomial(1), x));
  EXPECT_EQ(m.lenz(e), O(Polynomial(1)));
}

TEST(MomentFunctions, AngularPairIsRotationMoment) {
  // spin:3 with e1, e2 spatial: L_{e1,e2} = x2 p1 - x1 p2.
  auto alg = parse_algebra("spin:3");
  const auto m = exact_model(alg);
  const auto L = m.angular_pair(basis_element(alg, 1), basis_element(alg, 2));
  EXPECT_EQ(L, Observable<Polynomial>(var(2) * var(5) - var(1) * var(6)));
  EXPECT_TRUE(m.angular_pair(basis_element(alg, 0), basis_element(alg, 3)).is_zero());
}

TEST(MomentRelations, ExactBasisSmallFamilies) {
  for (const char* sel : {"real", "spin:2", "herm-r:2"}) {
    auto rep = verify_moment_relations(parse_algebra(sel), CheckMode::ExactBasis, 0, 1);
    EXPECT_TRUE(rep.ok()) << sel << rep.to_json().dump(1);
  }
  EXPECT_THROW(verify_moment_relations(parse_algebra("spin:6"), CheckMode::ExactBasis, 0, 1), ConfigurationError);
}

TEST(MomentRelations, ExactRandom) {
  for (const char* sel : {"spin:3", "herm-c:2"}) {
    auto rep = verify_moment_relations(parse_algebra(sel), CheckMode::ExactRandom, 50, 2);
    EXPECT_TRUE(rep.ok()) << sel << rep.to_json().dump(1);
    EXPECT_EQ(rep.relations().at("eq15.SS").passed, 50u);
  }
}

TEST(MomentRelations, PointwiseAgreesWithExact) {
  auto alg = parse_algebra("spin:2");
  auto rep = verify_moment_relations(alg, CheckMode::Pointwise, 20, 4);
  EXPECT_TRUE(rep.ok()) << rep.to_json().dump(1);
  EXPECT_EQ(rep.info().at("mode"), "pointwise");

  // A jet bracket equals the exact bracket evaluated at the base point.
  RationalSampler rng(8);
  auto [x0, p0] = random_phase_point(alg, rng);
  const auto u = random_element(alg, rng), v = random_element(alg, rng);
  const auto ex = exact_model(alg);
  const auto jm = jet_model(x0, p0, 1);
  const auto exact = ex.poisson(ex.moment_X(u), ex.moment_S(u, v)).num();
  std::vector<Rational> pt(x0.coords().begin(), x0.coords().end());
  pt.insert(pt.end(), p0.coords().begin(), p0.coords().end());
  EXPECT_EQ(jm.poisson(jm.moment_X(u), jm.moment_S(u, v)).num().value(), exact.evaluate(pt));
}

TEST(MomentRelations, AutoModeAndReportShape) {
  auto rep = verify_moment_relations(parse_algebra("real"), CheckMode::Auto, 3, 1);
  EXPECT_EQ(rep.info().at("mode"), "exact-random");
  const auto j = rep.to_json();
  EXPECT_EQ(j.at("suite"), "poisson");
  EXPECT_TRUE(j.at("relations").contains("eq15.XY"));
}

TEST(MainTheorem, DefinitionsAndConservation) {
  for (const char* sel : {"spin:3", "herm-r:2"}) {
    auto rep = verify_main_theorem_classical(parse_algebra(sel), CheckMode::ExactRandom, 25, 5);
    for (const char* rel : {"eq11.LH", "eq11.AH", "eq11.LL", "eq11.LA", "eq16.A_definition", "eq16.A_e",
                            "eq18.H_explicit", "eq11.L_antisymmetric"}) {
      EXPECT_EQ(rep.relations().at(rel).failed, 0u) << sel << " " << rel;
      EXPECT_EQ(rep.relations().at(rel).passed, 25u) << sel << " " << rel;
    }
  }
}

TEST(MainTheorem, LenzBracketSign) {
  // With these definitions {A_u, A_v} = +2 H L_{u,v}; the -2 form fails
  // whenever L_{u,v} != 0.
  auto alg = parse_algebra("spin:3");
  auto rep = verify_main_theorem_classical(alg, CheckMode::ExactRandom, 10, 6);
  EXPECT_EQ(rep.relations().at("eq11.AA_plus").passed, 10u);
  EXPECT_EQ(rep.relations().at("eq11.AA").failed, 10u);
  EXPECT_FALSE(rep.ok());

  // Independent check on basis vectors: {A_1, A_2} versus H (x2 p1 - x1 p2).
  const auto m = exact_model(alg);
  const auto A1 = m.lenz(basis_element(alg, 1)), A2 = m.lenz(basis_element(alg, 2));
  const Observable<Polynomial> rot(var(2) * var(5) - var(1) * var(6));
  EXPECT_EQ(m.poisson(A1, A2), Rational(2) * (m.hamiltonian() * rot));

  // Real: L_{u,v} = 0, so both forms hold trivially.
  EXPECT_TRUE(verify_main_theorem_classical(parse_algebra("real"), CheckMode::Auto, 1, 1).ok());
}

TEST(MainTheorem, AlbertPointwise) {
  auto rep = verify_main_theorem_classical(parse_algebra("albert"), CheckMode::Auto, 2, 7);
  EXPECT_EQ(rep.info().at("mode"), "pointwise");
  EXPECT_EQ(rep.relations().at("eq11.LA").passed, 2u);
  EXPECT_EQ(rep.relations().at("eq16.A_definition").passed, 2u);
  EXPECT_EQ(rep.relations().at("eq11.AA_plus").passed, 2u);
}
