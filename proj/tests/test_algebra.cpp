#include <random>

#include "doctest.h"
#include "germlab/error.hpp"
#include "germlab/parser.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/weights.hpp"
#include "support.hpp"

using namespace germlab;
using testing_support::random_polynomial;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& v = xyz) {
  return parse_polynomial(s, v);
}

WeightVector W(std::initializer_list<const char*> ws) {
  std::vector<Rational> out;
  for (auto w : ws) out.push_back(parse_rational(w));
  return WeightVector(out);
}

}  // namespace

TEST_CASE("gaussian rational field operations are exact") {
  GaussianRational a(Rational(1, 2), Rational(3));
  GaussianRational b(Rational(-2, 3), Rational(1, 5));
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK((a + b) * b == a * b + b * b);
  CHECK((a / b) * b == a);
  CHECK(GaussianRational::imaginary_unit() * GaussianRational::imaginary_unit() ==
        GaussianRational(-1));
  CHECK(GaussianRational(Rational(6, 4)).to_string() == "3/2");
  CHECK(GaussianRational(0, -1).to_string() == "(-i)");
  CHECK_THROWS_AS(GaussianRational(0).inverse(), Error);
}

TEST_CASE("parse_polynomial reads the grammar") {
  auto f = P("x^2 + y^2 + z^3");
  CHECK(f.size() == 3);
  CHECK(f.coefficient(Monomial{2, 0, 0}) == GaussianRational(1));
  CHECK(f.coefficient(Monomial{0, 0, 3}) == GaussianRational(1));

  auto bs = P("z^5 + x^15 + x*y^7 + i*z*y^6");
  CHECK(bs.size() == 4);
  CHECK(bs.coefficient(Monomial{0, 6, 1}) == GaussianRational::imaginary_unit());

  CHECK(P("(1/2+3*i)*x - 3/4*y*z").coefficient(Monomial{1, 0, 0}) ==
        GaussianRational(Rational(1, 2), 3));
  CHECK(P("(x+y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("x*x*x") == P("x^3"));
  CHECK(P("-x + x").is_zero());
}

TEST_CASE("parse errors carry positions") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK_THROWS_AS(P("x + w", xy), ParseError);
  try {
    P("x + w", xy);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("x^-2", xy), ParseError);
  CHECK_THROWS_AS(P("2x", xy), ParseError);
  CHECK_THROWS_AS(P("x +", xy), ParseError);
  CHECK_THROWS_AS(P("1/0", xy), ParseError);
  CHECK_THROWS_AS(P("0.5*x", xy), ParseError);
  CHECK_THROWS_AS(P("x y", xy), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x", {"x", "i"}), ValidationError);
  CHECK_THROWS_AS(parse_polynomial("x", {"x", "x"}), ValidationError);
}

TEST_CASE("parse/print round trip on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_polynomial(rng, 3, 5, 6, true);
    auto text = f.to_string();
    auto g = P(text);
    CHECK(g == f);
    CHECK(g.to_string() == text);
  }
}

TEST_CASE("ring axioms and product rule on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_polynomial(rng, 3, 4, 5, true);
    auto g = random_polynomial(rng, 3, 4, 5, true);
    auto h = random_polynomial(rng, 3, 4, 5, true);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK((f * g).derivative(k) == f * g.derivative(k) + g * f.derivative(k));
    }
  }
}

TEST_CASE("weighted order and weighted part") {
  auto w = W({"1/15", "2/15", "3/15"});
  CHECK(*weighted_order(P("z^5 + x^15 + x*y^7"), w) == 1);
  CHECK(*weighted_order(P("z*y^6"), w) == 1);
  CHECK_FALSE(weighted_order(Polynomial(xyz), w).has_value());
  CHECK_THROWS_AS(weighted_order(P("x"), W({"1", "1"})), ArityError);

  auto w2 = W({"1/2", "1/2", "1/3"});
  CHECK(weighted_part(P("x^2+y^2+z^3+z^4"), w2, 1) == P("x^2+y^2+z^3"));
  CHECK(weighted_part(P("z^5 + x^15 + x*y^7 + z*y^6"), w, 1) ==
        P("z^5 + x^15 + x*y^7 + z*y^6"));
  CHECK(weighted_part(P("x^2+y^2"), w2, Rational(1, 2)).is_zero());

  auto split = split_by_weight(P("x^2+y^2+z^3+y^5"), w2);
  CHECK(split.principal == P("x^2+y^2+z^3"));
  CHECK(split.rest == P("y^5"));
  auto one = split_by_weight(parse_polynomial("x^2+x^3+x^4", {"x"}), W({"1/2"}));
  CHECK(one.rest == parse_polynomial("x^3+x^4", {"x"}));
  CHECK_THROWS_AS(split_by_weight(Polynomial(xyz), w2), ValidationError);
}

TEST_CASE("weighted order is additive and splits reassemble") {
  std::mt19937_64 rng(5);
  auto w = W({"1/3", "1/2", "2/5"});
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_polynomial(rng, 3, 5, 5, true);
    auto g = random_polynomial(rng, 3, 5, 5, true);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(*weighted_order(f * g, w) == *weighted_order(f, w) + *weighted_order(g, w));
    auto s = split_by_weight(f, w);
    CHECK(s.principal + s.rest == f);
    if (!s.rest.is_zero()) CHECK(*weighted_order(s.rest, w) > *weighted_order(f, w));
  }
}

TEST_CASE("infer_weights") {
  std::vector<Polynomial> a2{P("x^2+y^2+z^3")};
  auto r = infer_weights(a2);
  CHECK(r.weights == W({"1/2", "1/2", "1/3"}));
  CHECK(r.degrees == std::vector<Rational>{1});
  CHECK(r.primitive == std::vector<Integer>{3, 3, 2});

  std::vector<Polynomial> bs{P("z^5 + x^15 + x*y^7")};
  CHECK(infer_weights(bs).weights == W({"1/15", "2/15", "3/15"}));

  std::vector<Polynomial> bad{parse_polynomial("x^2+x*y^3+y^2", {"x", "y"})};
  try {
    infer_weights(bad);
    FAIL("expected failure");
  } catch (const WeightInferenceError& e) {
    CHECK(e.kind() == WeightInferenceError::Kind::Inconsistent);
  }

  std::vector<Polynomial> missing{P("x^2+y^2")};
  try {
    infer_weights(missing);
    FAIL("expected failure");
  } catch (const WeightInferenceError& e) {
    CHECK(e.kind() == WeightInferenceError::Kind::Underdetermined);
    CHECK(e.free_variables() == std::vector<std::string>{"z"});
  }

  std::vector<Polynomial> ci{P("x^2+y^3"), P("x*y + z^5")};
  auto rc = infer_weights(ci);
  for (std::size_t i = 0; i < ci.size(); ++i) {
    CHECK(weighted_part(ci[i], rc.weights, rc.degrees[i]) == ci[i]);
  }
}

TEST_CASE("jacobian and numeric evaluation") {
  std::vector<Polynomial> sys{P("x*y"), P("x+y")};
  auto J = jacobian(sys);
  CHECK(J.at(0, 0) == P("y"));
  CHECK(J.at(0, 1) == P("x"));
  CHECK(J.at(1, 0) == P("1"));
  std::vector<Polynomial> c{P("5")};
  CHECK(jacobian(c).at(0, 2).is_zero());

  std::vector<std::complex<double>> pt{1.0, {0.0, 1.0}, 0.0};
  CHECK(std::abs(evaluate_numeric(P("x^2+y^2"), pt)) < 1e-15);
  std::vector<std::complex<double>> p2{0.0, 0.0, 2.0};
  CHECK(evaluate_numeric(P("z^5"), p2) == std::complex<double>(32.0));
  CHECK(evaluate_numeric(Polynomial(xyz), p2) == std::complex<double>(0.0));
}
