#include <random>

#include "doctest.h"
#include "germlab/error.hpp"
#include "germlab/groebner.hpp"
#include "germlab/parser.hpp"
#include "support.hpp"

using namespace germlab;
using testing_support::random_monomial;
using testing_support::random_polynomial;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

std::vector<Polynomial> Ps(std::initializer_list<const char*> texts,
                           const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse_polynomial(t, vars));
  return out;
}

// Division-based audit, independent of the engine's reducer.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto s = s_polynomial(g[i], g[j], gb.order());
      if (!divide(s, g, gb.order()).remainder.is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced_monic(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  const auto& lm = gb.leading_monomials();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].coefficient(lm[i]).is_one()) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : g[j].terms()) {
        if (lm[i].divides(m)) return false;
      }
    }
  }
  return true;
}

// Largest S such that the coordinate subspace {x_j = 0, j not in S} lies in
// V(monomials), decided by evaluating every generator at the indicator of S.
int monomial_dimension_oracle(const std::vector<Polynomial>& gens, std::size_t n) {
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::complex<double>> pt(n);
    for (std::size_t k = 0; k < n; ++k) pt[k] = (mask >> k) & 1u ? 1.0 : 0.0;
    bool inside = true;
    for (const auto& g : gens) inside = inside && evaluate_numeric(g, pt) == 0.0;
    if (inside) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Monomials in the box [0, bound)^n not divisible by any generator.
std::size_t staircase_oracle(const std::vector<Monomial>& gens, std::size_t n, int bound) {
  std::size_t count = 0;
  std::vector<int> e(n, 0);
  for (;;) {
    Monomial m(std::span<const int>(e.data(), n));
    bool standard = true;
    for (const auto& g : gens) standard = standard && !g.divides(m);
    if (standard) ++count;
    std::size_t k = 0;
    while (k < n && ++e[k] == bound) e[k++] = 0;
    if (k == n) return count;
  }
}

}  // namespace

TEST_CASE("monomial orders") {
  auto g = MonomialOrder::grevlex();
  CHECK(g.greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
  CHECK(g.greater(Monomial{0, 0, 3}, Monomial{1, 1, 0}));
  auto l = MonomialOrder::local_degree();
  CHECK(l.greater(Monomial{0, 0, 0}, Monomial{1, 0, 0}));
  CHECK(l.greater(Monomial{1, 0, 0}, Monomial{2, 0, 0}));
  auto w = MonomialOrder::weighted(WeightVector({Rational(1, 2), Rational(1, 3)}));
  CHECK(w.greater(Monomial{1, 0}, Monomial{0, 1}));
  CHECK(w.greater(Monomial{0, 3}, Monomial{1, 0}));
  // equal weighted degree 6: grevlex tiebreak by total degree
  CHECK(w.compare(Monomial{2, 0}, Monomial{0, 3}) == std::strong_ordering::less);
}

TEST_CASE("buchberger on small ideals") {
  auto gb = buchberger(Ps({"x", "y"}, xy), MonomialOrder::grevlex());
  CHECK(gb.generators() == Ps({"y", "x"}, xy));

  auto gb2 = buchberger(Ps({"x^2-1", "x*y-1"}, xy), MonomialOrder::grevlex());
  // Hand reduction: y*(x^2-1) - x*(x*y-1) = x - y, then x^2-1 -> y^2-1.
  CHECK(gb2.generators() == Ps({"x-y", "y^2-1"}, xy));
  CHECK(ideal_membership(parse_polynomial("y^2-1", xy), gb2));
  CHECK(ideal_membership(parse_polynomial("x*y-1", xy), gb2));

  auto unit = buchberger(Ps({"1"}, xy), MonomialOrder::grevlex());
  CHECK(unit.is_unit());
  CHECK(unit.generators().size() == 1);

  auto lin = buchberger(Ps({"x"}, xy), MonomialOrder::grevlex());
  CHECK(ideal_membership(parse_polynomial("x^2+x*y", xy), lin));
  CHECK_FALSE(ideal_membership(parse_polynomial("1", xy), buchberger(Ps({"x", "y"}, xy),
                                                                      MonomialOrder::grevlex())));
  CHECK_THROWS_AS(buchberger(Ps({"x"}, xy), MonomialOrder::local_degree()), ValidationError);
}

TEST_CASE("budget exhaustion is loud") {
  GroebnerOptions tiny{3};
  CHECK_THROWS_AS(buchberger(Ps({"x*y-z", "y*z-x", "z*x-y"}, xyz),
                             MonomialOrder::grevlex(), tiny),
                  BudgetExhausted);
}

TEST_CASE("randomized bases pass the S-polynomial audit and cofactor check") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(rng, n, 3, 3, trial % 2));
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty()) continue;
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::elimination()}) {
      auto gb = buchberger(gens, order);
      CHECK(s_pairs_reduce_to_zero(gb));
      CHECK(is_reduced_monic(gb));
      for (const auto& g : gens) CHECK(ideal_membership(g, gb));
      // every basis element is a combination of the generators: reproduce
      // a product of generators through division by the basis
      auto f = gens[0] * gens.back();
      auto div = divide(f, gb.generators(), order);
      CHECK(div.remainder.is_zero());
      Polynomial rebuilt(f.variables());
      for (std::size_t i = 0; i < div.quotients.size(); ++i) {
        rebuilt += div.quotients[i] * gb.generators()[i];
      }
      CHECK(rebuilt == f);
    }
  }
}

TEST_CASE("krull dimension") {
  CHECK(krull_dimension(buchberger(Ps({"x", "z"}, xyz), MonomialOrder::grevlex())) == 1);
  CHECK(krull_dimension(buchberger(Ps({"x", "y", "z"}, xyz), MonomialOrder::grevlex())) == 0);
  CHECK(krull_dimension(buchberger(Ps({"x-1", "x"}, xyz), MonomialOrder::grevlex())) == -1);
  CHECK(krull_dimension(buchberger(Ps({"x^2+y^2+z^2"}, xyz), MonomialOrder::grevlex())) == 2);
}

TEST_CASE("krull dimension of monomial ideals matches the subset oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 6;
    std::vector<Polynomial> gens;
    const int count = 1 + trial % 4;
    for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, n, 2));
    auto gb = buchberger(gens, MonomialOrder::grevlex());
    CHECK(krull_dimension(gb) == monomial_dimension_oracle(gens, n));
  }
}

TEST_CASE("quotient dimension") {
  CHECK(quotient_dimension(buchberger(Ps({"x^2", "y^2"}, xy), MonomialOrder::grevlex())) == 4u);
  CHECK(quotient_dimension(buchberger(Ps({"x", "y"}, xy), MonomialOrder::grevlex())) == 1u);
  CHECK_FALSE(
      quotient_dimension(buchberger(Ps({"x^2"}, xy), MonomialOrder::grevlex())).has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < n; ++k) {
      Monomial m(n);
      m.set(k, 1 + static_cast<int>(rng() % 4));
      gens.push_back(Polynomial::term(testing_support::variable_names(n), m, 1));
    }
    gens.push_back(random_monomial(rng, n, 3));
    auto gb = buchberger(gens, MonomialOrder::grevlex());
    std::vector<Monomial> leads;
    for (const auto& g : gens) leads.push_back(g.terms().begin()->first);
    CHECK(*quotient_dimension(gb) == staircase_oracle(leads, n, 5));
  }
}

TEST_CASE("saturation") {
  auto s1 = saturation(Ps({"x*y"}, xy), parse_polynomial("x", xy));
  CHECK(s1 == Ps({"y"}, xy));
  auto s2 = saturation(Ps({"x^2"}, xy), parse_polynomial("x", xy));
  CHECK(s2.size() == 1);
  CHECK(s2.front().is_constant());
  auto s3 = saturation(Ps({"x^2+y^2"}, xy), parse_polynomial("x*y", xy));
  CHECK(s3 == Ps({"x^2+y^2"}, xy));
  // (x^2 y, x y^2) : (xy)^inf = (1); (x^2, xy) : y^inf = (x)
  auto s4 = saturation(Ps({"x^2", "x*y"}, xy), parse_polynomial("y", xy));
  CHECK(s4 == Ps({"x"}, xy));
  CHECK_THROWS_AS(saturation(Ps({"x"}, xy), Polynomial(xy)), ValidationError);
}

TEST_CASE("radical membership") {
  CHECK(radical_membership(parse_polynomial("x", xy), Ps({"x^3"}, xy)));
  CHECK(radical_membership(parse_polynomial("x+y", xy), Ps({"x^2", "y^5"}, xy)));
  CHECK_FALSE(radical_membership(parse_polynomial("y", xy), Ps({"x^2"}, xy)));
}

TEST_CASE("minors") {
  const std::vector<std::string> v4{"x", "y", "z", "w"};
  PolynomialMatrix m(2, 2, Polynomial(v4));
  m.at(0, 0) = parse_polynomial("x", v4);
  m.at(0, 1) = parse_polynomial("y", v4);
  m.at(1, 0) = parse_polynomial("z", v4);
  m.at(1, 1) = parse_polynomial("w", v4);
  CHECK(minors(m, 2) == Ps({"x*w-y*z"}, v4));
  CHECK(minors(m, 1).size() == 4);
  CHECK_THROWS_AS(minors(m, 3), ValidationError);
  CHECK_THROWS_AS(minors(m, 0), ValidationError);

  std::vector<Polynomial> f{parse_polynomial("x^2+y^2+z^3", xyz)};
  auto J = jacobian(f);
  CHECK(minors(J, 1) == Ps({"2*x", "2*y", "3*z^2"}, xyz));

  PolynomialMatrix m3(3, 3, Polynomial(xyz));
  int k = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m3.at(i, j) = Polynomial::constant(xyz, ++k * k);
  // det [[1,4,9],[16,25,36],[49,64,81]] = -216
  CHECK(minors(m3, 3) == std::vector<Polynomial>{Polynomial::constant(xyz, -216)});
}

TEST_CASE("local standard bases") {
  const std::vector<std::string> x1{"x"};
  auto lb = local_standard_basis(Ps({"x-x^2"}, x1));
  CHECK(lb.leading_monomials().front() == Monomial{1});
  CHECK(quotient_dimension(lb) == 1u);
  CHECK(quotient_dimension(local_standard_basis(Ps({"x^2", "y^3"}, xy))) == 6u);
  CHECK(local_standard_basis(Ps({"1+x"}, xy)).is_unit());
  // (x^2 - y^3, y - x^2*...): local quotient counts only the origin branch
  auto glob = buchberger(Ps({"x^2-x^3", "y^2"}, xy), MonomialOrder::grevlex());
  CHECK(quotient_dimension(glob) == 6u);
  CHECK(quotient_dimension(local_standard_basis(Ps({"x^2-x^3", "y^2"}, xy))) == 4u);
  CHECK(krull_dimension(local_standard_basis(Ps({"x*(1-y)"}, xy))) == 1);
  CHECK(krull_dimension(local_standard_basis(Ps({"x-x*y", "x^2+y-y^2"}, xy))) == 0);
}

TEST_CASE("quasi-homogeneous: local and global quotient dimensions agree") {
  for (const char* f : {"x^3+y^4", "x^2*y + y^5", "x^3 + x*y^3"}) {
    auto p = parse_polynomial(f, xy);
    std::vector<Polynomial> jac{p.derivative(0), p.derivative(1)};
    auto w = infer_weights(std::vector<Polynomial>{p}).weights;
    auto glob = buchberger(jac, MonomialOrder::weighted(w));
    CHECK(quotient_dimension(glob) == quotient_dimension(local_standard_basis(jac)));
  }
}

TEST_CASE("milnor numbers") {
  CHECK(milnor_number_hypersurface(parse_polynomial("x^2+y^2", xy)) == 1u);
  CHECK(milnor_number_hypersurface(parse_polynomial("x^3+y^3", xy)) == 4u);
  CHECK_FALSE(milnor_number_hypersurface(parse_polynomial("x^2*y", xy)).has_value());
  // A_k: mu = k
  for (int k = 1; k <= 6; ++k) {
    auto f = parse_polynomial("x^2+y^2+z^" + std::to_string(k + 1), xyz);
    CHECK(milnor_number_hypersurface(f) == static_cast<std::size_t>(k));
  }
  // non-quasihomogeneous with an infinite global quotient but finite local one
  CHECK(milnor_number_hypersurface(parse_polynomial("x^2+y^3+x*y^3-y^4", xy)) == 2u);
  CHECK_THROWS_AS(milnor_number_hypersurface(parse_polynomial("x+1", xy)), ValidationError);
}
