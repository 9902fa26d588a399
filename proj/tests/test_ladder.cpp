#include <cmath>
#include <random>

#include "casimir_landau/errors.hpp"
#include "casimir_landau/ladder.hpp"
#include "doctest.h"

using namespace casimir_landau;
using namespace casimir_landau::ladder;

namespace {
constexpr Complex I{0.0, 1.0};
}

TEST_CASE("build_ladder") {
  SUBCASE("dim 2") {
    auto const [c, cd] = build_ladder(2);
    CHECK(c(0, 1) == Complex(1.0));
    CHECK(c(1, 0) == Complex(0.0));
    CHECK(c(0, 0) == Complex(0.0));
    CHECK(c(1, 1) == Complex(0.0));
  }
  SUBCASE("raising entries") {
    auto const [c, cd] = build_ladder(9);
    for (int r = 0; r < 9; ++r)
      for (int col = 0; col < 9; ++col) {
        Complex const expected =
            r == col + 1 ? std::sqrt(double(col + 1)) : 0.0;
        CHECK(cd(r, col) == expected);
      }
  }
  SUBCASE("number operator spectrum") {
    auto const [c, cd] = build_ladder(5);
    Eigen::MatrixXcd const number = cd.entries * c.entries;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(number);
    for (int k = 0; k < 5; ++k)
      CHECK(solver.eigenvalues()(k) == doctest::Approx(k).epsilon(1e-13));
  }
  SUBCASE("commutator is identity except the truncation row") {
    for (int dim : {2, 5, 12}) {
      auto const [c, cd] = build_ladder(dim);
      auto const comm = commutator(c, cd);
      for (int r = 0; r < dim; ++r)
        for (int col = 0; col < dim; ++col) {
          double expected = 0;
          if (r == col) expected = r < dim - 1 ? 1.0 : -(dim - 1.0);
          CHECK(std::abs(comm(r, col) - expected) < 1e-14);
        }
    }
  }
  SUBCASE("hamiltonian diagonal") {
    auto const h = hamiltonian(6);
    for (int k = 0; k < 6; ++k) CHECK(h(k, k) == Complex(k + 0.5));
  }
  CHECK_THROWS_AS(build_ladder(1), TruncationError);
}

TEST_CASE("kinetic momentum") {
  int const dim = 10;
  auto const [px, py] = kinetic_momentum(dim);
  CHECK(px.diagonal(0) == Complex(0.0));
  CHECK(py.diagonal(0) == Complex(0.0));
  CHECK(hermiticity_residual(px.entries) < 1e-15);
  CHECK(hermiticity_residual(py.entries) < 1e-15);

  // <n|p_x|n+1> = (1/2) sqrt(2) sqrt(n+1) with mu = hbar = omega_c = 1
  for (int n = 0; n + 1 < dim; ++n)
    CHECK(std::abs(px(n, n + 1) - 0.5 * std::sqrt(2.0 * (n + 1))) < 1e-15);

  Eigen::MatrixXcd const h =
      0.5 * (px.entries * px.entries + py.entries * py.entries);
  for (int n = 0; n <= dim - 3; ++n)
    CHECK(std::abs(h(n, n) - (n + 0.5)) < 1e-13);
  // Off-diagonal terms of p^2 vanish on the safe block.
  for (int r = 0; r < dim - 1; ++r)
    for (int col = 0; col < dim - 1; ++col)
      if (r != col) CHECK(std::abs(h(r, col)) < 1e-13);
}

TEST_CASE("eps identity") {
  SUBCASE("constant f gives the commutator value i mu hbar omega_c") {
    for (int n : {0, 1, 4, 9}) {
      auto const r = eps_identity([](double) { return 1.0; }, n, n + 6);
      CHECK(std::abs(r.rhs - I) < 1e-15);
      CHECK(r.residual < 1e-14);
    }
  }
  SUBCASE("rational f") {
    auto const r =
        eps_identity([](double e) { return 1.0 / (e + 3.7); }, 2, 12);
    CHECK(r.residual <= 1e-12);
    // -i (2 f(1.5) - 3 f(3.5))
    Complex const expected = -I * (2.0 / 5.2 - 3.0 / 7.2);
    CHECK(std::abs(r.lhs - expected) < 1e-14);
  }
  SUBCASE("quadratic f at ground state") {
    auto const r = eps_identity([](double e) { return e * e; }, 0, 8);
    CHECK(r.residual <= 1e-12);
    CHECK(std::abs(r.lhs - I * 1.5 * 1.5) < 1e-14);
  }
  SUBCASE("random polynomials and rationals") {
    std::mt19937 gen(1234);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> level(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
      double const a = coef(gen), b = coef(gen), c = coef(gen);
      double const shift = 1.0 + std::abs(coef(gen));
      int const n = level(gen);
      auto f = [=](double e) { return a + b * e + c * e * e / (e + shift); };
      CHECK(verify_eps_identity(f, n, n + 4 + trial % 5) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(verify_eps_identity([](double) { return 1.0; }, 3, 6),
                  TruncationError);
}

TEST_CASE("resolvent sequences") {
  using enum Token;
  SUBCASE("one step") {
    std::vector<Token> const p{lower, resolvent, raise};
    double const energy = 2.5;
    CHECK(std::abs(resolvent_sequence(0, energy, p) - 1.0 / (-1.0 - energy)) <
          1e-15);
  }
  SUBCASE("annihilating the ground state") {
    std::vector<Token> const p{raise, resolvent, lower};
    CHECK(resolvent_sequence(0, 3.0, p) == Complex(0.0));
  }
  SUBCASE("printed four-operator ordering") {
    auto const p = printed_four_operator_pattern();
    for (int n : {0, 1, 2, 6}) {
      for (double energy : {0.5, 10.0, 100.0}) {
        // Hand ladder walk: levels n+1, n, n+1 with E_n - E_k - energy.
        double const expected = double(n + 1) * (n + 1) /
                                ((-1 - energy) * (-energy) * (-1 - energy));
        auto const v = resolvent_sequence(n, energy, p);
        CHECK(std::abs(v.real() - expected) <= 1e-14 * std::abs(expected));
        CHECK(v.imag() == 0.0);
      }
    }
  }
  SUBCASE("two-raise ordering") {
    auto const p = two_raise_pattern();
    for (int n : {0, 1, 2, 6}) {
      for (double energy : {0.5, 10.0, 100.0}) {
        // Levels n+1, n+2, n+1.
        double const expected = double(n + 1) * (n + 2) /
                                ((-1 - energy) * (-2 - energy) * (-1 - energy));
        auto const v = resolvent_sequence(n, energy, p);
        CHECK(std::abs(v.real() - expected) <= 1e-14 * std::abs(expected));
      }
    }
  }
  SUBCASE("truncation stability") {
    auto const p = printed_four_operator_pattern();
    auto const q = two_raise_pattern();
    for (int n = 0; n < 10; ++n) {
      int const dim = default_dim(n);
      auto const a = resolvent_sequence(n, 7.3, p, dim);
      auto const b = resolvent_sequence(n, 7.3, p, dim + 4);
      auto const c = resolvent_sequence(n, 7.3, q, dim);
      auto const d = resolvent_sequence(n, 7.3, q, dim + 4);
      CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
      CHECK(std::abs(c - d) <= 1e-12 * std::abs(c));
    }
  }
  SUBCASE("balanced patterns are real") {
    std::mt19937 gen(99);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Token> p;
      int ups = 0, downs = 0;
      while (ups < 3 || downs < 3) {
        bool up = coin(gen) && ups < 3;
        if (!up && downs >= 3) up = true;
        p.push_back(up ? raise : lower);
        (up ? ups : downs)++;
        p.push_back(resolvent);
      }
      auto const v = resolvent_sequence(trial % 5, 4.25, p);
      CHECK(v.imag() == 0.0);
    }
  }
  SUBCASE("c f(H) c^dag and c^dag f(H) c") {
    for (int n = 1; n < 8; ++n) {
      double const energy = 1.3;
      std::vector<Token> const up{lower, resolvent, raise};
      std::vector<Token> const down{raise, resolvent, lower};
      CHECK(std::abs(resolvent_sequence(n, energy, up) -
                     (n + 1) / (-1.0 - energy)) < 1e-14);
      CHECK(std::abs(resolvent_sequence(n, energy, down) -
                     n / (1.0 - energy)) < 1e-13);
    }
  }
  SUBCASE("errors") {
    auto const p = two_raise_pattern();
    CHECK_THROWS_AS(resolvent_sequence(3, 10.0, p, 8), TruncationError);
    // energy = E_n - E_k for k = n - 1
    CHECK_THROWS_AS(resolvent_sequence(2, 1.0, p), SingularResolvent);
  }
  SUBCASE("pattern parsing") {
    auto const p = parse_pattern("c H c+ H c H c^dag");
    CHECK(p == printed_four_operator_pattern());
    CHECK(to_string(p) == "c H^-1 c^dag H^-1 c H^-1 c^dag");
    CHECK_THROWS(parse_pattern("c X"));
  }
}

TEST_CASE("lenz operator") {
  auto const lt = lenz_operator(6, 7);
  CHECK(hermiticity_residual(lt.entries) <= 1e-12);
  CHECK(lt.expectation(0, 0) == Complex(1.0));
  CHECK(lt.expectation(2, 3) == Complex(6.0));
  for (int nc = 0; nc < 6; ++nc)
    for (int nb = 0; nb < 7; ++nb)
      CHECK(std::abs(lt.expectation(nc, nb) - double(nc + 1 + nb)) < 1e-14);
  // The off-diagonal pair couples (n_c, n_b) to (n_c + 1, n_b + 1).
  Complex const coupling = lt.entries(lt.index(1, 2), lt.index(0, 1));
  CHECK(std::abs(coupling - (-0.5 * I * std::sqrt(1.0) * std::sqrt(2.0))) <
        1e-15);
}

TEST_CASE("dipole identity") {
  for (int n = 0; n < 8; ++n) {
    auto const diag = dipole_identity(n, n, n + 5);
    CHECK(std::abs(diag.lhs_x) < 1e-13);
    CHECK(std::abs(diag.rhs_x) == 0.0);
    CHECK(diag.residual <= 1e-12);
    for (int np : {n + 1, n - 1}) {
      if (np < 0) continue;
      auto const r = dipole_identity(n, np, std::max(n, np) + 3);
      CHECK(r.residual <= 1e-12);
      CHECK(std::abs(r.rhs_x) > 0.1);
    }
    for (int np : {n + 2, n + 3, n - 2}) {
      if (np < 0) continue;
      auto const r = dipole_identity(n, np, std::max(n, np) + 3);
      CHECK(std::abs(r.lhs_x) < 1e-13);
      CHECK(std::abs(r.rhs_x) == 0.0);
      CHECK(std::abs(r.rhs_y) == 0.0);
    }
  }
  CHECK(dipole_identity_check(0, 1, 4) <= 1e-12);
  CHECK_THROWS_AS(dipole_identity_check(0, 1, 3), TruncationError);
}

TEST_CASE("orbital transition weights sum to the kinetic angular momentum") {
  for (int n = 0; n < 12; ++n) {
    double const up = orbital_transition_weight(n, n + 1);
    double const down = n > 0 ? orbital_transition_weight(n, n - 1) : 0.0;
    CHECK(up == doctest::Approx(-(n + 1.0)).epsilon(1e-14));
    CHECK(down == doctest::Approx(-double(n)).epsilon(1e-14));
    CHECK(orbital_transition_weight(n, n + 2) == 0.0);
    CHECK(up + down == doctest::Approx(-(2.0 * n + 1)).epsilon(1e-14));
  }
}
