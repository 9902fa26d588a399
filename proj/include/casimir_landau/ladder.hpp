#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace casimir_landau::ladder {

// Everything in this namespace works in units hbar = mu = omega_c = 1, so
// the kinetic momentum scale (2 mu hbar omega_c)^{1/2} is sqrt(2) and the
// Landau energies are n + 1/2.

using Complex = std::complex<double>;

struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  std::string label;

  int dim() const { return static_cast<int>(entries.rows()); }
  Complex operator()(int row, int col) const { return entries(row, col); }
  //! <n| O |n>
  Complex diagonal(int n) const { return entries(n, n); }
};

OperatorMatrix operator*(OperatorMatrix const& a, OperatorMatrix const& b);
OperatorMatrix operator+(OperatorMatrix const& a, OperatorMatrix const& b);
OperatorMatrix operator-(OperatorMatrix const& a, OperatorMatrix const& b);
OperatorMatrix adjoint(OperatorMatrix const& a);
OperatorMatrix commutator(OperatorMatrix const& a, OperatorMatrix const& b);

struct LadderPair {
  OperatorMatrix lower;  //!< c
  OperatorMatrix raise;  //!< c^dagger
};

//! Truncation the oracle uses for level n when the caller has no preference.
inline int default_dim(int n) { return n + 8; }

LadderPair build_ladder(int dim);

struct KineticMomentum {
  OperatorMatrix px;
  OperatorMatrix py;
};

//! p_x = sqrt(2)(c + c^dag)/2, p_y = sqrt(2)(c - c^dag)/(2i).
KineticMomentum kinetic_momentum(int dim);

//! H0 = c^dag c + 1/2, diagonal.
OperatorMatrix hamiltonian(int dim);

//! Diagonal f(H0) evaluated on the truncated spectrum.
OperatorMatrix function_of_hamiltonian(int dim,
                                       std::function<double(double)> const& f);

struct EpsIdentity {
  Complex lhs;  //!< <n| p_x f(H0) p_y - p_y f(H0) p_x |n>
  Complex rhs;  //!< -i (n f(E_{n-1}) - (n+1) f(E_{n+1}))
  double residual;
};

/*!
 * Evaluate both sides of
 *   eps_zij p_i f(H0) p_j = -i mu hbar omega_c (c^dag f c - c f c^dag)
 * on the diagonal element <n|.|n>. The left side is a dense matrix product,
 * the right side the ladder closed form. Residual is max-abs difference
 * scaled by max(1, |rhs|).
 *
 * Throws TruncationError if dim < n + 4.
 */
EpsIdentity eps_identity(std::function<double(double)> const& f, int n,
                         int dim);

double verify_eps_identity(std::function<double(double)> const& f, int n,
                           int dim);

enum class Token { lower, raise, resolvent };

/*!
 * Matrix element <n| T_1 T_2 ... T_k |n> where each token is c, c^dag or
 * the resolvent (E_n - H0 - energy)^{-1}. Energies in units hbar omega_c.
 *
 * Throws TruncationError if dim < n + (ladder tokens) + 2 and
 * SingularResolvent if energy coincides with E_n - E_k for some truncated
 * level k.
 */
Complex resolvent_sequence(int n, double energy, std::span<Token const> pattern,
                           int dim);
Complex resolvent_sequence(int n, double energy, std::span<Token const> pattern);

//! c H^-1 c^dag H^-1 c H^-1 c^dag, as printed.
std::vector<Token> printed_four_operator_pattern();
//! c H^-1 c H^-1 c^dag H^-1 c^dag, passing through level n + 2.
std::vector<Token> two_raise_pattern();

//! Parse "c H c+ H c" style patterns; c+ / cd / c^dag all mean c^dagger.
std::vector<Token> parse_pattern(std::string const& text);
std::string to_string(std::span<Token const> pattern);

//! Operator on the (c mode) x (b mode) tensor product space.
struct TwoModeOperator {
  int dim_c = 0;
  int dim_b = 0;
  Eigen::MatrixXcd entries;
  std::string label;

  int index(int n_c, int n_b) const { return n_c * dim_b + n_b; }
  Complex expectation(int n_c, int n_b) const {
    return entries(index(n_c, n_b), index(n_c, n_b));
  }
};

//! l^T = c^dag c + 1 + b^dag b - i b^dag c^dag / 2 + i c b / 2
TwoModeOperator lenz_operator(int dim_c, int dim_b);

double hermiticity_residual(Eigen::MatrixXcd const& m);

struct DipoleIdentity {
  Complex lhs_x, rhs_x;
  Complex lhs_y, rhs_y;
  double residual;
};

/*!
 * (E_n' - E_n) <n|r|n'> = i <n|p|n'> with x = -p_y, y = p_x (cyclotron
 * centre dropped). The left side is formed as <n|r H0 - H0 r|n'> with H0
 * assembled from (p_x^2 + p_y^2)/2, not from the diagonal spectrum.
 */
DipoleIdentity dipole_identity(int n, int n_prime, int dim);
double dipole_identity_check(int n, int n_prime, int dim);

/*!
 * Real weight Re[ eps_zij <n|r_i|n'><n'|p_j|n> ] of the intermediate level
 * n' (units hbar). Zero unless |n - n'| = 1; the weights summed over n' give
 * the kinetic angular momentum -(2n+1).
 */
double orbital_transition_weight(int n, int n_prime, int dim);
double orbital_transition_weight(int n, int n_prime);

}  // namespace casimir_landau::ladder
