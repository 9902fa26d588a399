#include "casimir_landau/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir_landau/errors.hpp"

namespace casimir_landau::ladder {
namespace {

constexpr Complex I{0.0, 1.0};

void require_dim(int dim, int needed, char const* what) {
  if (dim < needed) {
    std::ostringstream os;
    os << what << ": truncation dim " << dim << " is unsafe, need at least "
       << needed;
    throw TruncationError(os.str());
  }
}

int ladder_count(std::span<Token const> pattern) {
  return static_cast<int>(std::count_if(pattern.begin(), pattern.end(),
                                        [](Token t) {
                                          return t != Token::resolvent;
                                        }));
}

}  // namespace

OperatorMatrix operator*(OperatorMatrix const& a, OperatorMatrix const& b) {
  return {a.entries * b.entries, a.label + " " + b.label};
}

OperatorMatrix operator+(OperatorMatrix const& a, OperatorMatrix const& b) {
  return {a.entries + b.entries, "(" + a.label + " + " + b.label + ")"};
}

OperatorMatrix operator-(OperatorMatrix const& a, OperatorMatrix const& b) {
  return {a.entries - b.entries, "(" + a.label + " - " + b.label + ")"};
}

OperatorMatrix adjoint(OperatorMatrix const& a) {
  return {a.entries.adjoint(), "(" + a.label + ")^dag"};
}

OperatorMatrix commutator(OperatorMatrix const& a, OperatorMatrix const& b) {
  return {a.entries * b.entries - b.entries * a.entries,
          "[" + a.label + ", " + b.label + "]"};
}

LadderPair build_ladder(int dim) {
  if (dim < 2) throw TruncationError("ladder truncation dim must be >= 2");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) c(k, k + 1) = std::sqrt(double(k + 1));
  return {{c, "c"}, {c.adjoint(), "c^dag"}};
}

KineticMomentum kinetic_momentum(int dim) {
  auto const [c, cd] = build_ladder(dim);
  double const scale = std::sqrt(2.0);
  Eigen::MatrixXcd px = 0.5 * scale * (c.entries + cd.entries);
  Eigen::MatrixXcd py = (0.5 * scale / I) * (c.entries - cd.entries);
  return {{px, "p_x"}, {py, "p_y"}};
}

OperatorMatrix hamiltonian(int dim) {
  return function_of_hamiltonian(dim, [](double e) { return e; });
}

OperatorMatrix function_of_hamiltonian(
    int dim, std::function<double(double)> const& f) {
  if (dim < 2) throw TruncationError("ladder truncation dim must be >= 2");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) m(k, k) = f(k + 0.5);
  return {m, "f(H0)"};
}

EpsIdentity eps_identity(std::function<double(double)> const& f, int n,
                         int dim) {
  if (n < 0) throw TruncationError("Landau level must be >= 0");
  require_dim(dim, n + 4, "eps identity");

  auto const [px, py] = kinetic_momentum(dim);
  auto const fh = function_of_hamiltonian(dim, f);
  Eigen::MatrixXcd const lhs_op = px.entries * fh.entries * py.entries -
                                  py.entries * fh.entries * px.entries;

  EpsIdentity out;
  out.lhs = lhs_op(n, n);
  double const down = n > 0 ? n * f(n - 0.5) : 0.0;
  double const up = (n + 1) * f(n + 1.5);
  out.rhs = -I * (down - up);
  out.residual = std::abs(out.lhs - out.rhs) / std::max(1.0, std::abs(out.rhs));
  return out;
}

double verify_eps_identity(std::function<double(double)> const& f, int n,
                           int dim) {
  return eps_identity(f, n, dim).residual;
}

Complex resolvent_sequence(int n, double energy, std::span<Token const> pattern,
                           int dim) {
  if (n < 0) throw TruncationError("Landau level must be >= 0");
  require_dim(dim, n + ladder_count(pattern) + 2, "resolvent sequence");

  // Resolvent diagonal (E_n - E_k - energy); singular entries are only an
  // error if reachable, but any coincidence signals a resonant, real-photon
  // configuration the oracle does not handle.
  Eigen::VectorXcd resolvent(dim);
  for (int k = 0; k < dim; ++k) {
    double const d = (n - k) - energy;
    if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(energy))) {
      std::ostringstream os;
      os << "resolvent singular: energy " << energy
         << " coincides with E_n - E_k for k = " << k;
      throw SingularResolvent(os.str());
    }
    resolvent(k) = 1.0 / d;
  }

  auto const [c, cd] = build_ladder(dim);
  Eigen::VectorXcd state = Eigen::VectorXcd::Unit(dim, n);
  for (auto it = pattern.rbegin(); it != pattern.rend(); ++it) {
    switch (*it) {
      case Token::lower:
        state = c.entries * state;
        break;
      case Token::raise:
        state = cd.entries * state;
        break;
      case Token::resolvent:
        state = resolvent.cwiseProduct(state);
        break;
    }
  }
  return state(n);
}

Complex resolvent_sequence(int n, double energy,
                           std::span<Token const> pattern) {
  int const dim = std::max(default_dim(n), n + ladder_count(pattern) + 2);
  return resolvent_sequence(n, energy, pattern, dim);
}

std::vector<Token> printed_four_operator_pattern() {
  return {Token::lower, Token::resolvent, Token::raise, Token::resolvent,
          Token::lower, Token::resolvent, Token::raise};
}

std::vector<Token> two_raise_pattern() {
  return {Token::lower, Token::resolvent, Token::lower, Token::resolvent,
          Token::raise, Token::resolvent, Token::raise};
}

std::vector<Token> parse_pattern(std::string const& text) {
  std::istringstream is(text);
  std::vector<Token> out;
  std::string word;
  while (is >> word) {
    if (word == "c")
      out.push_back(Token::lower);
    else if (word == "c+" || word == "cd" || word == "c^dag")
      out.push_back(Token::raise);
    else if (word == "H" || word == "R")
      out.push_back(Token::resolvent);
    else
      throw std::invalid_argument("unknown pattern token '" + word + "'");
  }
  return out;
}

std::string to_string(std::span<Token const> pattern) {
  std::string out;
  for (auto t : pattern) {
    if (!out.empty()) out += ' ';
    out += t == Token::lower ? "c" : t == Token::raise ? "c^dag" : "H^-1";
  }
  return out;
}

TwoModeOperator lenz_operator(int dim_c, int dim_b) {
  auto const c = build_ladder(dim_c);
  auto const b = build_ladder(dim_b);
  Eigen::MatrixXcd const id_c = Eigen::MatrixXcd::Identity(dim_c, dim_c);
  Eigen::MatrixXcd const id_b = Eigen::MatrixXcd::Identity(dim_b, dim_b);

  // Kronecker product with the c mode as the slow index.
  auto kron = [](Eigen::MatrixXcd const& a, Eigen::MatrixXcd const& bm) {
    Eigen::MatrixXcd out(a.rows() * bm.rows(), a.cols() * bm.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        out.block(i * bm.rows(), j * bm.cols(), bm.rows(), bm.cols()) =
            a(i, j) * bm;
    return out;
  };

  Eigen::MatrixXcd const num_c = kron(c.raise.entries * c.lower.entries, id_b);
  Eigen::MatrixXcd const num_b = kron(id_c, b.raise.entries * b.lower.entries);
  Eigen::MatrixXcd const bd_cd = kron(c.raise.entries, b.raise.entries);
  Eigen::MatrixXcd const c_b = kron(c.lower.entries, b.lower.entries);
  Eigen::MatrixXcd const one = Eigen::MatrixXcd::Identity(dim_c * dim_b,
                                                          dim_c * dim_b);

  TwoModeOperator out;
  out.dim_c = dim_c;
  out.dim_b = dim_b;
  out.entries = num_c + one + num_b - 0.5 * I * bd_cd + 0.5 * I * c_b;
  out.label = "c^dag c + 1 + b^dag b - i b^dag c^dag/2 + i c b/2";
  return out;
}

double hermiticity_residual(Eigen::MatrixXcd const& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DipoleIdentity dipole_identity(int n, int n_prime, int dim) {
  if (n < 0 || n_prime < 0)
    throw TruncationError("Landau levels must be >= 0");
  require_dim(dim, std::max(n, n_prime) + 3, "dipole identity");

  auto const [px, py] = kinetic_momentum(dim);
  Eigen::MatrixXcd const h =
      0.5 * (px.entries * px.entries + py.entries * py.entries);
  Eigen::MatrixXcd const rx = -py.entries;
  Eigen::MatrixXcd const ry = px.entries;

  DipoleIdentity out;
  out.lhs_x = (rx * h - h * rx)(n, n_prime);
  out.lhs_y = (ry * h - h * ry)(n, n_prime);
  out.rhs_x = I * px.entries(n, n_prime);
  out.rhs_y = I * py.entries(n, n_prime);
  double const scale =
      std::max({1.0, std::abs(out.rhs_x), std::abs(out.rhs_y)});
  out.residual = std::max(std::abs(out.lhs_x - out.rhs_x),
                          std::abs(out.lhs_y - out.rhs_y)) /
                 scale;
  return out;
}

double dipole_identity_check(int n, int n_prime, int dim) {
  return dipole_identity(n, n_prime, dim).residual;
}

double orbital_transition_weight(int n, int n_prime, int dim) {
  if (n < 0 || n_prime < 0) return 0.0;
  require_dim(dim, std::max(n, n_prime) + 3, "transition weight");
  auto const [px, py] = kinetic_momentum(dim);
  Eigen::MatrixXcd const rx = -py.entries;
  Eigen::MatrixXcd const ry = px.entries;
  Complex const w = rx(n, n_prime) * py.entries(n_prime, n) -
                    ry(n, n_prime) * px.entries(n_prime, n);
  return w.real();
}

double orbital_transition_weight(int n, int n_prime) {
  return orbital_transition_weight(n, n_prime,
                                   default_dim(std::max(n, n_prime)));
}

}  // namespace casimir_landau::ladder
