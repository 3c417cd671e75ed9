#include <alc/quantum.hpp>

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>

namespace alc {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector2cd;
using Eigen::Vector4cd;
using std::complex;

constexpr double kMonotoneTol = 1e-10;
constexpr double kPovmTol = 1e-12;

Matrix2cd pauli(int k) {
  const complex<double> i(0, 1);
  Matrix2cd m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index out of range");
  }
  return m;
}

Vector4cd singlet() {
  Vector4cd v;
  v << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
  return v;
}

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}

// Tr_B[(I (x) rho_B) M]: the Alice-side operator whose expectation against
// rho_A reproduces tr[M (rho_A (x) rho_B)].
Matrix2cd trace_out_bob(const Matrix4cd& m, const Matrix2cd& rho_b) {
  Matrix2cd r = Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp) r(a, ap) += m(2 * a + b, 2 * ap + bp) * rho_b(bp, b);
  return r;
}

Matrix2cd trace_out_alice(const Matrix4cd& m, const Matrix2cd& rho_a) {
  Matrix2cd r = Matrix2cd::Zero();
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp)
      for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap) r(b, bp) += m(2 * a + b, 2 * ap + bp) * rho_a(ap, a);
  return r;
}

Matrix2cd random_pure_qubit(std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector2cd psi;
  psi << complex<double>(normal(gen), normal(gen)), complex<double>(normal(gen), normal(gen));
  psi.normalize();
  return psi * psi.adjoint();
}

Matrix2cd top_eigen_projector(const Matrix2cd& h) {
  Eigen::SelfAdjointEigenSolver<Matrix2cd> es(h);
  const Vector2cd v = es.eigenvectors().col(1);  // eigenvalues ascending
  return v * v.adjoint();
}

double game_value(const std::array<Matrix2cd, 4>& rho_a, const std::array<Matrix2cd, 4>& rho_b,
                  const Matrix4cd& m_eq) {
  const Matrix4cd m_neq = Matrix4cd::Identity() - m_eq;
  double v = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const Matrix4cd rho = kron(rho_a[x], rho_b[y]);
      v += ((x == y ? m_eq : m_neq) * rho).trace().real();
    }
  return v / 16.0;
}

}  // namespace

BellProtocolResult bell_protocol() {
  BellProtocolResult r;
  const Vector4cd psi = singlet();
  double total = 0;
  r.min_pair = 1;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const Vector4cd encoded = kron(pauli(x), pauli(y)) * psi;
      const double p_singlet = std::norm(psi.dot(encoded));
      const double success = x == y ? p_singlet : 1.0 - p_singlet;
      r.pair_success[x][y] = success;
      total += success;
      r.min_pair = std::min(r.min_pair, success);
    }
  r.overall = total / 16.0;
  return r;
}

SeesawResult product_strategy_search(std::uint64_t seed, int restarts, int iterations) {
  if (restarts < 1 || iterations < 1)
    throw std::invalid_argument("restarts and iterations must be positive");
  SeesawResult result;
  result.seed = seed;
  result.restarts = restarts;
  result.iterations = iterations;
  result.all_monotone = true;

  Matrix4cd best_decoder = Matrix4cd::Zero();

  for (int restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 gen(seed + static_cast<std::uint64_t>(restart));
    std::array<Matrix2cd, 4> rho_a, rho_b;
    for (int x = 0; x < 4; ++x) rho_a[x] = random_pure_qubit(gen);
    for (int y = 0; y < 4; ++y) rho_b[y] = random_pure_qubit(gen);

    Matrix4cd m_eq = Matrix4cd::Zero();
    SeesawRestart record;
    record.monotone = true;
    double last = -1;

    for (int it = 0; it < iterations; ++it) {
      // Decoder step: answer "equal" exactly on the positive eigenspace of
      // the equal-minus-unequal signal operator.
      Matrix4cd signal = Matrix4cd::Zero();
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
          signal += (x == y ? 1.0 : -1.0) * kron(rho_a[x], rho_b[y]);
      Eigen::SelfAdjointEigenSolver<Matrix4cd> es(signal);
      m_eq = Matrix4cd::Zero();
      for (int k = 0; k < 4; ++k)
        if (es.eigenvalues()(k) > 0)
          m_eq += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();

      // Party steps: each preparation moves to the top eigenvector of its
      // conditional payoff operator, holding everything else fixed.
      const Matrix4cd m_neq = Matrix4cd::Identity() - m_eq;
      for (int x = 0; x < 4; ++x) {
        Matrix2cd payoff = trace_out_bob(m_eq, rho_b[x]);
        for (int y = 0; y < 4; ++y)
          if (y != x) payoff += trace_out_bob(m_neq, rho_b[y]);
        rho_a[x] = top_eigen_projector(payoff);
      }
      for (int y = 0; y < 4; ++y) {
        Matrix2cd payoff = trace_out_alice(m_eq, rho_a[y]);
        for (int x = 0; x < 4; ++x)
          if (x != y) payoff += trace_out_alice(m_neq, rho_a[x]);
        rho_b[y] = top_eigen_projector(payoff);
      }

      const double value = game_value(rho_a, rho_b, m_eq);
      if (value < last - kMonotoneTol) record.monotone = false;
      last = value;
      record.iterations_run = it + 1;
    }

    record.final_value = last;
    result.per_restart.push_back(record);
    result.all_monotone = result.all_monotone && record.monotone;
    if (record.final_value > result.best_value) {
      result.best_value = record.final_value;
      result.best_restart = restart;
      best_decoder = m_eq;
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(best_decoder);
  bool valid = (best_decoder - best_decoder.adjoint()).norm() < kPovmTol;
  for (int k = 0; k < 4; ++k) {
    const double ev = es.eigenvalues()(k);
    valid = valid && ev > -kPovmTol && ev < 1 + kPovmTol;
  }
  result.decoder_valid = valid;
  return result;
}

}  // namespace alc
