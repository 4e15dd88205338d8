// Copyright 2026 The fluxswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fluxswap/swap.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fluxswap/hilbert.hpp"

namespace fluxswap::swap {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Coefficients c[k][l] of the chosen Bell state on photon numbers k, l in {0, 1}.
std::array<std::array<double, 2>, 2> bell_coefficients(BellState which) {
  switch (which) {
    case BellState::psi_minus: return {{{0.0, kInvSqrt2}, {-kInvSqrt2, 0.0}}};
    case BellState::psi_plus: return {{{0.0, kInvSqrt2}, {kInvSqrt2, 0.0}}};
    case BellState::phi_plus: return {{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}}};
    case BellState::phi_minus: return {{{kInvSqrt2, 0.0}, {0.0, -kInvSqrt2}}};
  }
  throw std::invalid_argument("unknown Bell state");
}

void require_nmax(std::size_t n_max, const char* what) {
  if (n_max < 1) throw std::invalid_argument(std::string(what) + ": n_max must be at least 1");
}

std::size_t branch_nmax(const ComplexMatrix& m, const char* what) {
  const std::size_t d = m.rows();
  if (d < 4 || d % 2 != 0) {
    throw DimensionError(std::string(what) + ": branch dimension must be 2 (n_max + 1), n_max >= 1");
  }
  return d / 2 - 1;
}

}  // namespace

ComplexMatrix bell_state(BellState which, std::size_t n_max) {
  require_nmax(n_max, "bell_state");
  const auto c = bell_coefficients(which);
  const std::size_t d = n_max + 1;
  ComplexMatrix v(d * d, 1);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) v[k * d + l] = c[k][l];
  }
  return v;
}

ComplexMatrix bell_state_01(std::size_t n_max) { return bell_state(BellState::psi_minus, n_max); }

SwapOutcome make_outcome(ComplexMatrix rho_unnormalized, double threshold) {
  if (rho_unnormalized.rows() != 4 || rho_unnormalized.cols() != 4) {
    throw DimensionError("make_outcome: two-qubit operator must be 4 x 4");
  }
  SwapOutcome out;
  out.success_probability = rho_unnormalized.trace().real();
  out.defined = out.success_probability > threshold;
  if (out.defined) out.rho_qq = rho_unnormalized * (1.0 / out.success_probability);
  out.rho_qq_unnormalized = std::move(rho_unnormalized);
  return out;
}

DimSpec joint_dims(std::size_t n_max) { return DimSpec{2, n_max + 1, 2, n_max + 1}; }

ComplexMatrix reorder_qubits_first(const ComplexMatrix& joint, std::size_t n_max) {
  return hilbert::permute_subsystems(joint, joint_dims(n_max), kQubitsFirst);
}

SwapOutcome bsm_project_pure(const ComplexMatrix& psi1, const ComplexMatrix& psi2,
                             BellState which) {
  if (!psi1.is_column() || !psi2.is_column()) {
    throw DimensionError("bsm_project_pure: branch states must be column vectors");
  }
  const std::size_t n_max = branch_nmax(psi1, "bsm_project_pure");
  if (psi2.rows() != psi1.rows()) {
    throw DimensionError("bsm_project_pure: branches have different truncations");
  }
  const std::size_t d = n_max + 1;
  const auto c = bell_coefficients(which);
  ComplexMatrix phi(4, 1);
  for (std::size_t mu = 0; mu < 2; ++mu) {
    for (std::size_t nu = 0; nu < 2; ++nu) {
      Complex amp{};
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          if (c[k][l] == 0.0) continue;
          amp += c[k][l] * (psi1[mu * d + k] * psi2[nu * d + l]);
        }
      }
      phi[mu * 2 + nu] = amp;
    }
  }
  SwapOutcome out = make_outcome(ComplexMatrix::projector(phi));
  out.psi_qq_unnormalized = std::move(phi);
  return out;
}

SwapOutcome bsm_project_mixed(const ComplexMatrix& rho_joint, const DimSpec& dims,
                              BellState which) {
  if (!rho_joint.is_square()) throw DimensionError("bsm_project_mixed: operator is not square");
  if (dims.count() != 4 || dims[0] != 2 || dims[2] != 2 || dims[1] != dims[3] || dims[1] < 2) {
    throw DimensionError("bsm_project_mixed: dims must be {2, n+1, 2, n+1} with n >= 1, got " +
                         to_string(dims));
  }
  dims.check(rho_joint.rows(), "bsm_project_mixed");
  const std::size_t n_max = dims[1] - 1;
  const std::size_t fields = dims[1] * dims[3];

  const ComplexMatrix reordered = reorder_qubits_first(rho_joint, n_max);
  const ComplexMatrix proj = hilbert::kron(ComplexMatrix::identity(4),
                                           ComplexMatrix::projector(bell_state(which, n_max)));
  const ComplexMatrix sandwiched = proj * reordered * proj;
  const DimSpec qq_rr{4, fields};
  return make_outcome(hilbert::partial_trace(sandwiched, qq_rr, {0}));
}

SwapOutcome bsm_project_product(const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                                BellState which) {
  if (!rho1.is_square() || !rho2.is_square()) {
    throw DimensionError("bsm_project_product: branch states must be square");
  }
  const std::size_t n_max = branch_nmax(rho1, "bsm_project_product");
  if (rho2.rows() != rho1.rows()) {
    throw DimensionError("bsm_project_product: branches have different truncations");
  }
  const std::size_t d = n_max + 1;
  const auto c = bell_coefficients(which);
  // sigma[(mu nu), (s t)] = sum_{k l m n} c_kl c_mn rho1[(mu k), (s m)] rho2[(nu l), (t n)]
  ComplexMatrix sigma(4, 4);
  for (std::size_t mu = 0; mu < 2; ++mu) {
    for (std::size_t nu = 0; nu < 2; ++nu) {
      for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t t = 0; t < 2; ++t) {
          Complex acc{};
          for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t l = 0; l < 2; ++l) {
              if (c[k][l] == 0.0) continue;
              for (std::size_t m = 0; m < 2; ++m) {
                for (std::size_t n = 0; n < 2; ++n) {
                  if (c[m][n] == 0.0) continue;
                  acc += (c[k][l] * c[m][n]) *
                         (rho1(mu * d + k, s * d + m) * rho2(nu * d + l, t * d + n));
                }
              }
            }
          }
          sigma(mu * 2 + nu, s * 2 + t) = acc;
        }
      }
    }
  }
  return make_outcome(std::move(sigma));
}

KrausOp kraus_operator(std::size_t n_max) {
  require_nmax(n_max, "kraus_operator");
  const std::size_t d = n_max + 1;
  const std::size_t branch = 2 * d;
  KrausOp op{ComplexMatrix(4, branch * branch), n_max};
  auto joint = [&](std::size_t mu, std::size_t k, std::size_t nu, std::size_t l) {
    return (mu * d + k) * branch + nu * d + l;
  };
  for (std::size_t mu = 0; mu < 2; ++mu) {
    for (std::size_t nu = 0; nu < 2; ++nu) {
      op.matrix(mu * 2 + nu, joint(mu, 0, nu, 1)) = kInvSqrt2;
      op.matrix(mu * 2 + nu, joint(mu, 1, nu, 0)) = -kInvSqrt2;
    }
  }
  return op;
}

ComplexMatrix apply_kraus(const KrausOp& op, const ComplexMatrix& rho) {
  if (!rho.is_square() || rho.rows() != op.matrix.cols()) {
    throw DimensionError("apply_kraus: state dimension does not match the Kraus operator");
  }
  return op.matrix * rho * op.matrix.adjoint();
}

ComplexMatrix channel_on_basis(std::size_t n_max, std::size_t i, std::size_t j) {
  require_nmax(n_max, "channel_on_basis");
  const DimSpec dims = joint_dims(n_max);
  const std::size_t n = dims.total();
  if (i >= n || j >= n) throw DimensionError("channel_on_basis: basis index out of range");
  const std::size_t d = n_max + 1;
  // i = (mu, k, nu, l), j = (s, m, t, q)
  const std::size_t mu = i / (d * 2 * d), k = (i / (2 * d)) % d, nu = (i / d) % 2, l = i % d;
  const std::size_t s = j / (d * 2 * d), m = (j / (2 * d)) % d, t = (j / d) % 2, q = j % d;
  auto delta = [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; };
  const double ket = delta(0, k) * delta(1, l) - delta(1, k) * delta(0, l);
  const double bra = delta(0, m) * delta(1, q) - delta(1, m) * delta(0, q);
  ComplexMatrix out(4, 4);
  out(mu * 2 + nu, s * 2 + t) = 0.5 * ket * bra;
  return out;
}

ComplexMatrix choi_matrix(std::size_t n_max) {
  require_nmax(n_max, "choi_matrix");
  const std::size_t n_in = joint_dims(n_max).total();
  const std::size_t n = 4 * n_in;
  if (n > kMaxChoiDim) {
    throw std::length_error("choi_matrix: dimension " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxChoiDim));
  }
  ComplexMatrix j(n, n);
  for (std::size_t a = 0; a < n_in; ++a) {
    for (std::size_t b = 0; b < n_in; ++b) {
      const ComplexMatrix block = channel_on_basis(n_max, a, b);
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
          if (block(r, c) != Complex{}) j(r * n_in + a, c * n_in + b) = block(r, c);
        }
      }
    }
  }
  return j;
}

CpReport verify_cp(const ComplexMatrix& choi) {
  const auto ev = hilbert::hermitian_eigenvalues(choi);
  CpReport rep;
  rep.min_eigenvalue = ev.front();
  rep.is_cp = rep.min_eigenvalue >= -kCpTolerance;
  return rep;
}

std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi, std::size_t dim_out,
                                           std::size_t dim_in, double cutoff) {
  if (!choi.is_square() || choi.rows() != dim_out * dim_in) {
    throw DimensionError("kraus_from_choi: Choi dimension differs from dim_out * dim_in");
  }
  const auto eig = hilbert::hermitian_eig(choi);
  std::vector<ComplexMatrix> ops;
  for (std::size_t e = eig.eigenvalues.size(); e-- > 0;) {
    const double d = eig.eigenvalues[e];
    if (d <= cutoff) break;
    const double scale = std::sqrt(d);
    ComplexMatrix a(dim_out, dim_in);
    for (std::size_t r = 0; r < dim_out; ++r) {
      for (std::size_t c = 0; c < dim_in; ++c) a(r, c) = scale * eig.eigenvectors(r * dim_in + c, e);
    }
    ops.push_back(std::move(a));
  }
  return ops;
}

}  // namespace fluxswap::swap
