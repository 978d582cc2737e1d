// Copyright 2026 The qcmx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include <qcmx/adapt.hpp>
#include <qcmx/errors.hpp>

namespace qcmx {

double ansatz_energy(const PauliSum& h, const AnsatzProgram& program) {
  const double e = expect_sum(prepare_ansatz_state(program), h);
  if (!std::isfinite(e)) throw NumericalError("non-finite energy");
  return e;
}

namespace {

double energy_at(const PauliSum& h, AnsatzProgram& program, std::span<const double> thetas) {
  program.set_thetas(thetas);
  return ansatz_energy(h, program);
}

}  // namespace

std::vector<double> parameter_shift_gradient(const PauliSum& h, const AnsatzProgram& program,
                                             double fd_step) {
  AnsatzProgram work = program;
  std::vector<double> theta = program.thetas();
  std::vector<double> grad(theta.size(), 0.0);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const PauliSum& g = program.steps[k].element.generator;
    const double t0 = theta[k];
    if (g.size() == 1) {
      const double r = g.terms().begin()->second.imag();
      const double shift = std::numbers::pi / (4.0 * r);
      theta[k] = t0 + shift;
      const double plus = energy_at(h, work, theta);
      theta[k] = t0 - shift;
      const double minus = energy_at(h, work, theta);
      grad[k] = r * (plus - minus);
    } else {
      theta[k] = t0 + fd_step;
      const double plus = energy_at(h, work, theta);
      theta[k] = t0 - fd_step;
      const double minus = energy_at(h, work, theta);
      grad[k] = (plus - minus) / (2.0 * fd_step);
    }
    theta[k] = t0;
  }
  return grad;
}

VqeResult vqe_minimize(const PauliSum& h, const AnsatzProgram& program,
                       const std::vector<double>& theta0, const VqeOptions& options) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;

  AnsatzProgram work = program;
  const auto n = static_cast<Eigen::Index>(theta0.size());
  work.set_thetas(theta0);

  auto energy = [&](const VectorXd& x) {
    const double e = energy_at(h, work, std::span<const double>(x.data(), x.size()));
    if (!std::isfinite(e)) throw NumericalError("VQE hit a non-finite energy");
    return e;
  };
  auto gradient = [&](const VectorXd& x) {
    work.set_thetas(std::span<const double>(x.data(), x.size()));
    const auto g = parameter_shift_gradient(h, work, options.fd_step);
    return VectorXd(Eigen::Map<const VectorXd>(g.data(), n));
  };

  VectorXd x = Eigen::Map<const VectorXd>(theta0.data(), n);
  double f = energy(x);
  VqeResult result{f, theta0, 0, false};
  if (n == 0) {
    result.converged = true;
    return result;
  }

  VectorXd g = gradient(x);
  if (g.norm() < options.grad_tol) {
    result.converged = true;
    return result;
  }

  constexpr double kArmijo = 1e-4;
  constexpr double kMaxStep = 1.0;
  MatrixXd hinv = MatrixXd::Identity(n, n);

  for (int it = 1; it <= options.max_iterations; ++it) {
    result.n_iterations = it;
    bool accepted = false;
    VectorXd x_new, g_new;
    double f_new = f;
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      VectorXd p = -hinv * g;
      if (p.dot(g) >= 0.0) {
        hinv.setIdentity();
        p = -g;
      }
      if (p.norm() > kMaxStep) p *= kMaxStep / p.norm();
      const double slope = p.dot(g);
      double alpha = 1.0;
      for (int ls = 0; ls < 50; ++ls, alpha *= 0.5) {
        x_new = x + alpha * p;
        f_new = energy(x_new);
        if (f_new <= f + kArmijo * alpha * slope) {
          accepted = true;
          break;
        }
      }
      if (!accepted) hinv.setIdentity();
    }
    if (!accepted) break;

    g_new = gradient(x_new);
    const VectorXd s = x_new - x;
    const VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const MatrixXd left = MatrixXd::Identity(n, n) - rho * s * y.transpose();
      hinv = left * hinv * left.transpose() + rho * s * s.transpose();
    }
    const double improvement = f - f_new;
    x = x_new;
    f = f_new;
    g = g_new;
    if (f < result.energy) {
      result.energy = f;
      result.thetas.assign(x.data(), x.data() + n);
    }
    if (improvement < options.energy_tol && g.norm() < options.grad_tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace qcmx
