// Copyright 2026 The Authors.
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

#include "approxsub/instances.hpp"

#include <cmath>

namespace approxsub {

SetFunction cuflp_table(const CuflpInstance& inst) {
  const int m = inst.m;
  std::vector<double> values(std::size_t{1} << m, 0.0);
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    double total = 0.0;
    for (int j = 0; j < inst.n_clients; ++j) {
      double best = 0.0;
      bool first = true;
      for (int p = 0; p < m; ++p) {
        if (!(s & (Mask{1} << p))) continue;
        if (first || inst.v(p, j) > best) {
          best = inst.v(p, j);
          first = false;
        }
      }
      total += inst.b_dem(j) * best;
    }
    for (int p = 0; p < m; ++p) {
      if (!(s & (Mask{1} << p))) continue;
      for (int q = p + 1; q < m; ++q) {
        if (s & (Mask{1} << q)) total += inst.u(p, q);
      }
    }
    values[s] = total;
  }
  return SetFunction(m, std::move(values));
}

CuflpInstance build_cuflp(double t) {
  if (!(t > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "bonus divisor must be positive");
  }
  CuflpInstance inst;
  inst.m = 7;
  inst.n_clients = 12;
  inst.t = t;
  inst.v = Eigen::MatrixXd::Zero(inst.m, inst.n_clients);
  // Twelve clients in three blocks of four; each block shares one cheap
  // facility (profit 48 / 36 / 27) and the clients within a block are served
  // at 64 by facilities 4..7 in rotation.
  const double block_profit[3] = {48.0, 36.0, 27.0};
  for (int client = 0; client < 12; ++client) {
    const int block = client / 4;
    inst.v(block, client) = block_profit[block];
    inst.v(3 + client % 4, client) = 64.0;
  }
  inst.b_dem = Eigen::VectorXd::Ones(inst.n_clients);
  inst.u = Eigen::MatrixXd::Zero(inst.m, inst.m);
  inst.u(5, 6) = 25.0 / t;  // facilities 6 and 7
  return inst;
}

double cuflp_near_bound(const CuflpInstance& inst) {
  int supp = 0;
  double max_u = 0.0;
  for (int p = 0; p < inst.m; ++p) {
    for (int q = p + 1; q < inst.m; ++q) {
      if (inst.u(p, q) > 0.0) {
        ++supp;
        max_u = std::max(max_u, inst.u(p, q));
      }
    }
  }
  return supp * max_u;
}

double cuflp_lovasz_budget(const CuflpInstance& inst) {
  return inst.m * cuflp_near_bound(inst);
}

AskInstance ask_data() {
  AskInstance inst;
  inst.u_lin = Eigen::VectorXd(6);
  inst.u_lin << 9, 9, 9, 9, 8.85, 0;
  inst.w = Eigen::VectorXd(6);
  inst.w << 0, 0, 0, 0, 1, 1;
  inst.p = 1.1;
  inst.c = Eigen::VectorXd(6);
  inst.c << 3, 3, 3, 3, 2, 2;
  inst.b = 28.3;
  return inst;
}

double ask_continuous(const AskInstance& inst, const Eigen::VectorXd& x) {
  return inst.u_lin.dot(x) + std::pow(inst.w.dot(x), inst.p);
}

KnapsackInstance build_ask() {
  const AskInstance inst = ask_data();
  const int n = 6;
  std::vector<double> values(std::size_t{1} << n);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) x(i) = 1.0;
    }
    values[s] = ask_continuous(inst, x);
  }
  return KnapsackInstance{SetFunction(n, std::move(values)), inst.b, inst.c};
}

double ask_D_bound(const AskInstance& inst) {
  const double w1 = inst.w.lpNorm<1>();
  const double winf = inst.w.lpNorm<Eigen::Infinity>();
  if (w1 == 0.0) return 0.0;
  return inst.p * std::pow(w1, inst.p - 1.0) * winf;
}

}  // namespace approxsub
