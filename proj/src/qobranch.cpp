// Copyright 2026 The qonash Authors
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

#include "qonash/qobranch.hpp"

#include "qonash/conegeom.hpp"
#include "qonash/error.hpp"

namespace qonash {
namespace {

std::string where(const BranchSpec& spec, std::size_t j) {
  return "branch '" + spec.label + "': lambda_" + std::to_string(j + 1);
}

}  // namespace

BranchLattices build_tower(const BranchSpec& spec) {
  const auto& lambdas = spec.char_exponents;

  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (lambdas[j].dim() != spec.dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  where(spec, j) + " has dimension " +
                      std::to_string(lambdas[j].dim()) + ", expected " +
                      std::to_string(spec.dim));
    }
    if (!lambdas[j].is_nonnegative()) {
      throw Error(ErrorCode::kNegativeExponent,
                  where(spec, j) + " = " + lambdas[j].to_string() +
                      " has a negative coordinate");
    }
    if (lambdas[j].is_zero()) {
      throw Error(ErrorCode::kZeroExponent, where(spec, j) + " is zero");
    }
  }
  for (std::size_t j = 0; j + 1 < lambdas.size(); ++j) {
    if (!leq_sigma(lambdas[j], lambdas[j + 1])) {
      throw Error(ErrorCode::kChainOrder,
                  where(spec, j) + " = " + lambdas[j].to_string() +
                      " is not componentwise below lambda_" +
                      std::to_string(j + 2) + " = " +
                      lambdas[j + 1].to_string());
    }
  }

  std::vector<Lattice> tower{Lattice::standard(spec.dim)};
  std::vector<Integer> steps;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const Lattice& prev = tower.back();
    if (contains(prev, lambdas[j])) {
      throw Error(ErrorCode::kNotCharacteristic,
                  where(spec, j) + " = " + lambdas[j].to_string() +
                      " already lies in M_" + std::to_string(j));
    }
    std::vector<RatVec> gens = prev.basis();
    gens.push_back(lambdas[j]);
    Lattice next = lattice_from_generators(gens);
    steps.push_back(index(prev, next));
    tower.push_back(std::move(next));
  }

  Lattice m = tower.back();
  Lattice n = dual_lattice(m);
  Integer degree = index(tower.front(), m);
  return BranchLattices{std::move(tower), std::move(steps), std::move(m),
                        std::move(n), std::move(degree)};
}

}  // namespace qonash
