// Copyright 2026 The cqdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQD_EVALUATE_HPP
#define CQD_EVALUATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cqd/diagram.hpp"
#include "cqd/tensor.hpp"

namespace cqd {

/// One pairwise contraction: the factor at position `right` is merged into
/// the factor at position `left` (left < right) and removed from the list.
struct ContractionStep {
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t result_size = 0;
};

/// Positions refer to the factor list at the time of the step. The initial
/// list holds one factor per node (in node order) followed by one delta
/// factor per boundary-to-boundary edge.
struct ContractionPlan {
    std::vector<ContractionStep> steps;
    double cost = 0.0;  // sum of intermediate sizes
};

/// Greedy plan: repeatedly contracts the label-sharing pair with the
/// smallest result, ties broken by the lowest positions. Disconnected
/// factors are joined by outer products at the end.
ContractionPlan contract_order(const Diagram &d);
/// A valid plan picking uniformly among label-sharing pairs.
ContractionPlan random_plan(const Diagram &d, std::mt19937_64 &rng);
/// Size of the all-at-once contraction: product of every label's dimension.
double naive_cost(const Diagram &d);

/// Mat(C) semantics. Indices are the boundary positions, inputs then outputs.
Tensor evaluate(const Diagram &d);
Tensor evaluate(const Diagram &d, const ContractionPlan &plan);

struct NumericTolerance {
    double absolute = 1e-9;
    ScalarMode mode = ScalarMode::Strict;
};

struct NumericComparison {
    bool equal = false;
    double deviation = 0.0;
    Complex lambda{1.0, 0.0};  // d2 ~ lambda * d1 in up-to-scalar mode
};

NumericComparison compare_tensors(const Tensor &t1, const Tensor &t2, NumericTolerance tol = {});
/// Throws BoundaryMismatch when the boundary signatures differ.
NumericComparison compare_numeric(const Diagram &d1, const Diagram &d2, NumericTolerance tol = {});
bool numeric_equal(const Diagram &d1, const Diagram &d2, NumericTolerance tol = {});

}  // namespace cqd

#endif
