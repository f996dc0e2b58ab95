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

#ifndef CQD_CQ_HPP
#define CQD_CQ_HPP

#include <vector>

#include "cqd/diagram.hpp"
#include "cqd/linalg.hpp"

namespace cqd {

/// A probability distribution over d outcomes.
class ProbDist {
   public:
    /// Throws NotNormalized unless the weights are non-negative and sum to 1
    /// within 1e-12.
    explicit ProbDist(std::vector<double> weights);
    static ProbDist uniform(int dim);

    int dim() const {
        return static_cast<int>(weights_.size());
    }
    const std::vector<double> &weights() const {
        return weights_;
    }
    bool full_support() const;
    /// Entries 1/p_i; throws NoFullSupport.
    std::vector<double> inverse() const;
    /// The classical state sum_i p_i |i>.
    Diagram state() const;

   private:
    std::vector<double> weights_;
};

/// The doubled box of a linear map between quantum wires of the given base
/// dimensions (Kronecker order). Without dims, one wire on each side.
Diagram doubled_box(const std::string &name, const Matrix &m, std::vector<int> in_dims = {},
                    std::vector<int> out_dims = {});
/// Plain box of a linear map between classical wires.
Diagram plain_box(const std::string &name, const Matrix &m);

/// Discard on every quantum wire and delete on every classical one.
Diagram terminate_all(const std::vector<WireType> &wires);

bool is_causal(const Diagram &p, double tol = 1e-9);
/// Rank-one test of the bent tensor; throws WrongSignature on classical legs.
bool is_pure(const Diagram &p, double rel_tol = 1e-9);
/// Both throw WrongSignature unless every boundary wire is classical.
bool is_stochastic(const Diagram &p, double tol = 1e-9);
bool is_deterministic(const Diagram &p, double tol = 1e-9);

/// encode . measure
Diagram decoherence(int dim);
/// The bastard spider q -> (c, q).
Diagram non_demolition_measurement(int dim);
/// Non-demolition measurement in the basis given by the columns of U.
Diagram rotated_measurement(const Matrix &u);
/// Non-demolition measurement from Kraus operators: c -> K_c rho K_c^dag
/// paired with outcome c.
Diagram kraus_measurement(const std::vector<Matrix> &kraus);
/// Projection postulate plus causality for a q -> (c, q) process; throws
/// WrongSignature for other shapes.
bool is_vn_measurement(const Diagram &p, double tol = 1e-9);

/// Born probabilities of measuring a one-wire quantum state.
std::vector<double> born_probabilities(const Diagram &state);

/// Demolition POVM q -> c from its effects E_c.
Diagram povm_diagram(const std::vector<Matrix> &effects);
std::vector<Matrix> povm_effects(const Diagram &povm);

struct NaimarkDilation {
    Matrix v;            // isometry d -> d * n, ordered system (x) ancilla
    Diagram isometry;    // doubled V : q_d -> (q_d, q_n)
    Diagram measurement; // discard the system, measure the ancilla
    Diagram composite;
    double isometry_defect = 0.0;      // ||V^dag V - I||
    double reconstruction_error = 0.0; // max entry deviation from the POVM
};

/// Throws NotCausal unless the POVM effects sum to the identity, and
/// WrongSignature unless the shape is q -> c.
NaimarkDilation naimark_dilate(const Diagram &povm, double tol = 1e-9);

/// Branches share a signature; the result gets a classical control input in
/// front of the branch inputs.
Diagram controlled_process(const std::vector<Diagram> &branches);
/// Plugs p into the controlled process; throws NoFullSupport.
Diagram mix(const std::vector<Diagram> &branches, const ProbDist &p);

struct MixtureSample {
    std::vector<Diagram> branches;
    std::vector<double> weights;
};

struct PurityExtremalReport {
    std::size_t samples = 0;
    std::size_t pure = 0;
    std::size_t impure = 0;
    std::size_t violations = 0;  // pure mixtures with a differing branch
    double max_branch_deviation = 0.0;
};

PurityExtremalReport check_purity_extremal(const std::vector<MixtureSample> &samples, double tol = 1e-9);

}  // namespace cqd

#endif
