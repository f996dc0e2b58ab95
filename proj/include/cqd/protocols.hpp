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

#ifndef CQD_PROTOCOLS_HPP
#define CQD_PROTOCOLS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cqd/diagram.hpp"
#include "cqd/linalg.hpp"
#include "cqd/rewrite.hpp"

namespace cqd {

/// A family of unitaries on a D-dimensional system indexed by a classical
/// control of dimension k.
struct ControlledUnitary {
    int dim = 2;
    std::vector<Matrix> branches;

    int control_dim() const {
        return static_cast<int>(branches.size());
    }
    /// Largest ||U^dag U - I|| over the branches.
    double unitarity_defect() const;
};

/// X^a Z^b on dimension D with c = a * D + b; for D = 2 this is I, Z, X, XZ.
ControlledUnitary shift_clock_corrections(int dim);
ControlledUnitary constant_corrections(int dim, const Matrix &u);

/// The doubled controlled box (c, q) -> q with the classical leg shared.
Diagram controlled_box(const ControlledUnitary &cu, bool dagger = false);
/// Normalized Bell state: a quantum cup with the scalar 1/D.
Diagram normalized_bell_state(int dim);
/// (q, q) -> c: the first wire through the controlled box, capped with the
/// second, the control leg read out, scaled by 1/D.
Diagram bell_measurement(const ControlledUnitary &cu);
/// Rows c of the D^2 x D^2 matrix of Bell effects, scaled to be unitary
/// exactly when the effects form an orthonormal basis.
Matrix bell_effects_matrix(const ControlledUnitary &cu);

struct Claim {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
};

struct ProtocolReport {
    std::string protocol;
    int dim = 2;
    std::vector<Claim> claims;
    std::optional<RewriteTrace> trace;
    bool pass() const;
    double max_deviation() const;
};

/// Throws DimMismatch unless the control dimension is D^2. `measurement`
/// defaults to `corrections`.
Diagram build_teleportation(const ControlledUnitary &corrections,
                            const std::optional<ControlledUnitary> &measurement = std::nullopt);
ProtocolReport verify_teleportation(const ControlledUnitary &corrections,
                                    const std::optional<ControlledUnitary> &measurement = std::nullopt,
                                    double tol = 1e-9);

/// With shared_bell false the Bell pair is replaced by two maximally mixed
/// states.
Diagram build_dense_coding(const ControlledUnitary &cu, bool shared_bell = true);
ProtocolReport verify_dense_coding(const ControlledUnitary &cu, double tol = 1e-9);

struct SwapOptions {
    bool corrections = true;
    bool expose_outcome = false;  // keep the classical outcome as the first output
};

/// Outputs (1a, 1b, 2a, 2b) of two Bell pairs after a non-demolition Bell
/// measurement on (1b, 2a) and the controlled corrections.
Diagram build_entanglement_swap(const ControlledUnitary &cu, SwapOptions options = {});
ProtocolReport verify_entanglement_swap(const ControlledUnitary &cu, double tol = 1e-9);

}  // namespace cqd

#endif
