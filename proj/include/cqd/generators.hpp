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

#ifndef CQD_GENERATORS_HPP
#define CQD_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cqd/diagram.hpp"

namespace cqd {

/// A spider with the given legs. `heads` only matters when every leg is
/// quantum.
Diagram spider(int dim, std::vector<WireType> inputs, std::vector<WireType> outputs,
               std::optional<PhaseVector> phase = std::nullopt, Heads heads = Heads::Single, int family = 0);
/// Classical spider n -> m.
Diagram classical_spider(int dim, std::size_t n, std::size_t m,
                         std::optional<PhaseVector> phase = std::nullopt, int family = 0);
/// Double-headed (quantum) spider n -> m.
Diagram quantum_spider(int dim, std::size_t n, std::size_t m,
                       std::optional<PhaseVector> phase = std::nullopt, int family = 0);

Diagram copy_spider(int dim);
Diagram delete_spider(int dim);
Diagram encode(int dim);
Diagram measure(int dim);
/// Throws WrongKind for classical wires; use delete_spider there.
Diagram discard(WireType wire);
Diagram decoherence_spider(int dim);
/// The unnormalized cup of a quantum wire as a double-headed spider.
Diagram bell_state(int dim);
Diagram ghz_state(int dim, std::size_t legs = 3);
/// Phase state on a quantum wire: the 0 -> 1 double-headed phased spider.
Diagram phase_state(const PhaseVector &phase);
/// The 1 -> 1 double-headed phased spider.
Diagram phase_gate_diagram(const PhaseVector &phase);
/// Unnormalized maximally mixed state: the dagger of discard.
Diagram maximally_mixed(int dim);
Diagram uniform_state(int dim);

Diagram classical_value(int dim, int index);
Diagram classical_effect(int dim, int index);
Diagram quantum_value(int dim, int index);

Diagram box(std::string name, std::vector<WireType> inputs, std::vector<WireType> outputs, Tensor payload,
            BoxFlavor flavor = BoxFlavor::Plain);
/// A 1 -> 1 plain box on classical wires from a row-major matrix M[out][in].
Diagram matrix_box(std::string name, int in_dim, int out_dim, const std::vector<Complex> &row_major);
/// Payload of a matrix M[out][in] (row-major) as a tensor over (in, out).
Tensor matrix_payload(std::size_t in_size, std::size_t out_size, const std::vector<Complex> &row_major);
/// A quantum state of one wire given its density matrix (row-major d x d).
Diagram density_state(int dim, const std::vector<Complex> &rho);
/// The doubled pure state of an unnormalized vector over the given legs.
Diagram pure_state(const std::vector<int> &dims, const std::vector<Complex> &amplitudes);

}  // namespace cqd

#endif
