#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/graph.hpp"
#include "qbench/rng.hpp"

namespace qbench {

/// Length-n word over {I, X, Y, Z}.
struct PauliString {
  std::string symbols;

  int weight() const;
  static PauliString parse(const std::string& s);
};

/// Random binomial graph (edge probability 0.5) post-selected on being
/// connected with maximum degree <= 3.  Throws BudgetError after
/// max_attempts rejections.
UndirectedGraph sample_shallow_graph(int n, Rng& rng,
                                     std::uint64_t max_attempts = 1000000);

/// Shallow IQP circuit: H layer, CZ per graph edge (ordered by edge-colour
/// layer), RZ(alpha_i) per qubit with alpha uniform in [0, 2*pi), H layer.
/// fixed_angle overrides every alpha (test hook).
Circuit gen_shallow(int n, Rng& rng,
                    std::optional<double> fixed_angle = std::nullopt);

/// Haar-random SU(4): complex Ginibre -> QR -> phase correction on
/// diag(R) -> determinant root removed.  det U = 1 within 1e-10.
Su4Matrix haar_su4(Rng& rng);

/// Square random circuit: per layer a uniformly random perfect matching on
/// floor(n/2) pairs (one idle qubit when n is odd), an independent Haar
/// SU(4) on each pair.  Default layers = n.
Circuit gen_square(int n, Rng& rng, std::optional<int> layers = std::nullopt);

/// Pauli gadget: basis changes (H for X, RX(pi/2) for Y), CX ladder down
/// the support, RZ(alpha) on the last support qubit, mirrored ladder,
/// inverse basis changes.  The composed unitary is exp(-i*(alpha/2)*P) for
/// the Pauli tensor P of s, up to global phase.
std::vector<Gate> pauli_gadget(double alpha, const PauliString& s);

/// Deep Pauli-gadget circuit: `layers` gadgets, each with a uniform random
/// Pauli string (re-drawn until weight >= 1) and alpha uniform in
/// [0, 2*pi).  Default layers = 3n + 1.
Circuit gen_deep(int n, Rng& rng, std::optional<int> layers = std::nullopt);

enum class CircuitClass { Shallow, Square, Deep };

const char* class_name(CircuitClass c);
CircuitClass class_from_name(const std::string& name);

/// Dispatch on class; layers ignored for Shallow.
Circuit generate(CircuitClass cls, int n, Rng& rng,
                 std::optional<int> layers = std::nullopt);

}  // namespace qbench
