#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "repfuse/labels.hpp"

namespace repfuse {

enum class SpectrumGroup { Heisenberg, SL2R, Moore };

SpectrumGroup parse_spectrum_group(const std::string& token);

// One layer of the Gelfand spectrum of the generated algebra: a target
// space, the dense-range connecting homomorphism reaching it, and the
// component atoms whose coefficient spaces factor through that
// homomorphism.  Layers are descriptive records; no product between layer
// points is defined.
struct SpectrumLayer {
    std::string name;
    std::string target;       // "H_n" | "H~_n" | "H_n^ap" | "SL2R" | "infinity-point" | "G^ap"
    std::string homomorphism; // "identity" | "gamma~" | "gamma_ap"
    Component visible;

    friend bool operator==(const SpectrumLayer&, const SpectrumLayer&) = default;
};

// Ordered layer lists: the Heisenberg spectrum has three layers (the group,
// the centre-compactified group, the Bohr compactification), SL2(R) has the
// group plus the single point at infinity, and a Moore group has its Bohr
// compactification alone.
std::vector<SpectrumLayer> spectrum_layers(SpectrumGroup group);

// Decomposition of an SL2(R) algebra element separating the coefficient of
// the constants from the summands vanishing at infinity.
struct InfinityDecomposition {
    std::optional<std::complex<double>> constant_term;
    std::vector<std::pair<Atom, std::complex<double>>> vanishing;
};

// Every non-constant summand vanishes at infinity, so evaluation there
// returns the constant term.  A decomposition without an explicit constant
// term is rejected.
std::complex<double> evaluate_at_infinity(const InfinityDecomposition& u);

}  // namespace repfuse
