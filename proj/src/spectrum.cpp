#include "repfuse/spectrum.hpp"

#include <stdexcept>

#include "repfuse/fusion.hpp"

namespace repfuse {

SpectrumGroup parse_spectrum_group(const std::string& token) {
    if (token == "heisenberg") return SpectrumGroup::Heisenberg;
    if (token == "sl2r") return SpectrumGroup::SL2R;
    if (token == "moore") return SpectrumGroup::Moore;
    throw std::invalid_argument("unknown spectrum group: " + token);
}

std::vector<SpectrumLayer> spectrum_layers(SpectrumGroup group) {
    switch (group) {
        case SpectrumGroup::Heisenberg: {
            RuleSet rules;
            rules.group = GroupTag::Heisenberg;
            Component all = generated_algebra({default_atoms(GroupTag::Heisenberg)}, rules);
            Component schrodinger_ideal = parse_component("rho(h!=0) A(G/Z)oq");
            Component ap = parse_component("AF");
            return {
                {"group", "H_n", "identity", all},
                {"partial-compactification", "H~_n", "gamma~", schrodinger_ideal},
                {"bohr-compactification", "H_n^ap", "gamma_ap", ap},
            };
        }
        case SpectrumGroup::SL2R: {
            RuleSet rules;
            rules.group = GroupTag::SL2R;
            Component all = generated_algebra({default_atoms(GroupTag::SL2R)}, rules);
            Component constants = parse_component("C1");
            return {
                {"group", "SL2R", "identity", all},
                {"point-at-infinity", "infinity-point", "gamma_ap", constants},
            };
        }
        case SpectrumGroup::Moore: {
            Component ap;
            ap.group = GroupTag::Heisenberg;
            ap.atoms = {make_plain_atom(Family::APFourier)};
            return {
                {"bohr-compactification", "G^ap", "gamma_ap", normalize(ap)},
            };
        }
    }
    throw std::logic_error("unknown spectrum group");
}

std::complex<double> evaluate_at_infinity(const InfinityDecomposition& u) {
    if (!u.constant_term.has_value())
        throw std::invalid_argument(
            "decomposition lacks an explicit constant term; evaluation at infinity is "
            "defined only for elements split as (vanishing part) + alpha * 1");
    return *u.constant_term;
}

}  // namespace repfuse
