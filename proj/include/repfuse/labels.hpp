#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "repfuse/rational.hpp"

namespace repfuse {

enum class GroupTag { Heisenberg, SL2R };

std::string to_string(GroupTag g);

// Coefficient-space families that can appear as atoms of a component.
// The order here is the canonical sort order of atoms in a component.
enum class Family : int {
    Schrodinger,      // A_{rho_h} atoms and their l1-families
    HChar,            // finite character sets chi_{xi,eta}
    QuotientFourier,  // A(G/Z) pulled back through the central quotient
    APFourier,        // Fourier algebra of the Bohr compactification, pulled back
    PrincipalPlus,    // A_{pi_t^+} atoms / l1-family over t in [0,inf)
    PrincipalMinus,   // A_{pi_t^-} atoms / l1-family over t in (0,inf)
    Complementary,    // A_{kappa_s} atoms / l1-family over s in (-1,0)
    Discrete,         // discrete-series atoms delta_n^{+-}, n >= 2
    MockDiscrete,     // delta_1^{+-}
    TrivialLine,      // C1, the constants
    RegularPlus,      // principal-plus part of the regular representation
    RegularMinus,     // principal-minus part of the regular representation
    RegularDiscrete,  // discrete part of the regular representation
    SpineConstant,    // documentation-only label, participates in no product
    RajchmanConstant  // documentation-only label, participates in no product
};

constexpr int kFamilyCount = 15;

GroupTag family_group(Family f);
std::string family_token(Family f);

// Atomic families are l1-direct-sums over their parameter sets; the regular
// principal parts carry the Lebesgue class of the direct-integral
// decomposition.  A_{Pi^+} (atomic) and A_{pi^+} (Lebesgue) never merge.
enum class MeasureClass { Atomic, LebesgueContinuous };

MeasureClass family_measure_class(Family f);

// Interval bits, meaning depends on the family:
//   Schrodinger:  kIntervalPos = "h>0", kIntervalNeg = "h<0", both = "all h!=0"
//   HChar:        kIntervalAll = all characters (normalises to APFourier)
//   PrincipalPlus/PrincipalMinus/Complementary: kIntervalAll = whole family
//   Discrete:     kIntervalPos = all n>=2 with sign +, kIntervalNeg = sign -
enum : unsigned {
    kIntervalNone = 0u,
    kIntervalPos = 1u,
    kIntervalNeg = 2u,
    kIntervalAll = 1u,
    kIntervalAllNonzero = 3u,
};

// Family-specific finite parameter encoding, ordered lexicographically:
//   Schrodinger {h}; HChar {xi_1..xi_n, eta_1..eta_n}; PrincipalPlus/Minus
//   {t}; Complementary {s}; Discrete {sign, n}; MockDiscrete {sign}.
using ParamKey = std::vector<Rational>;

// One atom of a component: a family tag with either a named-interval
// parameter descriptor (intervals != 0) or a finite parameter set (params
// nonempty), never both after normalisation.  Parameterless families carry
// neither.
struct Atom {
    Family family{};
    unsigned intervals = 0;
    std::vector<ParamKey> params;
    MeasureClass measure = MeasureClass::Atomic;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

Atom make_interval_atom(Family f, unsigned intervals);
Atom make_finite_atom(Family f, std::vector<ParamKey> params);
Atom make_plain_atom(Family f);

// A canonical symbolic closed subspace of B(G): a normalised, sorted set of
// atoms of a single group.
struct Component {
    GroupTag group = GroupTag::Heisenberg;
    std::vector<Atom> atoms;

    bool empty() const { return atoms.empty(); }
    friend bool operator==(const Component&, const Component&) = default;
};

// Symbolic labels for single irreducible representations.
struct SchrodingerRep {
    Rational h;  // h != 0
};
struct CharacterRep {
    std::vector<Rational> xi, eta;  // equal dimension n >= 1
};
struct PrincipalRep {
    int sign = +1;  // +1: t in [0,inf); -1: t in (0,inf)
    Rational t;
};
struct ComplementaryRep {
    Rational s;  // strictly inside (-1,0)
};
struct DiscreteRep {
    int sign = +1;
    long long n = 2;  // n >= 2
};
struct MockDiscreteRep {
    int sign = +1;
};
struct TrivialRep {};

using RepLabel = std::variant<SchrodingerRep, CharacterRep, PrincipalRep, ComplementaryRep,
                              DiscreteRep, MockDiscreteRep, TrivialRep>;

GroupTag label_group(const RepLabel& label);

// Lifts a label to the singleton component spanned by its coefficient space.
Component to_component(const RepLabel& label);

// Inverse of to_component for singleton finite components.
std::optional<RepLabel> to_label(const Component& c);

// Canonical form: validates parameters, merges atoms of equal family,
// deduplicates finite sets, absorbs finite parameters covered by a present
// interval of the same family and measure class, and rewrites the full
// character family to APFourier.  Idempotent and order-insensitive.
// Malformed parameters (h = 0, s outside (-1,0), ...) throw
// std::invalid_argument.
Component normalize(Component raw);

// Containment in the l1-sum order: every atom of x is contained in some atom
// of y (same family, same measure class, parameter-set inclusion).  Inputs
// must be normalised.
bool component_leq(const Component& x, const Component& y);

// Stable text forms, e.g. "rho(3/2)", "rho(h>0)", "chi(1;2)", "kappa(-9/10)",
// "pi+(all)", "delta+(2)", "A(G/Z)oq", "AF", "C1", "Areg+".  parse_atom and
// parse_component accept exactly what format_* emit.
std::string format_atom(const Atom& a);
std::string format_component(const Component& c);
Atom parse_atom(std::string_view token);
Component parse_component(std::string_view text);
std::string format_label(const RepLabel& label);
RepLabel parse_label(std::string_view token);

// Generating atom sets used by the CLI and the structure-theorem checks:
// for the Heisenberg group all Schrodinger atoms plus all characters, for
// SL2(R) the atoms of the closed span of the pure positive definite
// functions.
Component default_atoms(GroupTag g);

// The regular part {Areg+, Areg-, AregD} of SL2(R).
Component regular_component();

// Ordered strict-containment chain rendered by the CLI for SL2(R):
// spine < generated algebra < full Fourier-Stieltjes algebra.
std::vector<std::string> spine_containment_chain();

}  // namespace repfuse
