#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "repfuse/labels.hpp"

namespace repfuse {

// Internal rule violations and precondition failures; the CLI maps these to
// exit code 3.
class EngineError : public std::runtime_error {
  public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

struct RuleSet {
    GroupTag group = GroupTag::Heisenberg;
    // With the flag on the trivial representation multiplies as the identity
    // (1 x u = u).  With it off, products against the trivial representation
    // other than 1 x 1 are omitted from span accumulation and recorded as
    // skipped; this reproduces the published span-of-squares bookkeeping,
    // which only tracks products of nontrivial irreducibles.
    bool trivial_acts_as_identity = true;
    // With the flag on the regular part absorbs every product it enters
    // (the Fourier algebra is an ideal).  With it off such products have no
    // rule and raise EngineError.
    bool regular_absorbs_all = true;
    // Bug trap for the generated-subalgebra fixed point; the atom vocabulary
    // saturates long before.
    int max_closure_iterations = 64;
};

enum class Relation { Equality, QuasiContainment };

std::string to_string(Relation r);

// Rule identifiers recorded in result provenance:
//   character-sum           chi * chi' -> chi(xi+xi', eta+eta')
//   character-twist         characters (finite or AF) leave rho atoms fixed
//   schrodinger-sum         rho_h * rho_h' -> rho_{h+h'}   (h+h' != 0)
//   schrodinger-cancel      rho_h * rho_{-h} -> A(G/Z)oq
//   quotient-twist          A(G/Z)oq * rho_h -> rho_h
//   abelian-product         products among chi / A(G/Z)oq / AF
//   complementary-shift     kappa_s * kappa_t -> kappa_{s+t+1}  (s+t < -1)
//   regular-part-fallback   any other nontrivial SL2 pair -> Areg+ + Areg- + AregD
//   trivial-identity        1 * u -> u                 (flag on)
//   trivial-skipped         1 * u omitted              (flag off)
//   constant-line           1 * 1 -> C1
//   regular-absorption      Areg* * u -> Areg+ + Areg- + AregD (flag on)
//   interval-upper-bound    parameter image rounded up to a named interval
struct RuleFiring {
    std::string rule;
    Relation relation = Relation::Equality;

    friend bool operator==(const RuleFiring&, const RuleFiring&) = default;
    friend auto operator<=>(const RuleFiring&, const RuleFiring&) = default;
};

struct FusionResult {
    Component result;
    // Equality only when every contributing rule is an equality of
    // coefficient spaces and every parameter image is exactly representable;
    // otherwise the result is an upper bound up to quasi-containment.
    Relation relation = Relation::Equality;
    std::vector<RuleFiring> provenance;
    bool flag_trivial_identity = true;
    bool flag_regular_absorbs = true;
};

// Product of two single representation labels.
FusionResult fuse_atoms(const RepLabel& x, const RepLabel& y, const RuleSet& rules);

// Product of two components: union over atom pairs, extended to interval
// families by parameter-set image, then normalised.
FusionResult fuse_components(const Component& x, const Component& y, const RuleSet& rules);

// Least fixed point of X -> normalize(X + fuse(X, X)): the smallest closed
// component containing every input that is stable under products.
Component generated_algebra(const std::vector<Component>& generators, const RuleSet& rules);

// Single product layer normalize(fuse(A, B)), no closure iteration.
FusionResult span_of_products(const Component& a, const Component& b, const RuleSet& rules);

// Smallest n >= 1 with X^n contained in the regular part, by literal
// iteration of fuse_components.  Requires an SL2 component with no
// TrivialLine atom and a finite complementary parameter set.  For a single
// complementary atom kappa_s this equals ceil(1/(1+s)); the published
// squaring-style exponent bound log2(1/(1+s)) - 1 is reported alongside in
// MinPowerResult, not asserted.
struct MinPowerResult {
    std::optional<long long> power;
    std::optional<double> squaring_bound;  // only for components with complementary atoms
};
MinPowerResult min_power_to_regular(const Component& x, const RuleSet& rules);

// True iff fuse(I, A) <= I.  Preconditions (I <= A, both closed under
// fusion) are verified and raise EngineError with a diagnosis.
bool ideal_check(const Component& ideal, const Component& algebra, const RuleSet& rules);

}  // namespace repfuse
