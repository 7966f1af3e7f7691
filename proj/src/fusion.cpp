#include "repfuse/fusion.hpp"

#include <algorithm>
#include <cmath>

namespace repfuse {

std::string to_string(Relation r) {
    return r == Relation::Equality ? "equality" : "quasi-containment";
}

namespace {

struct PairOutcome {
    std::vector<Atom> atoms;
    std::vector<RuleFiring> firings;
    bool quasi = false;
};

void fire(PairOutcome& out, const char* rule, Relation rel) {
    out.firings.push_back({rule, rel});
    if (rel == Relation::QuasiContainment) out.quasi = true;
}

void add_regular_part(PairOutcome& out) {
    out.atoms.push_back(make_plain_atom(Family::RegularPlus));
    out.atoms.push_back(make_plain_atom(Family::RegularMinus));
    out.atoms.push_back(make_plain_atom(Family::RegularDiscrete));
}

// One summand of a parameter descriptor: either a named-interval bit or a
// single finite value.
struct Part {
    unsigned bit = 0;
    Rational value;
};

std::vector<Part> descriptor_parts(const Atom& a) {
    std::vector<Part> parts;
    for (unsigned bit : {kIntervalPos, kIntervalNeg})
        if (a.intervals & bit) parts.push_back({bit, Rational(0)});
    for (const ParamKey& k : a.params) parts.push_back({0, k[0]});
    return parts;
}

void fuse_schrodinger_pair(const Atom& a, const Atom& b, PairOutcome& out) {
    unsigned bits = 0;
    std::vector<ParamKey> keys;
    bool zero = false;
    bool rounded = false;
    for (const Part& pa : descriptor_parts(a)) {
        for (const Part& pb : descriptor_parts(b)) {
            if (pa.bit == 0 && pb.bit == 0) {
                Rational sum = pa.value + pb.value;
                if (sum == Rational(0)) {
                    zero = true;
                } else {
                    keys.push_back({sum});
                }
                continue;
            }
            if (pa.bit != 0 && pb.bit != 0) {
                if (pa.bit == pb.bit) {
                    bits |= pa.bit;  // sum of two like-signed half-lines is exact
                } else {
                    bits |= kIntervalPos | kIntervalNeg;
                    zero = true;
                }
                continue;
            }
            // half-line plus a single value: the image is a shifted
            // half-line, rounded up to the smallest named interval.
            const Part& line = pa.bit != 0 ? pa : pb;
            const Part& point = pa.bit != 0 ? pb : pa;
            bool point_pos = point.value > Rational(0);
            bool line_pos = line.bit == kIntervalPos;
            if (line_pos == point_pos) {
                bits |= line.bit;
            } else {
                bits |= kIntervalPos | kIntervalNeg;
                zero = true;
            }
            rounded = true;
        }
    }
    bool any_sum = bits != 0 || !keys.empty();
    if (any_sum) fire(out, "schrodinger-sum", Relation::Equality);
    if (zero) {
        out.atoms.push_back(make_plain_atom(Family::QuotientFourier));
        fire(out, "schrodinger-cancel", Relation::Equality);
    }
    if (bits != 0) out.atoms.push_back(make_interval_atom(Family::Schrodinger, bits));
    if (!keys.empty()) out.atoms.push_back(make_finite_atom(Family::Schrodinger, std::move(keys)));
    if (rounded) fire(out, "interval-upper-bound", Relation::QuasiContainment);
}

void fuse_complementary_pair(const Atom& a, const Atom& b, PairOutcome& out) {
    // Both branches of the complementary product rule contain the full
    // regular part.
    add_regular_part(out);
    unsigned bits = 0;
    std::vector<ParamKey> keys;
    bool shift_fired = false;
    bool fallback_fired = false;
    bool rounded = false;
    for (const Part& pa : descriptor_parts(a)) {
        for (const Part& pb : descriptor_parts(b)) {
            if (pa.bit == 0 && pb.bit == 0) {
                Rational sum = pa.value + pb.value;
                if (sum < Rational(-1)) {
                    keys.push_back({sum + Rational(1)});
                    shift_fired = true;
                } else {
                    fallback_fired = true;
                }
                continue;
            }
            // At least one whole-family factor: the shifted parameters sweep
            // a subinterval of (-1,0); round up to the whole family.  Both
            // branches of the rule occur on such a parameter range.
            bits |= kIntervalAll;
            shift_fired = true;
            fallback_fired = true;
            if (pa.bit == 0 || pb.bit == 0) rounded = true;
        }
    }
    if (shift_fired) fire(out, "complementary-shift", Relation::QuasiContainment);
    if (fallback_fired) fire(out, "regular-part-fallback", Relation::QuasiContainment);
    if (rounded) fire(out, "interval-upper-bound", Relation::QuasiContainment);
    if (bits != 0) out.atoms.push_back(make_interval_atom(Family::Complementary, bits));
    if (!keys.empty()) out.atoms.push_back(make_finite_atom(Family::Complementary, std::move(keys)));
}

bool is_documentation_atom(const Atom& a) {
    return a.family == Family::SpineConstant || a.family == Family::RajchmanConstant;
}

bool is_regular_atom(const Atom& a) {
    return a.family == Family::RegularPlus || a.family == Family::RegularMinus ||
           a.family == Family::RegularDiscrete;
}

PairOutcome fuse_pair(Atom a, Atom b, const RuleSet& rules) {
    PairOutcome out;
    if (is_documentation_atom(a) || is_documentation_atom(b))
        throw EngineError("atom " + format_atom(is_documentation_atom(a) ? a : b) +
                          " is a documentation-only label and has no product rule");
    if (a.family > b.family) std::swap(a, b);

    if (family_group(a.family) == GroupTag::Heisenberg) {
        switch (a.family) {
            case Family::Schrodinger:
                switch (b.family) {
                    case Family::Schrodinger:
                        fuse_schrodinger_pair(a, b, out);
                        return out;
                    case Family::HChar:
                    case Family::APFourier:
                        out.atoms.push_back(a);
                        fire(out, "character-twist", Relation::Equality);
                        return out;
                    case Family::QuotientFourier:
                        out.atoms.push_back(a);
                        fire(out, "quotient-twist", Relation::Equality);
                        return out;
                    default: break;
                }
                break;
            case Family::HChar:
                switch (b.family) {
                    case Family::HChar: {
                        std::vector<ParamKey> keys;
                        for (const ParamKey& ka : a.params) {
                            for (const ParamKey& kb : b.params) {
                                if (ka.size() != kb.size())
                                    throw EngineError("character dimension mismatch in product");
                                ParamKey sum(ka.size());
                                for (size_t i = 0; i < ka.size(); ++i) sum[i] = ka[i] + kb[i];
                                keys.push_back(std::move(sum));
                            }
                        }
                        out.atoms.push_back(make_finite_atom(Family::HChar, std::move(keys)));
                        fire(out, "character-sum", Relation::Equality);
                        return out;
                    }
                    case Family::QuotientFourier:
                        out.atoms.push_back(make_plain_atom(Family::QuotientFourier));
                        fire(out, "abelian-product", Relation::Equality);
                        return out;
                    case Family::APFourier:
                        out.atoms.push_back(make_plain_atom(Family::APFourier));
                        fire(out, "abelian-product", Relation::Equality);
                        return out;
                    default: break;
                }
                break;
            case Family::QuotientFourier:
                if (b.family == Family::QuotientFourier || b.family == Family::APFourier) {
                    out.atoms.push_back(make_plain_atom(Family::QuotientFourier));
                    fire(out, "abelian-product", Relation::Equality);
                    return out;
                }
                break;
            case Family::APFourier:
                if (b.family == Family::APFourier) {
                    out.atoms.push_back(make_plain_atom(Family::APFourier));
                    fire(out, "abelian-product", Relation::Equality);
                    return out;
                }
                break;
            default: break;
        }
        throw EngineError("no product rule for " + format_atom(a) + " * " + format_atom(b));
    }

    // SL2(R)
    if (a.family == Family::TrivialLine) {
        if (b.family == Family::TrivialLine) {
            out.atoms.push_back(make_plain_atom(Family::TrivialLine));
            fire(out, "constant-line", Relation::Equality);
            return out;
        }
        if (rules.trivial_acts_as_identity) {
            out.atoms.push_back(b);
            fire(out, "trivial-identity", Relation::Equality);
        } else {
            fire(out, "trivial-skipped", Relation::Equality);
        }
        return out;
    }
    if (is_regular_atom(a) || is_regular_atom(b)) {
        if (!rules.regular_absorbs_all)
            throw EngineError("products against the regular part need the regular-absorbs-all rule");
        add_regular_part(out);
        fire(out, "regular-absorption", Relation::QuasiContainment);
        return out;
    }
    if (a.family == Family::Complementary && b.family == Family::Complementary) {
        fuse_complementary_pair(a, b, out);
        return out;
    }
    add_regular_part(out);
    fire(out, "regular-part-fallback", Relation::QuasiContainment);
    return out;
}

void check_groups(const Component& x, const Component& y, const RuleSet& rules) {
    if (x.group != y.group) throw EngineError("mixed group tags in product");
    if (x.group != rules.group) throw EngineError("rule set group does not match the operands");
}

}  // namespace

FusionResult fuse_components(const Component& x0, const Component& y0, const RuleSet& rules) {
    Component x = normalize(x0);
    Component y = normalize(y0);
    check_groups(x, y, rules);
    FusionResult res;
    res.flag_trivial_identity = rules.trivial_acts_as_identity;
    res.flag_regular_absorbs = rules.regular_absorbs_all;
    Component acc;
    acc.group = x.group;
    bool quasi = false;
    for (const Atom& a : x.atoms) {
        for (const Atom& b : y.atoms) {
            PairOutcome po = fuse_pair(a, b, rules);
            acc.atoms.insert(acc.atoms.end(), po.atoms.begin(), po.atoms.end());
            res.provenance.insert(res.provenance.end(), po.firings.begin(), po.firings.end());
            quasi = quasi || po.quasi;
        }
    }
    res.result = normalize(std::move(acc));
    res.relation = quasi ? Relation::QuasiContainment : Relation::Equality;
    std::sort(res.provenance.begin(), res.provenance.end());
    res.provenance.erase(std::unique(res.provenance.begin(), res.provenance.end()),
                         res.provenance.end());
    return res;
}

FusionResult fuse_atoms(const RepLabel& x, const RepLabel& y, const RuleSet& rules) {
    if (label_group(x) != label_group(y)) throw EngineError("mixed group tags in product");
    return fuse_components(to_component(x), to_component(y), rules);
}

Component generated_algebra(const std::vector<Component>& generators, const RuleSet& rules) {
    if (generators.empty()) throw EngineError("generated_algebra needs at least one generator");
    Component x;
    x.group = generators.front().group;
    for (const Component& g : generators) {
        if (g.group != x.group) throw EngineError("mixed group tags among generators");
        x.atoms.insert(x.atoms.end(), g.atoms.begin(), g.atoms.end());
    }
    x = normalize(std::move(x));
    check_groups(x, x, rules);
    for (int iter = 0; iter < rules.max_closure_iterations; ++iter) {
        Component product = fuse_components(x, x, rules).result;
        Component next = x;
        next.atoms.insert(next.atoms.end(), product.atoms.begin(), product.atoms.end());
        next = normalize(std::move(next));
        if (next == x) return x;
        x = std::move(next);
    }
    throw EngineError("generated algebra did not saturate within the iteration cap");
}

FusionResult span_of_products(const Component& a, const Component& b, const RuleSet& rules) {
    return fuse_components(a, b, rules);
}

MinPowerResult min_power_to_regular(const Component& x0, const RuleSet& rules) {
    Component x = normalize(x0);
    if (x.group != GroupTag::SL2R)
        throw EngineError("minimal power into the regular part is an SL2(R) computation");
    check_groups(x, x, rules);
    if (x.empty()) throw EngineError("empty component has no minimal power");
    std::optional<Rational> smallest_s;
    for (const Atom& a : x.atoms) {
        if (a.family == Family::TrivialLine)
            throw EngineError("component contains the constants; no power lands in the regular part");
        if (is_documentation_atom(a))
            throw EngineError("documentation-only atoms have no product rules");
        if (a.family == Family::Complementary) {
            if (a.intervals != 0)
                throw EngineError("minimal power needs a finite complementary parameter set");
            for (const ParamKey& k : a.params)
                if (!smallest_s || k[0] < *smallest_s) smallest_s = k[0];
        }
    }
    MinPowerResult out;
    if (smallest_s) out.squaring_bound = std::log2(1.0 / (1.0 + to_double(*smallest_s))) - 1.0;
    const Component reg = regular_component();
    constexpr long long kIterationCap = 1'000'000;
    Component power = x;
    for (long long n = 1; n <= kIterationCap; ++n) {
        if (component_leq(power, reg)) {
            out.power = n;
            return out;
        }
        power = fuse_components(power, x, rules).result;
    }
    return out;  // power = nullopt: no finite power reached the regular part
}

bool ideal_check(const Component& ideal0, const Component& algebra0, const RuleSet& rules) {
    Component ideal = normalize(ideal0);
    Component algebra = normalize(algebra0);
    check_groups(ideal, algebra, rules);
    if (!component_leq(ideal, algebra))
        throw EngineError("ideal candidate " + format_component(ideal) +
                          " is not contained in the algebra " + format_component(algebra));
    if (!component_leq(fuse_components(ideal, ideal, rules).result, ideal))
        throw EngineError("ideal candidate " + format_component(ideal) +
                          " is not closed under products");
    if (!component_leq(fuse_components(algebra, algebra, rules).result, algebra))
        throw EngineError("algebra " + format_component(algebra) + " is not closed under products");
    return component_leq(fuse_components(ideal, algebra, rules).result, ideal);
}

}  // namespace repfuse
