#include "repfuse/labels.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace repfuse {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto parse_int = [](std::string_view s) -> long long {
        if (s.empty()) throw std::invalid_argument("empty integer");
        size_t i = 0;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("sign without digits");
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad rational: " + std::string(s));
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

std::string format_rational_list(const std::vector<Rational>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_rational(v[i]);
    }
    return s;
}

std::string to_string(GroupTag g) {
    return g == GroupTag::Heisenberg ? "heisenberg" : "sl2r";
}

GroupTag family_group(Family f) {
    switch (f) {
        case Family::Schrodinger:
        case Family::HChar:
        case Family::QuotientFourier:
        case Family::APFourier:
            return GroupTag::Heisenberg;
        default:
            return GroupTag::SL2R;
    }
}

std::string family_token(Family f) {
    switch (f) {
        case Family::Schrodinger: return "rho";
        case Family::HChar: return "chi";
        case Family::QuotientFourier: return "A(G/Z)oq";
        case Family::APFourier: return "AF";
        case Family::PrincipalPlus: return "pi+";
        case Family::PrincipalMinus: return "pi-";
        case Family::Complementary: return "kappa";
        case Family::Discrete: return "delta";
        case Family::MockDiscrete: return "delta1";
        case Family::TrivialLine: return "C1";
        case Family::RegularPlus: return "Areg+";
        case Family::RegularMinus: return "Areg-";
        case Family::RegularDiscrete: return "AregD";
        case Family::SpineConstant: return "Aspine";
        case Family::RajchmanConstant: return "B0";
    }
    throw std::logic_error("unknown family");
}

MeasureClass family_measure_class(Family f) {
    switch (f) {
        case Family::QuotientFourier:
        case Family::RegularPlus:
        case Family::RegularMinus:
            return MeasureClass::LebesgueContinuous;
        default:
            return MeasureClass::Atomic;
    }
}

namespace {

bool family_has_params(Family f) {
    switch (f) {
        case Family::Schrodinger:
        case Family::HChar:
        case Family::PrincipalPlus:
        case Family::PrincipalMinus:
        case Family::Complementary:
        case Family::Discrete:
        case Family::MockDiscrete:
            return true;
        default:
            return false;
    }
}

unsigned family_interval_mask(Family f) {
    switch (f) {
        case Family::Schrodinger: return kIntervalPos | kIntervalNeg;
        case Family::HChar: return kIntervalAll;
        case Family::PrincipalPlus: return kIntervalAll;
        case Family::PrincipalMinus: return kIntervalAll;
        case Family::Complementary: return kIntervalAll;
        case Family::Discrete: return kIntervalPos | kIntervalNeg;
        default: return 0;
    }
}

void validate_key(Family f, const ParamKey& key) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("invalid " + family_token(f) + " parameter: " + why);
    };
    switch (f) {
        case Family::Schrodinger:
            if (key.size() != 1) fail("expected one rational");
            if (key[0] == Rational(0)) fail("h must be nonzero");
            break;
        case Family::HChar:
            if (key.size() < 2 || key.size() % 2 != 0) fail("expected (xi;eta) of equal dimension");
            break;
        case Family::PrincipalPlus:
            if (key.size() != 1) fail("expected one rational");
            if (key[0] < Rational(0)) fail("t must satisfy t >= 0");
            break;
        case Family::PrincipalMinus:
            if (key.size() != 1) fail("expected one rational");
            if (key[0] <= Rational(0)) fail("t must satisfy t > 0");
            break;
        case Family::Complementary:
            if (key.size() != 1) fail("expected one rational");
            if (!(key[0] > Rational(-1) && key[0] < Rational(0))) fail("s must lie in (-1,0)");
            break;
        case Family::Discrete:
            if (key.size() != 2) fail("expected (sign, n)");
            if (key[0] != Rational(1) && key[0] != Rational(-1)) fail("sign must be +-1");
            if (key[1] < Rational(2) || key[1].denominator() != 1) fail("index must be an integer >= 2");
            break;
        case Family::MockDiscrete:
            if (key.size() != 1) fail("expected a sign");
            if (key[0] != Rational(1) && key[0] != Rational(-1)) fail("sign must be +-1");
            break;
        default:
            fail("family carries no parameters");
    }
}

bool key_in_intervals(Family f, const ParamKey& key, unsigned intervals) {
    if (intervals == 0) return false;
    switch (f) {
        case Family::Schrodinger:
            return ((intervals & kIntervalPos) && key[0] > Rational(0)) ||
                   ((intervals & kIntervalNeg) && key[0] < Rational(0));
        case Family::HChar:
            return (intervals & kIntervalAll) != 0;
        case Family::PrincipalPlus:
        case Family::PrincipalMinus:
        case Family::Complementary:
            return (intervals & kIntervalAll) != 0;
        case Family::Discrete:
            return ((intervals & kIntervalPos) && key[0] == Rational(1)) ||
                   ((intervals & kIntervalNeg) && key[0] == Rational(-1));
        default:
            return false;
    }
}

// Canonical atom order: family, then the interval atom before the finite
// atom of the same family.
bool atom_order(const Atom& a, const Atom& b) {
    if (a.family != b.family) return a.family < b.family;
    if ((a.intervals != 0) != (b.intervals != 0)) return a.intervals != 0;
    if (a.intervals != b.intervals) return a.intervals < b.intervals;
    return a.params < b.params;
}

std::string interval_text(Family f, unsigned intervals) {
    switch (f) {
        case Family::Schrodinger:
            if (intervals == (kIntervalPos | kIntervalNeg)) return "h!=0";
            return intervals == kIntervalPos ? "h>0" : "h<0";
        case Family::Discrete:
            return "all";  // sign carried by the token
        default:
            return "all";
    }
}

}  // namespace

Atom make_interval_atom(Family f, unsigned intervals) {
    if (intervals == 0 || (intervals & ~family_interval_mask(f)) != 0)
        throw std::invalid_argument("family " + family_token(f) + " has no such named interval");
    Atom a;
    a.family = f;
    a.intervals = intervals;
    a.measure = family_measure_class(f);
    return a;
}

Atom make_finite_atom(Family f, std::vector<ParamKey> params) {
    if (!family_has_params(f)) throw std::invalid_argument("family " + family_token(f) + " carries no parameters");
    if (params.empty()) throw std::invalid_argument("finite atom needs at least one parameter");
    for (const auto& k : params) validate_key(f, k);
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    Atom a;
    a.family = f;
    a.params = std::move(params);
    a.measure = family_measure_class(f);
    return a;
}

Atom make_plain_atom(Family f) {
    if (family_has_params(f)) throw std::invalid_argument("family " + family_token(f) + " needs parameters");
    Atom a;
    a.family = f;
    a.measure = family_measure_class(f);
    return a;
}

GroupTag label_group(const RepLabel& label) {
    if (std::holds_alternative<SchrodingerRep>(label) || std::holds_alternative<CharacterRep>(label))
        return GroupTag::Heisenberg;
    return GroupTag::SL2R;
}

Component to_component(const RepLabel& label) {
    Component c;
    c.group = label_group(label);
    std::visit(
        [&](const auto& l) {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SchrodingerRep>) {
                c.atoms.push_back(make_finite_atom(Family::Schrodinger, {{l.h}}));
            } else if constexpr (std::is_same_v<T, CharacterRep>) {
                if (l.xi.size() != l.eta.size() || l.xi.empty())
                    throw std::invalid_argument("character needs xi, eta of equal dimension >= 1");
                ParamKey key = l.xi;
                key.insert(key.end(), l.eta.begin(), l.eta.end());
                c.atoms.push_back(make_finite_atom(Family::HChar, {key}));
            } else if constexpr (std::is_same_v<T, PrincipalRep>) {
                c.atoms.push_back(make_finite_atom(
                    l.sign > 0 ? Family::PrincipalPlus : Family::PrincipalMinus, {{l.t}}));
            } else if constexpr (std::is_same_v<T, ComplementaryRep>) {
                c.atoms.push_back(make_finite_atom(Family::Complementary, {{l.s}}));
            } else if constexpr (std::is_same_v<T, DiscreteRep>) {
                c.atoms.push_back(make_finite_atom(
                    Family::Discrete, {{Rational(l.sign), Rational(l.n)}}));
            } else if constexpr (std::is_same_v<T, MockDiscreteRep>) {
                c.atoms.push_back(make_finite_atom(Family::MockDiscrete, {{Rational(l.sign)}}));
            } else {
                c.atoms.push_back(make_plain_atom(Family::TrivialLine));
            }
        },
        label);
    return c;
}

std::optional<RepLabel> to_label(const Component& c) {
    if (c.atoms.size() != 1) return std::nullopt;
    const Atom& a = c.atoms.front();
    if (a.intervals != 0) return std::nullopt;
    if (a.family == Family::TrivialLine) return RepLabel(TrivialRep{});
    if (a.params.size() != 1) return std::nullopt;
    const ParamKey& k = a.params.front();
    switch (a.family) {
        case Family::Schrodinger: return RepLabel(SchrodingerRep{k[0]});
        case Family::HChar: {
            CharacterRep rep;
            size_t n = k.size() / 2;
            rep.xi.assign(k.begin(), k.begin() + n);
            rep.eta.assign(k.begin() + n, k.end());
            return RepLabel(rep);
        }
        case Family::PrincipalPlus: return RepLabel(PrincipalRep{+1, k[0]});
        case Family::PrincipalMinus: return RepLabel(PrincipalRep{-1, k[0]});
        case Family::Complementary: return RepLabel(ComplementaryRep{k[0]});
        case Family::Discrete:
            return RepLabel(DiscreteRep{k[0] == Rational(1) ? +1 : -1, k[1].numerator()});
        case Family::MockDiscrete:
            return RepLabel(MockDiscreteRep{k[0] == Rational(1) ? +1 : -1});
        default: return std::nullopt;
    }
}

Component normalize(Component raw) {
    std::map<Family, Atom> merged;
    size_t hchar_dim = 0;
    for (Atom& a : raw.atoms) {
        if (family_group(a.family) != raw.group)
            throw std::invalid_argument("atom " + family_token(a.family) + " does not belong to group " +
                                        to_string(raw.group));
        if (a.intervals != 0 && !a.params.empty())
            throw std::invalid_argument("atom cannot carry both an interval and a finite set");
        if (a.intervals != 0 && (a.intervals & ~family_interval_mask(a.family)) != 0)
            throw std::invalid_argument("unknown interval for family " + family_token(a.family));
        if (!a.params.empty() && !family_has_params(a.family))
            throw std::invalid_argument("family " + family_token(a.family) + " carries no parameters");
        if (family_has_params(a.family) && a.intervals == 0 && a.params.empty())
            throw std::invalid_argument("family " + family_token(a.family) + " needs parameters");
        for (const ParamKey& k : a.params) {
            validate_key(a.family, k);
            if (a.family == Family::HChar) {
                if (hchar_dim == 0) hchar_dim = k.size();
                if (k.size() != hchar_dim)
                    throw std::invalid_argument("mixed character dimensions in one component");
            }
        }
        auto [it, inserted] = merged.try_emplace(a.family, a);
        if (!inserted) {
            it->second.intervals |= a.intervals;
            it->second.params.insert(it->second.params.end(), a.params.begin(), a.params.end());
        }
        it->second.measure = family_measure_class(a.family);
    }

    Component out;
    out.group = raw.group;
    for (auto& [fam, atom] : merged) {
        if (!family_has_params(fam)) {
            out.atoms.push_back(make_plain_atom(fam));
            continue;
        }
        std::sort(atom.params.begin(), atom.params.end());
        atom.params.erase(std::unique(atom.params.begin(), atom.params.end()), atom.params.end());
        // Absorption: a finite parameter covered by a present named interval
        // of the same family (hence same measure class) is redundant.
        if (atom.intervals != 0) {
            std::erase_if(atom.params,
                          [&](const ParamKey& k) { return key_in_intervals(fam, k, atom.intervals); });
            Atom ia;
            ia.family = fam;
            ia.intervals = atom.intervals;
            ia.measure = atom.measure;
            out.atoms.push_back(std::move(ia));
        }
        if (!atom.params.empty()) {
            Atom fa;
            fa.family = fam;
            fa.params = std::move(atom.params);
            fa.measure = atom.measure;
            out.atoms.push_back(std::move(fa));
        }
    }
    // The closed span of all characters is the pulled-back Fourier algebra
    // of the Bohr compactification; identify them after absorption so that
    // finite character sets inside the full family have already been merged.
    for (Atom& a : out.atoms) {
        if (a.family == Family::HChar && a.intervals != 0) a = make_plain_atom(Family::APFourier);
    }
    std::sort(out.atoms.begin(), out.atoms.end(), atom_order);
    out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end()), out.atoms.end());
    return out;
}

namespace {

bool atom_contained(const Atom& x, const std::vector<Atom>& ys) {
    for (const Atom& y : ys) {
        if (y.family != x.family || y.measure != x.measure) continue;
        if (x.intervals != 0) {
            if ((x.intervals & ~y.intervals) == 0) return true;
            continue;
        }
        if (x.params.empty()) return true;  // parameterless atom, family match suffices
        bool all = true;
        for (const ParamKey& k : x.params) {
            bool in_finite = std::binary_search(y.params.begin(), y.params.end(), k);
            if (!in_finite && !key_in_intervals(x.family, k, y.intervals)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

}  // namespace

bool component_leq(const Component& x, const Component& y) {
    if (x.group != y.group) return false;
    for (const Atom& a : x.atoms) {
        // An atom may be covered jointly by the interval atom and the finite
        // atom of the same family in y, so check keys against all of y.
        if (a.intervals != 0 || a.params.empty()) {
            if (!atom_contained(a, y.atoms)) return false;
        } else {
            for (const ParamKey& k : a.params) {
                Atom single;
                single.family = a.family;
                single.params = {k};
                single.measure = a.measure;
                if (!atom_contained(single, y.atoms)) return false;
            }
        }
    }
    return true;
}

std::string format_atom(const Atom& a) {
    switch (a.family) {
        case Family::QuotientFourier:
        case Family::APFourier:
        case Family::TrivialLine:
        case Family::RegularPlus:
        case Family::RegularMinus:
        case Family::RegularDiscrete:
        case Family::SpineConstant:
        case Family::RajchmanConstant:
            return family_token(a.family);
        default:
            break;
    }
    if (a.family == Family::Discrete) {
        if (a.intervals != 0) {
            if (a.intervals == (kIntervalPos | kIntervalNeg)) return "delta(all)";
            return a.intervals == kIntervalPos ? "delta+(all)" : "delta-(all)";
        }
        std::string s;
        for (size_t i = 0; i < a.params.size(); ++i) {
            if (i) s += " ";
            s += (a.params[i][0] == Rational(1) ? "delta+(" : "delta-(") +
                 format_rational(a.params[i][1]) + ")";
        }
        return s;
    }
    if (a.family == Family::MockDiscrete) {
        if (a.params.size() == 2) return "M";
        return a.params[0] == ParamKey{Rational(1)} ? "delta1+" : "delta1-";
    }
    if (a.family == Family::HChar) {
        if (a.intervals != 0) return "chi(all)";
        std::string s;
        for (size_t i = 0; i < a.params.size(); ++i) {
            if (i) s += " ";
            const ParamKey& k = a.params[i];
            size_t n = k.size() / 2;
            s += "chi(" + format_rational_list({k.begin(), k.begin() + n}) + ";" +
                 format_rational_list({k.begin() + n, k.end()}) + ")";
        }
        return s;
    }
    std::string tok = family_token(a.family);
    if (a.intervals != 0) return tok + "(" + interval_text(a.family, a.intervals) + ")";
    std::vector<Rational> flat;
    flat.reserve(a.params.size());
    for (const ParamKey& k : a.params) flat.push_back(k[0]);
    return tok + "(" + format_rational_list(flat) + ")";
}

std::string format_component(const Component& c) {
    if (c.atoms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c.atoms.size(); ++i) {
        if (i) s += " \xE2\x8A\x95 ";  // " ⊕ "
        s += format_atom(c.atoms[i]);
    }
    return s;
}

namespace {

std::vector<Rational> parse_rational_csv(std::string_view text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

}  // namespace

Atom parse_atom(std::string_view token) {
    auto is = [&](std::string_view t) { return token == t; };
    if (is("A(G/Z)oq")) return make_plain_atom(Family::QuotientFourier);
    if (is("AF")) return make_plain_atom(Family::APFourier);
    if (is("C1") || is("triv") || is("one")) return make_plain_atom(Family::TrivialLine);
    if (is("Areg+")) return make_plain_atom(Family::RegularPlus);
    if (is("Areg-")) return make_plain_atom(Family::RegularMinus);
    if (is("AregD")) return make_plain_atom(Family::RegularDiscrete);
    if (is("Aspine")) return make_plain_atom(Family::SpineConstant);
    if (is("B0")) return make_plain_atom(Family::RajchmanConstant);
    if (is("M")) return make_finite_atom(Family::MockDiscrete, {{Rational(1)}, {Rational(-1)}});
    if (is("delta1+")) return make_finite_atom(Family::MockDiscrete, {{Rational(1)}});
    if (is("delta1-")) return make_finite_atom(Family::MockDiscrete, {{Rational(-1)}});

    auto open = token.find('(');
    if (open == std::string_view::npos || token.back() != ')')
        throw std::invalid_argument("cannot parse atom: " + std::string(token));
    std::string_view head = token.substr(0, open);
    std::string_view body = token.substr(open + 1, token.size() - open - 2);

    if (head == "rho") {
        if (body == "h!=0") return make_interval_atom(Family::Schrodinger, kIntervalPos | kIntervalNeg);
        if (body == "h>0") return make_interval_atom(Family::Schrodinger, kIntervalPos);
        if (body == "h<0") return make_interval_atom(Family::Schrodinger, kIntervalNeg);
        std::vector<ParamKey> keys;
        for (Rational& r : parse_rational_csv(body)) keys.push_back({r});
        return make_finite_atom(Family::Schrodinger, std::move(keys));
    }
    if (head == "chi") {
        if (body == "all") return make_interval_atom(Family::HChar, kIntervalAll);
        auto semi = body.find(';');
        if (semi == std::string_view::npos)
            throw std::invalid_argument("character atom needs chi(xi;eta)");
        auto xi = parse_rational_csv(body.substr(0, semi));
        auto eta = parse_rational_csv(body.substr(semi + 1));
        if (xi.size() != eta.size()) throw std::invalid_argument("character xi, eta dimensions differ");
        ParamKey key = xi;
        key.insert(key.end(), eta.begin(), eta.end());
        return make_finite_atom(Family::HChar, {key});
    }
    auto scalar_family = [&](Family f) {
        if (body == "all") return make_interval_atom(f, kIntervalAll);
        std::vector<ParamKey> keys;
        for (Rational& r : parse_rational_csv(body)) keys.push_back({r});
        return make_finite_atom(f, std::move(keys));
    };
    if (head == "pi+") return scalar_family(Family::PrincipalPlus);
    if (head == "pi-") return scalar_family(Family::PrincipalMinus);
    if (head == "kappa") return scalar_family(Family::Complementary);
    if (head == "delta+") {
        if (body == "all") return make_interval_atom(Family::Discrete, kIntervalPos);
        std::vector<ParamKey> keys;
        for (Rational& r : parse_rational_csv(body)) keys.push_back({Rational(1), r});
        return make_finite_atom(Family::Discrete, std::move(keys));
    }
    if (head == "delta-") {
        if (body == "all") return make_interval_atom(Family::Discrete, kIntervalNeg);
        std::vector<ParamKey> keys;
        for (Rational& r : parse_rational_csv(body)) keys.push_back({Rational(-1), r});
        return make_finite_atom(Family::Discrete, std::move(keys));
    }
    if (head == "delta") {
        if (body == "all") return make_interval_atom(Family::Discrete, kIntervalPos | kIntervalNeg);
        throw std::invalid_argument("discrete atoms need an explicit sign: delta+(n) or delta-(n)");
    }
    throw std::invalid_argument("cannot parse atom: " + std::string(token));
}

Component parse_component(std::string_view text) {
    std::vector<Atom> atoms;
    std::string buf;
    // Atom tokens never contain whitespace; split on spaces and the
    // UTF-8 direct-sum sign used by format_component.
    std::string cleaned(text);
    size_t pos;
    while ((pos = cleaned.find("\xE2\x8A\x95")) != std::string::npos) cleaned.replace(pos, 3, " ");
    std::istringstream in(cleaned);
    while (in >> buf) atoms.push_back(parse_atom(buf));
    if (atoms.empty()) throw std::invalid_argument("empty component");
    Component c;
    c.group = family_group(atoms.front().family);
    c.atoms = std::move(atoms);
    return normalize(std::move(c));
}

std::string format_label(const RepLabel& label) {
    return format_atom(to_component(label).atoms.front());
}

RepLabel parse_label(std::string_view token) {
    Atom a = parse_atom(token);
    if (a.intervals != 0) throw std::invalid_argument("not a single representation: " + std::string(token));
    Component c;
    c.group = family_group(a.family);
    c.atoms = {a};
    auto label = to_label(c);
    if (!label) throw std::invalid_argument("not a single representation: " + std::string(token));
    return *label;
}

Component default_atoms(GroupTag g) {
    Component c;
    c.group = g;
    if (g == GroupTag::Heisenberg) {
        c.atoms.push_back(make_interval_atom(Family::Schrodinger, kIntervalPos | kIntervalNeg));
        c.atoms.push_back(make_interval_atom(Family::HChar, kIntervalAll));
    } else {
        c.atoms.push_back(make_interval_atom(Family::PrincipalPlus, kIntervalAll));
        c.atoms.push_back(make_interval_atom(Family::PrincipalMinus, kIntervalAll));
        c.atoms.push_back(make_interval_atom(Family::Complementary, kIntervalAll));
        c.atoms.push_back(make_finite_atom(Family::MockDiscrete, {{Rational(1)}, {Rational(-1)}}));
        c.atoms.push_back(make_plain_atom(Family::TrivialLine));
        c.atoms.push_back(make_interval_atom(Family::Discrete, kIntervalPos));
        c.atoms.push_back(make_interval_atom(Family::Discrete, kIntervalNeg));
    }
    return normalize(std::move(c));
}

Component regular_component() {
    Component c;
    c.group = GroupTag::SL2R;
    c.atoms = {make_plain_atom(Family::RegularPlus), make_plain_atom(Family::RegularMinus),
               make_plain_atom(Family::RegularDiscrete)};
    return normalize(std::move(c));
}

std::vector<std::string> spine_containment_chain() {
    return {"Aspine", "a(SL2R)", "B(SL2R)"};
}

}  // namespace repfuse
