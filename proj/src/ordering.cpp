#include "hhcert/ordering.hpp"

#include <stdexcept>
#include <string>

namespace hhcert {

namespace {

struct Segment {
    Rational lo;
    Rational hi;
    int sign;
};

Rational evaluate_exact(const Functional& fn, const ConvexWitness& w) {
    Rational total;
    switch (w.kind) {
        case WitnessKind::Hinge:
            for (const auto& a : fn.atoms()) total += a.weight * positive_part(a.node - w.t);
            for (const auto& c : fn.f_terms()) {
                const Rational p = positive_part(c.node - w.t);
                total += c.coef * p * p / Rational(2);
            }
            return total;
        case WitnessKind::Affine:
            for (const auto& a : fn.atoms()) total += a.weight * a.node;
            for (const auto& c : fn.f_terms()) total += c.coef * c.node * c.node / Rational(2);
            return Rational(w.sign) * total;
        case WitnessKind::Constant:
            for (const auto& a : fn.atoms()) total += a.weight;
            for (const auto& c : fn.f_terms()) total += c.coef * c.node;
            return Rational(w.sign) * total;
    }
    throw std::logic_error("unknown witness kind");
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotComparable: return "not_comparable";
    }
    return "unknown";
}

Verdict parse_verdict(std::string_view s) {
    if (s == "holds") return Verdict::Holds;
    if (s == "fails") return Verdict::Fails;
    if (s == "not_comparable") return Verdict::NotComparable;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

std::string_view to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Hinge: return "hinge";
        case WitnessKind::Affine: return "affine";
        case WitnessKind::Constant: return "constant";
    }
    return "unknown";
}

CrossingProfile crossing_profile(const PwFun& g1, const PwFun& g2) {
    const PwFun d = g1 - g2;
    CrossingProfile profile;
    std::vector<Segment> segments;
    for (const auto& iv : sign_profile(d)) {
        if (iv.sign == 0) {
            profile.zero_intervals.push_back({iv.lo, iv.hi});
            continue;
        }
        if (segments.empty())
            segments.push_back({Rational(0), iv.hi, iv.sign});
        else if (segments.back().sign == iv.sign)
            segments.back().hi = iv.hi;
        else
            segments.push_back({segments.back().hi, iv.hi, iv.sign});
    }
    if (segments.empty()) return profile;

    segments.back().hi = Rational(1);
    profile.leading_sign = segments.front().sign;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) profile.crossings.push_back(segments[i].lo);
        profile.areas.push_back(abs(integral(d, segments[i].lo, segments[i].hi)));
    }
    return profile;
}

std::vector<Rational> alternating_partial_sums(const CrossingProfile& profile) {
    std::vector<Rational> sums;
    sums.reserve(profile.areas.size());
    Rational running;
    for (std::size_t j = 0; j < profile.areas.size(); ++j) {
        if (j % 2 == 0)
            running += profile.areas[j];
        else
            running -= profile.areas[j];
        sums.push_back(running);
    }
    return sums;
}

NecessaryCheck check_necessary(const Functional& lhs, const Functional& rhs) {
    const PwFun gl = bv_transform(lhs);
    const PwFun gr = bv_transform(rhs);
    NecessaryCheck out;
    out.mass_lhs = gl.terminal_value();
    out.mass_rhs = gr.terminal_value();
    out.mean_lhs = prefix_integral(gl, Rational(1));
    out.mean_rhs = prefix_integral(gr, Rational(1));
    out.mass_equal = out.mass_lhs == out.mass_rhs;
    out.mean_equal = out.mean_lhs == out.mean_rhs;
    return out;
}

LevinSteckinResult check_levin_steckin(const PwFun& g1, const PwFun& g2) {
    const PwFun d = g2 - g1;
    LevinSteckinResult out;
    out.min_prefix = min_prefix_integral(d);
    out.holds = g1.terminal_value() == g2.terminal_value() && out.min_prefix.value.sign() >= 0 &&
                prefix_integral(d, Rational(1)).is_zero();
    return out;
}

Verdict check_alternating(const CrossingProfile& profile, bool masses_equal, bool means_equal) {
    if (!masses_equal || !means_equal) return Verdict::NotComparable;
    if (profile.areas.empty()) return Verdict::Holds;
    const std::size_t n = profile.crossings.size();
    if (n == 0)
        throw std::invalid_argument("inconsistent crossing profile: nonzero difference without a crossing");
    if (profile.leading_sign > 0 || n % 2 == 0) return Verdict::Fails;
    const auto sums = alternating_partial_sums(profile);
    for (std::size_t k = 1; k + 1 < n; k += 2)
        if (sums[k].sign() < 0) return Verdict::Fails;
    return Verdict::Holds;
}

std::optional<Verdict> check_ohlin(const PwFun& g1, const PwFun& g2) {
    if (!g1.is_nondecreasing() || !g2.is_nondecreasing()) return std::nullopt;
    if (g1.terminal_value() != g2.terminal_value()) return std::nullopt;
    if (prefix_integral(g1, Rational(1)) != prefix_integral(g2, Rational(1))) return std::nullopt;
    const auto profile = crossing_profile(g1, g2);
    if (profile.areas.empty()) return Verdict::Holds;
    if (profile.crossings.size() == 1 && profile.leading_sign < 0) return Verdict::Holds;
    return std::nullopt;
}

Certificate compare(const Functional& lhs, const Functional& rhs) {
    const PwFun gl = bv_transform(lhs);
    const PwFun gr = bv_transform(rhs);

    Certificate cert;
    cert.mass_lhs = gl.terminal_value();
    cert.mass_rhs = gr.terminal_value();
    cert.mean_lhs = prefix_integral(gl, Rational(1));
    cert.mean_rhs = prefix_integral(gr, Rational(1));
    cert.min_prefix = min_prefix_integral(gr - gl);

    if (cert.mass_lhs != cert.mass_rhs) {
        const Rational gap = cert.mass_lhs - cert.mass_rhs;
        cert.verdict = Verdict::NotComparable;
        cert.witness = ConvexWitness{WitnessKind::Constant, Rational(0), gap.sign(), abs(gap)};
        return cert;
    }
    if (cert.mean_lhs != cert.mean_rhs) {
        // With equal masses, T(u) = mass - mean integral.
        const Rational gap = cert.mean_rhs - cert.mean_lhs;
        cert.verdict = Verdict::NotComparable;
        cert.witness = ConvexWitness{WitnessKind::Affine, Rational(0), gap.sign(), abs(gap)};
        return cert;
    }

    cert.profile = crossing_profile(gl, gr);
    cert.partial_sums = alternating_partial_sums(cert.profile);
    if (cert.min_prefix.value.sign() >= 0) {
        cert.verdict = Verdict::Holds;
    } else {
        cert.verdict = Verdict::Fails;
        cert.witness = ConvexWitness{WitnessKind::Hinge, cert.min_prefix.t, 1, -cert.min_prefix.value};
    }
    return cert;
}

Rational witness_violation(const Functional& lhs, const Functional& rhs, const ConvexWitness& w) {
    return evaluate_exact(lhs, w) - evaluate_exact(rhs, w);
}

}  // namespace hhcert
