#include "hhcert/spec_io.hpp"

#include <utility>
#include <vector>

namespace hhcert {

using nlohmann::json;

namespace {

Rational rational_at(const json& j, const std::string& where) {
    if (!j.is_string()) throw SpecError(where + ": expected a rational string such as \"1/2\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SpecError(where + ": " + e.what());
    }
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw SpecError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SpecError(where + ": missing field '" + key + "'");
    return *it;
}

std::string join(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }

json rationals(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

std::vector<Rational> rationals_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw SpecError(where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_at(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Functional functional_from_json(const json& j, const std::string& where) {
    std::vector<Atom> atoms;
    std::vector<FTerm> terms;
    const auto f_path = join(where, "f_terms");
    const auto F_path = join(where, "F_terms");
    const json& fs = member(j, "f_terms", where);
    const json& Fs = member(j, "F_terms", where);
    if (!fs.is_array()) throw SpecError(f_path + ": expected an array");
    if (!Fs.is_array()) throw SpecError(F_path + ": expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto at = f_path + "[" + std::to_string(i) + "]";
        atoms.push_back({rational_at(member(fs[i], "node", at), at + ".node"),
                         rational_at(member(fs[i], "weight", at), at + ".weight")});
    }
    for (std::size_t i = 0; i < Fs.size(); ++i) {
        const auto at = F_path + "[" + std::to_string(i) + "]";
        terms.push_back({rational_at(member(Fs[i], "node", at), at + ".node"),
                         rational_at(member(Fs[i], "coef", at), at + ".coef")});
    }
    try {
        return Functional::make(std::move(atoms), std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw SpecError(where + ": " + e.what());
    }
}

json to_json(const Functional& fn) {
    json fs = json::array();
    for (const auto& a : fn.atoms()) fs.push_back({{"node", a.node.str()}, {"weight", a.weight.str()}});
    json Fs = json::array();
    for (const auto& t : fn.f_terms()) Fs.push_back({{"node", t.node.str()}, {"coef", t.coef.str()}});
    return {{"f_terms", std::move(fs)}, {"F_terms", std::move(Fs)}};
}

ComparisonSpec comparison_spec_from_json(const json& j) {
    if (!j.is_object()) throw SpecError("$: expected an object");
    ComparisonSpec spec;
    if (auto it = j.find("interval"); it != j.end() && !it->is_null()) {
        Rational x = rational_at(member(*it, "x", "interval"), "interval.x");
        Rational y = rational_at(member(*it, "y", "interval"), "interval.y");
        try {
            spec.interval = IntervalSpec::make(std::move(x), std::move(y));
        } catch (const std::invalid_argument& e) {
            throw SpecError(std::string("interval: ") + e.what());
        }
    }
    spec.lhs = functional_from_json(member(j, "lhs", "$"), "lhs");
    spec.rhs = functional_from_json(member(j, "rhs", "$"), "rhs");
    if (auto it = j.find("relation"); it != j.end()) {
        if (!it->is_string() || it->get<std::string>() != "leq")
            throw SpecError("relation: only \"leq\" is supported");
    }
    return spec;
}

ComparisonSpec parse_comparison_spec(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("$: malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return comparison_spec_from_json(j);
}

json to_json(const ComparisonSpec& spec) {
    return {{"interval", {{"x", spec.interval.x.str()}, {"y", spec.interval.y.str()}}},
            {"lhs", to_json(spec.lhs)},
            {"rhs", to_json(spec.rhs)},
            {"relation", spec.relation}};
}

json to_json(const Certificate& cert) {
    json zero = json::array();
    for (const auto& iv : cert.profile.zero_intervals) zero.push_back({iv.lo.str(), iv.hi.str()});
    json witness = nullptr;
    if (cert.witness) {
        witness = {{"kind", std::string(to_string(cert.witness->kind))},
                   {"t", cert.witness->t.str()},
                   {"sign", cert.witness->sign},
                   {"violation", cert.witness->violation.str()}};
    }
    return {{"verdict", std::string(to_string(cert.verdict))},
            {"mass", {{"lhs", cert.mass_lhs.str()}, {"rhs", cert.mass_rhs.str()}}},
            {"mean", {{"lhs", cert.mean_lhs.str()}, {"rhs", cert.mean_rhs.str()}}},
            {"crossings", rationals(cert.profile.crossings)},
            {"areas", rationals(cert.profile.areas)},
            {"zero_intervals", std::move(zero)},
            {"leading_sign", cert.profile.leading_sign},
            {"partial_sums", rationals(cert.partial_sums)},
            {"min_prefix", {{"t", cert.min_prefix.t.str()}, {"value", cert.min_prefix.value.str()}}},
            {"witness", std::move(witness)}};
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    try {
        cert.verdict = parse_verdict(member(j, "verdict", "$").get<std::string>());
    } catch (const json::exception& e) {
        throw SpecError(std::string("verdict: ") + e.what());
    }
    const json& m = member(j, "mass", "$");
    cert.mass_lhs = rational_at(member(m, "lhs", "mass"), "mass.lhs");
    cert.mass_rhs = rational_at(member(m, "rhs", "mass"), "mass.rhs");
    const json& mean = member(j, "mean", "$");
    cert.mean_lhs = rational_at(member(mean, "lhs", "mean"), "mean.lhs");
    cert.mean_rhs = rational_at(member(mean, "rhs", "mean"), "mean.rhs");
    cert.profile.crossings = rationals_from(member(j, "crossings", "$"), "crossings");
    cert.profile.areas = rationals_from(member(j, "areas", "$"), "areas");
    if (auto it = j.find("zero_intervals"); it != j.end()) {
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto at = "zero_intervals[" + std::to_string(i) + "]";
            auto pair = rationals_from((*it)[i], at);
            if (pair.size() != 2) throw SpecError(at + ": expected [lo, hi]");
            cert.profile.zero_intervals.push_back({pair[0], pair[1]});
        }
    }
    if (auto it = j.find("leading_sign"); it != j.end()) cert.profile.leading_sign = it->get<int>();
    cert.partial_sums = rationals_from(member(j, "partial_sums", "$"), "partial_sums");
    const json& mp = member(j, "min_prefix", "$");
    cert.min_prefix = {rational_at(member(mp, "t", "min_prefix"), "min_prefix.t"),
                       rational_at(member(mp, "value", "min_prefix"), "min_prefix.value")};
    const json& w = member(j, "witness", "$");
    if (!w.is_null()) {
        const auto kind = member(w, "kind", "witness").get<std::string>();
        ConvexWitness cw;
        if (kind == "hinge")
            cw.kind = WitnessKind::Hinge;
        else if (kind == "affine")
            cw.kind = WitnessKind::Affine;
        else if (kind == "constant")
            cw.kind = WitnessKind::Constant;
        else
            throw SpecError("witness.kind: unknown kind '" + kind + "'");
        cw.t = rational_at(member(w, "t", "witness"), "witness.t");
        cw.sign = w.value("sign", 1);
        cw.violation = rational_at(member(w, "violation", "witness"), "witness.violation");
        cert.witness = std::move(cw);
    }
    return cert;
}

}  // namespace hhcert
