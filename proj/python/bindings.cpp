// JSON in, JSON out: the Python package decodes with the json module, so
// rationals stay exact strings on both sides.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hhcert/closedform.hpp"
#include "hhcert/commands.hpp"
#include "hhcert/corpus.hpp"
#include "hhcert/oracle.hpp"
#include "hhcert/spec_io.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json profile_json(const hhcert::CrossingProfile& p) {
    json out = {{"crossings", json::array()}, {"areas", json::array()}, {"zero_intervals", json::array()},
                {"leading_sign", p.leading_sign}};
    for (const auto& c : p.crossings) out["crossings"].push_back(c.str());
    for (const auto& a : p.areas) out["areas"].push_back(a.str());
    for (const auto& z : p.zero_intervals) out["zero_intervals"].push_back({z.lo.str(), z.hi.str()});
    return out;
}

hhcert::ConvexWitness witness_from(const std::string& kind, const std::string& t, int sign) {
    hhcert::ConvexWitness w;
    if (kind == "hinge")
        w.kind = hhcert::WitnessKind::Hinge;
    else if (kind == "affine")
        w.kind = hhcert::WitnessKind::Affine;
    else if (kind == "constant")
        w.kind = hhcert::WitnessKind::Constant;
    else
        throw std::invalid_argument("unknown witness kind '" + kind + "'");
    w.t = hhcert::Rational::parse(t);
    w.sign = sign;
    return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact convex-order certificates for quadrature functionals";

    m.def("compare", [](const std::string& spec) {
        const auto s = hhcert::parse_comparison_spec(spec);
        return hhcert::to_json(hhcert::compare(s.lhs, s.rhs)).dump();
    }, py::arg("spec"), "Certificate JSON for lhs <= rhs over all convex f.");

    m.def("canonical_spec", [](const std::string& spec) {
        return hhcert::to_json(hhcert::parse_comparison_spec(spec)).dump();
    }, py::arg("spec"));

    m.def("crossing_profile", [](const std::string& spec) {
        const auto s = hhcert::parse_comparison_spec(spec);
        return profile_json(hhcert::crossing_profile(hhcert::bv_transform(s.lhs), hhcert::bv_transform(s.rhs))).dump();
    }, py::arg("spec"));

    m.def("hinge_sweep", [](const std::string& spec) {
        const auto s = hhcert::parse_comparison_spec(spec);
        const auto r = hhcert::hinge_sweep(s.lhs, s.rhs);
        return py::make_tuple(r.max_violation.str(), r.t.str());
    }, py::arg("spec"), "(max violation, t) over all hinges.");

    m.def("witness_violation",
          [](const std::string& spec, const std::string& kind, const std::string& t, int sign) {
              const auto s = hhcert::parse_comparison_spec(spec);
              return hhcert::witness_violation(s.lhs, s.rhs, witness_from(kind, t, sign)).str();
          },
          py::arg("spec"), py::arg("kind"), py::arg("t") = "0", py::arg("sign") = 1);

    m.def("corpus_ids", [] {
        std::vector<std::string> ids;
        for (const auto& item : hhcert::regression_corpus()) ids.push_back(item.id);
        return ids;
    });

    m.def("corpus_spec", [](const std::string& id) {
        const auto* item = hhcert::find_corpus_item(id);
        if (!item) throw py::key_error(id);
        return hhcert::to_json(item->spec).dump();
    }, py::arg("id"));

    m.def("regression_suite", [] {
        const auto r = hhcert::run_regression_suite();
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back({{"id", row.id},
                            {"printed_claim", std::string(hhcert::to_string(row.printed_claim))},
                            {"computed", std::string(hhcert::to_string(row.computed))},
                            {"expected", std::string(hhcert::to_string(row.expected))},
                            {"agree", row.agrees_with_printed}});
        return json{{"rows", rows}, {"errata", r.errata}, {"all_expected", r.all_expected}}.dump();
    });

    m.def("scan_csv",
          [](const std::string& a_from, const std::string& a_to, const std::string& alpha_from,
             const std::string& alpha_to, const std::string& a_step, const std::string& alpha_step) {
              hhcert::ScanOptions o{a_from, a_to, alpha_from, alpha_to, a_step, alpha_step};
              return hhcert::render_scan_csv(hhcert::calibration_report(hhcert::scan_grid(o)));
          },
          py::arg("a_from"), py::arg("a_to"), py::arg("alpha_from"), py::arg("alpha_to"), py::arg("a_step"),
          py::arg("alpha_step"));

    m.def("classify_four_point",
          [](const std::vector<std::string>& a, const std::string& alpha2, const std::string& alpha3) {
              if (a.size() != 4) throw std::invalid_argument("expected four coefficients");
              hhcert::FourPointFormula f4{{hhcert::Rational::parse(a[0]), hhcert::Rational::parse(a[1]),
                                           hhcert::Rational::parse(a[2]), hhcert::Rational::parse(a[3])},
                                          hhcert::Rational::parse(alpha2), hhcert::Rational::parse(alpha3)};
              const auto c = hhcert::classify_four_point(f4);
              json claims = json::array();
              for (const auto& claim : c.applicable) {
                  json chain = json::array();
                  for (const auto& link : claim.chain)
                      chain.push_back({{"lhs", std::string(hhcert::to_string(link.lhs))},
                                       {"rhs", std::string(hhcert::to_string(link.rhs))},
                                       {"verdict", std::string(hhcert::to_string(link.verified))}});
                  claims.push_back({{"case", std::string(hhcert::to_string(claim.which))}, {"chain", chain}});
              }
              return json{{"primary", std::string(hhcert::to_string(c.primary))}, {"applicable", claims}}.dump();
          },
          py::arg("a"), py::arg("alpha2"), py::arg("alpha3"));
}
