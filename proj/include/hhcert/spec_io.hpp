#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hhcert/functional.hpp"
#include "hhcert/ordering.hpp"

namespace hhcert {

/// Malformed input; what() starts with the JSON location, e.g.
/// "lhs.F_terms[1].coef: invalid rational 'x'".
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input document for one comparison: lhs(f) <= rhs(f) on [x, y].
struct ComparisonSpec {
    IntervalSpec interval;
    Functional lhs;
    Functional rhs;
    std::string relation = "leq";

    friend bool operator==(const ComparisonSpec&, const ComparisonSpec&) = default;
};

[[nodiscard]] ComparisonSpec parse_comparison_spec(std::string_view text);
[[nodiscard]] ComparisonSpec comparison_spec_from_json(const nlohmann::json& j);
/// Canonical form: nodes sorted and merged, rationals reduced.
[[nodiscard]] nlohmann::json to_json(const ComparisonSpec& spec);

[[nodiscard]] Functional functional_from_json(const nlohmann::json& j, const std::string& where);
[[nodiscard]] nlohmann::json to_json(const Functional& fn);

[[nodiscard]] nlohmann::json to_json(const Certificate& cert);
[[nodiscard]] Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace hhcert
