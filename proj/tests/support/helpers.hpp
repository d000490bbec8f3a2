#pragma once

#include <string_view>

#include "hhcert/functional.hpp"
#include "hhcert/rational.hpp"

namespace th {

inline hhcert::Rational R(std::string_view s) { return hhcert::Rational::parse(s); }

inline hhcert::Functional F(std::vector<hhcert::FTerm> terms, std::vector<hhcert::Atom> atoms = {}) {
    return hhcert::Functional::make(std::move(atoms), std::move(terms));
}

}  // namespace th
