#include "hhcert/functional.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hhcert {

namespace {

template <typename Term, typename Value>
std::vector<Term> sort_and_merge(std::vector<Term> terms, Value Term::*value, const char* what) {
    for (const auto& t : terms) {
        if (t.node.sign() < 0 || t.node > Rational(1))
            throw std::invalid_argument(std::string(what) + " node " + t.node.str() + " outside [0,1]");
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.node < b.node; });
    std::vector<Term> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().node == t.node)
            out.back().*value += t.*value;
        else
            out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Functional Functional::make(std::vector<Atom> atoms, std::vector<FTerm> f_terms) {
    Functional fn;
    fn.atoms_ = sort_and_merge(std::move(atoms), &Atom::weight, "f-term");
    fn.f_terms_ = sort_and_merge(std::move(f_terms), &FTerm::coef, "F-term");
    Rational sum;
    for (const auto& t : fn.f_terms_) sum += t.coef;
    if (!sum.is_zero())
        throw std::invalid_argument("F-term coefficients sum to " + sum.str() + ", expected 0");
    return fn;
}

IntervalSpec IntervalSpec::make(Rational x, Rational y) {
    if (!(x < y)) throw std::invalid_argument("interval requires x < y, got [" + x.str() + "," + y.str() + "]");
    return {std::move(x), std::move(y)};
}

PwFun bv_transform(const Functional& fn) {
    const auto& atoms = fn.atoms();
    const auto& terms = fn.f_terms();

    std::vector<Rational> points{Rational(0), Rational(1)};
    for (const auto& a : atoms) points.push_back(a.node);
    for (const auto& t : terms) points.push_back(t.node);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<Piece> pieces;
    pieces.reserve(points.size());
    Rational atom_mass;
    Rational measure;
    // Running coefficient sum over F-nodes <= current point. It vanishes
    // outside the F-node hull because the coefficients sum to zero.
    Rational running;
    std::size_t ai = 0;
    std::size_t fi = 0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const Rational& p = points[k];
        for (; ai < atoms.size() && atoms[ai].node <= p; ++ai) atom_mass += atoms[ai].weight;
        for (; fi < terms.size() && terms[fi].node <= p; ++fi) running += terms[fi].coef;
        if (k + 1 == points.size()) {
            pieces.push_back({p, Rational(0), atom_mass + measure});
            break;
        }
        const Rational density = -running;
        pieces.push_back({p, density, atom_mass + measure});
        measure += density * (points[k + 1] - p);
    }
    return PwFun::build(std::move(pieces));
}

Rational mass(const Functional& fn) { return bv_transform(fn).terminal_value(); }

Rational mean_integral(const Functional& fn) { return prefix_integral(bv_transform(fn), Rational(1)); }

namespace reference {

Functional midpoint() { return Functional::make({{Rational(1, 2), Rational(1)}}, {}); }

Functional trapezoid() {
    return Functional::make({{Rational(0), Rational(1, 2)}, {Rational(1), Rational(1, 2)}}, {});
}

Functional integral_mean() { return Functional::make({}, {{Rational(0), Rational(-1)}, {Rational(1), Rational(1)}}); }

Functional point_eval(const Rational& node) { return Functional::make({{node, Rational(1)}}, {}); }

}  // namespace reference

double evaluate_numeric(const Functional& fn, const RealFunction& f, const RealFunction& antiderivative,
                        const IntervalSpec& iv) {
    const double x = iv.x.to_double();
    const double h = iv.y.to_double() - x;
    double point_part = 0.0;
    for (const auto& a : fn.atoms()) point_part += a.weight.to_double() * f(x + a.node.to_double() * h);
    double diff_part = 0.0;
    for (const auto& t : fn.f_terms()) diff_part += t.coef.to_double() * antiderivative(x + t.node.to_double() * h);
    return point_part + diff_part / h;
}

}  // namespace hhcert
