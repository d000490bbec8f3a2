#include "hhcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hhcert/pwfun.hpp"

namespace hhcert {

namespace {

Rational ipow(const Rational& base, int p) {
    Rational out{1};
    for (int i = 0; i < p; ++i) out *= base;
    return out;
}

Rational hinge_from_transform(const PwFun& g, const Rational& t) {
    return (Rational(1) - t) * g.terminal_value() - integral(g, t, Rational(1));
}

// Solves the square system m x = rhs exactly; returns false when singular.
bool solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, std::vector<Rational>& x) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return false;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return true;
}

class InstanceSampler {
public:
    InstanceSampler(std::uint64_t seed, int denominator_bound, int coefficient_bound)
        : rng_(seed), den_bound_(std::max(2, denominator_bound)), coef_bound_(std::max(1, coefficient_bound)) {}

    Rational interior_node() {
        const long q = uniform(2, den_bound_);
        return Rational(uniform(1, q - 1), q);
    }

    Rational unit_node() {
        const long q = uniform(1, den_bound_);
        return Rational(uniform(0, q), q);
    }

    Rational coefficient() {
        const long q = uniform(1, den_bound_);
        return Rational(uniform(-coef_bound_ * q, coef_bound_ * q), q);
    }

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
    long den_bound_;
    long coef_bound_;
};

}  // namespace

TestFunction TestFunction::hinge(Rational t) { return {Kind::Hinge, std::move(t), 1, 1.0}; }

TestFunction TestFunction::power(int p) {
    if (p < 1) throw std::invalid_argument("power test function needs p >= 1");
    return {Kind::Power, Rational(0), p, 1.0};
}

TestFunction TestFunction::exponential(double k) {
    if (k == 0.0) throw std::invalid_argument("exponential test function needs k != 0");
    return {Kind::Exponential, Rational(0), 1, k};
}

TestFunction TestFunction::absdev(Rational c) { return {Kind::AbsDev, std::move(c), 1, 1.0}; }

double TestFunction::f(double u) const {
    switch (kind_) {
        case Kind::Hinge: return std::max(0.0, u - point_.to_double());
        case Kind::Power: return std::pow(u, power_);
        case Kind::Exponential: return std::exp(rate_ * u);
        case Kind::AbsDev: return std::abs(u - point_.to_double());
    }
    return 0.0;
}

double TestFunction::antiderivative(double u) const {
    switch (kind_) {
        case Kind::Hinge: {
            const double p = std::max(0.0, u - point_.to_double());
            return p * p / 2.0;
        }
        case Kind::Power: return std::pow(u, power_ + 1) / (power_ + 1);
        case Kind::Exponential: return std::exp(rate_ * u) / rate_;
        case Kind::AbsDev: {
            const double s = u - point_.to_double();
            return s * std::abs(s) / 2.0;
        }
    }
    return 0.0;
}

Rational TestFunction::f_exact(const Rational& u) const {
    switch (kind_) {
        case Kind::Hinge: return positive_part(u - point_);
        case Kind::Power: return ipow(u, power_);
        case Kind::AbsDev: return abs(u - point_);
        case Kind::Exponential: break;
    }
    throw std::logic_error("exponential test function has no exact values");
}

Rational TestFunction::antiderivative_exact(const Rational& u) const {
    switch (kind_) {
        case Kind::Hinge: {
            const Rational p = positive_part(u - point_);
            return p * p / Rational(2);
        }
        case Kind::Power: return ipow(u, power_ + 1) / Rational(power_ + 1);
        case Kind::AbsDev: {
            const Rational s = u - point_;
            return s * abs(s) / Rational(2);
        }
        case Kind::Exponential: break;
    }
    throw std::logic_error("exponential test function has no exact values");
}

std::string TestFunction::label() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Hinge: os << "hinge(" << point_ << ")"; break;
        case Kind::Power: os << "power(" << power_ << ")"; break;
        case Kind::Exponential: os << "exp(" << rate_ << "u)"; break;
        case Kind::AbsDev: os << "absdev(" << point_ << ")"; break;
    }
    return os.str();
}

Rational evaluate_exact(const Functional& fn, const TestFunction& tf) {
    Rational total;
    for (const auto& a : fn.atoms()) total += a.weight * tf.f_exact(a.node);
    for (const auto& c : fn.f_terms()) total += c.coef * tf.antiderivative_exact(c.node);
    return total;
}

Rational hinge_exact(const Functional& fn, const Rational& t) {
    if (t.sign() < 0 || t > Rational(1)) throw std::out_of_range("hinge_exact: t outside [0,1]");
    return hinge_from_transform(bv_transform(fn), t);
}

HingeSweep hinge_sweep(const Functional& lhs, const Functional& rhs) {
    const PwFun gl = bv_transform(lhs);
    const PwFun gr = bv_transform(rhs);
    if (gl.terminal_value() != gr.terminal_value())
        throw std::invalid_argument("hinge_sweep: masses differ");
    if (prefix_integral(gl, Rational(1)) != prefix_integral(gr, Rational(1)))
        throw std::invalid_argument("hinge_sweep: mean integrals differ");

    std::vector<Rational> points = critical_points(gl - gr);
    points.insert(points.end(), gl.breakpoints().begin(), gl.breakpoints().end());
    points.insert(points.end(), gr.breakpoints().begin(), gr.breakpoints().end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::optional<HingeSweep> best;
    for (const auto& t : points) {
        Rational v = hinge_from_transform(gl, t) - hinge_from_transform(gr, t);
        if (!best || v > best->max_violation) best = HingeSweep{std::move(v), t};
    }
    return *best;
}

CrossCheckReport numeric_cross_check(const Functional& lhs, const Functional& rhs,
                                     const std::vector<TestFunction>& family, const IntervalSpec& iv) {
    const double x = iv.x.to_double();
    const double h = iv.y.to_double() - x;
    CrossCheckReport report;
    bool first = true;
    for (const auto& tf : family) {
        const RealFunction f = [&](double s) { return tf.f((s - x) / h); };
        const RealFunction F = [&](double s) { return h * tf.antiderivative((s - x) / h); };
        const double diff = evaluate_numeric(lhs, f, F, iv) - evaluate_numeric(rhs, f, F, iv);
        report.entries.push_back({tf.label(), diff});
        if (first || diff > report.max_difference) {
            report.max_difference = diff;
            report.argmax = tf.label();
            first = false;
        }
    }
    return report;
}

std::vector<TestFunction> standard_family(int hinge_grid) {
    std::vector<TestFunction> family;
    for (int p = 2; p <= 4; ++p) family.push_back(TestFunction::power(p));
    family.push_back(TestFunction::exponential(1.0));
    family.push_back(TestFunction::exponential(-1.0));
    family.push_back(TestFunction::absdev(Rational(1, 3)));
    family.push_back(TestFunction::absdev(Rational(1, 2)));
    for (int i = 0; hinge_grid > 0 && i <= hinge_grid; ++i) family.push_back(TestFunction::hinge(Rational(i, hinge_grid)));
    return family;
}

Functional random_functional(const RandomInstanceSpec& spec) {
    const int solved = spec.constraint == InstanceConstraint::None    ? 1
                       : spec.constraint == InstanceConstraint::Mass1 ? 2
                                                                      : 3;
    if (spec.node_count < std::max(solved, spec.endpoints ? 2 : 1) || spec.node_count > 8)
        throw std::invalid_argument("random_functional: node_count " + std::to_string(spec.node_count) +
                                    " incompatible with the requested constraints");

    InstanceSampler sampler(spec.seed, spec.denominator_bound, spec.coefficient_bound);
    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Rational> nodes;
        if (spec.endpoints) nodes = {Rational(0), Rational(1)};
        for (int guard = 0; static_cast<int>(nodes.size()) < spec.node_count && guard < 1000; ++guard) {
            Rational n = spec.endpoints ? sampler.interior_node() : sampler.unit_node();
            if (std::find(nodes.begin(), nodes.end(), n) == nodes.end()) nodes.push_back(std::move(n));
        }
        if (static_cast<int>(nodes.size()) < spec.node_count) continue;
        std::sort(nodes.begin(), nodes.end());

        std::vector<Atom> atoms;
        for (int i = 0; i < spec.atom_count; ++i)
            atoms.push_back({sampler.unit_node(), sampler.coefficient()});

        std::vector<Rational> coefs(nodes.size());
        const std::size_t free_count = nodes.size() - static_cast<std::size_t>(solved);
        for (std::size_t i = 0; i < free_count; ++i) coefs[i] = sampler.coefficient();

        // Moment targets: sum c = 0, sum c l = 1 - sum w, sum c l^2 = 1 - 2 sum w l.
        Rational atom_mass;
        Rational atom_moment;
        for (const auto& a : atoms) {
            atom_mass += a.weight;
            atom_moment += a.weight * a.node;
        }
        const std::vector<Rational> targets{Rational(0), Rational(1) - atom_mass,
                                            Rational(1) - Rational(2) * atom_moment};

        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(solved));
        std::vector<Rational> rhs(static_cast<std::size_t>(solved));
        for (int row = 0; row < solved; ++row) {
            rhs[row] = targets[row];
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                const Rational moment = ipow(nodes[i], row);
                if (i < free_count)
                    rhs[row] -= coefs[i] * moment;
                else
                    m[row].push_back(moment);
            }
        }
        std::vector<Rational> unknowns;
        if (!solve_exact(std::move(m), std::move(rhs), unknowns)) continue;
        for (std::size_t i = 0; i < unknowns.size(); ++i) coefs[free_count + i] = std::move(unknowns[i]);

        std::vector<FTerm> terms;
        for (std::size_t i = 0; i < nodes.size(); ++i) terms.push_back({nodes[i], coefs[i]});
        return Functional::make(std::move(atoms), std::move(terms));
    }
    throw std::runtime_error("random_functional: no admissible instance after retries");
}

}  // namespace hhcert
