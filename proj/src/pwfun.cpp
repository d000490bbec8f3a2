#include "hhcert/pwfun.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hhcert {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void require_unit(const Rational& t, const char* what) {
    if (t < kZero || t > kOne)
        throw std::out_of_range(std::string(what) + ": " + t.str() + " outside [0,1]");
}

int sign_of(const Rational& r) { return r.sign(); }

// Merges two sorted breakpoint lists.
std::vector<Rational> merge_breaks(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename Op>
PwFun combine(const PwFun& a, const PwFun& b, Op op) {
    const auto breaks = merge_breaks(a.breakpoints(), b.breakpoints());
    std::vector<Piece> pieces;
    pieces.reserve(breaks.size());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rational& p = breaks[i];
        const Rational& q = breaks[i + 1];
        // Both operands are linear on [p, q).
        const Rational sa = (a.left_limit(q) - a(p)) / (q - p);
        const Rational sb = (b.left_limit(q) - b(p)) / (q - p);
        pieces.push_back({p, op(sa, sb), op(a(p), b(p))});
    }
    pieces.push_back({kOne, kZero, op(a.terminal_value(), b.terminal_value())});
    return PwFun::build(std::move(pieces));
}

}  // namespace

PwFun::PwFun() : breaks_{kZero, kOne}, slopes_{kZero}, starts_{kZero}, terminal_{kZero} {}

PwFun PwFun::build(std::vector<Piece> pieces) {
    if (pieces.empty()) throw std::invalid_argument("PwFun::build: no pieces");
    if (pieces.front().start != kZero)
        throw std::invalid_argument("PwFun::build: first piece must start at 0, got " +
                                    pieces.front().start.str());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& s = pieces[i].start;
        if (s < kZero || s > kOne)
            throw std::invalid_argument("PwFun::build: breakpoint " + s.str() + " outside [0,1]");
        if (i > 0 && s < pieces[i - 1].start)
            throw std::invalid_argument("PwFun::build: breakpoints not monotone at " + s.str());
    }

    PwFun g;
    g.breaks_.clear();
    g.slopes_.clear();
    g.starts_.clear();
    std::optional<Rational> terminal;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        auto& piece = pieces[i];
        if (piece.start == kOne) {
            terminal = std::move(piece.value);
            continue;
        }
        // A later piece with the same start supersedes a zero-length one.
        if (i + 1 < pieces.size() && pieces[i + 1].start == piece.start) continue;
        g.breaks_.push_back(std::move(piece.start));
        g.slopes_.push_back(std::move(piece.slope));
        g.starts_.push_back(std::move(piece.value));
    }
    g.breaks_.push_back(kOne);
    g.terminal_ = terminal ? *terminal : g.end_value(g.piece_count() - 1);
    g.canonicalize();
    return g;
}

PwFun PwFun::identity() { return build({{kZero, kOne, kZero}}); }

PwFun PwFun::step(const Rational& at, const Rational& height) {
    require_unit(at, "PwFun::step");
    if (at == kZero) return build({{kZero, kZero, height}});
    return build({{kZero, kZero, kZero}, {at, kZero, height}});
}

void PwFun::canonicalize() {
    std::vector<Rational> breaks{breaks_.front()};
    std::vector<Rational> slopes{slopes_.front()};
    std::vector<Rational> starts{starts_.front()};
    for (std::size_t i = 1; i < slopes_.size(); ++i) {
        const Rational prev_end = starts.back() + slopes.back() * (breaks_[i] - breaks.back());
        if (slopes_[i] == slopes.back() && starts_[i] == prev_end) continue;
        breaks.push_back(breaks_[i]);
        slopes.push_back(slopes_[i]);
        starts.push_back(starts_[i]);
    }
    breaks.push_back(kOne);
    breaks_ = std::move(breaks);
    slopes_ = std::move(slopes);
    starts_ = std::move(starts);
}

std::size_t PwFun::piece_index(const Rational& t) const {
    // Last piece whose start is <= t.
    auto it = std::upper_bound(breaks_.begin(), breaks_.end() - 1, t);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

Rational PwFun::end_value(std::size_t i) const {
    return starts_.at(i) + slopes_.at(i) * (breaks_.at(i + 1) - breaks_.at(i));
}

Rational PwFun::operator()(const Rational& t) const {
    require_unit(t, "PwFun value");
    if (t == kOne) return terminal_;
    const auto i = piece_index(t);
    return starts_[i] + slopes_[i] * (t - breaks_[i]);
}

Rational PwFun::left_limit(const Rational& t) const {
    require_unit(t, "PwFun left limit");
    if (t == kZero) return kZero;
    // Piece whose half-open interval (start, end] contains t.
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    const auto i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return starts_[i] + slopes_[i] * (t - breaks_[i]);
}

std::vector<Piece> PwFun::decompose() const {
    std::vector<Piece> out;
    out.reserve(slopes_.size() + 1);
    for (std::size_t i = 0; i < slopes_.size(); ++i) out.push_back({breaks_[i], slopes_[i], starts_[i]});
    if (terminal_ != end_value(slopes_.size() - 1)) out.push_back({kOne, kZero, terminal_});
    return out;
}

bool PwFun::is_zero() const {
    return slopes_.size() == 1 && slopes_[0].is_zero() && starts_[0].is_zero() && terminal_.is_zero();
}

bool PwFun::is_nondecreasing() const {
    if (starts_[0] < kZero) return false;
    for (std::size_t i = 0; i < slopes_.size(); ++i) {
        if (slopes_[i] < kZero) return false;
        if (i > 0 && starts_[i] < end_value(i - 1)) return false;
    }
    return terminal_ >= end_value(slopes_.size() - 1);
}

PwFun operator+(const PwFun& a, const PwFun& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

PwFun operator-(const PwFun& a, const PwFun& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

PwFun operator-(const PwFun& a) {
    auto pieces = a.decompose();
    for (auto& p : pieces) {
        p.slope = -p.slope;
        p.value = -p.value;
    }
    return PwFun::build(std::move(pieces));
}

std::ostream& operator<<(std::ostream& os, const PwFun& g) {
    os << "PwFun{";
    for (std::size_t i = 0; i < g.piece_count(); ++i) {
        if (i) os << ", ";
        os << "[" << g.breaks_[i] << "," << g.breaks_[i + 1] << "): " << g.starts_[i] << " + "
           << g.slopes_[i] << "*(t-" << g.breaks_[i] << ")";
    }
    return os << "; at 1: " << g.terminal_ << "}";
}

PwFun subtract(const PwFun& g1, const PwFun& g2) { return g1 - g2; }

Rational prefix_integral(const PwFun& g, const Rational& t) {
    require_unit(t, "prefix_integral");
    const auto& br = g.breakpoints();
    Rational total;
    for (std::size_t i = 0; i < g.piece_count() && br[i] < t; ++i) {
        const Rational& hi = min(br[i + 1], t);
        const Rational len = hi - br[i];
        const Rational v0 = g.start_value(i);
        const Rational v1 = v0 + g.slope(i) * len;
        total += len * (v0 + v1) / Rational(2);
    }
    return total;
}

Rational integral(const PwFun& g, const Rational& a, const Rational& b) {
    if (b < a) throw std::invalid_argument("integral: reversed bounds");
    return prefix_integral(g, b) - prefix_integral(g, a);
}

std::vector<SignInterval> sign_profile(const PwFun& d) {
    const auto& br = d.breakpoints();
    std::vector<SignInterval> raw;
    for (std::size_t i = 0; i < d.piece_count(); ++i) {
        const Rational& s = d.slope(i);
        const Rational& v0 = d.start_value(i);
        const Rational v1 = d.end_value(i);
        const int left = v0.is_zero() ? sign_of(s) : sign_of(v0);
        const int right = v1.is_zero() ? -sign_of(s) : sign_of(v1);
        if (left != right) {
            const Rational root = br[i] - v0 / s;
            raw.push_back({br[i], root, left});
            raw.push_back({root, br[i + 1], right});
        } else {
            raw.push_back({br[i], br[i + 1], left});
        }
    }
    std::vector<SignInterval> merged;
    for (auto& iv : raw) {
        if (!merged.empty() && merged.back().sign == iv.sign)
            merged.back().hi = std::move(iv.hi);
        else
            merged.push_back(std::move(iv));
    }
    return merged;
}

namespace {

// Visits the candidate extremum points of H in increasing t together with H
// there.
template <typename Visit>
void visit_prefix_candidates(const PwFun& d, Visit visit) {
    const auto& br = d.breakpoints();
    Rational h;
    visit(br.front(), h);
    for (std::size_t i = 0; i < d.piece_count(); ++i) {
        const Rational& s = d.slope(i);
        const Rational& v0 = d.start_value(i);
        const Rational v1 = d.end_value(i);
        if (v0.sign() * v1.sign() < 0) {
            const Rational len = -v0 / s;
            visit(br[i] + len, h + len * v0 / Rational(2));
        }
        const Rational len = br[i + 1] - br[i];
        h += len * (v0 + v1) / Rational(2);
        visit(br[i + 1], h);
    }
}

}  // namespace

PrefixExtremum min_prefix_integral(const PwFun& d) {
    PrefixExtremum best{kZero, kZero};
    visit_prefix_candidates(d, [&](const Rational& t, const Rational& h) {
        if (h < best.value) best = {t, h};
    });
    return best;
}

PrefixExtremum max_prefix_integral(const PwFun& d) {
    PrefixExtremum best{kZero, kZero};
    visit_prefix_candidates(d, [&](const Rational& t, const Rational& h) {
        if (h > best.value) best = {t, h};
    });
    return best;
}

std::vector<Rational> critical_points(const PwFun& d) {
    std::vector<Rational> out;
    visit_prefix_candidates(d, [&](const Rational& t, const Rational&) { out.push_back(t); });
    return out;
}

}  // namespace hhcert
