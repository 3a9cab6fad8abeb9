#include "legch/metrics.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace legch {

LaurentPolynomial::LaurentPolynomial(std::map<int, long long> coefficients) {
    for (const auto& [exponent, c] : coefficients) {
        add_term(exponent, c);
    }
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, long long coefficient) {
    LaurentPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

long long LaurentPolynomial::coefficient(int exponent) const {
    auto it = coefficients_.find(exponent);
    return it == coefficients_.end() ? 0 : it->second;
}

long long LaurentPolynomial::evaluate_at_one() const {
    long long total = 0;
    for (const auto& [exponent, c] : coefficients_) {
        total += c;
    }
    return total;
}

void LaurentPolynomial::add_term(int exponent, long long coefficient) {
    if (coefficient == 0) {
        return;
    }
    long long& slot = coefficients_[exponent];
    slot += coefficient;
    if (slot == 0) {
        coefficients_.erase(exponent);
    }
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    for (const auto& [exponent, c] : b.coefficients_) {
        out.add_term(exponent, c);
    }
    return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    for (const auto& [exponent, c] : b.coefficients_) {
        out.add_term(exponent, -c);
    }
    return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.coefficients_) {
        for (const auto& [eb, cb] : b.coefficients_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (coefficients_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        const auto [exponent, c] = *it;
        const long long magnitude = c < 0 ? -c : c;
        if (c < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (exponent == 0) {
            out += std::to_string(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out += std::to_string(magnitude);
        }
        out += "z";
        if (exponent != 1) {
            out += "^" + std::to_string(exponent);
        }
    }
    return out;
}

LaurentPolynomial morse_chekanov(const DGA& dga) {
    LaurentPolynomial p;
    for (const Generator& g : dga.generators()) {
        p.add_term(g.grading, 1);
    }
    return p;
}

LaurentPolynomial poincare_chekanov(const Barcode& barcode) {
    LaurentPolynomial p;
    for (const Bar& bar : barcode.bars) {
        if (bar.is_infinite()) {
            p.add_term(bar.degree, 1);
        }
    }
    return p;
}

LaurentPolynomial finite_bar_polynomial(const Barcode& barcode) {
    LaurentPolynomial p;
    for (const Bar& bar : barcode.bars) {
        if (!bar.is_infinite()) {
            p.add_term(bar.degree, 1);
        }
    }
    return p;
}

StrongMorseReport check_strong_morse(const DGA& dga, const Barcode& barcode) {
    StrongMorseReport report;
    report.morse_chekanov = morse_chekanov(dga);
    report.poincare_chekanov = poincare_chekanov(barcode);
    report.finite_bars = finite_bar_polynomial(barcode);
    report.lhs = report.morse_chekanov - report.poincare_chekanov;
    report.rhs = (LaurentPolynomial::monomial(1) + LaurentPolynomial::monomial(0)) * report.finite_bars;
    report.holds = report.lhs == report.rhs;
    return report;
}

namespace {

Rational abs_diff(const Rational& x, const Rational& y) {
    return x < y ? Rational(y - x) : Rational(x - y);
}

// Cost of matching two bars, nullopt when they cannot be matched.
std::optional<Rational> match_cost(const Bar& x, const Bar& y) {
    if (x.is_infinite() != y.is_infinite()) {
        return std::nullopt;
    }
    Rational cost = abs_diff(x.birth, y.birth);
    if (!x.is_infinite()) {
        cost = std::max(cost, abs_diff(*x.death, *y.death));
    }
    return cost;
}

class BipartiteMatcher {
public:
    explicit BipartiteMatcher(std::size_t size) : adjacency_(size), match_right_(size, none) {}

    void add_edge(std::size_t left, std::size_t right) { adjacency_[left].push_back(right); }

    bool has_perfect_matching() {
        for (std::size_t left = 0; left < adjacency_.size(); ++left) {
            std::vector<bool> visited(adjacency_.size(), false);
            if (!augment(left, visited)) {
                return false;
            }
        }
        return true;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    bool augment(std::size_t left, std::vector<bool>& visited) {
        for (std::size_t right : adjacency_[left]) {
            if (visited[right]) {
                continue;
            }
            visited[right] = true;
            if (match_right_[right] == none || augment(match_right_[right], visited)) {
                match_right_[right] = left;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::size_t> match_right_;
};

// Left vertices: bars of `a`, then one diagonal slot per finite bar of `b`.
// Right vertices: bars of `b`, then one diagonal slot per finite bar of `a`.
bool feasible(const std::vector<Bar>& a, const std::vector<Bar>& b, const Rational& delta) {
    std::vector<std::size_t> finite_a, finite_b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_infinite()) {
            finite_a.push_back(i);
        }
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j].is_infinite()) {
            finite_b.push_back(j);
        }
    }
    const std::size_t size = a.size() + finite_b.size();
    BipartiteMatcher matcher(size);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto cost = match_cost(a[i], b[j]);
            if (cost && *cost <= delta) {
                matcher.add_edge(i, j);
            }
        }
    }
    for (std::size_t s = 0; s < finite_a.size(); ++s) {
        if (a[finite_a[s]].length() / 2 <= delta) {
            matcher.add_edge(finite_a[s], b.size() + s);
        }
    }
    for (std::size_t s = 0; s < finite_b.size(); ++s) {
        if (b[finite_b[s]].length() / 2 <= delta) {
            matcher.add_edge(a.size() + s, finite_b[s]);
        }
        for (std::size_t t = 0; t < finite_a.size(); ++t) {
            matcher.add_edge(a.size() + s, b.size() + t);
        }
    }
    return matcher.has_perfect_matching();
}

ExtendedRational degree_distance(const std::vector<Bar>& a, const std::vector<Bar>& b) {
    auto infinite_count = [](const std::vector<Bar>& bars) {
        return std::count_if(bars.begin(), bars.end(), [](const Bar& x) { return x.is_infinite(); });
    };
    if (infinite_count(a) != infinite_count(b)) {
        return ExtendedRational::positive_infinity();
    }

    // The optimum is one of these values.
    std::vector<Rational> candidates{0};
    for (const Bar& x : a) {
        for (const Bar& y : b) {
            if (auto cost = match_cost(x, y)) {
                candidates.push_back(*cost);
            }
        }
    }
    for (const auto* bars : {&a, &b}) {
        for (const Bar& x : *bars) {
            if (!x.is_infinite()) {
                candidates.push_back(x.length() / 2);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;  // always feasible
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(a, b, candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return ExtendedRational(candidates[lo]);
}

} // namespace

ExtendedRational interleaving_distance(const Barcode& a, const Barcode& b) {
    std::map<int, std::pair<std::vector<Bar>, std::vector<Bar>>> by_degree;
    for (const Bar& bar : a.bars) {
        by_degree[bar.degree].first.push_back(bar);
    }
    for (const Bar& bar : b.bars) {
        by_degree[bar.degree].second.push_back(bar);
    }
    ExtendedRational worst(Rational(0));
    for (const auto& [degree, pair] : by_degree) {
        ExtendedRational d = degree_distance(pair.first, pair.second);
        if (d > worst) {
            worst = d;
        }
    }
    return worst;
}

} // namespace legch
