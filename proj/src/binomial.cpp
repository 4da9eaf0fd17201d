#include "ringtoric/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ringtoric {

Exponents unit_exponents(std::size_t q, std::span<const int> indices) {
    Exponents a(q, 0);
    for (int i : indices) a[static_cast<std::size_t>(i)] += 1;
    return a;
}

std::uint64_t total_degree(const Exponents& a) {
    return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

Exponents add(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (__builtin_add_overflow(a[i], b[i], &out[i])) throw Error("overflow", "exponent overflow");
    return out;
}

Exponents subtract(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw Error("overflow", "negative exponent");
        out[i] = a[i] - b[i];
    }
    return out;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool Binomial::has_disjoint_supports() const noexcept { return coprime(plus, minus); }

bool same_up_to_sign(const Binomial& a, const Binomial& b) {
    return (a.plus == b.plus && a.minus == b.minus) || (a.plus == b.minus && a.minus == b.plus);
}

std::string monomial_to_string(const Exponents& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 't' + std::to_string(i + 1);
        if (a[i] > 1) out += '^' + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b) { return monomial_to_string(b.plus) + " - " + monomial_to_string(b.minus); }

MonomialOrder::MonomialOrder(Kind kind, std::size_t q, std::vector<int> variables, std::vector<std::uint64_t> weights)
    : kind_(kind), variables_(std::move(variables)), weights_(std::move(weights)) {
    if (variables_.empty()) {
        variables_.resize(q);
        std::iota(variables_.begin(), variables_.end(), 0);
    }
    std::vector<int> check = variables_;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != static_cast<int>(i) || check.size() != q)
            throw Error("order", "variable order is not a permutation of 0..q-1");
    if (!weights_.empty()) {
        if (weights_.size() != q) throw Error("order", "weight vector has wrong length");
        for (auto w : weights_)
            if (w == 0) throw Error("order", "weights must be positive");
    }
}

std::uint64_t MonomialOrder::degree(const Exponents& a) const {
    if (weights_.empty()) return total_degree(a);
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += weights_[i] * a[i];
    return d;
}

std::strong_ordering MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    if (a.size() != variables_.size() || b.size() != variables_.size())
        throw Error("length", "monomial length does not match the order");
    if (kind_ != Kind::lex) {
        const auto da = degree(a), db = degree(b);
        if (da != db) return da <=> db;
    }
    if (kind_ == Kind::graded_revlex) {
        for (auto it = variables_.rbegin(); it != variables_.rend(); ++it) {
            const auto v = static_cast<std::size_t>(*it);
            if (a[v] != b[v]) return b[v] <=> a[v];
        }
        return std::strong_ordering::equal;
    }
    for (int vi : variables_) {
        const auto v = static_cast<std::size_t>(vi);
        if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
}

Binomial oriented(Binomial b, const MonomialOrder& order) {
    if (order.compare(b.plus, b.minus) < 0) std::swap(b.plus, b.minus);
    return b;
}

const Exponents& leading(const Binomial& oriented_binomial) { return oriented_binomial.plus; }

namespace {

std::optional<Binomial> s_of_oriented(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
    if (coprime(f.plus, g.plus)) return std::nullopt;
    const Exponents l = lcm(f.plus, g.plus);
    // (L/a) f - (L/c) g = t^{L-c+d} - t^{L-a+b}
    Binomial s{add(subtract(l, g.plus), g.minus), add(subtract(l, f.plus), f.minus)};
    if (s.is_zero()) return std::nullopt;
    return oriented(std::move(s), order);
}

// Top reduction of an oriented binomial by an oriented basis.
std::optional<Binomial> reduce_oriented(Binomial h, std::span<const Binomial> basis, const MonomialOrder& order,
                                        const Budget& budget) {
    std::size_t steps = 0;
    while (!h.is_zero()) {
        const Binomial* by = nullptr;
        for (const Binomial& g : basis)
            if (divides(g.plus, h.plus)) {
                by = &g;
                break;
            }
        if (by == nullptr) return h;
        if (budget.max_steps != 0 && ++steps > budget.max_steps) throw BudgetExceeded("reduction steps");
        h.plus = add(subtract(h.plus, by->plus), by->minus);
        h = oriented(std::move(h), order);
    }
    return std::nullopt;
}

}  // namespace

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    return s_of_oriented(oriented(f, order), oriented(g, order), order);
}

std::optional<Binomial> normal_form(const Binomial& f, std::span<const Binomial> basis, const MonomialOrder& order,
                                    const Budget& budget) {
    std::vector<Binomial> prepared;
    prepared.reserve(basis.size());
    for (const Binomial& g : basis)
        if (!g.is_zero()) prepared.push_back(oriented(g, order));
    return reduce_oriented(oriented(f, order), prepared, order, budget);
}

GroebnerBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
    std::vector<Binomial> basis;
    for (const Binomial& g : generators)
        if (!g.is_zero()) basis.push_back(oriented(g, order));

    // Pairs are taken smallest leading-lcm degree first, ties in creation order.
    struct Pair {
        std::uint64_t degree;
        std::size_t serial;
        std::size_t i, j;
        bool operator>(const Pair& o) const {
            return degree != o.degree ? degree > o.degree : serial > o.serial;
        }
    };
    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
    std::size_t serial = 0;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (coprime(basis[i].plus, basis[j].plus)) continue;
            pairs.push({order.degree(lcm(basis[i].plus, basis[j].plus)), serial++, i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        const Pair p = pairs.top();
        pairs.pop();
        if (options.budget.max_pairs != 0 && ++processed > options.budget.max_pairs)
            throw BudgetExceeded("S-pairs");
        auto s = s_of_oriented(basis[p.i], basis[p.j], order);
        if (!s) continue;
        auto r = reduce_oriented(std::move(*s), basis, order, options.budget);
        if (!r) continue;
        basis.push_back(std::move(*r));
        add_pairs_for(basis.size() - 1);
    }

    GroebnerBasis out{{}, order, false};
    if (options.minimize || options.reduce) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (i == j || !divides(basis[j].plus, basis[i].plus)) continue;
                // Equal leading monomials: keep the earliest.
                redundant = basis[j].plus != basis[i].plus || j < i;
            }
            if (!redundant) out.elements.push_back(basis[i]);
        }
    } else {
        out.elements = std::move(basis);
    }

    if (options.reduce) {
        for (std::size_t i = 0; i < out.elements.size(); ++i) {
            Exponents& tail = out.elements[i].minus;
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t j = 0; j < out.elements.size(); ++j) {
                    if (j == i || !divides(out.elements[j].plus, tail)) continue;
                    tail = add(subtract(tail, out.elements[j].plus), out.elements[j].minus);
                    changed = true;
                    break;
                }
            }
        }
        out.reduced = true;
    }
    return out;
}

std::optional<Binomial> normal_form(const Binomial& f, const GroebnerBasis& basis, const Budget& budget) {
    return reduce_oriented(oriented(f, basis.order), basis.elements, basis.order, budget);
}

bool is_groebner_basis(std::span<const Binomial> basis, const MonomialOrder& order, const Budget& budget) {
    std::vector<Binomial> prepared;
    for (const Binomial& g : basis)
        if (!g.is_zero()) prepared.push_back(oriented(g, order));
    for (std::size_t i = 0; i < prepared.size(); ++i)
        for (std::size_t j = i + 1; j < prepared.size(); ++j) {
            auto s = s_of_oriented(prepared[i], prepared[j], order);
            if (s && reduce_oriented(std::move(*s), prepared, order, budget)) return false;
        }
    return true;
}

}  // namespace ringtoric
