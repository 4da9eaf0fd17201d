#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ringtoric/error.hpp"

namespace ringtoric {

// Exponent vector of a monomial t^a in k[t_1..t_q]; index k is variable t_{k+1}.
using Exponents = boost::container::small_vector<std::uint32_t, 28>;

Exponents unit_exponents(std::size_t q, std::span<const int> indices);
std::uint64_t total_degree(const Exponents& a);
bool divides(const Exponents& a, const Exponents& b);
bool coprime(const Exponents& a, const Exponents& b);
// Overflow and underflow raise Error("overflow").
Exponents add(const Exponents& a, const Exponents& b);
Exponents subtract(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

/*
 * Pure-difference binomial t^plus - t^minus. Every coefficient the toric
 * machinery ever needs is +1 or -1, so a binomial is a pair of monomials and
 * its global sign carries no information. Gröbner code keeps the leading
 * monomial in `plus`.
 *
 * Binomials produced from cycles have disjoint supports; intermediate
 * S-binomials need not.
 */
struct Binomial {
    Exponents plus;
    Exponents minus;

    std::size_t variable_count() const noexcept { return plus.size(); }
    bool is_zero() const noexcept { return plus == minus; }
    bool has_disjoint_supports() const noexcept;
    Binomial negated() const { return {minus, plus}; }

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

// Equality up to global sign.
bool same_up_to_sign(const Binomial& a, const Binomial& b);

// Human-readable form like "t1*t3^2 - t2" (variables numbered from 1; "1" for the empty monomial).
std::string to_string(const Binomial& b);
std::string monomial_to_string(const Exponents& a);

class MonomialOrder {
public:
    enum class Kind { lex, graded_lex, graded_revlex };

    // `variables` lists variable indices from largest to smallest; empty means
    // 0 > 1 > ... > q-1. `weights` (all positive) define the grading of the
    // graded kinds; empty means standard degree.
    MonomialOrder(Kind kind, std::size_t q, std::vector<int> variables = {}, std::vector<std::uint64_t> weights = {});

    static MonomialOrder lex(std::size_t q, std::vector<int> variables = {}) {
        return {Kind::lex, q, std::move(variables)};
    }
    static MonomialOrder grevlex(std::size_t q, std::vector<int> variables = {}, std::vector<std::uint64_t> weights = {}) {
        return {Kind::graded_revlex, q, std::move(variables), std::move(weights)};
    }

    Kind kind() const noexcept { return kind_; }
    std::size_t variable_count() const noexcept { return variables_.size(); }
    const std::vector<int>& variables() const noexcept { return variables_; }
    const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }

    std::uint64_t degree(const Exponents& a) const;

    // Throws Error("length") on mismatched lengths.
    std::strong_ordering compare(const Exponents& a, const Exponents& b) const;

private:
    Kind kind_;
    std::vector<int> variables_;
    std::vector<std::uint64_t> weights_;
};

inline std::strong_ordering compare(const MonomialOrder& order, const Exponents& a, const Exponents& b) {
    return order.compare(a, b);
}

// Swaps sides so the leading monomial is `plus`.
Binomial oriented(Binomial b, const MonomialOrder& order);
const Exponents& leading(const Binomial& oriented_binomial);

// S-binomial of f and g (any orientation on input). nullopt is the zero
// polynomial; pairs with coprime leading monomials short-circuit to zero.
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order);

// Remainder of f under leading-term reduction, always dividing by the first
// applicable element in list order. nullopt is zero. budget.max_steps caps the
// number of reduction steps.
std::optional<Binomial> normal_form(const Binomial& f, std::span<const Binomial> basis, const MonomialOrder& order,
                                    const Budget& budget = {});

struct GroebnerBasis {
    std::vector<Binomial> elements;  // oriented: leading monomial in `plus`
    MonomialOrder order;
    bool reduced = false;
};

struct BuchbergerOptions {
    bool minimize = true;  // drop elements whose leading monomial another element divides
    bool reduce = false;   // also reduce trailing monomials against the others
    Budget budget;         // max_pairs caps processed S-pairs, max_steps each reduction
};

// Buchberger completion for pure-difference binomials with the coprime
// criterion. With pairwise coprime leading monomials the input comes back
// unchanged (up to orientation).
GroebnerBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

// Same as normal_form() against an already oriented basis.
std::optional<Binomial> normal_form(const Binomial& f, const GroebnerBasis& basis, const Budget& budget = {});

// Every S-binomial of a pair in `basis` reduces to zero modulo `basis`.
bool is_groebner_basis(std::span<const Binomial> basis, const MonomialOrder& order, const Budget& budget = {});

}  // namespace ringtoric
