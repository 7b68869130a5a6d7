#pragma once

#include "gmlie/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmlie {

inline constexpr std::size_t kMaxVars = 8;
inline constexpr int kMaxExponent = 255;

/// Ordered, named polynomial variables with positive integer weights.
/// The weighted degree of a monomial is sum(weight_i * exp_i).
class VarSpec {
public:
    VarSpec(std::vector<std::string> names, std::vector<int> weights);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarSpec&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using VarSpecPtr = std::shared_ptr<const VarSpec>;

/// Weights default to 1 when omitted.
VarSpecPtr make_varspec(std::vector<std::string> names, std::vector<int> weights = {});

/// The central invariants t = tr(x^2), u = tr(y^2), v = tr(xy), each of
/// degree 2 in the generic matrices.
const VarSpecPtr& central_vars();

bool same_vars(const VarSpecPtr& a, const VarSpecPtr& b);

/// Exponent vector packed into one machine word, one byte per variable with
/// variable 0 in the most significant byte.
class Monomial {
public:
    Monomial() = default;
    static Monomial from_exponents(std::span<const int> exps);

    int exponent(std::size_t i) const { return static_cast<int>((bits_ >> shift(i)) & 0xffu); }
    Monomial with_exponent(std::size_t i, int e) const;
    std::vector<int> exponents(std::size_t nvars) const;

    Monomial operator*(Monomial other) const;
    bool divides(Monomial other) const;
    /// Precondition: divisor.divides(*this).
    Monomial operator/(Monomial divisor) const;

    int degree(const VarSpec& vars) const;
    int total_degree() const;
    bool is_one() const { return bits_ == 0; }

    auto operator<=>(const Monomial&) const = default;

private:
    static constexpr unsigned shift(std::size_t i) { return static_cast<unsigned>((kMaxVars - 1 - i) * 8); }
    std::uint64_t bits_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Poly(VarSpecPtr vars);
    Poly(VarSpecPtr vars, const Rational& constant);

    static Poly variable(VarSpecPtr vars, std::string_view name);
    static Poly variable(VarSpecPtr vars, std::size_t index);
    static Poly term(VarSpecPtr vars, Monomial m, const Rational& c);

    const VarSpecPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(Monomial m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }
    int degree_of(Monomial m) const { return m.degree(*vars_); }
    std::optional<int> max_degree() const;
    std::optional<int> min_degree() const;
    bool is_homogeneous() const;

    Poly homogeneous_part(int degree) const;
    /// Keeps the terms of weighted degree <= bound.
    Poly truncated(int bound) const;
    /// Keeps the terms with fewer than k variable factors (unweighted degree < k).
    Poly reduced_mod_augmentation_power(int k) const;

    void add_term(Monomial m, const Rational& c);

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend bool operator==(const Poly& a, const Poly& b);
    friend Poly mul_truncated(const Poly& a, const Poly& b, int bound);

    Poly pow(unsigned n) const;

    /// Substitutes values[i] for variable i. All values share one VarSpec.
    Poly substitute(std::span<const Poly> values) const;

    /// Terms in canonical printing order: ascending weighted degree, and
    /// within one degree descending lexicographic exponent order.
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

    /// Canonical text, e.g. "3 - 1/2*t + t*u^2". Parseable by the CLI.
    std::string to_string() const;

private:
    VarSpecPtr vars_;
    TermMap terms_;
};

/// Product keeping only terms of weighted degree <= bound.
Poly mul_truncated(const Poly& a, const Poly& b, int bound);

/// Leading monomial in graded-lex order (weighted degree, then lex).
std::pair<Monomial, Rational> leading_term(const Poly& p);

/// Exact quotient, or nullopt when den does not divide num. Uses
/// single-divisor reduction in graded-lex order, which decides divisibility.
std::optional<Poly> exact_divide(const Poly& num, const Poly& den);

/// Element of K[[vars]] known up to weighted degree order(). Terms of higher
/// degree are identically discarded; an order below zero stores nothing.
class TruncSeries {
public:
    TruncSeries(Poly p, int order);

    static TruncSeries zero(VarSpecPtr vars, int order) { return {Poly(std::move(vars)), order}; }
    static TruncSeries constant(VarSpecPtr vars, const Rational& c, int order)
    {
        return {Poly(std::move(vars), c), order};
    }

    const Poly& poly() const { return poly_; }
    const VarSpecPtr& vars() const { return poly_.vars(); }
    int order() const { return order_; }
    bool is_zero() const { return poly_.is_zero(); }
    Rational constant_term() const { return poly_.constant_term(); }

    /// Lowest weighted degree of a stored term, or order()+1 when nothing is
    /// stored (the series is then known to vanish through order()).
    int valuation() const;

    /// Lowers the order to min(order(), bound).
    TruncSeries truncated(int bound) const;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const TruncSeries& rhs);
    TruncSeries& operator*=(const Rational& s);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
    friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

    /// Adds an exact polynomial; the order is unchanged.
    TruncSeries plus(const Poly& p) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    std::string to_string() const { return poly_.to_string(); }

private:
    Poly poly_;
    int order_;
};

/// Product with precision tracking: the result is known through
/// min(order(a) + valuation(b), order(b) + valuation(a)), which can exceed
/// min(order(a), order(b)) when a factor has no low-degree terms.
TruncSeries mul_tracked(const TruncSeries& a, const TruncSeries& b);
/// Product with an exact polynomial: known through order(a) + min_degree(p).
TruncSeries mul_tracked(const TruncSeries& a, const Poly& p);

/// q with q * den == num through the order of num. The result has order
/// order(num) - min_degree(den). nullopt when some homogeneous step leaves a
/// remainder (not divisible up to order).
std::optional<TruncSeries> exact_divide(const TruncSeries& num, const Poly& den);

/// num / den for den with a nonzero constant term.
TruncSeries divide(const TruncSeries& num, const TruncSeries& den);

} // namespace gmlie
