#pragma once

#include "gmlie/welement.hpp"

#include <map>
#include <string>

namespace gmlie {

/// Truncated series in the free associative algebra on x, y. Keys are words
/// over {x, y}; the empty word is the unit. Only words of length <= order()
/// are stored, and no zero coefficients.
class FreeSeries {
public:
    using TermMap = std::map<std::string, Rational>;

    explicit FreeSeries(int order);
    FreeSeries(const TermMap& terms, int order);

    static FreeSeries word(const std::string& w, int order, const Rational& c = Rational(1));
    static FreeSeries constant(const Rational& c, int order) { return word("", order, c); }

    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const std::string& w) const;
    Rational constant_term() const { return coefficient(""); }

    /// Keeps words of length exactly n.
    FreeSeries homogeneous_part(int n) const;

    FreeSeries& operator+=(const FreeSeries& rhs);
    FreeSeries& operator-=(const FreeSeries& rhs);
    FreeSeries& operator*=(const Rational& s);
    friend FreeSeries operator+(FreeSeries a, const FreeSeries& b) { return a += b; }
    friend FreeSeries operator-(FreeSeries a, const FreeSeries& b) { return a -= b; }
    friend FreeSeries operator*(const Rational& s, FreeSeries a) { return a *= s; }
    friend bool operator==(const FreeSeries&, const FreeSeries&) = default;

    /// "x + y + 1/2*x*y - 1/2*y*x", shorter words first.
    std::string to_string() const;

private:
    void add(const std::string& w, const Rational& c);

    TermMap terms_;
    int order_;
};

FreeSeries free_mul(const FreeSeries& a, const FreeSeries& b);
/// exp(s) for s without constant term.
FreeSeries free_exp(const FreeSeries& s);
/// log(s) for s with constant term 1.
FreeSeries free_log(const FreeSeries& s);
/// log(exp(x) exp(y)) through word length order.
FreeSeries bch(int order);

/// Image in W of order s.order(), summing from_word over the terms.
WElement project_to_w(const FreeSeries& s);

} // namespace gmlie
