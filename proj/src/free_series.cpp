#include "gmlie/free_series.hpp"

#include "gmlie/errors.hpp"

#include <algorithm>
#include <vector>

namespace gmlie {

namespace {

void check_word(const std::string& w)
{
    for (char c : w)
        if (c != 'x' && c != 'y')
            throw UsageError("free series words use only x and y");
}

} // namespace

FreeSeries::FreeSeries(int order) : order_(order)
{
    if (order < 0)
        throw UsageError("free series order must be >= 0");
}

FreeSeries::FreeSeries(const TermMap& terms, int order) : FreeSeries(order)
{
    for (const auto& [w, c] : terms) {
        check_word(w);
        add(w, c);
    }
}

FreeSeries FreeSeries::word(const std::string& w, int order, const Rational& c)
{
    check_word(w);
    FreeSeries s(order);
    s.add(w, c);
    return s;
}

void FreeSeries::add(const std::string& w, const Rational& c)
{
    if (static_cast<int>(w.size()) > order_ || c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational FreeSeries::coefficient(const std::string& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

FreeSeries FreeSeries::homogeneous_part(int n) const
{
    FreeSeries out(order_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == n)
            out.terms_.emplace(w, c);
    return out;
}

FreeSeries& FreeSeries::operator+=(const FreeSeries& rhs)
{
    order_ = std::min(order_, rhs.order_);
    std::erase_if(terms_, [this](const auto& kv) { return static_cast<int>(kv.first.size()) > order_; });
    for (const auto& [w, c] : rhs.terms_)
        add(w, c);
    return *this;
}

FreeSeries& FreeSeries::operator-=(const FreeSeries& rhs)
{
    return *this += Rational(-1) * rhs;
}

FreeSeries& FreeSeries::operator*=(const Rational& s)
{
    if (s == 0)
        terms_.clear();
    for (auto& [w, c] : terms_)
        c *= s;
    return *this;
}

std::string FreeSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<std::string, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    std::string out;
    for (const auto& [w, c] : sorted) {
        std::string body;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                body += '*';
            body += w[i];
        }
        const Rational mag = abs(c);
        if (body.empty())
            body = gmlie::to_string(mag);
        else if (mag != 1)
            body = gmlie::to_string(mag) + "*" + body;
        if (out.empty())
            out = c < 0 ? "-" + body : body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

FreeSeries free_mul(const FreeSeries& a, const FreeSeries& b)
{
    const int n = std::min(a.order(), b.order());
    FreeSeries::TermMap acc;
    for (const auto& [wa, ca] : a.terms()) {
        if (static_cast<int>(wa.size()) > n)
            continue;
        for (const auto& [wb, cb] : b.terms()) {
            if (static_cast<int>(wa.size() + wb.size()) > n)
                continue;
            acc[wa + wb] += ca * cb;
        }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return {acc, n};
}

FreeSeries free_exp(const FreeSeries& s)
{
    if (s.constant_term() != 0)
        throw UsageError("free_exp: series must have zero constant term");
    FreeSeries sum = FreeSeries::constant(Rational(1), s.order());
    FreeSeries term = sum;
    for (int k = 1; k <= s.order(); ++k) {
        term = make_rational(1, k) * free_mul(term, s);
        if (term.is_zero())
            break;
        sum += term;
    }
    return sum;
}

FreeSeries free_log(const FreeSeries& s)
{
    if (s.constant_term() != 1)
        throw UsageError("free_log: series must have constant term 1");
    const FreeSeries e = s - FreeSeries::constant(Rational(1), s.order());
    FreeSeries sum(s.order());
    FreeSeries power = e;
    for (int k = 1; k <= s.order() && !power.is_zero(); ++k) {
        sum += make_rational(k % 2 ? 1 : -1, k) * power;
        power = free_mul(power, e);
    }
    return sum;
}

FreeSeries bch(int order)
{
    if (order < 1)
        throw UsageError("bch: order must be >= 1");
    const FreeSeries ex = free_exp(FreeSeries::word("x", order));
    const FreeSeries ey = free_exp(FreeSeries::word("y", order));
    return free_log(free_mul(ex, ey));
}

WElement project_to_w(const FreeSeries& s)
{
    const int n = s.order();
    const WElement x = WElement::x(n), y = WElement::y(n);
    std::map<std::string, WElement> memo;
    memo.emplace("", WElement::one(n));
    // memo[w] = memo[w minus last letter] * letter
    auto normal_form = [&](const std::string& w) {
        std::size_t known = w.size();
        while (!memo.contains(w.substr(0, known)))
            --known;
        WElement cur = memo.at(w.substr(0, known));
        for (std::size_t i = known; i < w.size(); ++i) {
            cur = w_mul(cur, w[i] == 'x' ? x : y);
            memo.emplace(w.substr(0, i + 1), cur);
        }
        return cur;
    };
    WElement out(n);
    for (const auto& [w, c] : s.terms())
        out += c * normal_form(w);
    return out;
}

} // namespace gmlie
