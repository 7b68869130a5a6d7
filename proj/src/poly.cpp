#include "gmlie/poly.hpp"

#include "gmlie/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace gmlie {

// ---------------------------------------------------------------- VarSpec

VarSpec::VarSpec(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights))
{
    if (weights_.empty())
        weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
        throw UsageError("VarSpec: one weight per variable required");
    if (names_.size() > kMaxVars)
        throw UsageError("VarSpec: at most 8 variables supported");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty() || !seen.insert(names_[i]).second)
            throw UsageError("VarSpec: variable names must be distinct and nonempty");
        if (weights_[i] < 1)
            throw UsageError("VarSpec: weights must be >= 1");
    }
}

std::optional<std::size_t> VarSpec::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

VarSpecPtr make_varspec(std::vector<std::string> names, std::vector<int> weights)
{
    return std::make_shared<const VarSpec>(std::move(names), std::move(weights));
}

const VarSpecPtr& central_vars()
{
    static const VarSpecPtr tuv = make_varspec({"t", "u", "v"}, {2, 2, 2});
    return tuv;
}

bool same_vars(const VarSpecPtr& a, const VarSpecPtr& b)
{
    return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const VarSpecPtr& a, const VarSpecPtr& b)
{
    if (!same_vars(a, b))
        throw UsageError("operands use different variable sets");
}

} // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(std::span<const int> exps)
{
    if (exps.size() > kMaxVars)
        throw UsageError("too many exponents");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i)
        m = m.with_exponent(i, exps[i]);
    return m;
}

Monomial Monomial::with_exponent(std::size_t i, int e) const
{
    if (e < 0 || e > kMaxExponent)
        throw UsageError("exponent out of range");
    Monomial m = *this;
    m.bits_ &= ~(std::uint64_t{0xff} << shift(i));
    m.bits_ |= std::uint64_t(e) << shift(i);
    return m;
}

std::vector<int> Monomial::exponents(std::size_t nvars) const
{
    std::vector<int> out(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        out[i] = exponent(i);
    return out;
}

Monomial Monomial::operator*(Monomial other) const
{
    constexpr std::uint64_t high = 0x8080808080808080ull;
    const std::uint64_t a = bits_, b = other.bits_;
    // bytewise add without inter-byte carries
    const std::uint64_t sum = ((a & ~high) + (b & ~high)) ^ ((a ^ b) & high);
    const std::uint64_t carry = ((a & b) | ((a | b) & ~sum)) & high;
    if (carry)
        throw UsageError("exponent overflow in monomial product");
    Monomial m;
    m.bits_ = sum;
    return m;
}

bool Monomial::divides(Monomial other) const
{
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exponent(i) > other.exponent(i))
            return false;
    return true;
}

Monomial Monomial::operator/(Monomial divisor) const
{
    Monomial m;
    m.bits_ = bits_ - divisor.bits_;
    return m;
}

int Monomial::degree(const VarSpec& vars) const
{
    int d = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
        d += vars.weight(i) * exponent(i);
    return d;
}

int Monomial::total_degree() const
{
    int d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        d += exponent(i);
    return d;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(VarSpecPtr vars) : vars_(std::move(vars))
{
    if (!vars_)
        throw UsageError("Poly requires a VarSpec");
}

Poly::Poly(VarSpecPtr vars, const Rational& constant) : Poly(std::move(vars))
{
    add_term(Monomial{}, constant);
}

Poly Poly::variable(VarSpecPtr vars, std::string_view name)
{
    auto idx = vars->index_of(name);
    if (!idx)
        throw UsageError("unknown variable '" + std::string(name) + "'");
    return variable(std::move(vars), *idx);
}

Poly Poly::variable(VarSpecPtr vars, std::size_t index)
{
    if (index >= vars->size())
        throw UsageError("variable index out of range");
    return term(std::move(vars), Monomial{}.with_exponent(index, 1), Rational(1));
}

Poly Poly::term(VarSpecPtr vars, Monomial m, const Rational& c)
{
    Poly p(std::move(vars));
    p.add_term(m, c);
    return p;
}

Rational Poly::coefficient(Monomial m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Poly::max_degree() const
{
    std::optional<int> best;
    for (const auto& [m, c] : terms_) {
        int d = degree_of(m);
        if (!best || d > *best)
            best = d;
    }
    return best;
}

std::optional<int> Poly::min_degree() const
{
    std::optional<int> best;
    for (const auto& [m, c] : terms_) {
        int d = degree_of(m);
        if (!best || d < *best)
            best = d;
    }
    return best;
}

bool Poly::is_homogeneous() const
{
    auto lo = min_degree();
    return !lo || *lo == *max_degree();
}

Poly Poly::homogeneous_part(int degree) const
{
    Poly out(vars_);
    for (const auto& [m, c] : terms_)
        if (degree_of(m) == degree)
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

Poly Poly::truncated(int bound) const
{
    Poly out(vars_);
    for (const auto& [m, c] : terms_)
        if (degree_of(m) <= bound)
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

Poly Poly::reduced_mod_augmentation_power(int k) const
{
    Poly out(vars_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() < k)
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

void Poly::add_term(Monomial m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& rhs)
{
    require_same(vars_, rhs.vars_);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    require_same(vars_, rhs.vars_);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs)
{
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    return mul_truncated(a, b, std::numeric_limits<int>::max() / 2);
}

bool operator==(const Poly& a, const Poly& b)
{
    return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Poly mul_truncated(const Poly& a, const Poly& b, int bound)
{
    require_same(a.vars_, b.vars_);
    Poly out(a.vars_);
    if (a.is_zero() || b.is_zero())
        return out;

    struct Entry {
        int degree;
        Monomial mono;
        const Rational* coeff;
    };
    std::vector<Entry> rhs;
    rhs.reserve(b.terms_.size());
    for (const auto& [m, c] : b.terms_)
        rhs.push_back({b.degree_of(m), m, &c});
    std::sort(rhs.begin(), rhs.end(), [](const Entry& x, const Entry& y) { return x.degree < y.degree; });

    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        const int da = a.degree_of(ma);
        for (const Entry& e : rhs) {
            if (da + e.degree > bound)
                break;
            prod = ca * *e.coeff;
            auto [it, inserted] = out.terms_.try_emplace(ma * e.mono, prod);
            if (!inserted)
                it->second += prod;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly Poly::pow(unsigned n) const
{
    Poly result(vars_, Rational(1));
    Poly base = *this;
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

Poly Poly::substitute(std::span<const Poly> values) const
{
    if (values.size() != vars_->size())
        throw UsageError("substitute: one value per variable required");
    if (values.empty())
        throw UsageError("substitute: no target variable set");
    const VarSpecPtr& target = values.front().vars();
    for (const Poly& v : values)
        require_same(target, v.vars());

    // powers[i][e] = values[i]^e, filled lazily
    std::vector<std::vector<Poly>> powers(values.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.emplace_back(target, Rational(1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * values[i]);
        return cache[e];
    };

    Poly out(target);
    for (const auto& [m, c] : terms_) {
        Poly term(target, c);
        for (std::size_t i = 0; i < vars_->size(); ++i)
            if (int e = m.exponent(i))
                term = term * power(i, e);
        out += term;
    }
    return out;
}

std::vector<std::pair<Monomial, Rational>> Poly::sorted_terms() const
{
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
        int dx = degree_of(x.first), dy = degree_of(y.first);
        if (dx != dy)
            return dx < dy;
        return x.first > y.first;
    });
    return out;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        std::string mono;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            int e = m.exponent(i);
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += vars_->name(i);
            if (e > 1)
                mono += '^' + std::to_string(e);
        }
        const bool negative = c < 0;
        Rational mag = abs(c);
        std::string body;
        if (mono.empty())
            body = gmlie::to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = gmlie::to_string(mag) + "*" + mono;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::pair<Monomial, Rational> leading_term(const Poly& p)
{
    if (p.is_zero())
        throw UsageError("leading term of zero polynomial");
    auto best = p.terms().begin();
    int best_deg = p.degree_of(best->first);
    for (auto it = std::next(best); it != p.terms().end(); ++it) {
        int d = p.degree_of(it->first);
        if (d > best_deg || (d == best_deg && it->first > best->first)) {
            best = it;
            best_deg = d;
        }
    }
    return *best;
}

std::optional<Poly> exact_divide(const Poly& num, const Poly& den)
{
    require_same(num.vars(), den.vars());
    if (den.is_zero())
        throw UsageError("division by zero polynomial");
    const auto [lead_m, lead_c] = leading_term(den);
    Poly quotient(num.vars());
    Poly rem = num;
    while (!rem.is_zero()) {
        auto [m, c] = leading_term(rem);
        if (!lead_m.divides(m))
            return std::nullopt;
        Poly step = Poly::term(num.vars(), m / lead_m, c / lead_c);
        quotient += step;
        rem -= step * den;
    }
    return quotient;
}

// ---------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(Poly p, int order) : poly_(std::move(p)), order_(order)
{
    if (auto hi = poly_.max_degree(); hi && *hi > order_)
        poly_ = poly_.truncated(order_);
}

int TruncSeries::valuation() const
{
    auto lo = poly_.min_degree();
    return lo ? *lo : order_ + 1;
}

TruncSeries TruncSeries::truncated(int bound) const
{
    return {poly_, std::min(order_, bound)};
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs)
{
    require_same(vars(), rhs.vars());
    poly_ += rhs.poly_;
    if (rhs.order_ < order_) {
        order_ = rhs.order_;
        poly_ = poly_.truncated(order_);
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs)
{
    require_same(vars(), rhs.vars());
    poly_ -= rhs.poly_;
    if (rhs.order_ < order_) {
        order_ = rhs.order_;
        poly_ = poly_.truncated(order_);
    }
    return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs)
{
    order_ = std::min(order_, rhs.order_);
    poly_ = mul_truncated(poly_, rhs.poly_, order_);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s)
{
    poly_ *= s;
    return *this;
}

TruncSeries TruncSeries::plus(const Poly& p) const
{
    return {poly_ + p, order_};
}

TruncSeries TruncSeries::inverse() const
{
    const Rational c0 = constant_term();
    if (c0 == 0)
        throw UsageError("series inverse needs a nonzero constant term");
    // 1/(c0 (1 + e)) = (1/c0) * sum (-e)^k
    Poly neg_e = -(poly_ * Rational(1 / c0) - Poly(vars(), Rational(1)));
    Poly sum(vars(), Rational(1));
    Poly power(vars(), Rational(1));
    while (true) {
        power = mul_truncated(power, neg_e, order_);
        if (power.is_zero())
            break;
        sum += power;
    }
    return {sum * Rational(1 / c0), order_};
}

TruncSeries mul_tracked(const TruncSeries& a, const TruncSeries& b)
{
    const int prec = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    return {mul_truncated(a.poly(), b.poly(), prec), prec};
}

TruncSeries mul_tracked(const TruncSeries& a, const Poly& p)
{
    auto lo = p.min_degree();
    const int prec = a.order() + (lo ? *lo : 0);
    return {mul_truncated(a.poly(), p, prec), prec};
}

std::optional<TruncSeries> exact_divide(const TruncSeries& num, const Poly& den)
{
    require_same(num.vars(), den.vars());
    auto low = den.min_degree();
    if (!low)
        throw UsageError("division by zero polynomial");
    const Poly den_low = den.homogeneous_part(*low);
    const int out_order = num.order() - *low;

    Poly quotient(num.vars());
    Poly rem = num.poly();
    while (!rem.is_zero()) {
        const int d = *rem.min_degree();
        if (d - *low > out_order)
            break;
        auto step = exact_divide(rem.homogeneous_part(d), den_low);
        if (!step)
            return std::nullopt;
        quotient += *step;
        rem -= mul_truncated(*step, den, num.order());
    }
    return TruncSeries(quotient, out_order);
}

TruncSeries divide(const TruncSeries& num, const TruncSeries& den)
{
    return num * den.inverse();
}

} // namespace gmlie
