#ifndef SCPOLY_UPOLY_HPP
#define SCPOLY_UPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include <scpoly/errors.hpp>
#include <scpoly/rational.hpp>

namespace scpoly {

// The two polynomial variables of the tower Q[s], Q[t], Q[s,t], Q(s).
enum class Var : char { s = 's', t = 't' };

constexpr char var_symbol(Var v) { return static_cast<char>(v); }

// Dense univariate polynomial over Q. Coefficients are stored by ascending
// degree with the trailing coefficient nonzero; the empty vector is zero.
// The variable is part of the type, so s- and t-polynomials cannot be mixed.
template <Var V>
class UPoly {
public:
    static constexpr Var variable = V;

    UPoly() = default;
    explicit UPoly(const Rat& constant) {
        if (!constant.is_zero())
            c_.push_back(constant);
    }
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

    // scale * x^power
    static UPoly monomial(int power, const Rat& scale = Rat(1)) {
        if (scale.is_zero())
            return UPoly();
        std::vector<Rat> c(static_cast<std::size_t>(power) + 1);
        c.back() = scale;
        return UPoly(std::move(c));
    }
    static UPoly var(const Rat& scale = Rat(1)) { return monomial(1, scale); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rat& coeff(int k) const {
        static const Rat zero;
        if (k < 0 || k > degree())
            return zero;
        return c_[static_cast<std::size_t>(k)];
    }
    Rat lc() const { return is_zero() ? Rat(0) : c_.back(); }
    Rat constant_term() const { return coeff(0); }

    const std::vector<Rat>& coeffs() const { return c_; }

    UPoly operator-() const {
        UPoly r(*this);
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        strip();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) { return *this += -o; }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UPoly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend UPoly operator*(const UPoly& a, const Rat& k) {
        UPoly r(a);
        for (auto& c : r.c_)
            c *= k;
        r.strip();
        return r;
    }
    friend UPoly operator*(const Rat& k, const UPoly& a) { return a * k; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    Rat operator()(const Rat& x) const {
        Rat acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    UPoly monic() const {
        if (is_zero())
            return *this;
        return *this * lc().inverse();
    }

    UPoly pow(int k) const {
        UPoly r{Rat(1)};
        for (int i = 0; i < k; ++i)
            r *= *this;
        return r;
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

using SPoly = UPoly<Var::s>;
using TPoly = UPoly<Var::t>;

// Euclidean division: a = b*q + r with deg r < deg b.
template <Var V>
std::pair<UPoly<V>, UPoly<V>> upoly_divrem(const UPoly<V>& a, const UPoly<V>& b) {
    if (b.is_zero())
        throw DivisionByZeroPoly("polynomial division by zero");
    UPoly<V> q;
    UPoly<V> r = a;
    const Rat lb = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int k = r.degree() - b.degree();
        const Rat c = r.lc() * lb;
        const auto term = UPoly<V>::monomial(k, c);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

// Monic greatest common divisor by the Euclidean algorithm.
template <Var V>
UPoly<V> upoly_gcd(const UPoly<V>& a, const UPoly<V>& b) {
    if (a.is_zero() && b.is_zero())
        throw BothZero("gcd of two zero polynomials");
    UPoly<V> x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = upoly_divrem(x, y);
        (void)q;
        x = std::move(y);
        y = std::move(r).monic(); // keep coefficients small
    }
    return x.monic();
}

// Unique interpolating polynomial of degree <= nodes.size()-1 (Newton form).
template <Var V>
UPoly<V> upoly_interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw InsufficientNodes("interpolation needs one value per node");
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j])
                throw DuplicateNode("repeated interpolation node " + nodes[i].str());

    // divided differences
    std::vector<Rat> dd = values;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

    UPoly<V> result{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        UPoly<V> lin({-nodes[i], Rat(1)});
        result = result * lin + UPoly<V>(dd[i]);
    }
    return result;
}

template <Var To, Var From>
UPoly<To> retag(const UPoly<From>& p) {
    return UPoly<To>(p.coeffs());
}

namespace detail {
// Divisors of |n| in ascending order (trial division); n != 0.
std::vector<Int> positive_divisors(const Int& n);
} // namespace detail

// All rational roots of p with exact multiplicities, certified by repeated
// exact division. splits is true iff the multiplicities sum to deg p.
template <Var V>
std::pair<std::map<Rat, int>, bool> upoly_rational_roots(const UPoly<V>& p) {
    if (p.is_zero())
        throw ZeroPolynomial("roots of the zero polynomial");

    std::map<Rat, int> roots;
    if (p.degree() == 0)
        return {roots, true};

    // primitive integer form
    Int denom_lcm = 1;
    for (const Rat& c : p.coeffs())
        denom_lcm = lcm(denom_lcm, c.denominator());
    std::vector<Int> ic;
    ic.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs())
        ic.push_back(c.numerator() * (denom_lcm / c.denominator()));

    std::size_t low = 0;
    while (ic[low] == 0)
        ++low;

    std::vector<Rat> candidates;
    if (low > 0)
        candidates.push_back(Rat(0));
    const Int trailing = abs(ic[low]);
    const Int leading = abs(ic.back());
    for (const Int& num : detail::positive_divisors(trailing))
        for (const Int& den : detail::positive_divisors(leading)) {
            if (gcd(num, den) != 1)
                continue;
            candidates.push_back(Rat(num, den));
            candidates.push_back(Rat(-num, den));
        }

    UPoly<V> rem = p;
    for (const Rat& r : candidates) {
        int mult = 0;
        const UPoly<V> lin({-r, Rat(1)});
        while (!rem.is_constant()) {
            auto [q, tail] = upoly_divrem(rem, lin);
            if (!tail.is_zero())
                break;
            rem = std::move(q);
            ++mult;
        }
        if (mult > 0)
            roots[r] = mult;
    }

    int total = 0;
    for (const auto& [r, m] : roots)
        total += m;
    return {roots, total == p.degree()};
}

} // namespace scpoly

#endif // SCPOLY_UPOLY_HPP
