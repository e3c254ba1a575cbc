#ifndef SCPOLY_BIPOLY_HPP
#define SCPOLY_BIPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include <scpoly/ratfun.hpp>
#include <scpoly/upoly.hpp>

namespace scpoly {

// Dense bivariate polynomial in Q[s,t], stored as t-power coefficients that
// are dense s-polynomials. Degrees stay small here (deg_t <= n, deg_s <= 2n),
// so the dense tower is the simple and fast representation.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(const Rat& constant) {
        SPoly c(constant);
        if (!c.is_zero())
            c_.push_back(std::move(c));
    }
    explicit BiPoly(SPoly s_part) {
        if (!s_part.is_zero())
            c_.push_back(std::move(s_part));
    }
    explicit BiPoly(std::vector<SPoly> tcoeffs) : c_(std::move(tcoeffs)) { strip(); }

    static BiPoly t(int power = 1, const Rat& scale = Rat(1)) {
        if (scale.is_zero())
            return BiPoly();
        std::vector<SPoly> c(static_cast<std::size_t>(power) + 1);
        c.back() = SPoly(scale);
        return BiPoly(std::move(c));
    }
    static BiPoly s(int power = 1, const Rat& scale = Rat(1)) {
        return BiPoly(SPoly::monomial(power, scale));
    }

    int deg_t() const { return static_cast<int>(c_.size()) - 1; }
    int deg_s() const {
        int d = -1;
        for (const auto& c : c_)
            d = std::max(d, c.degree());
        return d;
    }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return is_zero() || (c_.size() == 1 && c_[0].is_constant()); }

    const SPoly& tcoeff(int k) const {
        static const SPoly zero;
        if (k < 0 || k > deg_t())
            return zero;
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<SPoly>& tcoeffs() const { return c_; }

    BiPoly operator-() const {
        BiPoly r(*this);
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        strip();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) { return *this += -o; }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero())
            return BiPoly();
        std::vector<SPoly> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return BiPoly(std::move(c));
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend BiPoly operator*(const BiPoly& a, const Rat& k) {
        BiPoly r(a);
        for (auto& c : r.c_)
            c = c * k;
        r.strip();
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    Rat eval(const Rat& sv, const Rat& tv) const {
        Rat acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * tv + c_[i](sv);
        return acc;
    }

    // Partial evaluation t = tv, leaving a polynomial in s.
    SPoly eval_t(const Rat& tv) const {
        SPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * tv + c_[i];
        return acc;
    }

    // Partial evaluation s = sv, leaving a polynomial in t.
    TPoly eval_s(const Rat& sv) const {
        std::vector<Rat> c;
        c.reserve(c_.size());
        for (const auto& ck : c_)
            c.push_back(ck(sv));
        return TPoly(std::move(c));
    }

    // Substitution t -> q(s).
    SPoly subst_t(const SPoly& q) const {
        SPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * q + c_[i];
        return acc;
    }

    BiPoly pow(int k) const {
        BiPoly r(Rat(1));
        for (int i = 0; i < k; ++i)
            r *= *this;
        return r;
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<SPoly> c_;
};

// Horner substitution of a bivariate value into a univariate polynomial.
template <Var V>
BiPoly substitute(const UPoly<V>& p, const BiPoly& arg) {
    BiPoly acc;
    for (std::size_t i = static_cast<std::size_t>(p.degree()) + 1; i-- > 0;)
        acc = acc * arg + BiPoly(p.coeff(static_cast<int>(i)));
    return acc;
}

// Exact division in Q[s,t]: long division in t over Q(s), accepted only when
// the remainder vanishes and the quotient has polynomial coefficients.
std::optional<BiPoly> bipoly_try_div(const BiPoly& a, const BiPoly& b);

BiPoly bipoly_div_exact(const BiPoly& a, const BiPoly& b);

// Unique interpolant of degree <= (deg_s, deg_t) through the product grid
// values[i][j] = p(s_nodes[i], t_nodes[j]).
BiPoly bipoly_interpolate2d(const std::vector<Rat>& s_nodes,
                            const std::vector<Rat>& t_nodes,
                            const std::vector<std::vector<Rat>>& values,
                            int deg_s, int deg_t);

// 0, 1, 2, ... as interpolation nodes: deterministic, exact and small.
std::vector<Rat> integer_nodes(int count);

} // namespace scpoly

#endif // SCPOLY_BIPOLY_HPP
