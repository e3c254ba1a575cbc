#ifndef SCPOLY_RATFUN_HPP
#define SCPOLY_RATFUN_HPP

#include <optional>
#include <utility>

#include <scpoly/upoly.hpp>

namespace scpoly {

// Element of Q(s): reduced fraction of s-polynomials with monic denominator.
// Every constructor and operator re-establishes the normal form, so Gaussian
// elimination over Q(s) never accumulates unreduced fractions.
class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFun(const SPoly& p) : num_(p), den_(Rat(1)) {}
    RatFun(SPoly num, SPoly den) { normalize(std::move(num), std::move(den)); }

    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    Rat constant_value() const { return num_.constant_term(); }

    RatFun operator-() const { return RatFun(unchecked{}, -num_, den_); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero())
            throw ZeroDenominator("division of rational function by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const {
        if (is_zero())
            throw ZeroDenominator("inverse of the zero rational function");
        return RatFun(den_, num_);
    }

    // Evaluation at a point where the denominator does not vanish.
    std::optional<Rat> eval(const Rat& x) const {
        const Rat d = den_(x);
        if (d.is_zero())
            return std::nullopt;
        return num_(x) / d;
    }

private:
    struct unchecked {};
    RatFun(unchecked, SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize(SPoly num, SPoly den) {
        if (den.is_zero())
            throw ZeroDenominator("rational function with zero denominator");
        if (num.is_zero()) {
            num_ = SPoly();
            den_ = SPoly(Rat(1));
            return;
        }
        const SPoly g = upoly_gcd(num, den);
        if (g.degree() > 0) {
            num = upoly_divrem(num, g).first;
            den = upoly_divrem(den, g).first;
        }
        const Rat scale = den.lc().inverse();
        num_ = num * scale;
        den_ = den * scale;
    }

    SPoly num_;
    SPoly den_;
};

inline RatFun ratfun_normalize(const SPoly& num, const SPoly& den) {
    return RatFun(num, den);
}

} // namespace scpoly

#endif // SCPOLY_RATFUN_HPP
