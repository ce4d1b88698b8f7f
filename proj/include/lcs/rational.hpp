#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace lcs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den)
    {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Accepts "p/q" or an integer literal; no decimal notation.
    static Rational parse(const std::string& text)
    {
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw ParseError("not a rational: '" + text + "'");
        if (v.get_den() == 0)
            throw ParseError("zero denominator: '" + text + "'");
        v.canonicalize();
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    std::string str() const { return v_.get_str(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return wrap(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const
    {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return wrap(1 / v_);
    }

    Rational abs() const { return wrap(::abs(v_)); }

private:
    static Rational wrap(mpq_class v)
    {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace lcs
