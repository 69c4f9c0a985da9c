#pragma once

#include "l2b/error.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace l2b {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0)
            throw Error(ErrorKind::bad_rational, "zero denominator");
        v_ = mpq_class(mpz_class(n), mpz_class(d));
        v_.canonicalize();
    }

    /// Accepts "p", "-p", "p/q" with decimal digits only.
    static Rational parse(std::string_view s) {
        auto digits = [](std::string_view t) {
            if (t.empty())
                return false;
            for (char c : t)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        std::string_view num = s, den;
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
            if (!digits(den))
                throw Error(ErrorKind::bad_rational, "malformed rational \"" + std::string(s) + "\"");
        }
        std::string_view mag = num;
        if (!mag.empty() && (mag.front() == '-' || mag.front() == '+'))
            mag.remove_prefix(1);
        if (!digits(mag))
            throw Error(ErrorKind::bad_rational, "malformed rational \"" + std::string(s) + "\"");
        Rational r;
        mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
        mpz_class d(den.empty() ? std::string("1") : std::string(den), 10);
        if (d == 0)
            throw Error(ErrorKind::bad_rational, "zero denominator in \"" + std::string(s) + "\"");
        r.v_ = mpq_class(n, d);
        r.v_.canonicalize();
        return r;
    }

    std::string str() const {
        if (v_.get_den() == 1)
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational &operator+=(const Rational &o) {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero())
            throw Error(ErrorKind::bad_rational, "division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  private:
    mpq_class v_;
};

} // namespace l2b
