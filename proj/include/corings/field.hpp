#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace corings {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact scalar field: the rationals or a prime field F_p.
/// Scalars are plain `Rat` values; a Field object normalises and
/// performs the arithmetic so that F_p elements are always stored as
/// integer representatives in [0, p).
class Field {
public:
    enum class Kind { Rationals, PrimeField };

    Field() : kind_(Kind::Rationals), p_(0) {}
    static Field rationals() { return Field(); }
    static Field prime(long p) {
        if (p < 2) throw std::invalid_argument("prime field needs p >= 2");
        Field f;
        f.kind_ = Kind::PrimeField;
        f.p_ = p;
        return f;
    }

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rationals; }
    long characteristic() const { return is_rational() ? 0 : p_; }

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Rat normalize(const Rat& x) const {
        if (is_rational()) return x;
        Int num = boost::multiprecision::numerator(x);
        Int den = boost::multiprecision::denominator(x);
        Int n = mod(num);
        if (den != 1) n = mod(n * inv_mod(mod(den)));
        return Rat(n);
    }

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }

    Rat inv(const Rat& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        if (is_rational()) return Rat(1) / a;
        return Rat(inv_mod(mod(boost::multiprecision::numerator(a))));
    }
    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    std::string str() const {
        if (is_rational()) return "Q";
        return "Fp:" + std::to_string(p_);
    }

private:
    Int mod(const Int& x) const {
        Int r = x % p_;
        if (r < 0) r += p_;
        return r;
    }
    Int inv_mod(const Int& a) const {
        // extended Euclid on (a, p)
        if (a == 0) throw std::domain_error("division by zero in F_p");
        Int old_r = a, r = p_;
        Int old_s = 1, s = 0;
        while (r != 0) {
            Int q = old_r / r;
            Int tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        return mod(old_s);
    }

    Kind kind_;
    long p_;
};

}  // namespace corings
