#ifndef POLYALG_RATIONAL_HPP
#define POLYALG_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace polyalg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline and combined with 128-bit intermediates; anything larger
/// spills to a GMP rational. The representation is canonical: a value is
/// inline exactly when it fits, so equality never needs to consult GMP for
/// mixed operands.
class Rational {
   public:
    Rational() noexcept = default;
    Rational(int n) noexcept : num_(n) {}
    Rational(long n) : Rational(static_cast<long long>(n)) {}
    Rational(long long n) {
        if (n == INT64_MIN) {
            assign_big(mpq_class(mpz_class(static_cast<long>(n))));
        } else {
            num_ = n;
        }
    }
    Rational(long long numerator, long long denominator);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "p" or "p/q" with an optional leading sign. Throws
    /// std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    int sign() const noexcept;

    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) noexcept;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

   private:
    bool inline_int() const noexcept { return !big_ && den_ == 1; }
    static Rational add_slow(const Rational& a, const Rational& b);
    static Rational mul_slow(const Rational& a, const Rational& b);
    static bool equal_slow(const Rational& a, const Rational& b);

    void assign_wide(__int128 num, __int128 den);
    void assign_big(mpq_class&& q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

inline Rational operator+(const Rational& a, const Rational& b) {
    if (a.inline_int() && b.inline_int()) {
        std::int64_t r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != INT64_MIN) return Rational(r);
    }
    return Rational::add_slow(a, b);
}

inline Rational operator-(const Rational& a, const Rational& b) {
    if (a.inline_int() && b.inline_int()) {
        std::int64_t r;
        if (!__builtin_sub_overflow(a.num_, b.num_, &r) && r != INT64_MIN) return Rational(r);
    }
    return Rational::add_slow(a, -b);
}

inline Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.inline_int() && b.inline_int()) {
        std::int64_t r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != INT64_MIN) return Rational(r);
    }
    return Rational::mul_slow(a, b);
}

inline Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
inline Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
inline Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
inline Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

inline bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;
    return Rational::equal_slow(a, b);
}

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

/// Multiplies a row of rationals by the least common multiple of its
/// denominators, so every entry becomes an integer. Returns the factor used.
template <typename Derived>
Rational clear_denominators(Eigen::DenseBase<Derived>& row) {
    mpz_class lcm = 1;
    for (Eigen::Index i = 0; i < row.size(); ++i) {
        if (!row.derived().coeff(i).is_integer()) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row.derived().coeff(i).denominator().get_mpz_t());
        }
    }
    Rational factor(lcm);
    if (!factor.is_one()) {
        for (Eigen::Index i = 0; i < row.size(); ++i) row.derived().coeffRef(i) *= factor;
    }
    return factor;
}

/// Scales a nonzero vector to a primitive integer vector whose first nonzero
/// entry is positive.
template <typename Derived>
void normalize_direction(Eigen::DenseBase<Derived>& v) {
    clear_denominators(v);
    mpz_class content = 0;
    int lead_sign = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const Rational& c = v.derived().coeff(i);
        if (c.is_zero()) continue;
        if (lead_sign == 0) lead_sign = c.sign();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.numerator().get_mpz_t());
    }
    if (lead_sign == 0) return;
    Rational divisor(mpz_class(content * lead_sign));
    if (divisor.is_one()) return;
    for (Eigen::Index i = 0; i < v.size(); ++i) v.derived().coeffRef(i) /= divisor;
}

}  // namespace polyalg

namespace Eigen {

template <>
struct NumTraits<polyalg::Rational> : GenericNumTraits<polyalg::Rational> {
    typedef polyalg::Rational Real;
    typedef polyalg::Rational NonInteger;
    typedef polyalg::Rational Literal;
    typedef polyalg::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // POLYALG_RATIONAL_HPP
