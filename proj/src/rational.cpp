#include "polyalg/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace polyalg {

namespace {

using u128 = unsigned __int128;

u128 gcd_wide(u128 a, u128 b) {
    while (b != 0) {
        if (a <= UINT64_MAX && b <= UINT64_MAX) {
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 magnitude(__int128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

bool fits_inline(__int128 v) { return v > INT64_MIN && v <= INT64_MAX; }

mpz_class wide_to_mpz(__int128 v) {
    u128 m = magnitude(v);
    mpz_class hi(static_cast<unsigned long>(m >> 64));
    mpz_class lo(static_cast<unsigned long>(m & UINT64_MAX));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    assign_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const mpz_class& z) { assign_big(mpq_class(z)); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::assign_wide(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd_wide(magnitude(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (num == 0) den = 1;
    if (fits_inline(num) && fits_inline(den)) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(wide_to_mpz(num), wide_to_mpz(den));
    assign_big(std::move(q));
}

void Rational::assign_big(mpq_class&& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
        return p;
    };
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t num_end = digits(pos);
    if (num_end == pos) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::size_t num_begin = text[0] == '+' ? 1 : 0;
    mpz_class num(std::string(text.substr(num_begin, num_end - num_begin)), 10);
    mpz_class den = 1;
    if (num_end < text.size()) {
        if (text[num_end] != '/') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != text.size()) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        den = mpz_class(std::string(text.substr(num_end + 1)), 10);
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
    }
    return Rational(mpq_class(num, den));
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(mpq_class(-*big_));
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
    Rational r;
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        r.assign_wide(n, d);
    } else {
        r.assign_big(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    return r;
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
    Rational r;
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        r.assign_wide(n, d);
    } else {
        r.assign_big(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    return r;
}

bool Rational::equal_slow(const Rational& a, const Rational& b) { return *a.big_ == *b.big_; }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    Rational r;
    if (!a.big_ && !b.big_) {
        r.assign_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    } else {
        r.assign_big(mpq_class(a.to_mpq() / b.to_mpq()));
    }
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace polyalg
