#include "polyalg/shift_algebra.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace polyalg {

namespace {
std::atomic<std::size_t> band_width_limit{64};
}

EventuallyConstant::EventuallyConstant(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    trim();
}

void EventuallyConstant::trim() {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

void EventuallyConstant::clear_head(std::size_t count) {
    if (count == 0) return;
    if (prefix_.size() < count) prefix_.resize(count, tail_);
    for (std::size_t i = 0; i < count; ++i) prefix_[i] = Rational(0);
    trim();
}

EventuallyConstant operator+(const EventuallyConstant& a, const EventuallyConstant& b) {
    const std::size_t len = std::max(a.prefix_.size(), b.prefix_.size());
    std::vector<Rational> prefix;
    prefix.reserve(len);
    for (std::size_t i = 0; i < len; ++i) prefix.push_back(a(i) + b(i));
    return EventuallyConstant(std::move(prefix), a.tail_ + b.tail_);
}

EventuallyConstant operator*(const Rational& s, const EventuallyConstant& a) {
    std::vector<Rational> prefix;
    prefix.reserve(a.prefix_.size());
    for (const auto& v : a.prefix_) prefix.push_back(s * v);
    return EventuallyConstant(std::move(prefix), s * a.tail_);
}

BandOperator BandOperator::identity() { return diagonal(0, EventuallyConstant::constant(1)); }

BandOperator BandOperator::diagonal(int offset, EventuallyConstant coeff) {
    BandOperator op;
    op.add_diagonal(offset, coeff);
    op.canonicalize();
    return op;
}

Rational BandOperator::coefficient(int offset, std::size_t i) const {
    auto it = diagonals_.find(offset);
    if (it == diagonals_.end()) return Rational(0);
    return it->second(i);
}

std::size_t BandOperator::band_width() const {
    std::size_t width = 0;
    for (const auto& [d, c] : diagonals_) width = std::max<std::size_t>(width, static_cast<std::size_t>(d < 0 ? -d : d));
    return width;
}

Matrix<Rational> BandOperator::truncation(std::size_t size) const {
    const auto n = static_cast<Eigen::Index>(size);
    Matrix<Rational> m = Matrix<Rational>::Zero(n, n);
    for (const auto& [d, c] : diagonals_) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index row = i + d;
            if (row < 0 || row >= n) continue;
            m(row, i) = c(static_cast<std::size_t>(i));
        }
    }
    return m;
}

void BandOperator::add_diagonal(int offset, const EventuallyConstant& coeff) {
    auto it = diagonals_.find(offset);
    if (it == diagonals_.end()) {
        diagonals_.emplace(offset, coeff);
    } else {
        it->second = it->second + coeff;
    }
}

void BandOperator::canonicalize() {
    for (auto it = diagonals_.begin(); it != diagonals_.end();) {
        if (it->first < 0) it->second.clear_head(static_cast<std::size_t>(-it->first));
        if (it->second.is_zero()) {
            it = diagonals_.erase(it);
        } else {
            ++it;
        }
    }
}

BandOperator operator+(const BandOperator& a, const BandOperator& b) {
    BandOperator r = a;
    for (const auto& [d, c] : b.diagonals_) r.add_diagonal(d, c);
    r.canonicalize();
    return r;
}

BandOperator operator-(const BandOperator& a, const BandOperator& b) { return a + Rational(-1) * b; }

BandOperator operator*(const Rational& s, const BandOperator& a) {
    BandOperator r;
    for (const auto& [d, c] : a.diagonals_) r.add_diagonal(d, s * c);
    r.canonicalize();
    return r;
}

std::size_t max_band_width() noexcept { return band_width_limit.load(std::memory_order_relaxed); }

void set_max_band_width(std::size_t width) { band_width_limit.store(width, std::memory_order_relaxed); }

BandOperator shift_f() { return BandOperator::diagonal(-1, EventuallyConstant::constant(1)); }

BandOperator shift_g() { return BandOperator::diagonal(1, EventuallyConstant::constant(1)); }

BandOperator projector_p() { return BandOperator::diagonal(0, EventuallyConstant({Rational(1)}, Rational(0))); }

// (ab) e_i = a(sum_d b_d(i) e_{i+d}) = sum_{d,d'} b_d(i) a_{d'}(i+d) e_{i+d+d'}.
BandOperator compose(const BandOperator& a, const BandOperator& b) {
    std::map<int, EventuallyConstant> acc;
    for (const auto& [db, cb] : b.diagonals()) {
        for (const auto& [da, ca] : a.diagonals()) {
            const int total = da + db;
            if (static_cast<std::size_t>(total < 0 ? -total : total) > max_band_width()) {
                throw BandOverflow("product band width " + std::to_string(total < 0 ? -total : total) +
                                   " exceeds the limit " + std::to_string(max_band_width()));
            }
            // The product sequence is constant once both factors have reached
            // their tails and i + db >= 0.
            std::size_t head = cb.prefix().size();
            const long shifted = static_cast<long>(ca.prefix().size()) - db;
            if (shifted > 0) head = std::max(head, static_cast<std::size_t>(shifted));
            if (db < 0) head = std::max(head, static_cast<std::size_t>(-db));
            std::vector<Rational> prefix;
            prefix.reserve(head);
            for (std::size_t i = 0; i < head; ++i) {
                const long target = static_cast<long>(i) + db;
                prefix.push_back(target < 0 ? Rational(0) : cb(i) * ca(static_cast<std::size_t>(target)));
            }
            EventuallyConstant term(std::move(prefix), cb.tail() * ca.tail());
            auto it = acc.find(total);
            if (it == acc.end()) {
                acc.emplace(total, std::move(term));
            } else {
                it->second = it->second + term;
            }
        }
    }
    BandOperator r;
    for (const auto& [d, c] : acc) r = r + BandOperator::diagonal(d, c);
    return r;
}

BandOperator add_op(const BandOperator& a, const BandOperator& b) { return a + b; }

BandOperator scale_op(const Rational& s, const BandOperator& a) { return s * a; }

namespace {
void require_truncation_size(std::size_t size, std::size_t width) {
    if (size < width) {
        throw ShapeMismatch("truncation size " + std::to_string(size) + " is below the band width " +
                            std::to_string(width));
    }
}
}  // namespace

bool is_zero_on_truncation(const BandOperator& a, std::size_t size) {
    require_truncation_size(size, a.band_width());
    return is_zero(a.truncation(size));
}

bool equal_on_truncation(const BandOperator& a, const BandOperator& b, std::size_t size) {
    require_truncation_size(size, std::max(a.band_width(), b.band_width()));
    return a.truncation(size) == b.truncation(size);
}

}  // namespace polyalg
