#ifndef POLYALG_SHIFT_ALGEBRA_HPP
#define POLYALG_SHIFT_ALGEBRA_HPP

// Band-limited linear maps on the space with countable basis e_0, e_1, ...
// This subalgebra of all linear maps contains the down-shift f, the up-shift
// g and the projector p onto e_0, which satisfy fg = 1, fp = 0 and pg = 0:
// f is a left zero divisor that is not a right zero divisor, and g is a right
// zero divisor that is not a left one.

#include "polyalg/exact_linalg.hpp"
#include "polyalg/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace polyalg {

/// Rational sequence c(0), c(1), ... that is constant from some index on.
class EventuallyConstant {
   public:
    EventuallyConstant() = default;
    EventuallyConstant(std::vector<Rational> prefix, Rational tail);
    static EventuallyConstant constant(Rational value) { return EventuallyConstant({}, std::move(value)); }

    Rational operator()(std::size_t i) const { return i < prefix_.size() ? prefix_[i] : tail_; }
    const std::vector<Rational>& prefix() const noexcept { return prefix_; }
    const Rational& tail() const noexcept { return tail_; }
    bool is_zero() const noexcept { return prefix_.empty() && tail_.is_zero(); }

    /// Forces c(i) = 0 for i < count.
    void clear_head(std::size_t count);

    friend bool operator==(const EventuallyConstant&, const EventuallyConstant&) = default;
    friend EventuallyConstant operator+(const EventuallyConstant& a, const EventuallyConstant& b);
    friend EventuallyConstant operator*(const Rational& s, const EventuallyConstant& a);

   private:
    void trim();

    std::vector<Rational> prefix_;
    Rational tail_;
};

/// T e_i = sum_d c_d(i) e_{i+d}, with e_j = 0 for j < 0.
///
/// Canonical form: no zero diagonals, and c_d(i) = 0 whenever i + d < 0, so
/// structural equality is operator equality.
class BandOperator {
   public:
    BandOperator() = default;
    static BandOperator identity();
    static BandOperator diagonal(int offset, EventuallyConstant coeff);

    const std::map<int, EventuallyConstant>& diagonals() const noexcept { return diagonals_; }
    Rational coefficient(int offset, std::size_t i) const;
    /// max |d| over nonzero diagonals; 0 for the zero operator.
    std::size_t band_width() const;
    bool is_zero() const noexcept { return diagonals_.empty(); }

    /// Matrix of the operator restricted to span(e_0..e_{N-1}) and projected
    /// back onto it; column i is the image of e_i.
    Matrix<Rational> truncation(std::size_t size) const;

    friend bool operator==(const BandOperator&, const BandOperator&) = default;
    friend BandOperator operator+(const BandOperator& a, const BandOperator& b);
    friend BandOperator operator-(const BandOperator& a, const BandOperator& b);
    friend BandOperator operator*(const Rational& s, const BandOperator& a);

   private:
    void add_diagonal(int offset, const EventuallyConstant& coeff);
    void canonicalize();

    std::map<int, EventuallyConstant> diagonals_;
};

/// Limit on band width for products; compose() throws BandOverflow past it.
std::size_t max_band_width() noexcept;
void set_max_band_width(std::size_t width);

/// f e_0 = 0, f e_{i+1} = e_i.
BandOperator shift_f();
/// g e_i = e_{i+1}.
BandOperator shift_g();
/// p e_0 = e_0, p e_i = 0 for i >= 1.
BandOperator projector_p();

/// The map x -> a(b(x)).
BandOperator compose(const BandOperator& a, const BandOperator& b);
BandOperator add_op(const BandOperator& a, const BandOperator& b);
BandOperator scale_op(const Rational& s, const BandOperator& a);

/// Both require size >= band width of the operands.
bool is_zero_on_truncation(const BandOperator& a, std::size_t size);
bool equal_on_truncation(const BandOperator& a, const BandOperator& b, std::size_t size);

}  // namespace polyalg

#endif  // POLYALG_SHIFT_ALGEBRA_HPP
