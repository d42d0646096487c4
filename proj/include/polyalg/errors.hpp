#ifndef POLYALG_ERRORS_HPP
#define POLYALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyalg {

/// Base of every domain error raised by the library. `kind()` is a stable
/// machine-readable tag (used verbatim in the CLI's JSON error output).
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& message) : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

#define POLYALG_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                            \
       public:                                                             \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    };

POLYALG_DEFINE_ERROR(ShapeMismatch)
POLYALG_DEFINE_ERROR(AlgebraMismatch)
POLYALG_DEFINE_ERROR(ZeroInput)
POLYALG_DEFINE_ERROR(ArityMismatch)
POLYALG_DEFINE_ERROR(ArityCapExceeded)
POLYALG_DEFINE_ERROR(ArityLadderViolation)
POLYALG_DEFINE_ERROR(SingularTensor)
POLYALG_DEFINE_ERROR(NotRepresentable)
POLYALG_DEFINE_ERROR(NoSolution)
POLYALG_DEFINE_ERROR(ManySolutions)
POLYALG_DEFINE_ERROR(IndexOutOfRange)
POLYALG_DEFINE_ERROR(BandOverflow)
POLYALG_DEFINE_ERROR(FormatError)
POLYALG_DEFINE_ERROR(UnboundIdentifier)
POLYALG_DEFINE_ERROR(NegativeExponent)

#undef POLYALG_DEFINE_ERROR

/// Structure constants fail (e_i e_j) e_k = e_i (e_j e_k) in coordinate m.
class AssociativityViolation : public Error {
   public:
    AssociativityViolation(std::size_t i, std::size_t j, std::size_t k, std::size_t m, std::string lhs,
                           std::string rhs)
        : Error("AssociativityViolation", "associativity fails at (i,j,k,m) = (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                              std::to_string(m + 1) + "): " + lhs + " != " + rhs),
          i(i), j(j), k(k), m(m), lhs(std::move(lhs)), rhs(std::move(rhs)) {}
    std::size_t i, j, k, m;  // 0-based
    std::string lhs, rhs;
};

/// The declared unit does not act as identity: (1 e_j)^k != delta^k_j on the
/// given side.
class UnitViolation : public Error {
   public:
    UnitViolation(std::string side, std::size_t j, std::size_t k)
        : Error("UnitViolation", side + " unit law fails at (j,k) = (" + std::to_string(j + 1) + "," +
                                     std::to_string(k + 1) + ")"),
          side(std::move(side)), j(j), k(k) {}
    std::string side;
    std::size_t j, k;
};

class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error("SyntaxError", message + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

}  // namespace polyalg

#endif  // POLYALG_ERRORS_HPP
