#ifndef POLYALG_IO_HPP
#define POLYALG_IO_HPP

// Text and JSON forms of rational-valued algebras, elements, tensors and
// polynomials.
//
// Algebra files are JSON documents
//
//   {"dim": n, "basis": [names], "unit": [rationals],
//    "table": [[[rationals] x n] x n]}
//
// where table[i][j] is the coordinate vector of e_i e_j and every rational
// is a string "p" or "p/q". algebra_to_json() always emits the same layout,
// so saving a loaded file reproduces it byte for byte.

#include "polyalg/polynomial.hpp"
#include "polyalg/rational.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace polyalg {

using RAlgebra = Algebra<Rational>;
using RAlgebraPtr = AlgebraPtr<Rational>;
using RElement = Element<Rational>;
using RTensor = Tensor<Rational>;
using RPolynomial = Polynomial<Rational>;

std::string algebra_to_json(const RAlgebra& alg);
RAlgebraPtr algebra_from_json(std::string_view text);
RAlgebraPtr load_algebra_file(const std::string& path);

/// "[1, 0, -1/2]"
std::string format_coords(const Vector<Rational>& v);
/// Linear combination over the basis names, e.g. "E11 - 1/2*E12"; "0" for
/// zero. A basis vector named "1" prints as a bare coefficient.
std::string format_element(const RElement& a);
/// One line "degree i: <nested JSON>" per nonzero coefficient; "0" for zero.
std::string format_polynomial(const RPolynomial& p);

nlohmann::json element_to_json(const RElement& a);
/// Nested arrays of rational strings, slot 0 outermost.
nlohmann::json tensor_to_json(const RTensor& t);
/// List of tensor serializations, degree i at position i.
nlohmann::json polynomial_to_json(const RPolynomial& p);

RTensor tensor_from_json(const RAlgebraPtr& alg, const nlohmann::json& j);
RPolynomial polynomial_from_json(const RAlgebraPtr& alg, const nlohmann::json& j);

/// Comma-separated rationals, e.g. "1,0,-1/2".
RElement parse_coords(const RAlgebraPtr& alg, std::string_view text);

}  // namespace polyalg

#endif  // POLYALG_IO_HPP
