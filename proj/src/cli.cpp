#include "polyalg/cli.hpp"

#include "polyalg/builtin_algebras.hpp"
#include "polyalg/expr.hpp"
#include "polyalg/reduction.hpp"
#include "polyalg/shift_algebra.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>

namespace polyalg::cli {

namespace {

using nlohmann::json;

/// Bad invocation detected after CLI11 parsing; exits with UsageError.
class UsageFailure : public Error {
   public:
    explicit UsageFailure(const std::string& message) : Error("UsageError", message) {}
};

struct Options {
    std::string algebra;
    std::vector<std::string> binds;
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t max_arity = 0;
};

class ArityGuard {
   public:
    explicit ArityGuard(std::size_t arity) : saved_(max_arity()) {
        if (arity != 0) set_max_arity(arity);
    }
    ~ArityGuard() { set_max_arity(saved_); }
    ArityGuard(const ArityGuard&) = delete;
    ArityGuard& operator=(const ArityGuard&) = delete;

   private:
    std::size_t saved_;
};

class Session {
   public:
    Session(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

    const Options& opts() const { return opts_; }
    std::ostream& out() { return out_; }

    const RAlgebraPtr& algebra() {
        if (!algebra_) {
            if (opts_.algebra.empty()) throw UsageFailure("this command needs --algebra <path|builtin:name>");
            algebra_ = load(opts_.algebra);
        }
        return algebra_;
    }

    static RAlgebraPtr load(const std::string& spec) {
        const std::string prefix = "builtin:";
        if (spec.starts_with(prefix)) return builtin_algebra<Rational>(spec.substr(prefix.size()));
        return load_algebra_file(spec);
    }

    const Bindings& bindings() {
        if (!bindings_) {
            Bindings b = basis_bindings(algebra());
            for (const auto& bind : opts_.binds) {
                const auto eq = bind.find('=');
                if (eq == std::string::npos) throw UsageFailure("--bind expects name=coords, got '" + bind + "'");
                const std::string name = bind.substr(0, eq);
                if (!is_identifier(name)) throw UsageFailure("'" + name + "' is not a valid identifier");
                b.insert_or_assign(name, parse_coords(algebra(), std::string_view(bind).substr(eq + 1)));
            }
            bindings_ = std::move(b);
        }
        return *bindings_;
    }

    RPolynomial polynomial(const std::string& text) {
        return lower(parse_expr(text, bindings()), algebra(), bindings());
    }

    /// Comma-separated coordinates, or an expression without x.
    RElement element(const std::string& text) {
        if (text.find(',') != std::string::npos) return parse_coords(algebra(), text);
        const RPolynomial p = polynomial(text);
        if (p.degree().value_or(0) > 0) throw FormatError("expected a constant, but '" + text + "' contains x");
        return p.is_zero() ? RElement::zero(algebra()) : RElement(algebra(), p.coefficient(0).coords());
    }

    /// The coefficient t of a homogeneous degree-1 expression t o x.
    RTensor linear_tensor(const std::string& text) {
        const RPolynomial p = polynomial(text);
        if (p.degree() != std::optional<std::size_t>(1) || !p.coefficient(0).is_zero()) {
            throw FormatError("expected a homogeneous degree-1 expression such as 'a*x*b', got '" + text + "'");
        }
        return p.coefficient(1);
    }

   private:
    const Options& opts_;
    std::ostream& out_;
    RAlgebraPtr algebra_;
    std::optional<Bindings> bindings_;
};

json degree_json(const RPolynomial& p) { return p.degree() ? json(*p.degree()) : json(nullptr); }

std::string degree_text(const RPolynomial& p) { return p.degree() ? std::to_string(*p.degree()) : "-inf"; }

void emit_polynomial(Session& s, const RPolynomial& p) {
    if (s.opts().json) {
        s.out() << json{{"degree", degree_json(p)}, {"coeffs", polynomial_to_json(p)}}.dump() << "\n";
        return;
    }
    s.out() << "degree: " << degree_text(p) << "\n" << format_polynomial(p) << "\n";
}

json violation_json(const Error& e) {
    json j{{"error", e.kind()}, {"message", e.what()}};
    if (const auto* a = dynamic_cast<const AssociativityViolation*>(&e)) {
        j["indices"] = {a->i + 1, a->j + 1, a->k + 1, a->m + 1};
        j["lhs"] = a->lhs;
        j["rhs"] = a->rhs;
    } else if (const auto* u = dynamic_cast<const UnitViolation*>(&e)) {
        j["side"] = u->side;
        j["indices"] = {u->j + 1, u->k + 1};
    } else if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
        j["offset"] = se->offset;
    }
    return j;
}

int cmd_validate(Session& s, const std::string& path, std::ostream& err) {
    const std::string spec = path.empty() ? s.opts().algebra : path;
    if (spec.empty()) throw UsageFailure("validate needs an algebra file");
    try {
        const RAlgebraPtr alg = Session::load(spec);
        if (s.opts().json) {
            s.out() << json{{"status", "PASS"}, {"dim", alg->dim()}}.dump() << "\n";
        } else {
            s.out() << "PASS: dim " << alg->dim() << ", associative with two-sided unit\n";
        }
        return Success;
    } catch (const AssociativityViolation& e) {
        if (s.opts().json) {
            err << violation_json(e).dump() << "\n";
        } else {
            s.out() << "FAIL: " << e.what() << "\n";
        }
    } catch (const UnitViolation& e) {
        if (s.opts().json) {
            err << violation_json(e).dump() << "\n";
        } else {
            s.out() << "FAIL: " << e.what() << "\n";
        }
    }
    return DomainError;
}

void cmd_eval(Session& s, const std::string& expr, const std::string& at) {
    const RPolynomial p = s.polynomial(expr);
    const RElement x = s.element(at);
    const RElement v = eval(p, x);
    if (s.opts().json) {
        s.out() << json{{"value", element_to_json(v)}, {"text", format_element(v)}}.dump() << "\n";
    } else {
        s.out() << "p(x) = " << format_element(v) << "\ncoords: " << format_coords(v.coords()) << "\n";
    }
}

std::vector<RElement> basis_points(const RAlgebraPtr& alg) {
    std::vector<RElement> points{RElement::zero(alg), RElement::one(alg)};
    for (std::size_t i = 0; i < alg->dim(); ++i) points.push_back(RElement::basis(alg, i));
    return points;
}

void cmd_reduce(Session& s, const std::string& expr, const std::string& by, const std::string& side_name) {
    const RPolynomial r = s.polynomial(expr);
    const RPolynomial p = s.polynomial(by);
    if (p.degree() != std::optional<std::size_t>(1)) throw FormatError("the divisor must have degree 1");
    const Side side = side_name == "left" ? Side::Left : Side::Right;
    const auto result = reduce_by_linear_affine(r, RElement(s.algebra(), p.coefficient(0).coords()), p.coefficient(1), side);
    const auto points = basis_points(s.algebra());
    if (!verify_reduction(result, r, points)) throw Error("VerificationFailure", "reduction identity failed");

    if (s.opts().json) {
        json terms = json::array();
        for (const auto& t : result.terms) terms.push_back({{"u", polynomial_to_json(t.u)}, {"v", element_to_json(t.v)}});
        s.out() << json{{"remainder", element_to_json(result.remainder)},
                        {"terms", terms},
                        {"side", side_name},
                        {"verified_points", points.size()}}
                       .dump()
                << "\n";
        return;
    }
    s.out() << "remainder: " << format_element(result.remainder) << "\n";
    s.out() << "terms: " << result.terms.size() << (side == Side::Right ? " (u(x) p(x) v)" : " (v p(x) u(x))") << "\n";
    for (std::size_t j = 0; j < result.terms.size(); ++j) {
        const auto& t = result.terms[j];
        s.out() << "  [" << j + 1 << "] v = " << format_element(t.v) << ", deg u = " << degree_text(t.u)
                << ", u = " << polynomial_to_json(t.u).dump() << "\n";
    }
    s.out() << "verified: identity holds at " << points.size() << " points (0, 1 and every basis vector)\n";
}

json zerodiv_json(const std::optional<RElement>& w) {
    if (!w) return json{{"zero_divisor", false}};
    return json{{"zero_divisor", true}, {"witness", element_to_json(*w)}, {"witness_text", format_element(*w)}};
}

void zerodiv_report(std::ostream& out, const RElement& a) {
    const auto left = is_left_zero_divisor(a);
    const auto right = is_right_zero_divisor(a);
    out << "element: " << format_element(a) << "\n";
    if (left) {
        out << "left zero divisor: yes, witness w = " << format_element(*left) << ", a*w = " << format_element(a * *left)
            << "\n";
    } else {
        out << "left zero divisor: no\n";
    }
    if (right) {
        out << "right zero divisor: yes, witness w = " << format_element(*right)
            << ", w*a = " << format_element(*right * a) << "\n";
    } else {
        out << "right zero divisor: no\n";
    }
}

void cmd_zerodiv(Session& s, const std::string& text) {
    const RElement a = s.element(text);
    if (s.opts().json) {
        s.out() << json{{"element", element_to_json(a)},
                        {"left", zerodiv_json(is_left_zero_divisor(a))},
                        {"right", zerodiv_json(is_right_zero_divisor(a))}}
                       .dump()
                << "\n";
        return;
    }
    zerodiv_report(s.out(), a);
}

void cmd_invtensor(Session& s, const std::string& text) {
    const RTensor a = s.linear_tensor(text);
    const RTensor c = invert_tensor(a);
    const Matrix<Rational> prod = operator_matrix(c) * operator_matrix(a);
    const bool ok = prod == Matrix<Rational>::Identity(prod.rows(), prod.cols());
    if (!ok) throw Error("VerificationFailure", "inverse tensor check failed");
    if (s.opts().json) {
        s.out() << json{{"inverse", tensor_to_json(c)}, {"verified", true}}.dump() << "\n";
        return;
    }
    s.out() << "nonsingular: yes\ninverse: " << tensor_to_json(c).dump() << "\ncheck: M(inverse) M(a) = I\n";
}

void cmd_solve(Session& s, const std::string& lhs, const std::string& rhs, bool force) {
    const LinearEquation<Rational> eq(s.linear_tensor(lhs), s.element(rhs));
    const RElement x = solve_linear(eq, force ? SingularPolicy::Attempt : SingularPolicy::Reject);
    if (s.opts().json) {
        s.out() << json{{"x", element_to_json(x)}, {"text", format_element(x)}}.dump() << "\n";
        return;
    }
    s.out() << "x = " << format_element(x) << "\ncoords: " << format_coords(x.coords()) << "\n";
}

void demo_e12e23(std::ostream& out) {
    const auto m3 = matrix_algebra<Rational>(3);
    const RElement e12 = matrix_unit(m3, 1, 2), e23 = matrix_unit(m3, 2, 3);
    out << "algebra: 3x3 matrices\n";
    out << "E12*E23 = " << format_element(e12 * e23) << "\n";
    out << "E23*E12 = " << format_element(e23 * e12) << "\n";
    zerodiv_report(out, e12);
    zerodiv_report(out, e23);
}

void demo_exe(std::ostream& out, std::uint64_t seed) {
    const auto m2 = matrix_algebra<Rational>(2);
    const RPolynomial p = exe_example(m2, 1, 2);
    out << "algebra: 2x2 matrices\np(X) = E11 X E22\n";
    for (std::size_t i = 0; i < m2->dim(); ++i) {
        const RElement x = RElement::basis(m2, i);
        out << "p(" << format_element(x) << ") = " << format_element(eval(p, x)) << "\n";
    }
    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < 5; ++sample) {
        Vector<Rational> v(4);
        for (Eigen::Index i = 0; i < 4; ++i) v(i) = Rational(static_cast<long long>(rng() % 11) - 5);
        const RElement x(m2, v);
        out << "p(" << format_coords(v) << ") = " << format_element(eval(p, x)) << "\n";
    }
    out << "vanishes identically: " << (vanishes_identically(p.coefficient(1)) ? "yes" : "no") << "\n";
    const auto w = is_left_zero_divisor(matrix_unit(m2, 1, 1));
    out << "E11 left zero divisor: " << (w ? "yes, witness " + format_element(*w) : std::string("no")) << "\n";
    out << "E22 right zero divisor: "
        << (is_right_zero_divisor(matrix_unit(m2, 2, 2)) ? "yes" : "no") << "\n";
}

void demo_shift(std::ostream& out) {
    const BandOperator f = shift_f(), g = shift_g(), p = projector_p(), one = BandOperator::identity();
    const BandOperator fg = compose(f, g), fp = compose(f, p), pg = compose(p, g), gf = compose(g, f);
    out << "f e_0 = 0, f e_(i+1) = e_i; g e_i = e_(i+1); p e_0 = e_0, p e_(i+1) = 0\n";
    out << "fg = 1: " << (fg == one ? "yes" : "no") << "\n";
    out << "fp = 0: " << (fp.is_zero() ? "yes" : "no") << "\n";
    out << "pg = 0: " << (pg.is_zero() ? "yes" : "no") << "\n";
    out << "gf = 1: " << (gf == one ? "yes" : "no") << "\n";
    for (std::size_t n : {4u, 16u, 64u}) {
        out << "N = " << n << ": fg=1 " << equal_on_truncation(fg, one, n) << ", fp=0 " << is_zero_on_truncation(fp, n)
            << ", pg=0 " << is_zero_on_truncation(pg, n) << ", gf=1 " << equal_on_truncation(gf, one, n) << "\n";
    }
    out << "f is a left zero divisor (witness p), g is a right zero divisor (witness p)\n";
}

void cmd_demo(Session& s, const std::string& name) {
    std::ostringstream text;
    if (name == "e12e23") {
        demo_e12e23(text);
    } else if (name == "exe") {
        demo_exe(text, s.opts().seed);
    } else if (name == "shift") {
        text << std::boolalpha;
        demo_shift(text);
    } else {
        throw UsageFailure("unknown demo '" + name + "' (expected e12e23, exe or shift)");
    }
    if (s.opts().json) {
        s.out() << json{{"demo", name}, {"output", text.str()}}.dump() << "\n";
    } else {
        s.out() << text.str();
    }
}

bool is_usage_kind(const std::string& kind) {
    return kind == "UsageError" || kind == "SyntaxError" || kind == "UnboundIdentifier" || kind == "NegativeExponent" ||
           kind == "FormatError";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Exact polynomial arithmetic over finite-dimensional associative algebras", "polyalg"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--algebra", opts.algebra, "Algebra JSON file, or builtin:<matrixN|quaternions|complex|dual>");
    app.add_option("--bind", opts.binds, "Bind a constant: name=r1,r2,... (repeatable)")->allow_extra_args(false);
    app.add_flag("--json", opts.json, "Machine-readable output");
    app.add_option("--seed", opts.seed, "Seed for randomized samples");
    app.add_option("--max-arity", opts.max_arity, "Maximum tensor arity (degree + 1)")->check(CLI::PositiveNumber);

    std::string path, expr, expr2, at, by, side = "right", name;
    bool force = false;
    auto* validate = app.add_subcommand("validate", "Check associativity and the unit laws");
    validate->add_option("file", path, "Algebra JSON file");
    auto* evalc = app.add_subcommand("eval", "Evaluate a polynomial at a point");
    evalc->add_option("expr", expr)->required();
    evalc->add_option("--at", at, "Point: coordinates or a constant expression")->required();
    auto* mul = app.add_subcommand("mul", "Product of two polynomials");
    mul->add_option("p", expr)->required();
    mul->add_option("q", expr2)->required();
    auto* add = app.add_subcommand("add", "Sum of two polynomials");
    add->add_option("p", expr)->required();
    add->add_option("q", expr2)->required();
    auto* reduce = app.add_subcommand("reduce", "Reduce r by a degree-1 divisor");
    reduce->add_option("r", expr)->required();
    reduce->add_option("--by", by, "Divisor p0 + p1 o x")->required();
    reduce->add_option("--side", side, "right: u(x) p(x) v, left: v p(x) u(x)")->check(CLI::IsMember({"right", "left"}));
    auto* zerodiv = app.add_subcommand("zerodiv", "Left/right zero-divisor test with witnesses");
    zerodiv->add_option("element", expr)->required();
    auto* invtensor = app.add_subcommand("invtensor", "Inverse tensor of a degree-1 expression");
    invtensor->add_option("expr", expr)->required();
    auto* solvec = app.add_subcommand("solve", "Solve a o x = b");
    solvec->add_option("lhs", expr)->required();
    solvec->add_option("rhs", expr2)->required();
    solvec->add_flag("--force", force, "Solve even if singular; report no or many solutions");
    auto* demo = app.add_subcommand("demo", "Run a worked example: e12e23, exe, shift");
    demo->add_option("name", name)->required();
    auto* exportc = app.add_subcommand("export", "Print a builtin algebra as JSON");
    exportc->add_option("name", name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return Success;
        }
        if (opts.json) {
            err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return UsageError;
    }

    try {
        ArityGuard guard(opts.max_arity);
        Session s(opts, out);
        if (validate->parsed()) return cmd_validate(s, path, err);
        if (evalc->parsed()) cmd_eval(s, expr, at);
        if (mul->parsed()) emit_polynomial(s, s.polynomial(expr) * s.polynomial(expr2));
        if (add->parsed()) emit_polynomial(s, s.polynomial(expr) + s.polynomial(expr2));
        if (reduce->parsed()) cmd_reduce(s, expr, by, side);
        if (zerodiv->parsed()) cmd_zerodiv(s, expr);
        if (invtensor->parsed()) cmd_invtensor(s, expr);
        if (solvec->parsed()) cmd_solve(s, expr, expr2, force);
        if (demo->parsed()) cmd_demo(s, name);
        if (exportc->parsed()) out << algebra_to_json(*builtin_algebra<Rational>(name));
        return Success;
    } catch (const Error& e) {
        if (opts.json) {
            err << violation_json(e).dump() << "\n";
        } else {
            err << "error: " << e.kind() << ": " << e.what() << "\n";
        }
        return is_usage_kind(e.kind()) ? UsageError : DomainError;
    } catch (const std::exception& e) {
        if (opts.json) {
            err << json{{"error", "Error"}, {"message", e.what()}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return DomainError;
    }
}

}  // namespace polyalg::cli
