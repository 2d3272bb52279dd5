#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cosov/error.hpp"

namespace cosov {

/// Base field descriptor: the rationals, or a univariate rational function
/// field over the rationals.
struct FieldDesc {
    enum class Kind { Rationals, RationalFunctions };

    Kind kind = Kind::Rationals;
    std::string variable; // nonempty iff kind == RationalFunctions

    static FieldDesc rationals() { return {Kind::Rationals, {}}; }
    static FieldDesc rational_functions(std::string var) {
        if (var.empty())
            fail(errc::invalid_argument, "rational function field needs a variable name");
        return {Kind::RationalFunctions, std::move(var)};
    }

    bool operator==(const FieldDesc&) const = default;
};

/// Dense univariate polynomial over Q, coefficients ascending, no trailing
/// zeros. Internal representation of Scalar; not exposed past this header.
class Poly {
  public:
    Poly() = default;
    explicit Poly(mpq_class c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<mpq_class>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    mpq_class coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : mpq_class(0);
    }
    const mpq_class& leading() const { return coeffs_.back(); }

    bool operator==(const Poly&) const = default;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    /// Euclidean division; returns {quotient, remainder}.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    mpq_class eval(const mpq_class& x) const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<mpq_class> coeffs_;
};

/// Exact field element: a reduced fraction of polynomials over Q in the
/// field variable (constant for the rationals), denominator monic.
class Scalar {
  public:
    Scalar() : field_(FieldDesc::rationals()), num_(), den_(mpq_class(1)) {}

    static Scalar zero(const FieldDesc& f) { return Scalar(f, Poly(), Poly(mpq_class(1))); }
    static Scalar one(const FieldDesc& f) {
        return Scalar(f, Poly(mpq_class(1)), Poly(mpq_class(1)));
    }
    static Scalar from_int(const FieldDesc& f, long v) {
        return Scalar(f, Poly(mpq_class(v)), Poly(mpq_class(1)));
    }
    static Scalar from_rational(const FieldDesc& f, const mpq_class& v) {
        return Scalar(f, Poly(v), Poly(mpq_class(1)));
    }
    /// The field variable q as an element of Q(q).
    static Scalar variable(const FieldDesc& f) {
        if (f.kind != FieldDesc::Kind::RationalFunctions)
            fail(errc::field_mismatch, "variable() needs a rational function field");
        return Scalar(f, Poly::variable(), Poly(mpq_class(1)));
    }
    /// num/den as polynomials; normalizes.
    static Scalar fraction(const FieldDesc& f, Poly num, Poly den);

    const FieldDesc& field() const { return field_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(mpq_class(1)) && den_ == Poly(mpq_class(1)); }

    bool operator==(const Scalar&) const = default;

    Scalar operator-() const { return Scalar(field_, -num_, den_); }
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const;

    /// Evaluate at a rational point of the field variable (identity on Q).
    mpq_class eval_at(const mpq_class& x) const;

    /// Canonical text form, e.g. "q+1", "(q^2+2*q+1)/q", "-2/3".
    std::string to_string() const;

    /// For std::map keys; an arbitrary but consistent total order.
    static int compare(const Scalar& a, const Scalar& b);

  private:
    Scalar(FieldDesc f, Poly num, Poly den)
        : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {}

    FieldDesc field_;
    Poly num_;
    Poly den_; // monic, nonzero, coprime to num_
};

std::string poly_to_string(const Poly& p, const std::string& var);

} // namespace cosov
