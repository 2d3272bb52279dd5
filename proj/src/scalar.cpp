#include "cosov/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace cosov {

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<mpq_class> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<mpq_class> rem = a.coeffs_;
    std::vector<mpq_class> quot(a.degree() - b.degree() + 1, mpq_class(0));
    const auto& bc = b.coeffs_;
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        mpq_class f = rem[i] / bc.back();
        quot[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * bc[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // make monic
    std::vector<mpq_class> c = a.coeffs_;
    mpq_class lead = c.back();
    for (auto& x : c) x /= lead;
    return Poly(std::move(c));
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Scalar Scalar::fraction(const FieldDesc& f, Poly num, Poly den) {
    if (den.is_zero()) fail(errc::division_by_zero, "zero denominator");
    if (f.kind == FieldDesc::Kind::Rationals && (num.degree() > 0 || den.degree() > 0))
        fail(errc::field_mismatch, "nonconstant polynomial over the rationals");
    if (num.is_zero()) return Scalar(f, Poly(), Poly(mpq_class(1)));
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::divmod(num, g).first;
        den = Poly::divmod(den, g).first;
    }
    // monic denominator
    mpq_class lead = den.leading();
    if (lead != 1) {
        std::vector<mpq_class> nc = num.coeffs(), dc = den.coeffs();
        for (auto& x : nc) x /= lead;
        for (auto& x : dc) x /= lead;
        num = Poly(std::move(nc));
        den = Poly(std::move(dc));
    }
    return Scalar(f, std::move(num), std::move(den));
}

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field())) fail(errc::field_mismatch, "scalars from different fields");
}
} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar::fraction(a.field(), a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar::fraction(a.field(), a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar::fraction(a.field(), a.num() * b.num(), a.den() * b.den());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (b.is_zero()) fail(errc::division_by_zero, "division by zero scalar");
    return Scalar::fraction(a.field(), a.num() * b.den(), a.den() * b.num());
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    return fraction(field_, den_, num_);
}

mpq_class Scalar::eval_at(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) fail(errc::division_by_zero, "denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    auto cmp_poly = [](const Poly& p, const Poly& q) -> int {
        if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
        for (int i = p.degree(); i >= 0; --i) {
            int c = mpq_cmp(p.coeff(i).get_mpq_t(), q.coeff(i).get_mpq_t());
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_poly(a.num_, b.num_);
    if (c != 0) return c;
    return cmp_poly(a.den_, b.den_);
}

namespace {
std::string mpq_to_string(const mpq_class& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}
} // namespace

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        mpq_class c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        mpq_class a = neg ? mpq_class(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        std::string coeff = mpq_to_string(a);
        if (i == 0) {
            out += coeff;
        } else {
            if (a != 1) out += coeff + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string Scalar::to_string() const {
    const std::string var =
        field_.kind == FieldDesc::Kind::RationalFunctions ? field_.variable : "q";
    if (is_zero()) return "0";
    // scale to integer coefficients: num/den with coprime integer polys,
    // positive leading denominator coefficient
    mpz_class l(1);
    for (const auto& c : num_.coeffs()) l = lcm(l, c.get_den());
    for (const auto& c : den_.coeffs()) l = lcm(l, c.get_den());
    mpz_class g(0);
    auto scaled = [&](const Poly& p) {
        std::vector<mpq_class> out;
        for (const auto& c : p.coeffs()) {
            mpq_class s = c * l;
            out.push_back(s);
            g = gcd(g, s.get_num());
        }
        return out;
    };
    std::vector<mpq_class> nc = scaled(num_), dc = scaled(den_);
    if (g == 0) g = 1;
    if (dc.back() < 0) g = -g;
    for (auto& x : nc) x /= g;
    for (auto& x : dc) x /= g;
    Poly n{std::move(nc)}, d{std::move(dc)};
    std::string ns = poly_to_string(n, var);
    if (d == Poly(mpq_class(1))) return ns;
    std::string ds = poly_to_string(d, var);
    auto needs_parens = [](const std::string& s, const Poly& p) {
        if (p.degree() == 0) return false; // plain integer
        auto minus = s.find('-', 1);
        return s.find('+') != std::string::npos || minus != std::string::npos ||
               s.find('*') != std::string::npos;
    };
    if (needs_parens(ns, n)) ns = "(" + ns + ")";
    if (needs_parens(ds, d)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

} // namespace cosov
