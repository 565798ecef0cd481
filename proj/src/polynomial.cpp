#include "encone/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace encone {

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(Int coeff, int power) {
    IntPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(power + 1, Int(0));
        p.coeffs_[power] = std::move(coeff);
    }
    return p;
}

int IntPolynomial::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return -1;
}

Int IntPolynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[power];
}

Int IntPolynomial::leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    if (s == 0) return {};
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::substitute_t_squared() const {
    if (is_zero()) return {};
    std::vector<Int> c(2 * coeffs_.size() - 1, Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[2 * k] = coeffs_[k];
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::even_part_root() const {
    std::vector<Int> c((coeffs_.size() + 1) / 2, Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k % 2 == 1) {
            if (coeffs_[k] != 0) return std::nullopt;
        } else {
            c[k / 2] = coeffs_[k];
        }
    }
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::shift_down(int k) const {
    if (is_zero()) return IntPolynomial();
    if (valuation() < k) return std::nullopt;
    std::vector<Int> c(coeffs_.begin() + k, coeffs_.end());
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return IntPolynomial();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - d.coeffs_.size() + 1, Int(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Int& top = rem[k + d.degree()];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[k] = q;
        for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= q * d.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact_scalar(const Int& s) const {
    if (s == 0) throw std::domain_error("division by zero");
    std::vector<Int> c = coeffs_;
    for (auto& x : c) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
        if (r != 0) return std::nullopt;
        x = q;
    }
    return IntPolynomial(std::move(c));
}

bool IntPolynomial::coefficients_nonnegative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

bool IntPolynomial::supported_on_parity(int r) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0 && static_cast<int>(k % 2) != ((r % 2) + 2) % 2) return false;
    return true;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    Int c = content();
    if (c == 0) return {};
    return *divide_exact_scalar(c);
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b), primitive at each step to
// keep coefficient growth in check.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        IntPolynomial lead_term =
            IntPolynomial::monomial(a.leading(), a.degree() - db);
        a = a * b.leading() - lead_term * b;
    }
    return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    Int cont_g;
    mpz_gcd(cont_g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPolynomial r0 = a.primitive_part(), r1 = b.primitive_part();
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        IntPolynomial r2 = pseudo_rem(r0, r1).primitive_part();
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.leading() < 0) r0 = -r0;
    return r0 * cont_g;
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = IntPolynomial(1);
        return;
    }
    IntPolynomial g = gcd(num_, den_);
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RationalFunction::is_polynomial() const { return den_ == IntPolynomial(1); }

std::optional<IntPolynomial> RationalFunction::as_polynomial() const {
    if (!is_polynomial()) return std::nullopt;
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace encone
