#include "rarebit/polynomials.hpp"

#include <stdexcept>

namespace rarebit {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs_low_to_high)
    : coeffs_(std::move(coeffs_low_to_high)) {
    if (coeffs_.empty()) coeffs_.push_back(BigInt(0));
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view literal) {
    std::vector<BigInt> coeffs;
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        std::size_t comma = literal.find(',', pos);
        if (comma == std::string_view::npos) comma = literal.size();
        std::string_view tok = literal.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty coefficient in polynomial literal");
        coeffs.push_back(BigInt::from_decimal(tok));
        pos = comma + 1;
        if (comma == literal.size()) break;
    }
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial literal");
    return IntPolynomial(std::move(coeffs));
}

bool IntPolynomial::is_monic() const {
    return coeffs_.back() == BigInt(1);
}

bool IntPolynomial::all_nonnegative() const {
    for (const BigInt& c : coeffs_)
        if (c.is_negative()) return false;
    return true;
}

bool IntPolynomial::is_identity() const {
    return coeffs_.size() == 2 && coeffs_[0].is_zero() && coeffs_[1] == BigInt(1);
}

BigNat IntPolynomial::max_coefficient() const {
    BigNat best;
    for (const BigInt& c : coeffs_) {
        const BigNat& m = c.to_nat();
        if (m > best) best = m;
    }
    return best;
}

BigNat IntPolynomial::eval(const BigNat& n) const {
    BigInt acc;
    BigInt x(n);
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        acc = acc * x + coeffs_[i - 1];
    }
    if (acc.is_negative())
        throw std::domain_error("polynomial evaluates to a negative value at n=" + n.to_decimal());
    return acc.magnitude();
}

bool IntPolynomial::eval_u64(std::uint64_t n, std::uint64_t& out) const {
    using i128 = __int128;
    // guard so that acc * n + c cannot overflow the i128 accumulator
    static constexpr i128 kLimit = static_cast<i128>(1) << 126;
    i128 acc = 0;
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        const BigInt& c = coeffs_[i - 1];
        if (!c.fits_i64()) return false;
        if (n != 0 && (acc > kLimit / static_cast<i128>(n) || acc < -(kLimit / static_cast<i128>(n))))
            return false;
        acc = acc * static_cast<i128>(n) + static_cast<i128>(c.to_i64());
        if (acc > kLimit || acc < -kLimit) return false;
    }
    if (acc < 0)
        throw std::domain_error("polynomial evaluates to a negative value at n=" + std::to_string(n));
    if (acc > static_cast<i128>(UINT64_MAX)) return false;
    out = static_cast<std::uint64_t>(acc);
    return true;
}

IntPolynomial IntPolynomial::translate(const BigNat& shift) const {
    if (shift.is_zero()) return *this;
    std::size_t d = degree();
    // Pascal triangle rows up to d
    std::vector<std::vector<BigNat>> binom(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        binom[j].assign(j + 1, BigNat(1));
        for (std::size_t i = 1; i < j; ++i) binom[j][i] = binom[j - 1][i - 1] + binom[j - 1][i];
    }
    std::vector<BigNat> shift_pow(d + 1, BigNat(1));
    for (std::size_t i = 1; i <= d; ++i) shift_pow[i] = shift_pow[i - 1] * shift;

    std::vector<BigInt> out(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        BigInt beta;
        for (std::size_t j = i; j <= d; ++j) {
            beta += coeffs_[j] * BigInt(binom[j][i] * shift_pow[j - i]);
        }
        out[i] = beta;
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_coeff_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].to_decimal();
    }
    return s;
}

std::string IntPolynomial::to_pretty_string() const {
    std::string s;
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        const BigInt& c = coeffs_[i - 1];
        std::size_t e = i - 1;
        if (c.is_zero()) continue;
        BigInt abs = c.is_negative() ? -c : c;
        if (s.empty()) {
            if (c.is_negative()) s += "-";
        } else {
            s += c.is_negative() ? " - " : " + ";
        }
        bool unit = abs == BigInt(1);
        if (e == 0 || !unit) s += abs.to_decimal();
        if (e >= 1) s += "X";
        if (e >= 2) s += "^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}

NormalizedPoly normalize_nonnegative(const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("normalization requires a monic polynomial of degree >= 1");
    BigNat a;
    while (true) {
        IntPolynomial q = p.translate(a);
        if (q.all_nonnegative()) return {a, q};
        a += BigNat(1);
    }
}

BigNat z_constant(const IntPolynomial& p) {
    if (!p.is_monic()) throw std::invalid_argument("z constant requires a monic polynomial");
    if (!p.all_nonnegative())
        throw std::invalid_argument("z constant requires nonnegative coefficients");
    if (p.degree() < 2) throw std::invalid_argument("z constant requires degree >= 2");
    BigNat z;
    for (std::size_t i = 1; i <= p.degree(); ++i) {
        z += BigNat(i) * p.coefficient(i).to_nat();
    }
    return z;
}

}  // namespace rarebit
