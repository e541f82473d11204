#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(i*pi/12), a primitive
// 24th root of unity. Elements are stored as c0 + c1 z + ... + c7 z^7 reduced modulo
// Phi_24(x) = x^8 - x^4 + 1, so the representation is unique and equality is
// coefficient-wise.
//
// Named elements used by the ray tables:
//   w3 = exp(2 pi i/3) = z^8        W3 = conj(w3) = -z^4
//   w6 = exp(pi i/3)   = z^4        s2 = sqrt(2) = z + z^3 - z^5
//   s3 = sqrt(3)       = 2z^2 - z^6

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kset {

using Rational = mpq_class;

class CycNum {
public:
    static constexpr int kDegree = 8;
    static constexpr int kOrder = 24;

    CycNum() = default;
    CycNum(long value) : coeffs_{} { coeffs_[0] = value; }  // NOLINT(google-explicit-constructor)
    CycNum(const Rational& value) : coeffs_{} { coeffs_[0] = value; }  // NOLINT

    static CycNum from_coeffs(const std::array<Rational, kDegree>& coeffs);
    // zeta^k for any integer k.
    static CycNum zeta(long k = 1);
    static CycNum sqrt2();
    static CycNum sqrt3();

    const Rational& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::array<Rational, kDegree>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Fixed by complex conjugation.
    bool is_real() const;

    CycNum conj() const;
    // Image under the automorphism z -> z^k, k coprime to 24.
    CycNum galois(long k) const;
    // Throws ZeroDivision for zero.
    CycNum inv() const;
    CycNum pow(unsigned long e) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs) { return *this *= rhs.inv(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b) { return a.coeffs_ == b.coeffs_; }

    // Canonical text form accepted by parse_scalar; see format_scalar.
    std::string to_string() const;

private:
    std::array<Rational, kDegree> coeffs_{};
};

inline CycNum conj(const CycNum& a) { return a.conj(); }
inline CycNum inv(const CycNum& a) { return a.inv(); }
inline bool is_zero(const CycNum& a) { return a.is_zero(); }

std::ostream& operator<<(std::ostream& os, const CycNum& a);

// Parses one scalar entry:
//   entry    := sign? term (sign term)*
//   term     := rational | rational? atom ('^' uint)?
//   rational := int ('/' uint)?
//   atom     := 'z' | 'w3' | 'W3' | 'w6' | 's2' | 's3'
// No whitespace is allowed inside an entry. Throws SyntaxError (line 0, 1-based column).
CycNum parse_scalar(std::string_view text);

// Shortest of: reduced coefficient form ("-1+z^4"), a rational multiple of one power
// of z ("z^8"), or a rational multiple of s2/s3. Ties keep the coefficient form.
std::string format_scalar(const CycNum& a);

}  // namespace kset
