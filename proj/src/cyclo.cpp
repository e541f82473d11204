#include "kset/cyclo.hpp"

#include <cctype>
#include <ostream>
#include <utility>
#include <vector>

#include "kset/errors.hpp"

namespace kset {
namespace {

constexpr int kProductLen = 2 * CycNum::kDegree - 1;

// Folds x^k (k >= 8) back using x^8 = x^4 - 1, from the top down.
void reduce_product(std::array<mpz_class, kProductLen>& p) {
    for (int k = kProductLen - 1; k >= CycNum::kDegree; --k) {
        auto& top = p[static_cast<std::size_t>(k)];
        if (sgn(top) == 0) continue;
        p[static_cast<std::size_t>(k - 4)] += top;
        p[static_cast<std::size_t>(k - 8)] -= top;
        top = 0;
    }
}

const std::array<CycNum, CycNum::kOrder>& power_table() {
    static const std::array<CycNum, CycNum::kOrder> table = [] {
        std::array<CycNum, CycNum::kOrder> t;
        std::array<Rational, CycNum::kDegree> c{};
        c[0] = 1;
        for (int k = 0; k < CycNum::kOrder; ++k) {
            t[static_cast<std::size_t>(k)] = CycNum::from_coeffs(c);
            // multiply by x
            Rational top = c[7];
            for (int i = 7; i > 0; --i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)];
            c[0] = 0;
            c[4] += top;
            c[0] -= top;
        }
        return t;
    }();
    return table;
}

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    char take() { return s_[pos_++]; }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " in scalar '" + std::string(s_) + "'", 0, column());
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    bool starts_with(std::string_view token) const { return s_.substr(pos_).starts_with(token); }
    void skip(std::size_t n) { pos_ += n; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

bool is_atom_start(char c) { return c == 'z' || c == 'w' || c == 'W' || c == 's'; }

CycNum parse_atom(Scanner& sc) {
    if (sc.peek() == 'z') {
        sc.skip(1);
        return CycNum::zeta(1);
    }
    static const std::pair<std::string_view, int> aliases[] = {
        {"w3", 0}, {"W3", 1}, {"w6", 2}, {"s2", 3}, {"s3", 4}};
    for (const auto& [token, which] : aliases) {
        if (!sc.starts_with(token)) continue;
        sc.skip(token.size());
        switch (which) {
            case 0: return CycNum::zeta(8);
            case 1: return -CycNum::zeta(4);
            case 2: return CycNum::zeta(4);
            case 3: return CycNum::sqrt2();
            default: return CycNum::sqrt3();
        }
    }
    sc.fail("unknown atom");
}

CycNum parse_term(Scanner& sc) {
    Rational coeff(1);
    bool have_rational = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        mpz_class num = sc.integer();
        mpz_class den(1);
        if (sc.peek() == '/') {
            sc.take();
            den = sc.integer();
            if (den == 0) sc.fail("zero denominator");
        }
        coeff = Rational(num, den);
        coeff.canonicalize();
        have_rational = true;
    }
    if (!is_atom_start(sc.peek())) {
        if (!have_rational) sc.fail("expected a number or atom");
        return CycNum(coeff);
    }
    CycNum atom = parse_atom(sc);
    if (sc.peek() == '^') {
        sc.take();
        mpz_class e = sc.integer();
        if (!e.fits_ulong_p()) sc.fail("exponent too large");
        atom = atom.pow(e.get_ui());
    }
    return CycNum(coeff) * atom;
}

std::string coefficient_form(const CycNum& a) {
    std::string out;
    for (int k = 0; k < CycNum::kDegree; ++k) {
        const Rational& q = a.coeff(k);
        if (sgn(q) == 0) continue;
        std::string term;
        if (k == 0) {
            term = q.get_str();
        } else {
            std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
            if (q == 1) term = power;
            else if (q == -1) term = "-" + power;
            else term = q.get_str() + power;
        }
        if (!out.empty() && term.front() != '-') out += '+';
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string multiple_form(const Rational& q, const std::string& atom) {
    if (q == 1) return atom;
    if (q == -1) return "-" + atom;
    return q.get_str() + atom;
}

}  // namespace

CycNum CycNum::from_coeffs(const std::array<Rational, kDegree>& coeffs) {
    CycNum r;
    r.coeffs_ = coeffs;
    for (auto& c : r.coeffs_) c.canonicalize();
    return r;
}

CycNum CycNum::zeta(long k) {
    long m = k % kOrder;
    if (m < 0) m += kOrder;
    return power_table()[static_cast<std::size_t>(m)];
}

CycNum CycNum::sqrt2() { return zeta(1) + zeta(3) - zeta(5); }

CycNum CycNum::sqrt3() { return CycNum(2) * zeta(2) - zeta(6); }

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (int i = 1; i < kDegree; ++i)
        if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0) return false;
    return true;
}

bool CycNum::is_real() const { return conj() == *this; }

CycNum CycNum::conj() const { return galois(kOrder - 1); }

CycNum CycNum::inv() const {
    if (is_zero()) throw ZeroDivision();
    // The Galois group (Z/24)^* is generated by 5, 7 and 13, each of order 2. Each
    // product x * sigma(x) is fixed by one more generator, so three steps reach the
    // rational norm N, and inv(a) = (product of the partner factors) / N.
    CycNum x = *this;
    CycNum partners(1);
    for (long k : {5L, 7L, 13L}) {
        CycNum image = x.galois(k);
        partners *= image;
        x *= image;
    }
    Rational norm = x.coeffs_[0];
    for (auto& c : partners.coeffs_) c /= norm;
    return partners;
}

CycNum CycNum::galois(long k) const {
    CycNum r(coeffs_[0]);
    const auto& table = power_table();
    for (int j = 1; j < kDegree; ++j) {
        const Rational& c = coeffs_[static_cast<std::size_t>(j)];
        if (sgn(c) == 0) continue;
        const auto& image = table[static_cast<std::size_t>((j * k) % kOrder)].coeffs_;
        for (std::size_t i = 0; i < image.size(); ++i)
            if (sgn(image[i]) != 0) r.coeffs_[i] += c * image[i];
    }
    return r;
}

CycNum CycNum::pow(unsigned long e) const {
    CycNum result(1);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }

namespace {

// Numerators over a common denominator, so the product runs in integers.
mpz_class scaled(const std::array<Rational, CycNum::kDegree>& c, std::array<mpz_class, CycNum::kDegree>& num) {
    mpz_class den = 1;
    for (const auto& q : c)
        if (q.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) {
            num[i] = 0;
            continue;
        }
        num[i] = c[i].get_num();
        if (den != 1) {
            num[i] *= den;
            mpz_divexact(num[i].get_mpz_t(), num[i].get_mpz_t(), c[i].get_den_mpz_t());
        }
    }
    return den;
}

}  // namespace

CycNum operator*(const CycNum& a, const CycNum& b) {
    std::array<mpz_class, CycNum::kDegree> x, y;
    mpz_class den = scaled(a.coeffs_, x) * scaled(b.coeffs_, y);
    std::array<mpz_class, kProductLen> p{};
    for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < CycNum::kDegree; ++j)
            if (sgn(y[j]) != 0) mpz_addmul(p[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
    reduce_product(p);
    CycNum r;
    for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
        if (sgn(p[i]) == 0) continue;
        r.coeffs_[i] = Rational(p[i], den);
        r.coeffs_[i].canonicalize();
    }
    return r;
}

std::string CycNum::to_string() const { return format_scalar(*this); }

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << format_scalar(a); }

CycNum parse_scalar(std::string_view text) {
    Scanner sc(text);
    if (sc.done()) sc.fail("empty entry");
    CycNum total;
    bool first = true;
    while (!sc.done()) {
        bool negative = false;
        if (sc.peek() == '+' || sc.peek() == '-') {
            negative = sc.take() == '-';
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        CycNum term = parse_term(sc);
        total += negative ? -term : term;
        first = false;
    }
    return total;
}

std::string format_scalar(const CycNum& a) {
    std::string best = coefficient_form(a);
    if (a.is_rational()) return best;
    auto consider = [&best](std::string candidate) {
        if (candidate.size() < best.size()) best = std::move(candidate);
    };
    for (long k = 1; k < CycNum::kOrder; ++k) {
        CycNum t = a * CycNum::zeta(-k);
        if (!t.is_rational()) continue;
        consider(multiple_form(t.coeff(0), k == 1 ? "z" : "z^" + std::to_string(k)));
    }
    CycNum t2 = a * CycNum::sqrt2() * CycNum(Rational(1, 2));
    if (t2.is_rational()) consider(multiple_form(t2.coeff(0), "s2"));
    CycNum t3 = a * CycNum::sqrt3() * CycNum(Rational(1, 3));
    if (t3.is_rational()) consider(multiple_form(t3.coeff(0), "s3"));
    return best;
}

}  // namespace kset
