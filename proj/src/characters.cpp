#include "torsec/characters.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "torsec/distribution.hpp"

namespace torsec {

long euler_phi(long d) {
    long result = d;
    long n = d;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        result -= result / q;
        while (n % q == 0) n /= q;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by the monic polynomial b.
ZPoly divide_exact(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (a.size() >= b.size()) {
        Int c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return q;
}

}  // namespace

ZPoly cyclotomic_polynomial(long d) {
    if (d < 1)
        throw InputError(errc::bad_argument, "conductor must be >= 1");
    static std::map<long, ZPoly> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::function<ZPoly(long)> compute = [&](long n) -> ZPoly {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        ZPoly result;
        if (n == 1) {
            result = {Int(-1), Int(1)};  // x - 1
        } else {
            ZPoly num(static_cast<std::size_t>(n) + 1, Int(0));
            num[0] = -1;
            num[static_cast<std::size_t>(n)] = 1;  // x^n - 1
            for (long e = 1; e < n; ++e)
                if (n % e == 0) num = divide_exact(std::move(num), compute(e));
            result = std::move(num);
        }
        cache[n] = result;
        return result;
    };
    return compute(d);
}

long least_primitive_root(long p) {
    if (!is_prime(p) || p == 2)
        throw InputError(errc::not_odd_prime, "p must be an odd prime");
    std::vector<long> prime_factors;
    long n = p - 1;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        prime_factors.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) prime_factors.push_back(n);

    auto pow_mod = [p](long base, long exp) {
        long result = 1 % p;
        long b = base % p;
        while (exp > 0) {
            if (exp & 1) result = result * b % p;
            b = b * b % p;
            exp >>= 1;
        }
        return result;
    };
    for (long g = 2; g < p; ++g) {
        bool primitive = true;
        for (long q : prime_factors)
            if (pow_mod(g, (p - 1) / q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return g;
    }
    throw InputError(errc::bad_argument, "no primitive root found");  // unreachable
}

QPoly bernoulli_polynomial(int k) {
    switch (k) {
        case 0: return {Rat(1)};
        case 1: return {rat(-1, 2), Rat(1)};
        case 2: return {rat(1, 6), Rat(-1), Rat(1)};
        default:
            throw InputError(errc::bad_argument,
                             "only Bernoulli polynomials B_0, B_1, B_2 are supported");
    }
}

Rat eval_poly(const QPoly& poly, const Rat& x) {
    Rat value(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * x + *it;
    return value;
}

namespace {

// Remainder of p mod the monic integer polynomial phi, over Q.
QPoly mod_monic(QPoly p, const ZPoly& phi) {
    while (p.size() >= phi.size()) {
        Rat c = p.back();
        std::size_t shift = p.size() - phi.size();
        if (c != 0)
            for (std::size_t i = 0; i + 1 < phi.size(); ++i)
                p[shift + i] -= c * Rat(phi[i]);
        p.pop_back();
        while (!p.empty() && p.size() >= phi.size() && p.back() == 0) p.pop_back();
    }
    return p;
}

}  // namespace

CycloElement::CycloElement(long conductor) : conductor_(conductor) {
    if (conductor < 1)
        throw InputError(errc::bad_argument, "conductor must be >= 1");
    coeff_.assign(static_cast<std::size_t>(euler_phi(conductor)), Rat(0));
}

CycloElement CycloElement::from_rational(long conductor, const Rat& value) {
    CycloElement e(conductor);
    e.coeff_[0] = value;
    return e;
}

CycloElement CycloElement::root_power(long conductor, long k) {
    CycloElement e(conductor);
    long d = conductor;
    k %= d;
    if (k < 0) k += d;
    const std::size_t phi = e.coeff_.size();
    if (static_cast<std::size_t>(k) < phi) {
        e.coeff_[static_cast<std::size_t>(k)] = 1;
        return e;
    }
    QPoly mono(static_cast<std::size_t>(k) + 1, Rat(0));
    mono.back() = 1;
    QPoly reduced = mod_monic(std::move(mono), cyclotomic_polynomial(d));
    reduced.resize(phi, Rat(0));
    e.coeff_ = std::move(reduced);
    return e;
}

bool CycloElement::is_zero() const noexcept {
    for (const Rat& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_rational() const noexcept {
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Rat CycloElement::rational_value() const {
    if (!is_rational())
        throw InputError(errc::bad_argument, "element is not rational");
    return coeff_.empty() ? Rat(0) : coeff_[0];
}

CycloElement CycloElement::galois_image(long k) const {
    long d = conductor_;
    long kk = k % d;
    if (kk < 0) kk += d;
    if (std::gcd(kk, d) != 1)
        throw InputError(errc::bad_argument, "galois exponent must be a unit mod d");
    QPoly image(static_cast<std::size_t>(d), Rat(0));
    bool oversized = false;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        std::size_t e = static_cast<std::size_t>(
            (static_cast<long>(i) * kk) % d);
        image[e] += coeff_[i];
        if (e >= coeff_.size()) oversized = true;
    }
    CycloElement result(conductor_);
    if (oversized || d == 1) {
        QPoly reduced = mod_monic(std::move(image), cyclotomic_polynomial(d));
        reduced.resize(result.coeff_.size(), Rat(0));
        result.coeff_ = std::move(reduced);
    } else {
        image.resize(result.coeff_.size());
        result.coeff_ = std::move(image);
    }
    return result;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
    if (conductor_ != rhs.conductor_)
        throw InputError(errc::bad_argument, "conductor mismatch");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
    if (conductor_ != rhs.conductor_)
        throw InputError(errc::bad_argument, "conductor mismatch");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
    return *this;
}

CycloElement operator+(CycloElement lhs, const CycloElement& rhs) {
    lhs += rhs;
    return lhs;
}

CycloElement operator-(CycloElement lhs, const CycloElement& rhs) {
    lhs -= rhs;
    return lhs;
}

CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs) {
    if (lhs.conductor_ != rhs.conductor_)
        throw InputError(errc::bad_argument, "conductor mismatch");
    const QPoly& a = lhs.coeff_;
    const QPoly& b = rhs.coeff_;
    QPoly prod(a.size() + b.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    QPoly reduced = mod_monic(std::move(prod), cyclotomic_polynomial(lhs.conductor_));
    CycloElement result(lhs.conductor_);
    reduced.resize(result.coeff_.size(), Rat(0));
    result.coeff_ = std::move(reduced);
    return result;
}

CycloElement operator*(const Rat& c, CycloElement v) {
    for (Rat& x : v.coeff_) x *= c;
    return v;
}

DirichletCharacter::DirichletCharacter(long p, long index) : p_(p), index_(index) {
    if (!is_prime(p) || p == 2)
        throw InputError(errc::not_odd_prime, "modulus must be an odd prime");
    if (index < 0 || index > p - 2)
        throw InputError(errc::bad_argument, "character index out of range [0, p-2]");
    root_ = least_primitive_root(p);
    dlog_.assign(static_cast<std::size_t>(p), 0);
    long value = 1;
    for (long e = 0; e < p - 1; ++e) {
        dlog_[static_cast<std::size_t>(value)] = e;
        value = value * root_ % p;
    }
}

long DirichletCharacter::value_exponent(long a) const {
    long r = a % p_;
    if (r < 0) r += p_;
    if (r == 0)
        throw InputError(errc::bad_argument, "character exponent undefined at 0");
    return index_ * dlog_[static_cast<std::size_t>(r)] % (p_ - 1);
}

CycloElement DirichletCharacter::value(long a) const {
    long r = a % p_;
    if (r < 0) r += p_;
    if (r == 0) return CycloElement(p_ - 1);
    return CycloElement::root_power(p_ - 1, value_exponent(a));
}

DirichletCharacter DirichletCharacter::inverse() const {
    return DirichletCharacter(p_, index_ == 0 ? 0 : p_ - 1 - index_);
}

CycloElement generalized_bernoulli(const DirichletCharacter& chi, int k) {
    if (k != 2)
        throw InputError(errc::bad_argument, "only B_{2,chi} is supported");
    const long p = chi.modulus();
    const QPoly b2 = bernoulli_polynomial(2);
    CycloElement sum(p - 1);
    for (long a = 1; a < p; ++a)
        sum += eval_poly(b2, rat(a, p)) * chi.value(a);
    return Rat(p) * sum;
}

CharacterSumReport character_weight_sum(const DirichletCharacter& chi) {
    const long p = chi.modulus();
    CycloElement direct(p - 1);
    for (long a = 1; a < p; ++a)
        direct += quad_weight(rat(a, p)) * chi.value(a);

    CharacterSumReport rep{std::move(direct), std::nullopt, true};
    if (!chi.is_trivial()) {
        rep.via_bernoulli = rat(-1, p) * generalized_bernoulli(chi);
        rep.routes_agree = *rep.via_bernoulli == rep.direct;
    }
    return rep;
}

NonvanishingReport verify_nonvanishing(long p) {
    if (!is_prime(p) || p == 2)
        throw InputError(errc::not_odd_prime, "p must be an odd prime");
    NonvanishingReport rep;
    rep.p = p;
    rep.passed = true;
    for (long t = 0; t <= p - 2; t += 2) {
        DirichletCharacter chi(p, t);
        CharacterSumReport sum = character_weight_sum(chi);
        bool nonzero = !sum.direct.is_zero();
        rep.even_characters.push_back({t, nonzero, sum.routes_agree});
        rep.passed = rep.passed && nonzero && sum.routes_agree;
    }
    return rep;
}

std::string cyclo_to_string(const CycloElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const QPoly& c = e.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Rat v = c[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        bool unit = v == 1 && i > 0;
        if (!unit) os << v.get_str();
        if (i > 0) {
            if (!unit) os << " ";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

GroupActionReport verify_group_action(long p) {
    if (!is_prime(p) || p == 2)
        throw InputError(errc::not_odd_prime, "p must be an odd prime");
    GroupActionReport rep;
    rep.p = p;
    rep.passed = true;
    auto fail = [&rep](const std::string& msg) {
        rep.passed = false;
        if (rep.first_failure.empty()) rep.first_failure = msg;
    };

    // weight vectors (S_alpha)_k = quad_weight(<alpha k / p>), k = 0..p-1
    std::vector<std::vector<Rat>> s(static_cast<std::size_t>(p));
    for (long alpha = 1; alpha < p; ++alpha) {
        auto& row = s[static_cast<std::size_t>(alpha)];
        row.resize(static_cast<std::size_t>(p));
        for (long k = 0; k < p; ++k)
            row[static_cast<std::size_t>(k)] =
                quad_weight(frac_part(rat(alpha * k, p)));
    }

    for (long alpha = 1; alpha < p && rep.passed; ++alpha) {
        const auto& row = s[static_cast<std::size_t>(alpha)];
        if (row[0] != 0) fail("S_alpha has non-zero 0th coordinate");
        for (long k = 1; k < p; ++k)
            if (row[static_cast<std::size_t>(k)] !=
                row[static_cast<std::size_t>(p - k)])
                fail("S_alpha not symmetric under k -> p-k");
        if (s[static_cast<std::size_t>(alpha)] !=
            s[static_cast<std::size_t>(p - alpha)])
            fail("S_alpha != S_{p-alpha}");
        // a . S_1 = S_a
        for (long k = 0; k < p; ++k)
            if (s[1][static_cast<std::size_t>(alpha * k % p)] !=
                row[static_cast<std::size_t>(k)])
                fail("a . S_1 != S_a");
    }

    for (long t = 0; t <= p - 2 && rep.passed; ++t) {
        DirichletCharacter chi(p, t);
        DirichletCharacter chi_inv = chi.inverse();
        // omega_k = sum_a chi(a) (S_1)_{ak mod p}
        std::vector<CycloElement> omega(static_cast<std::size_t>(p),
                                        CycloElement(p - 1));
        for (long k = 0; k < p; ++k)
            for (long a = 1; a < p; ++a)
                omega[static_cast<std::size_t>(k)] +=
                    s[1][static_cast<std::size_t>(a * k % p)] * chi.value(a);

        CharacterSumReport sum = character_weight_sum(chi);
        if (!(omega[1] == sum.direct))
            fail("first coordinate of omega_chi(S_1) != s_chi");

        for (long a = 1; a < p && rep.passed; ++a) {
            CycloElement eigen = chi_inv.value(a);
            for (long k = 0; k < p; ++k) {
                CycloElement lhs = omega[static_cast<std::size_t>(a * k % p)];
                CycloElement rhs = eigen * omega[static_cast<std::size_t>(k)];
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "eigenvector identity fails for character " << t
                       << " at a = " << a << ", k = " << k;
                    fail(os.str());
                    break;
                }
            }
        }
    }
    return rep;
}

}  // namespace torsec
