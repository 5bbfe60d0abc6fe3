#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsec/rational.hpp"
#include "torsec/surface.hpp"

namespace torsec {

// Dense univariate polynomials, lowest degree first.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

long euler_phi(long d);

// d-th cyclotomic polynomial, by exact division of x^d - 1 by the
// cyclotomic polynomials of the proper divisors of d.  Memoized.
ZPoly cyclotomic_polynomial(long d);

// Least primitive root mod an odd prime p.
long least_primitive_root(long p);

// Bernoulli polynomial for k in {0, 1, 2}; B_2(X) = X^2 - X + 1/6.
QPoly bernoulli_polynomial(int k);

Rat eval_poly(const QPoly& poly, const Rat& x);

// An element of the cyclotomic field Q(zeta_d), stored as a rational
// polynomial of degree < phi(d) in zeta_d, reduced modulo the (irreducible)
// d-th cyclotomic polynomial.  Zero test is therefore coefficient-wise.
class CycloElement {
public:
    explicit CycloElement(long conductor);  // zero element
    static CycloElement from_rational(long conductor, const Rat& value);
    static CycloElement root_power(long conductor, long k);  // zeta_d^k

    long conductor() const noexcept { return conductor_; }
    const QPoly& coefficients() const noexcept { return coeff_; }  // size phi(d)

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;  // all coefficients beyond degree 0 vanish
    Rat rational_value() const;         // requires is_rational()

    // Galois action zeta -> zeta^k for gcd(k, d) = 1.
    CycloElement galois_image(long k) const;

    CycloElement& operator+=(const CycloElement& rhs);
    CycloElement& operator-=(const CycloElement& rhs);
    friend CycloElement operator+(CycloElement lhs, const CycloElement& rhs);
    friend CycloElement operator-(CycloElement lhs, const CycloElement& rhs);
    friend CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs);
    friend CycloElement operator*(const Rat& c, CycloElement v);
    friend bool operator==(const CycloElement&, const CycloElement&) = default;

private:
    long conductor_;
    QPoly coeff_;
};

// Character mod an odd prime p, pinned to the least primitive root g:
// chi_t(g^e) = zeta_{p-1}^{t e}.  Values live in Q(zeta_{p-1}).
class DirichletCharacter {
public:
    DirichletCharacter(long p, long index);

    long modulus() const noexcept { return p_; }
    long index() const noexcept { return index_; }
    long primitive_root() const noexcept { return root_; }
    bool is_trivial() const noexcept { return index_ == 0; }
    bool is_even() const noexcept { return index_ % 2 == 0; }

    // Exponent e with chi(a) = zeta_{p-1}^e; a must be a unit mod p.
    long value_exponent(long a) const;
    CycloElement value(long a) const;  // chi(a); zero element when p | a
    DirichletCharacter inverse() const;

private:
    long p_, index_, root_;
    std::vector<long> dlog_;  // dlog_[a] for a = 1..p-1
};

// Generalized Bernoulli number B_{k,chi} = p^{k-1} sum_a chi(a) B_k(<a/p>),
// with chi(0) contributing nothing.  Only k = 2 is supported.
CycloElement generalized_bernoulli(const DirichletCharacter& chi, int k = 2);

struct CharacterSumReport {
    CycloElement direct;  // sum_a chi(a) quad_weight(<a/p>)
    std::optional<CycloElement> via_bernoulli;  // -(1/p) B_{2,chi}, nontrivial chi
    bool routes_agree = true;
};

// The twisted weight sum s_chi, by direct summation and (for nontrivial chi)
// through B_{2,chi}; the two routes must coincide exactly.
CharacterSumReport character_weight_sum(const DirichletCharacter& chi);

struct NonvanishingReport {
    long p = 0;
    bool passed = false;
    struct Entry {
        long index;
        bool nonzero;
        bool routes_agree;
    };
    std::vector<Entry> even_characters;
};

// Certifies s_chi != 0 for all (p-1)/2 even characters mod p, by exact
// computation in Q(zeta_{p-1}).
NonvanishingReport verify_nonvanishing(long p);

struct GroupActionReport {
    long p = 0;
    bool passed = false;
    std::string first_failure;
};

// Checks the unit-group action on the weight vectors: S_alpha = S_{p-alpha},
// a.S_1 = S_a, the twisted sums are eigenvectors with eigenvalue chi^{-1},
// and their first coordinate is s_chi.
GroupActionReport verify_group_action(long p);

// Readable polynomial form in z = zeta_d, e.g. "-4/25" or "1/3 + 2 z^2".
std::string cyclo_to_string(const CycloElement& e);

}  // namespace torsec
