#include "torsec/lattice.hpp"

#include <sstream>

namespace torsec {

DivisorVector operator+(const DivisorVector& v, const DivisorVector& w) {
    if (v.coefficients.size() != w.coefficients.size())
        throw InputError(errc::length_mismatch, "divisor dimension mismatch");
    DivisorVector r = v;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
        r.coefficients[i] += w.coefficients[i];
    return r;
}

DivisorVector operator-(const DivisorVector& v, const DivisorVector& w) {
    if (v.coefficients.size() != w.coefficients.size())
        throw InputError(errc::length_mismatch, "divisor dimension mismatch");
    DivisorVector r = v;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
        r.coefficients[i] -= w.coefficients[i];
    return r;
}

DivisorVector operator*(const Rat& c, const DivisorVector& v) {
    DivisorVector r = v;
    for (auto& x : r.coefficients) x *= c;
    return r;
}

LatticeBasis::LatticeBasis(FiberConfiguration config) : config_(std::move(config)) {
    std::size_t off = 2;
    offsets_.reserve(config_.fiber_count());
    for (long m : config_.fiber_lengths()) {
        offsets_.push_back(off);
        off += static_cast<std::size_t>(m - 1);
    }
    rank_ = off;
}

std::size_t LatticeBasis::component_index(std::size_t j, long k) const {
    if (j >= config_.fiber_count())
        throw InputError(errc::bad_index, "fiber index out of range");
    long m = config_.fiber_lengths()[j];
    if (k < 1 || k >= m)
        throw InputError(errc::bad_index, "component index out of range [1,m)");
    return offsets_[j] + static_cast<std::size_t>(k - 1);
}

DivisorVector LatticeBasis::zero_vector() const {
    return DivisorVector{std::vector<Rat>(rank_, Rat(0))};
}

DivisorVector LatticeBasis::basis_vector(std::size_t index) const {
    if (index >= rank_)
        throw InputError(errc::bad_index, "basis index out of range");
    DivisorVector v = zero_vector();
    v.coefficients[index] = 1;
    return v;
}

QMatrix gram_matrix(const LatticeBasis& b) {
    const std::size_t n = b.rank();
    QMatrix g(n, std::vector<Rat>(n, Rat(0)));
    g[0][0] = -b.config().chi();
    g[0][1] = 1;
    g[1][0] = 1;
    for (std::size_t j = 0; j < b.config().fiber_count(); ++j) {
        long m = b.config().fiber_lengths()[j];
        for (long k = 1; k < m; ++k) {
            std::size_t i = b.component_index(j, k);
            g[i][i] = -2;
            if (k + 1 < m) {
                std::size_t i2 = b.component_index(j, k + 1);
                g[i][i2] = 1;
                g[i2][i] = 1;
            }
        }
    }
    return g;
}

Rat intersect(const LatticeBasis& b, const DivisorVector& v, const DivisorVector& w) {
    const std::size_t n = b.rank();
    if (v.coefficients.size() != n || w.coefficients.size() != n)
        throw InputError(errc::length_mismatch, "divisor dimension mismatch");
    const auto& x = v.coefficients;
    const auto& y = w.coefficients;
    Rat acc = -b.config().chi() * x[0] * y[0] + x[0] * y[1] + x[1] * y[0];
    for (std::size_t j = 0; j < b.config().fiber_count(); ++j) {
        long m = b.config().fiber_lengths()[j];
        for (long k = 1; k < m; ++k) {
            std::size_t i = b.component_index(j, k);
            acc -= 2 * x[i] * y[i];
            if (k + 1 < m) {
                std::size_t i2 = b.component_index(j, k + 1);
                acc += x[i] * y[i2] + x[i2] * y[i];
            }
        }
    }
    return acc;
}

DivisorVector component_class(const LatticeBasis& b, std::size_t j, long k) {
    if (j >= b.config().fiber_count())
        throw InputError(errc::bad_index, "fiber index out of range");
    long m = b.config().fiber_lengths()[j];
    if (k < 0 || k >= m)
        throw InputError(errc::bad_index, "component index out of range [0,m)");
    if (k >= 1) return b.basis_vector(b.component_index(j, k));
    // C_0 = F - sum_{k>=1} C_k, the unique relation in the lattice
    DivisorVector v = b.basis_vector(LatticeBasis::fiber_index);
    for (long i = 1; i < m; ++i) v.coefficients[b.component_index(j, i)] = -1;
    return v;
}

DivisorVector correction_divisor(const LatticeBasis& b, std::size_t j, long k) {
    if (j >= b.config().fiber_count())
        throw InputError(errc::bad_index, "fiber index out of range");
    long m = b.config().fiber_lengths()[j];
    if (k < 0 || k >= m)
        throw InputError(errc::bad_index, "component index out of range [0,m)");
    DivisorVector v = b.zero_vector();
    if (k == 0) return v;
    for (long i = 1; i < m; ++i)
        v.coefficients[b.component_index(j, i)] =
            i <= k ? (m - k) * i : k * (m - i);
    return v;
}

CorrectionLemmaReport verify_correction_intersections(const LatticeBasis& b) {
    CorrectionLemmaReport rep;
    const DivisorVector s0 = b.basis_vector(LatticeBasis::zero_section_index);
    for (std::size_t j = 0; j < b.config().fiber_count(); ++j) {
        long m = b.config().fiber_lengths()[j];
        for (long k = 0; k < m; ++k) {
            DivisorVector d = correction_divisor(b, j, k);
            Rat vs0 = intersect(b, d, s0);
            if (vs0 != 0) {
                rep.passed = false;
                std::ostringstream os;
                os << "D(" << j + 1 << "," << k << ").S_0 = " << vs0.get_str()
                   << ", expected 0";
                rep.first_failure = os.str();
                return rep;
            }
            for (long l = 0; l < m; ++l) {
                Rat expected(0);
                if (k != 0 && l == 0) expected = m;
                else if (k != 0 && l == k) expected = -m;
                Rat found = intersect(b, d, component_class(b, j, l));
                if (found != expected) {
                    rep.passed = false;
                    std::ostringstream os;
                    os << "D(" << j + 1 << "," << k << ").C(" << j + 1 << "," << l
                       << ") = " << found.get_str() << ", expected "
                       << expected.get_str();
                    rep.first_failure = os.str();
                    return rep;
                }
            }
        }
    }
    return rep;
}

DivisorVector section_class(const LatticeBasis& b, const ComponentAssignment& a) {
    if (a.components().size() != b.config().fiber_count())
        throw InputError(errc::length_mismatch, "assignment does not match config");
    if (a.is_zero())
        throw InputError(errc::zero_section,
                         "section class formula requires a non-zero section");
    DivisorVector v = b.basis_vector(LatticeBasis::zero_section_index);
    v.coefficients[LatticeBasis::fiber_index] = b.config().chi();
    for (std::size_t j = 0; j < b.config().fiber_count(); ++j) {
        long m = b.config().fiber_lengths()[j];
        long k = a.components()[j];
        if (k == 0) continue;
        v = v - rat(1, m) * correction_divisor(b, j, k);
    }
    return v;
}

SectionClassReport verify_section_class(const LatticeBasis& b,
                                        const ComponentAssignment& a) {
    SectionClassReport rep;
    const DivisorVector v = section_class(b, a);
    const DivisorVector s0 = b.basis_vector(LatticeBasis::zero_section_index);
    const DivisorVector f = b.basis_vector(LatticeBasis::fiber_index);

    rep.meets_fiber_once = intersect(b, v, f) == 1;
    rep.disjoint_from_zero = intersect(b, v, s0) == 0;
    rep.component_checks = true;
    for (std::size_t j = 0; j < b.config().fiber_count() && rep.component_checks;
         ++j) {
        long m = b.config().fiber_lengths()[j];
        for (long l = 0; l < m; ++l) {
            Rat expected = l == a.components()[j] ? 1 : 0;
            Rat found = intersect(b, v, component_class(b, j, l));
            if (found != expected) {
                rep.component_checks = false;
                std::ostringstream os;
                os << "V.C(" << j + 1 << "," << l << ") = " << found.get_str()
                   << ", expected " << expected.get_str();
                rep.first_failure = os.str();
                break;
            }
        }
    }
    if (!rep.meets_fiber_once && rep.first_failure.empty())
        rep.first_failure = "V.F != 1";
    if (!rep.disjoint_from_zero && rep.first_failure.empty())
        rep.first_failure = "V.S_0 != 0";

    rep.self_intersection = intersect(b, v, v);
    rep.self_intersection_is_minus_chi =
        rep.self_intersection == Rat(-b.config().chi());
    return rep;
}

}  // namespace torsec
