#include "ore/rational_factors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <stdexcept>

namespace ore {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::cpp_bin_float<300, mp::digit_base_2>>;
using Complex = mp::number<mp::complex_adaptor<mp::cpp_bin_float<300, mp::digit_base_2>>>;

Real to_real(const mpq_class& q) {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

mpz_class round_to_integer(const Real& v) {
    std::string s = Real(mp::round(v)).str(0, std::ios_base::fixed);
    if (auto dot = s.find('.'); dot != std::string::npos) s.resize(dot);
    return mpz_class(s);
}

Real larger(const Real& a, const Real& b) { return a < b ? b : a; }

Complex horner(const std::vector<Complex>& c, const Complex& z) {
    Complex acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
}

/// All complex roots of a squarefree monic polynomial (degree >= 1).
std::vector<Complex> aberth(const QPoly& p) {
    const std::size_t n = static_cast<std::size_t>(p.degree());
    std::vector<Complex> c, dc;
    for (const auto& q : p.coeffs()) c.emplace_back(to_real(q));
    for (std::size_t i = 1; i <= n; ++i) dc.push_back(c[i] * Real(i));
    Real bound = 1;
    for (std::size_t i = 0; i < n; ++i) bound = larger(bound, Real(1 + mp::abs(to_real(p.coeffs()[i]))));
    std::vector<Complex> z(n);
    const Real two_pi = 2 * mp::acos(Real(-1));
    for (std::size_t k = 0; k < n; ++k) {
        Real angle = two_pi * Real(k) / Real(n) + Real(0.4);
        z[k] = Complex(bound * mp::cos(angle), bound * mp::sin(angle));
    }
    const Real tol = Real("1e-85");
    for (int iter = 0; iter < 2000; ++iter) {
        Real worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex ratio = horner(c, z[k]) / horner(dc, z[k]);
            Complex s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) s += Complex(1) / (z[k] - z[j]);
            Complex w = ratio / (Complex(1) - ratio * s);
            z[k] -= w;
            worst = larger(worst, Real(mp::abs(w)) / larger(Real(1), Real(mp::abs(z[k]))));
        }
        if (worst < tol) break;
    }
    return z;
}

/// (Lead coefficient of the primitive integer form, which clears the
/// denominators of every monic rational factor.)
mpz_class clearing_denominator(const QPoly& monic) {
    mpz_class l = 1;
    for (const auto& c : monic.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

}  // namespace

LowDegreeFactors low_degree_factors(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factors of the zero polynomial");
    LowDegreeFactors out;
    QPoly s = squarefree_part(p);
    if (s.degree() < 1) return out;
    // Gauss: every monic factor of s has coefficients in (1/L) Z.
    const mpz_class L = clearing_denominator(s);
    const Real Lr(L.get_str());
    const Real imag_eps = Real("1e-60");
    for (const auto& z : aberth(s)) {
        const Real re = z.real(), im = z.imag();
        if (mp::abs(im) <= imag_eps) {
            mpq_class r(round_to_integer(re * Lr), L);
            r.canonicalize();
            if (s(r) == 0) out.roots.push_back(r);
        } else if (im > 0) {
            mpq_class sum(round_to_integer(2 * re * Lr), L), prod(round_to_integer((re * re + im * im) * Lr), L);
            sum.canonicalize();
            prod.canonicalize();
            if (sum * sum >= 4 * prod) continue;
            QPoly quad(std::vector<mpq_class>{prod, -sum, 1});
            if (divmod(s, quad).second.is_zero()) out.definite_quadratics.emplace_back(sum, prod);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    std::sort(out.definite_quadratics.begin(), out.definite_quadratics.end());
    out.definite_quadratics.erase(std::unique(out.definite_quadratics.begin(), out.definite_quadratics.end()),
                                  out.definite_quadratics.end());
    return out;
}

std::optional<std::array<mpz_class, 3>> three_squares(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return std::array<mpz_class, 3>{0, 0, 0};
    mpz_class m = n;
    while (m % 4 == 0) m /= 4;
    if (m % 8 == 7) return std::nullopt;
    for (mpz_class z = 0; z * z <= n; ++z) {
        for (mpz_class y = 0; y * y + z * z <= n; ++y) {
            mpz_class rest = n - y * y - z * z;
            if (rest == 0) continue;
            if (mpz_perfect_square_p(rest.get_mpz_t())) {
                mpz_class x;
                mpz_sqrt(x.get_mpz_t(), rest.get_mpz_t());
                return std::array<mpz_class, 3>{x, y, z};
            }
        }
    }
    return std::nullopt;
}

}  // namespace ore
