#include "qdensity/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "qdensity/errors.hpp"

namespace qdensity::numeric {

namespace {

namespace bmp = boost::multiprecision;

template <unsigned Bits>
using BinFloat = bmp::number<bmp::cpp_bin_float<Bits, bmp::digit_base_2>, bmp::et_off>;
template <unsigned Bits>
using BinComplex =
    bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<Bits, bmp::digit_base_2>>, bmp::et_off>;

template <class Real>
struct Precision;

template <>
struct Precision<double> {
    using C = std::complex<double>;
    static constexpr unsigned bits = 53;
};
template <>
struct Precision<long double> {
    using C = std::complex<long double>;
    static constexpr unsigned bits = 64;
};
template <>
struct Precision<BinFloat<113>> {
    using C = BinComplex<113>;
    static constexpr unsigned bits = 113;
};
template <>
struct Precision<BinFloat<256>> {
    using C = BinComplex<256>;
    static constexpr unsigned bits = 256;
};

template <class Real>
using ComplexOf = typename Precision<Real>::C;

template <class Real>
ComplexOf<Real> lift(Complex z) {
    return ComplexOf<Real>(Real(z.real()), Real(z.imag()));
}

template <class C>
Complex lower(const C& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class C>
double magnitude(const C& z) {
    using std::abs;
    return static_cast<double>(abs(z));
}

template <class C>
C ipow(C base, std::uint64_t e) {
    C out(1);
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

/// exp(2 pi i j / M), exact on quarter turns.
template <class Real>
ComplexOf<Real> unit_root(std::uint64_t j, std::uint64_t period) {
    using C = ComplexOf<Real>;
    j %= period;
    if ((4 * j) % period == 0) {
        switch ((4 * j) / period) {
            case 0: return C(Real(1), Real(0));
            case 1: return C(Real(0), Real(1));
            case 2: return C(Real(-1), Real(0));
            default: return C(Real(0), Real(-1));
        }
    }
    using std::cos;
    using std::sin;
    const Real angle = 2 * boost::math::constants::pi<Real>() * Real(j) / Real(period);
    return C(cos(angle), sin(angle));
}

unsigned tier_for(unsigned bits) {
    for (unsigned t : kPrecisionTiers) {
        if (bits <= t) return t;
    }
    throw std::invalid_argument("precision of " + std::to_string(bits) +
                                " bits is not supported (max " +
                                std::to_string(kPrecisionTiers[std::size(kPrecisionTiers) - 1]) + ")");
}

template <class F>
EvalResult dispatch(unsigned bits, F&& f) {
    EvalResult r;
    switch (tier_for(bits)) {
        case 53: r = f(double{}); break;
        case 64: r = f((long double){}); break;
        case 113: r = f(BinFloat<113>{}); break;
        default: r = f(BinFloat<256>{}); break;
    }
    r.precision_bits = tier_for(bits);
    return r;
}

template <class F>
EvalResult run(const EvalOptions& opts, F&& f) {
    opts.validate();
    EvalResult r = dispatch(opts.precision_bits, f);
    if (opts.auto_extend && r.cancellation > kCancellationThreshold &&
        tier_for(opts.extended_bits) > r.precision_bits) {
        r = dispatch(opts.extended_bits, f);
    }
    return r;
}

/// r^{T+1} / (1 - r): the geometric tail beyond exponent T.
double tail_sum(double r, std::uint64_t terms) {
    if (r == 0.0) return 0.0;
    return std::exp(static_cast<double>(terms + 1) * std::log(r)) / (1.0 - r);
}

/// Smallest T with scale * r^{T+1}/(1-r) <= target.
std::uint64_t terms_for(double r, double scale, double target, std::uint64_t max_terms) {
    if (r == 0.0 || scale == 0.0) return 0;
    const double x = std::log(target * (1.0 - r) / scale) / std::log(r) - 1.0;
    const double t = std::ceil(std::max(x, 0.0));
    if (!(t <= static_cast<double>(max_terms))) {
        throw ResourceLimitError("evaluation needs about " + std::to_string(t) +
                                 " terms, above max_terms = " + std::to_string(max_terms) +
                                 "; |q| is too close to 1 for the requested eps");
    }
    return static_cast<std::uint64_t>(t);
}

std::uint64_t grow_terms(std::uint64_t t, std::uint64_t max_terms) {
    const std::uint64_t next = 2 * t + 16;
    if (next > max_terms) {
        throw ResourceLimitError("truncation bound not met within max_terms = " +
                                 std::to_string(max_terms));
    }
    return next;
}

template <class Real>
struct Partial {
    ComplexOf<Real> value;
    double magnitude = 0.0;
};

template <class Real>
Partial<Real> direct_sum(const subsets::SubsetSpec& spec, Complex q, std::uint64_t terms) {
    using C = ComplexOf<Real>;
    const C qc = lift<Real>(q);
    const C one(1);
    C tail = one;
    C acc(0);
    double mag = 0.0;
    C next_pow = ipow(qc, terms + 1);  // q^{n+1}

    constexpr std::uint64_t kBlock = 4096;
    std::vector<C> pw;
    for (std::uint64_t hi = terms; hi >= 1;) {
        const std::uint64_t lo = hi > kBlock ? hi - kBlock + 1 : 1;
        pw.assign(hi - lo + 1, C(0));
        pw[0] = ipow(qc, lo);
        for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * qc;
        for (std::uint64_t n = hi; n >= lo; --n) {
            const C& qn = pw[n - lo];
            tail *= one - next_pow;
            if (spec.contains(n)) {
                const C term = qn * tail;
                acc += term;
                mag += magnitude(term);
            }
            next_pow = qn;
            if (n == lo) break;
        }
        if (lo == 1) break;
        hi = lo - 1;
    }
    return {acc, mag};
}

double cancellation_of(double summed_magnitude, Complex value) {
    const double v = std::abs(value);
    if (summed_magnitude == 0.0) return 1.0;
    if (v == 0.0) return std::numeric_limits<double>::infinity();
    return std::max(1.0, summed_magnitude / v);
}

} // namespace

ComplexPoint::ComplexPoint(Complex q) : q_(q) {
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) || !(std::abs(q) < 1.0)) {
        throw std::invalid_argument("q must lie strictly inside the unit disk");
    }
}

void EvalOptions::validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (max_terms == 0) throw std::invalid_argument("max_terms must be at least 1");
    tier_for(precision_bits);
    tier_for(extended_bits);
}

EvalOptions EvalOptions::from_environment() { return from_environment(EvalOptions{}); }

EvalOptions EvalOptions::from_environment(EvalOptions base) {
    if (const char* env = std::getenv("QDENSITY_PRECISION_BITS")) {
        try {
            base.precision_bits = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("QDENSITY_PRECISION_BITS is not an integer: ") + env);
        }
        if (base.extended_bits < base.precision_bits) base.extended_bits = base.precision_bits;
    }
    return base;
}

EvalResult pochhammer_inf(Complex a, ComplexPoint q, const EvalOptions& opts) {
    if (std::abs(a) > 1.0) throw std::invalid_argument("pochhammer_inf requires |a| <= 1");
    if (a == Complex(0.0)) {
        opts.validate();
        return {Complex(1.0), 0.0, 0, tier_for(opts.precision_bits), 1.0};
    }
    return run(opts, [&](auto tag) -> EvalResult {
        using Real = decltype(tag);
        using C = ComplexOf<Real>;
        const double r = q.modulus();
        const double scale = std::abs(a);
        std::uint64_t terms = terms_for(r, scale, opts.eps / 4, opts.max_terms);
        const C ac = lift<Real>(a);
        const C qc = lift<Real>(q.value());
        const C one(1);
        for (;;) {
            C prod = one;
            C qm = one;
            for (std::uint64_t m = 0; m <= terms; ++m) {
                const C factor = one - ac * qm;
                if (factor == C(0)) return {Complex(0.0), 0.0, m + 1, 0, 1.0};
                prod *= factor;
                qm *= qc;
            }
            const double s = scale * tail_sum(r, terms);
            const double bound = magnitude(prod) * std::expm1(s);
            if (bound <= opts.eps) return {lower(prod), bound, terms + 1, 0, 1.0};
            terms = grow_terms(terms, opts.max_terms);
        }
    });
}

EvalResult pochhammer_ratio(Complex a, ComplexPoint q, const EvalOptions& opts) {
    if (std::abs(a) > 1.0) throw std::invalid_argument("pochhammer_ratio requires |a| <= 1");
    if (a == Complex(1.0)) {
        opts.validate();
        return {Complex(1.0), 0.0, 0, tier_for(opts.precision_bits), 1.0};
    }
    return run(opts, [&](auto tag) -> EvalResult {
        using Real = decltype(tag);
        using C = ComplexOf<Real>;
        const double r = q.modulus();
        const double scale = std::abs(1.0 - a);
        std::uint64_t terms = terms_for(r, scale, opts.eps / 4, opts.max_terms);
        const C ac = lift<Real>(a);
        const C qc = lift<Real>(q.value());
        const C one(1);
        for (;;) {
            C prod = one;
            C qj = one;
            for (std::uint64_t j = 1; j <= terms; ++j) {
                qj *= qc;
                prod *= (one - qj) / (one - ac * qj);
            }
            const double s = scale * tail_sum(r, terms) /
                             (1.0 - std::pow(r, static_cast<double>(terms + 1)));
            const double bound = magnitude(prod) * std::expm1(s);
            if (bound <= opts.eps) return {lower(prod), bound, terms, 0, 1.0};
            terms = grow_terms(terms, opts.max_terms);
        }
    });
}

EvalResult qbinomial_series(Complex a, Complex z, ComplexPoint q, const EvalOptions& opts) {
    if (std::abs(a) > 1.0) throw std::invalid_argument("qbinomial_series requires |a| <= 1");
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("qbinomial_series requires |z| < 1");
    return run(opts, [&](auto tag) -> EvalResult {
        using Real = decltype(tag);
        using C = ComplexOf<Real>;
        const double r = q.modulus();
        const double az = std::abs(a);
        const double zz = std::abs(z);
        const C ac = lift<Real>(a);
        const C zc = lift<Real>(z);
        const C qc = lift<Real>(q.value());
        const C one(1);

        C term = one;  // t_n = (a;q)_n / (q;q)_n z^n
        C sum = one;
        C qn = one;    // q^n
        double mag = 1.0;
        for (std::uint64_t n = 0; n < opts.max_terms; ++n) {
            term *= (one - ac * qn) * zc / (one - qn * qc);
            qn *= qc;
            // Ratio bound for every later step: (1 + |a| r^{n+1}) |z| / (1 - r^{n+2}).
            const double rn1 = std::pow(r, static_cast<double>(n + 1));
            const double rho = (1.0 + az * rn1) * zz / (1.0 - rn1 * r);
            const double t = magnitude(term);
            if (rho < 1.0) {
                const double bound = t / (1.0 - rho);
                if (bound <= opts.eps) {
                    return {lower(sum), bound, n + 1, 0, cancellation_of(mag, lower(sum))};
                }
            }
            sum += term;
            mag += t;
        }
        throw ResourceLimitError("q-binomial series did not reach eps within max_terms");
    });
}

EvalResult f_direct(const subsets::SubsetSpec& spec, ComplexPoint q, const EvalOptions& opts) {
    return run(opts, [&](auto tag) -> EvalResult {
        using Real = decltype(tag);
        const double r = q.modulus();
        std::uint64_t terms = terms_for(r, 2.0, opts.eps / 2, opts.max_terms);
        for (;;) {
            const auto partial = direct_sum<Real>(spec, q.value(), terms);
            const double sigma = tail_sum(r, terms);
            // Omitted n > T, plus the product factors beyond q^{T+1} in every kept term.
            const double bound = sigma * std::exp(sigma) + partial.magnitude * std::expm1(sigma);
            if (bound <= opts.eps) {
                const Complex v = lower(partial.value);
                return {v, bound, terms, 0, cancellation_of(partial.magnitude, v)};
            }
            terms = grow_terms(terms, opts.max_terms);
        }
    });
}

SieveWeights SieveWeights::from_spec(const subsets::SubsetSpec& spec, std::uint64_t period_cap) {
    SieveWeights w;
    if (const auto* kf = std::get_if<subsets::KFree>(&spec.variant())) {
        // Inclusion-exclusion over the prime powers; avoids listing residues.
        const auto reduction_period = [&] {
            std::uint64_t m = 1;
            std::vector<std::uint64_t> powers;
            for (auto p : subsets::primes_up_to(kf->prime_bound)) {
                std::uint64_t pk = 1;
                for (unsigned i = 0; i < kf->power; ++i) {
                    if (pk > period_cap / p) throw ResourceLimitError("sieve period exceeds cap");
                    pk *= p;
                }
                if (m > period_cap / pk) {
                    throw ResourceLimitError("sieve period exceeds cap of " + std::to_string(period_cap) +
                                             "; use the direct route");
                }
                m *= pk;
                powers.push_back(pk);
            }
            return std::make_pair(m, powers);
        }();
        const auto& [period, powers] = reduction_period;
        w.period_ = period;
        const std::size_t subsets_count = std::size_t{1} << powers.size();
        for (std::size_t mask = 0; mask < subsets_count; ++mask) {
            std::uint64_t d = 1;
            int sign = 1;
            for (std::size_t i = 0; i < powers.size(); ++i) {
                if (mask & (std::size_t{1} << i)) {
                    d *= powers[i];
                    sign = -sign;
                }
            }
            w.kfree_moduli_.emplace_back(period / d, sign);
        }
        std::uint64_t count = 1;
        for (auto pk : powers) count *= pk - 1;
        w.residue_count_ = count;
        w.contains_zero_ = false;
        return w;
    }
    auto reduction = subsets::period_residues(spec, period_cap);
    w.period_ = reduction.period;
    w.residue_count_ = reduction.residues.size();
    w.contains_zero_ = reduction.contains_residue(0);
    w.integral_ = reduction.residues.size() == reduction.period;
    w.residues_ = std::move(reduction.residues);
    return w;
}

Complex SieveWeights::weight(std::uint64_t m) const {
    if (m == 0 || m > period_) throw std::out_of_range("sieve weight index must be in 1..M");
    if (!kfree_moduli_.empty()) {
        std::int64_t total = 0;
        for (const auto& [step, sign] : kfree_moduli_) {
            if (m % step == 0) total += sign * static_cast<std::int64_t>(step);
        }
        return Complex(static_cast<double>(total), 0.0);
    }
    Complex total = 0.0;
    for (auto r : residues_) {
        const std::uint64_t j = (period_ - (m % period_) * r % period_) % period_;
        total += unit_root<double>(j, period_);
    }
    return total;
}

std::vector<Complex> SieveWeights::values() const {
    std::vector<Complex> out;
    out.reserve(period_);
    for (std::uint64_t m = 1; m <= period_; ++m) out.push_back(weight(m));
    return out;
}

namespace {

template <class Real>
ComplexOf<Real> weight_in(const SieveWeights& w, std::uint64_t m) {
    using C = ComplexOf<Real>;
    const std::uint64_t period = w.period();
    if (!w.kfree_terms().empty()) {
        std::int64_t total = 0;
        for (const auto& [step, sign] : w.kfree_terms()) {
            if (m % step == 0) total += sign * static_cast<std::int64_t>(step);
        }
        return C(Real(total), Real(0));
    }
    C total(0);
    for (auto r : w.residues()) {
        const std::uint64_t j = (period - (m % period) * r % period) % period;
        total += unit_root<Real>(j, period);
    }
    return total;
}

} // namespace

EvalResult f_sieve(const subsets::SubsetSpec& spec, ComplexPoint q, const EvalOptions& opts) {
    opts.validate();
    const SieveWeights weights = SieveWeights::from_spec(spec, opts.sieve_period_cap);
    return run(opts, [&](auto tag) -> EvalResult {
        using Real = decltype(tag);
        using C = ComplexOf<Real>;
        const double r = q.modulus();
        const std::uint64_t period = weights.period();
        std::uint64_t terms = terms_for(r, 2.0, opts.eps / 4, opts.max_terms);
        const C qc = lift<Real>(q.value());
        const C one(1);
        for (;;) {
            std::vector<C> qpow(terms + 1, one);
            for (std::uint64_t j = 1; j <= terms; ++j) qpow[j] = qpow[j - 1] * qc;

            C sum(0);
            double ratio_mag = 0.0;  // sum |w_m| |ratio_m| over m < M
            for (std::uint64_t m = 1; m <= period; ++m) {
                const C w = weight_in<Real>(weights, m);
                if (w == C(0)) continue;
                if (m == period) {
                    sum += w;  // (q;q)_inf / (q;q)_inf = 1
                    continue;
                }
                const C a = unit_root<Real>(m, period);
                C ratio = one;
                for (std::uint64_t j = 1; j <= terms; ++j) {
                    ratio *= (one - qpow[j]) / (one - a * qpow[j]);
                }
                const C term = w * ratio;
                sum += term;
                ratio_mag += magnitude(term);
            }
            C value = sum / C(Real(period), Real(0));
            double euler_mag = 0.0;
            const double sigma = tail_sum(r, terms);
            if (weights.contains_zero()) {
                C euler = one;
                for (std::uint64_t j = 1; j <= terms; ++j) euler *= one - qpow[j];
                value -= euler;
                euler_mag = magnitude(euler);
            }
            const double rt = std::pow(r, static_cast<double>(terms + 1));
            const double s = 2.0 * sigma / (1.0 - rt);
            const double bound = ratio_mag / static_cast<double>(period) * std::expm1(s) +
                                 euler_mag * std::expm1(sigma);
            if (bound <= opts.eps) {
                const Complex v = lower(value);
                const double total_mag = (ratio_mag + static_cast<double>(weights.residue_count())) /
                                             static_cast<double>(period) +
                                         euler_mag;
                return {v, bound, terms * period, 0, cancellation_of(total_mag, v)};
            }
            terms = grow_terms(terms, opts.max_terms);
        }
    });
}

EvalResult evaluate(const subsets::SubsetSpec& spec, ComplexPoint q, Route route,
                    const EvalOptions& opts) {
    return route == Route::Direct ? f_direct(spec, q, opts) : f_sieve(spec, q, opts);
}

ComplexPoint q_of_z(Complex z) {
    if (!(z.imag() > 0.0)) throw std::invalid_argument("q(z) requires Im(z) > 0");
    const double two_pi = 2.0 * boost::math::constants::pi<double>();
    return ComplexPoint(std::exp(Complex(0.0, -two_pi) / z));
}

RootOfUnity::RootOfUnity(std::int64_t numerator, std::uint64_t denominator)
    : h_(numerator), m_(denominator) {
    if (denominator == 0) throw std::invalid_argument("root of unity needs a positive order");
    const auto g = std::gcd(static_cast<std::uint64_t>(numerator < 0 ? -numerator : numerator), denominator);
    if (g != 1) throw std::invalid_argument("root of unity requires gcd(h, m) = 1");
}

Complex RootOfUnity::value() const {
    const auto m = static_cast<std::int64_t>(m_);
    const auto j = static_cast<std::uint64_t>(((h_ % m) + m) % m);
    return unit_root<double>(j, m_);
}

std::vector<RadialEntry> radial_sequence(const subsets::SubsetSpec& spec, const RootOfUnity& root,
                                         const std::vector<double>& radii,
                                         const EvalOptions& opts, Route route) {
    std::vector<RadialEntry> out;
    out.reserve(radii.size());
    const Complex zeta = root.value();
    for (double radius : radii) {
        RadialEntry entry;
        entry.radius = radius;
        try {
            if (!(radius > 0.0 && radius < 1.0)) {
                throw std::invalid_argument("radius must lie in (0, 1)");
            }
            entry.result = evaluate(spec, ComplexPoint(radius * zeta), route, opts);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<double> geometric_radii(unsigned count) {
    std::vector<double> out;
    for (unsigned j = 1; j <= count; ++j) out.push_back(1.0 - std::ldexp(1.0, -static_cast<int>(j)));
    return out;
}

} // namespace qdensity::numeric
