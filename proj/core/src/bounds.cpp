#include "arclab/bounds.hpp"

#include <string>

#include "arclab/error.hpp"

namespace arclab {

namespace mp = boost::multiprecision;

TrivialBounds trivial_bounds(std::uint64_t q, std::uint64_t k)
{
    if (k > q * q) {
        throw PreconditionError("k = " + std::to_string(k) + " exceeds q^2 = " + std::to_string(q * q));
    }
    return {binomial(q, k), binomial(q * q, k)};
}

ProductBounds arc_probability_products(std::uint64_t q, std::uint64_t k)
{
    if (q == 0) {
        throw PreconditionError("q must be positive");
    }
    ProductBounds b{Rational(1), Rational(1)};
    const BigInt bq(q);
    for (std::uint64_t i = 2; i + 1 <= k; ++i) {
        b.lower *= Rational(bq - BigInt(i) * i, bq);
    }
    for (std::uint64_t i = 1; i + 2 <= k; ++i) {
        b.upper *= Rational(4 * bq - BigInt(i) * i, 4 * bq);
    }
    return b;
}

Real lower_exponential_constant(const Real& delta)
{
    if (!(delta > 0)) {
        throw PreconditionError("delta must be positive");
    }
    const Real x0 = 1 / ((1 + delta) * (1 + delta));
    return -mp::log1p(-x0) / x0;
}

SmallTBounds smallt_bounds(std::uint64_t q, std::uint64_t k, const Real& delta, const SmallTConstants& constants)
{
    if (!(delta > 0)) {
        throw PreconditionError("delta must be positive");
    }
    const Real lhs = Real(k) * Real(k) * (1 + delta) * (1 + delta);
    if (lhs > Real(q)) {
        throw PreconditionError("small-k regime needs k <= q^{1/2}/(1+delta) (q=" + std::to_string(q) +
                                ", k=" + std::to_string(k) + ")");
    }
    SmallTBounds out;
    const ProductBounds p = arc_probability_products(q, k);
    out.product_lo = p.lower;
    out.product_hi = p.upper;
    out.c = constants.c;
    out.C = constants.C > 0 ? constants.C : lower_exponential_constant(delta) / 3;
    const Real total(binomial(q * q, k));
    const Real cube = Real(k) * Real(k) * Real(k) / Real(q);
    out.exp_lo = total * mp::exp(-out.C * cube);
    out.exp_hi = total * mp::exp(-out.c * cube);
    out.scaled_product_lo = total * to_real(p.lower);
    out.scaled_product_hi = total * to_real(p.upper);
    return out;
}

LargeTBound larget_bound(std::uint64_t q, const Real& t, const Real& delta)
{
    if (!(delta > 0)) {
        throw PreconditionError("delta must be positive");
    }
    if (t < Real(0.5) + delta) {
        throw PreconditionError("large-k regime needs t >= 1/2 + delta");
    }
    if (t > 2) {
        throw PreconditionError("t must be at most 2");
    }
    LargeTBound out;
    const Real rq(q);
    out.k = floor_to_int(real_pow(rq, t)).convert_to<std::uint64_t>();
    out.top_real = 2 * real_pow(rq, 2 - t + 3 * delta / 2);
    out.top = floor_to_int(out.top_real);
    out.bound = binomial(out.top.convert_to<std::uint64_t>(), out.k);
    out.trivial_upper = binomial(q * q, out.k);
    return out;
}

bool ContainerCheck::all_pass() const
{
    return !terminal && cond1 && condition && cond2 && tau_in_range && epsilon_in_range;
}

ContainerCheck container_condition(const BoundParams& params)
{
    const Real& q = params.q;
    const Real& s = params.s;
    const Real& t = params.t;
    const Real& delta = params.delta;
    const Real& c = params.c;
    if (!(q > 1) || !(c > 0) || !(delta > 0)) {
        throw PreconditionError("container check needs q > 1, c > 0, delta > 0");
    }

    ContainerCheck r;
    r.terminal = s >= t - 3 * delta;
    r.tau = real_pow(q, s + t - 2 - delta);
    r.epsilon = real_pow(q, -delta);
    r.delta2 = q - 2;
    r.delta3 = 1;
    r.degree_lower = c * real_pow(q, 3 - 2 * s);

    r.cond1_lhs = 4 * (r.delta2 / (r.degree_lower * r.tau) + r.delta3 / (2 * r.degree_lower * r.tau * r.tau));
    r.cond1_rhs = r.epsilon / 72;
    r.cond1 = r.cond1_lhs <= r.cond1_rhs;

    r.condition_lhs = 1 / (c * real_pow(q, 2 - 2 * s) * r.tau) + 1 / (2 * c * real_pow(q, 3 - 2 * s) * r.tau * r.tau);
    r.condition_rhs = r.epsilon / 288;
    r.condition = r.condition_lhs <= r.condition_rhs;

    r.sufficiency1_lhs = real_pow(q, t - s - 2 * delta);
    r.sufficiency2_lhs = real_pow(q, 2 * t - 1 - 3 * delta);
    r.sufficiency_rhs = 1000 / c;
    r.sufficiency1 = r.sufficiency1_lhs >= r.sufficiency_rhs;
    r.sufficiency2 = r.sufficiency2_lhs >= r.sufficiency_rhs;

    r.cond2_margin = Real(1) / 3600 - r.tau;
    r.cond2 = r.cond2_margin > 0;
    r.tau_in_range = r.tau > 0 && r.tau < Real(0.5);
    r.epsilon_in_range = r.epsilon > 0 && r.epsilon < Real(0.5);

    const Real log2q = mp::log2(q);
    r.container_size_cap = real_pow(q, 2 - t + 3 * delta);
    r.log2_container_count = params.c_delta * real_pow(q, t - delta) * log2q * log2q;
    r.iterations = 4 * t / delta;
    return r;
}

F3lBounds f3l_bounds(const Real& n, unsigned l, const Real& delta)
{
    if (l < 4) {
        throw PreconditionError("f_{3,l} bounds need l >= 4");
    }
    if (!(n > 0)) {
        throw PreconditionError("n must be positive");
    }
    F3lBounds out;
    out.exponent = Real(l - 1) / Real(l - 2) * (Real(0.5) + delta);
    out.upper = real_pow(n, out.exponent);
    out.lower = mp::sqrt(n) / mp::sqrt(Real(l));
    return out;
}

BigInt mds_count(std::uint64_t q, std::uint64_t n, const BigInt& arcs)
{
    if (n < 3) {
        throw PreconditionError("MDS count needs n >= 3");
    }
    if (arcs < 0) {
        throw PreconditionError("arc count must be non-negative");
    }
    BigInt numerator = factorial(n) * mp::pow(BigInt(q - 1), static_cast<unsigned>(n - 2)) * arcs;
    const BigInt denominator = BigInt(q) * q * q * (BigInt(q) * q + q + 1) * (q + 1);
    BigInt quotient;
    BigInt remainder;
    mp::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw PreconditionError("MDS formula is not integral for B = " + arcs.str() +
                                "; the arc count is inconsistent");
    }
    return quotient;
}

}  // namespace arclab
