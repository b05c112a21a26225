#pragma once

#include <cstdint>

#include "arclab/numeric.hpp"

namespace arclab {

// C(q,k) <= A(q,k) <= C(q^2,k). Requires k <= q^2.
struct TrivialBounds {
    BigInt lower;
    BigInt upper;
};

TrivialBounds trivial_bounds(std::uint64_t q, std::uint64_t k);

// prod_{i=2}^{k-1} (1 - i^2/q)  <=  P(k random points form an arc)  <=  prod_{i=1}^{k-2} (1 - i^2/(4q))
struct ProductBounds {
    Rational lower;
    Rational upper;
};

ProductBounds arc_probability_products(std::uint64_t q, std::uint64_t k);

// Largest D with e^{-Dx} <= 1 - x on [0, 1/(1+delta)^2]: D = -ln(1 - x0)/x0 at x0 = 1/(1+delta)^2.
Real lower_exponential_constant(const Real& delta);

struct SmallTConstants {
    // Upper-side constant. 1/108 is the largest c for which e^{-ck^3/q} dominates the
    // upper product for every k >= 3 (the k = 3 factor forces it).
    Real c = Real(1) / 108;
    // Lower-side constant; zero selects D(delta)/3.
    Real C = 0;
};

struct SmallTBounds {
    Rational product_lo;
    Rational product_hi;
    Real exp_lo;  // C(q^2,k) e^{-C k^3/q}
    Real exp_hi;  // C(q^2,k) e^{-c k^3/q}
    Real scaled_product_lo;  // C(q^2,k) * product_lo
    Real scaled_product_hi;
    Real c;
    Real C;
};

// Requires k <= q^{1/2}/(1+delta), delta > 0.
SmallTBounds smallt_bounds(std::uint64_t q, std::uint64_t k, const Real& delta, const SmallTConstants& constants = {});

// A(q,k) <= C(2 q^{2-t+3delta/2}, k) with k = floor(q^t). The real top index is
// floored before it enters the binomial. Requires t >= 1/2 + delta, delta > 0.
struct LargeTBound {
    std::uint64_t k = 0;
    Real top_real;
    BigInt top;
    BigInt bound;
    BigInt trivial_upper;  // C(q^2, k) for comparison
};

LargeTBound larget_bound(std::uint64_t q, const Real& t, const Real& delta);

// Parameters of one container-iteration step applied to a set of size q^{2-s}.
struct BoundParams {
    Real q = 0;
    Real s = 0;
    Real t = 0;
    Real delta = 0;
    Real c = 1;        // supersaturation constant
    Real c_delta = 1;  // constant in the container-count exponent
};

// Hypothesis arithmetic of the container theorem for the collinear-triple
// hypergraph with tau = q^{s+t-2-delta}, epsilon = q^{-delta}.
struct ContainerCheck {
    bool terminal = false;  // s >= t - 3 delta: the set is already small enough
    Real tau;
    Real epsilon;
    Real delta2;  // q - 2
    Real delta3;  // 1
    Real degree_lower;  // c q^{3-2s}

    Real cond1_lhs;  // 4 (Δ2/(dτ) + Δ3/(2dτ^2)) with the bounds above
    Real cond1_rhs;  // ε / 72
    bool cond1 = false;

    Real condition_lhs;  // 1/(c q^{2-2s} τ) + 1/(2c q^{3-2s} τ^2)
    Real condition_rhs;  // ε / 288
    bool condition = false;

    Real sufficiency1_lhs;  // q^{t-s-2δ}
    Real sufficiency2_lhs;  // q^{2t-1-3δ}
    Real sufficiency_rhs;   // 1000 / c
    bool sufficiency1 = false;
    bool sufficiency2 = false;

    bool cond2 = false;  // τ < 1/3600
    Real cond2_margin;   // 1/3600 - τ
    bool tau_in_range = false;
    bool epsilon_in_range = false;

    Real container_size_cap;  // q^{2-t+3δ}
    Real log2_container_count;  // c(δ) q^{t-δ} (log2 q)^2
    Real iterations;  // 4t/δ

    bool all_pass() const;
};

ContainerCheck container_condition(const BoundParams& params);

// Extremal function bounds for point sets without collinear l-tuples:
// n^{((l-1)/(l-2))(1/2+δ)} above, n^{1/2}/l^{1/2} below. Requires l >= 4.
struct F3lBounds {
    Real exponent;
    Real upper;
    Real lower;
};

F3lBounds f3l_bounds(const Real& n, unsigned l, const Real& delta);

// Number of [n,3]_q MDS codes from the projective arc count B(q,n):
// n! (q-1)^{n-2} B / (q^3 (q^2+q+1) (q+1)). Throws if the division is inexact.
BigInt mds_count(std::uint64_t q, std::uint64_t n, const BigInt& arcs);

}  // namespace arclab
