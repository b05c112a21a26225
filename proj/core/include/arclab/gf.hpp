#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace arclab {

// An element of GF(p^r) stored by index. The base-p digits of the index are the
// coefficients of the polynomial-basis representation, lowest degree first.
struct FieldElement {
    std::uint32_t index = 0;

    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

// The finite field GF(q), q = p^r, q <= 2^20.
//
// The modulus is the lexicographically smallest monic irreducible polynomial of
// degree r over GF(p), ordering candidates x^r + c_{r-1} x^{r-1} + ... + c_0 by
// the integer c_0 + c_1 p + ... + c_{r-1} p^{r-1} (so c_{r-1} is compared first).
// For q <= 2^10 full addition, multiplication and inverse tables are built at
// construction. A FieldSpec is immutable; copies share the tables.
class FieldSpec {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;
    static constexpr std::uint32_t kMaxTabulatedOrder = 1u << 10;

    FieldSpec(std::uint32_t p, std::uint32_t r);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t q() const noexcept { return q_; }

    // Coefficients c_0..c_r of the monic modulus; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    FieldElement element(std::uint32_t index) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t exponent) const;

    bool tabulated() const noexcept { return tables_ != nullptr; }

private:
    struct Tables {
        std::vector<std::uint16_t> add;
        std::vector<std::uint16_t> mul;
        std::vector<std::uint16_t> neg;
        std::vector<std::uint16_t> inv;
    };

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_digits(std::uint32_t a) const;
    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const;

    std::uint32_t p_;
    std::uint32_t r_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n);

// Exhaustive trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& coefficients, std::uint32_t p);

}  // namespace arclab

namespace arclab {

// GF(q) for a prime power q, with the deterministic modulus above.
FieldSpec field_of_order(std::uint32_t q);

}  // namespace arclab
