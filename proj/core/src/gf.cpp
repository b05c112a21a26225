#include "arclab/gf.hpp"

#include <string>

#include "arclab/error.hpp"

namespace arclab {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint32_t e = p - 2;
    while (e > 0) {
        if (e & 1u) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo a monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() >= g.size()) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t count)
{
    Poly out(count, 0);
    for (std::uint32_t i = 0; i < count; ++i) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& coefficients, std::uint32_t p)
{
    Poly f = coefficients;
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    const std::uint32_t degree = static_cast<std::uint32_t>(f.size() - 1);
    if (degree == 1) {
        return true;
    }
    for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = digits_of(static_cast<std::uint32_t>(low), p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t r) : p_(p), r_(r), q_(1)
{
    if (!is_prime(p)) {
        throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (r == 0) {
        throw PreconditionError("field extension degree must be >= 1");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) {
            throw PreconditionError("field order " + std::to_string(p) + "^" + std::to_string(r) +
                                    " exceeds the 2^20 cap");
        }
    }
    q_ = static_cast<std::uint32_t>(q);

    if (r > 1) {
        const std::uint32_t candidates = q_;
        for (std::uint32_t low = 0; low < candidates; ++low) {
            Poly f = digits_of(low, p, r);
            f.push_back(1);
            if (is_irreducible(f, p)) {
                modulus_ = std::move(f);
                break;
            }
        }
    }

    if (q_ <= kMaxTabulatedOrder) {
        auto t = std::make_shared<Tables>();
        t->add.resize(static_cast<std::size_t>(q_) * q_);
        t->mul.resize(static_cast<std::size_t>(q_) * q_);
        t->neg.resize(q_);
        t->inv.resize(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            t->neg[a] = static_cast<std::uint16_t>(neg_digits(a));
            for (std::uint32_t b = 0; b < q_; ++b) {
                const std::size_t at = static_cast<std::size_t>(a) * q_ + b;
                t->add[at] = static_cast<std::uint16_t>(add_digits(a, b));
                t->mul[at] = static_cast<std::uint16_t>(mul_poly(a, b));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a) {
            for (std::uint32_t b = 1; b < q_; ++b) {
                if (t->mul[static_cast<std::size_t>(a) * q_ + b] == 1) {
                    t->inv[a] = static_cast<std::uint16_t>(b);
                    break;
                }
            }
        }
        tables_ = std::move(t);
    }
}

FieldElement FieldSpec::element(std::uint32_t index) const
{
    if (index >= q_) {
        throw PreconditionError("field element index " + std::to_string(index) + " out of range for GF(" +
                                std::to_string(q_) + ")");
    }
    return {index};
}

std::uint32_t FieldSpec::add_digits(std::uint32_t a, std::uint32_t b) const
{
    if (r_ == 1) {
        return (a + b) % p_;
    }
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FieldSpec::neg_digits(std::uint32_t a) const
{
    if (r_ == 1) {
        return (p_ - a) % p_;
    }
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FieldSpec::mul_poly(std::uint32_t a, std::uint32_t b) const
{
    if (r_ == 1) {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    const Poly fa = digits_of(a, p_, r_);
    const Poly fb = digits_of(b, p_, r_);
    Poly prod(2 * r_ - 1, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
        for (std::uint32_t j = 0; j < r_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p_);
        }
    }
    const Poly rem = poly_mod(prod, modulus_, p_);
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::size_t i = 0; i < rem.size(); ++i) {
        out += rem[i] * place;
        place *= p_;
    }
    return out;
}

std::uint32_t FieldSpec::pow_slow(std::uint32_t a, std::uint64_t e) const
{
    std::uint32_t result = 1;
    std::uint32_t base = a;
    while (e > 0) {
        if (e & 1u) {
            result = mul_poly(result, base);
        }
        base = mul_poly(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const
{
    if (tables_) {
        return {tables_->add[static_cast<std::size_t>(a.index) * q_ + b.index]};
    }
    return {add_digits(a.index, b.index)};
}

FieldElement FieldSpec::neg(FieldElement a) const
{
    if (tables_) {
        return {tables_->neg[a.index]};
    }
    return {neg_digits(a.index)};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const
{
    return add(a, neg(b));
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const
{
    if (tables_) {
        return {tables_->mul[static_cast<std::size_t>(a.index) * q_ + b.index]};
    }
    return {mul_poly(a.index, b.index)};
}

FieldElement FieldSpec::inv(FieldElement a) const
{
    if (a.index == 0) {
        throw PreconditionError("inverse of zero in GF(" + std::to_string(q_) + ")");
    }
    if (tables_) {
        return {tables_->inv[a.index]};
    }
    if (r_ == 1) {
        return {inverse_mod_prime(a.index, p_)};
    }
    return {pow_slow(a.index, q_ - 2)};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t exponent) const
{
    FieldElement result = one();
    FieldElement base = a;
    while (exponent > 0) {
        if (exponent & 1u) {
            result = mul(result, base);
        }
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

}  // namespace arclab

namespace arclab {

FieldSpec field_of_order(std::uint32_t q)
{
    if (q < 2) {
        throw PreconditionError("field order must be at least 2");
    }
    std::uint32_t p = 2;
    while (q % p != 0) {
        ++p;
    }
    std::uint32_t r = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) {
        throw PreconditionError(std::to_string(q) + " is not a prime power");
    }
    return FieldSpec(p, r);
}

}  // namespace arclab
