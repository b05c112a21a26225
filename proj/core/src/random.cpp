#include "arclab/random.hpp"

#include "arclab/error.hpp"

namespace arclab {

DyadicProbability::DyadicProbability(std::uint64_t numerator) : numerator_(numerator)
{
    if (numerator == 0 || numerator >= kDenominator) {
        throw PreconditionError("probability must lie strictly inside (0, 1)");
    }
}

DyadicProbability DyadicProbability::from_real(const Real& p)
{
    if (!(p > 0) || !(p < 1)) {
        throw PreconditionError("probability must lie strictly inside (0, 1), got " + to_string(p, 12));
    }
    const Real scaled = p * Real(kDenominator) + Real(0.5);
    BigInt n = boost::multiprecision::floor(scaled).convert_to<BigInt>();
    if (n == 0 || n >= kDenominator) {
        throw PreconditionError("probability " + to_string(p, 12) + " rounds to 0 or 1 at 2^-32 resolution");
    }
    return DyadicProbability(n.convert_to<std::uint64_t>());
}

DyadicProbability DyadicProbability::parse(const std::string& text)
{
    if (text.find('/') != std::string::npos) {
        const Rational r = parse_rational(text);
        const Rational scaled = r * Rational(BigInt(kDenominator));
        if (boost::multiprecision::denominator(scaled) != 1) {
            throw PreconditionError("probability " + text + " is not a multiple of 2^-32");
        }
        const BigInt n = boost::multiprecision::numerator(scaled);
        if (n <= 0 || n >= kDenominator) {
            throw PreconditionError("probability must lie strictly inside (0, 1)");
        }
        return DyadicProbability(n.convert_to<std::uint64_t>());
    }
    try {
        return from_real(Real(text));
    } catch (const std::runtime_error&) {
        throw PreconditionError("malformed probability '" + text + "'");
    }
}

}  // namespace arclab
