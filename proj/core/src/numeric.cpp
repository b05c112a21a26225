#include "arclab/numeric.hpp"

#include <iomanip>
#include <sstream>

#include "arclab/error.hpp"

namespace arclab {

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(std::uint64_t n)
{
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

std::string to_string(const BigInt& value)
{
    return value.str();
}

std::string to_string(const Rational& value)
{
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

std::string to_string(const Real& value, int digits)
{
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(digits) << value;
    return out.str();
}

Rational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw PreconditionError("zero denominator in rational '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw PreconditionError("malformed rational '" + text + "'");
    }
}

BigInt floor_to_int(const Real& x)
{
    Real fl = boost::multiprecision::floor(x);
    if (x - fl > Real(1) - Real("1e-30")) {
        fl += 1;
    }
    return fl.convert_to<BigInt>();
}

Real real_pow(const Real& base, const Real& exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

Real to_real(const Rational& value)
{
    return Real(boost::multiprecision::numerator(value)) /
           Real(boost::multiprecision::denominator(value));
}

}  // namespace arclab
