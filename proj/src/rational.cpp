#include "treepack/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "treepack/error.hpp"

namespace treepack {

namespace {

using Wide = __int128;

Rational from_wide(Wide num, Wide den)
{
    if (den == 0)
        throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr Wide lim = std::numeric_limits<std::int64_t>::max();
    if (num > lim || num < -lim || den > lim)
        throw InternalError("rational overflow");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g > 1 ? num / g : num;
    den_ = g > 1 ? den / g : den;
}

std::string Rational::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::approximate(double x, std::int64_t max_den)
{
    if (!std::isfinite(x))
        throw InputError("cannot approximate a non-finite value");
    // Convergents h/k of the continued fraction of x.
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double fl = std::floor(r);
        if (std::fabs(fl) > 9e15)
            break;
        const auto a = static_cast<std::int64_t>(fl);
        const std::int64_t k2 = a * k1 + k0;
        if (k2 > max_den)
            break;
        const std::int64_t h2 = a * h1 + h0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        const double frac = r - fl;
        if (frac < 1e-12)
            break;
        r = 1.0 / frac;
    }
    return Rational(h1, k1);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    return from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const Wide lhs = Wide(a.num_) * b.den_;
    const Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace treepack
