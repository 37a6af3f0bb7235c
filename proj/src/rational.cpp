#include "spinchev/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinchev {

namespace {
constexpr int kFactorialMax = 1024;

const std::vector<BigInt>& factorial_table() {
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kFactorialMax + 1);
        t[0] = 1;
        for (int i = 1; i <= kFactorialMax; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}
}  // namespace

const BigInt& factorial(int n) {
    if (n < 0 || n > kFactorialMax) throw std::domain_error("factorial argument out of range");
    return factorial_table()[n];
}

BigRational binomial(const BigRational& n, int k) {
    if (k < 0) return BigRational(0);
    BigRational r(1);
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r / BigRational(factorial(k));
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const BigRational& q) {
    using boost::multiprecision::msb;
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (num == 0) return 0.0;
    const bool neg = num < 0;
    if (neg) num = -num;
    // scale so the integer quotient carries about 64 significant bits
    const long shift = 64 - (static_cast<long>(msb(num)) - static_cast<long>(msb(den)));
    BigInt quo = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
    double r = std::ldexp(quo.convert_to<double>(), static_cast<int>(-shift));
    return neg ? -r : r;
}

double signed_sqrt(const BigRational& q) {
    if (q == 0) return 0.0;
    if (q < 0) return -std::sqrt(to_double(BigRational(-q)));
    return std::sqrt(to_double(q));
}

}  // namespace spinchev
