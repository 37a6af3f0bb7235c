#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spinchev {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// n! from an immutable table (n <= 4 * 100 + 1 covers every CG argument for 2j <= 200)
const BigInt& factorial(int n);

// generalised binomial, upper argument may be negative
BigRational binomial(const BigRational& n, int k);

double to_double(const BigInt& v);
double to_double(const BigRational& v);

// sign(q) * sqrt(|q|)
double signed_sqrt(const BigRational& q);

}  // namespace spinchev
