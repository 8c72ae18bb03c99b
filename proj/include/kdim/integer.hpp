#pragma once

#include <gmpxx.h>

#include <string>

namespace kdim {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace kdim
