#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace finetti {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Number of standard shifted staircase tableaux with n rows:
// binom(n+1,2)! * prod_{k=1}^{n-1} k! / prod_{k=1}^{n} (2k-1)!
// Exact integer arithmetic throughout; the division is exact.
BigInt ballot_number(int n);

// prod_{k=0}^{n-1} (3k+1)!/(n+k)!; n = 0 gives the empty product 1.
BigInt asm_count_formula(int n);

// binom(2n,n)/(n+1)
BigInt catalan_number(int n);

}  // namespace finetti
