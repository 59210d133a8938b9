#include "finetti/numbers.hpp"

#include "finetti/errors.hpp"

namespace finetti {

BigInt factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial: negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ballot_number(int n) {
  if (n < 1) throw InvalidArgument("ballot_number: n must be >= 1");
  BigInt num = factorial(static_cast<int>(n * (n + 1) / 2));
  for (int k = 1; k <= n - 1; ++k) num *= factorial(k);
  BigInt den = 1;
  for (int k = 1; k <= n; ++k) den *= factorial(2 * k - 1);
  return num / den;
}

BigInt asm_count_formula(int n) {
  if (n < 0) throw InvalidArgument("asm_count_formula: n must be >= 0");
  BigInt num = 1, den = 1;
  for (int k = 0; k <= n - 1; ++k) {
    num *= factorial(3 * k + 1);
    den *= factorial(n + k);
  }
  return num / den;
}

BigInt catalan_number(int n) {
  if (n < 0) throw InvalidArgument("catalan_number: n must be >= 0");
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace finetti
