#include "nestrec/bigint.hpp"

namespace nestrec {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace nestrec
