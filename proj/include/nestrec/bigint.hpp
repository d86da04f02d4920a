#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nestrec {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

}  // namespace nestrec
