#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace matchkit {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);
BigInt factorial(int n);

}  // namespace matchkit
