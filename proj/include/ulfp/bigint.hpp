#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace ulfp {

using BigInt = boost::multiprecision::mpz_int;

}  // namespace ulfp
