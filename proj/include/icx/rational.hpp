#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace icx {

using Rational = boost::rational<std::int64_t>;

/// R_1..R_M, stored at index m-1.
using RateVector = std::vector<Rational>;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace icx
