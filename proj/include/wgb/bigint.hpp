#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wgb {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

} // namespace wgb
