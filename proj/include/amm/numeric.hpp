#pragma once

#include <type_traits>

#include <gmpxx.h>

namespace amm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Converts between coefficient types; GMP values reach floating types via get_d().
template <typename U, typename T>
U coerce(const T& v) {
  if constexpr (std::is_constructible_v<U, const T&>) {
    return U(v);
  } else {
    return U(v.get_d());
  }
}

}  // namespace amm
