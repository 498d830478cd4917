#pragma once

#include <concepts>
#include <string>

#include "rational.hpp"
#include "scalar.hpp"

namespace btkit {

template <class F>
concept Field = std::regular<F> && requires(F a, F b, long k) {
  { F(k) } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a += b };
  { a.is_zero() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a.to_string() } -> std::same_as<std::string>;
};

// Ties a coefficient field to a value of sqrt(u). Symbolic computation keeps
// sqrt(u) as the indeterminate s; specialized computation fixes it to a
// rational number. `lift` maps symbolic constants into the field.
template <Field F>
struct FieldContext;

template <>
struct FieldContext<Scalar> {
  Scalar sqrt_u() const { return Scalar::s(); }
  Scalar lift(const Scalar& x) const { return x; }
  std::string describe() const { return "symbolic"; }
};

template <>
struct FieldContext<Rational> {
  Rational point;

  Rational sqrt_u() const { return point; }
  Rational lift(const Scalar& x) const { return x.evaluate(point); }
  std::string describe() const { return "s=" + point.to_string(); }
};

using SymbolicContext = FieldContext<Scalar>;
using SpecializedContext = FieldContext<Rational>;

}  // namespace btkit
