#include "vmrt/jet.hpp"

#include "vmrt/error.hpp"

namespace vmrt {

Jet1::Jet1(SparsePoly v, SparsePoly d) : value(std::move(v)), derivative(std::move(d)) {
  if (!(value.vars() == derivative.vars())) {
    throw Error(ErrorKind::VariableMismatch, "jet components live in different variable lists");
  }
}

Jet1 Jet1::constant(SparsePoly v) {
  SparsePoly zero(v.vars());
  return Jet1(std::move(v), std::move(zero));
}

Jet1 Jet1::inverse() const {
  if (!value.is_constant() || value.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "jet inverse needs a nonzero constant value");
  }
  const Rat inv = 1 / value.constant_value();
  // (v + eps d)^-1 = 1/v - eps d/v^2
  return Jet1(SparsePoly(value.vars(), inv), derivative * Rat(-inv * inv));
}

Jet1 operator+(const Jet1& a, const Jet1& b) { return Jet1(a.value + b.value, a.derivative + b.derivative); }

Jet1 operator-(const Jet1& a, const Jet1& b) { return Jet1(a.value - b.value, a.derivative - b.derivative); }

Jet1 operator*(const Jet1& a, const Jet1& b) {
  return Jet1(a.value * b.value, a.value * b.derivative + a.derivative * b.value);
}

Jet1 operator*(const Jet1& a, const Rat& c) { return Jet1(a.value * c, a.derivative * c); }

}  // namespace vmrt
