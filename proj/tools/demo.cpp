// Walk through the library on E_3: products, the tensor representation, the
// quotient and the trace.

#include <iostream>

#include "btkit/btkit.hpp"

int main() {
  using namespace btkit;
  namespace w = words;

  BtAlgebra<Scalar> alg(3);
  std::cout << "dim E_3 = " << alg.dimension() << "\n";

  auto t1 = alg.T(1);
  std::cout << "T1^2 = " << alg.mul(t1, t1).to_string() << "\n";
  std::cout << "E1 T2 T1 = " << alg.eval(w::E(1) * w::T(2) * w::T(1)).to_string() << "\n";

  // Elements parse back from their printed form.
  auto a = parse_element("(u-1)*E{{1,2},{3}}T[2,1,3] + E{{1},{2},{3}}T[1,3,2]", 3);
  std::cout << "a * a = " << alg.mul(a, a).to_string() << "\n";

  TensorRep<Scalar> rep(3);
  auto x = rep.basis_vector({{1, 1}, {2, 1}, {1, 2}});
  std::cout << "T12 on " << rep.render(x.entries().front().first) << ":\n";
  const auto image = rep.apply(alg.steinberg(1, 2), x);
  for (const auto& [c, coef] : image.entries()) {
    std::cout << "  " << coef.to_string() << "  " << rep.render(c) << "\n";
  }

  auto ideal = build_ptl_ideal(alg);
  std::cout << "ideal dim = " << ideal.dimension() << ", quotient dim = " << ideal.quotient_dimension() << "\n";

  auto tower = solve_trace_tower<Scalar>(3);
  const auto& rho = tower.back();
  auto g = alg.eval(ideal_generator_word(1, 2));
  std::cout << "rho(E1E2T12) = " << evaluate_trace(alg, rho, g).to_string() << "\n";
  return 0;
}
