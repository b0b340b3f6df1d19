// Print the exact P_0..P_4 table and watch the polynomials turn into
// sinusoids: P_k(x) / A_k against sin((2k+1) C - 2 pi x) on a small grid.

#include <iostream>

#include "rpolylog/rpolylog.hpp"

using namespace rpolylog;

int main() {
  PrecisionContext ctx(40);
  unsigned k_show = 4;
  PolyTable table = assemble(k_show, shipped_constants(k_show));
  std::cout << polytable_to_text(table);

  ConstantsEstimate est = extract_CR(10, 60, ctx);
  std::cout << "\nC ~ " << est.c.str(12) << ", R ~ " << est.r.str(12) << "\n\n";

  unsigned k_demo = std::min(30u, shipped_constants_max_k());
  PolyTable deep = assemble(k_demo, shipped_constants(k_demo));
  MPReal amp = conjectured_amplitude(k_demo, est.r, ctx);
  std::cout << "x\tP_" << k_demo << "(x)/A\tsin((2k+1)C - 2 pi x)\n";
  for (int i = 0; i < 8; ++i) {
    MPReal x = ctx.real(i) / 8;
    MPReal lhs = deep.poly(k_demo).eval(x, ctx) / amp;
    MPReal rhs = sin((2 * k_demo + 1) * est.c - ctx.two_pi() * x);
    std::cout << x.str(4) << "\t" << lhs.str(10) << "\t" << rhs.str(10) << "\n";
  }
  return 0;
}
