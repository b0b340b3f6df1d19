// Evaluate G(-1) by every applicable strategy and compare against the closed
// form (1 - 2 sqrt 2) zeta(3/2) / (4 pi).

#include <iostream>

#include "rpolylog/rpolylog.hpp"

using namespace rpolylog;

int main() {
  PrecisionContext ctx(100);
  MPReal closed = (1 - 2 * sqrt(ctx.real(2L))) * zeta_half(0, ctx) / (4 * ctx.pi());
  std::cout << "closed form   " << closed.str(60) << "\n";

  MPComplex z(ctx.real(-1L), ctx.zero());
  ZPoint p(z, ctx);
  for (Method m : {Method::ZetaExpansion, Method::Bilateral, Method::Inversion}) {
    EvalResult r = g_eval(p, m, ctx);
    std::cout << method_name(r.method) << "\t" << r.value.re.str(60) << "\n";
  }
  EvalResult r = g_negative_axis(ctx.zero(), ctx);
  std::cout << method_name(r.method) << "\t" << r.value.re.str(60) << "\n";
  return 0;
}
