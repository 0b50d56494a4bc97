// Quick tour of the three built-in pair data: transversal sizes, one norm
// report each, and the one-dimensional figure.

#include <iostream>

#include <spinlambda/spinlambda.hpp>

using namespace spinlambda;

int main() {
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context ctx = Context::build(build_preset(name));
    std::cout << name << ": |W(g)| = " << ctx.weyl_g.order()
              << ", |W(k)| = " << ctx.weyl_k.order() << ", |W1| = " << ctx.w1.size()
              << ", rho = " << ctx.rho_g << ", rho_c = " << ctx.rho_c << "\n";

    const Weight mu = ctx.weight_from_lattice(
        std::vector<long>(ctx.datum.lattice.rank(), 2));
    const NormReport rep = norm_report(ctx, mu);
    std::cout << "  mu = " << mu << ": lambda^2 = " << to_string(rep.lambda_sq)
              << ", spin^2 = " << to_string(rep.spin_sq) << " -> "
              << (rep.verdict.strict ? "strict" : "equality") << "\n";
  }

  const Context sl2r = Context::build(build_preset("sl2r"));
  WindowSpec win;
  win.bounds = {{-4, 4}};
  const auto records = classify(sl2r, win);
  emit(sl2r, records, partition_report(sl2r, records), EmitFormat::ascii, std::cout);
  return 0;
}
