#include "ncgeo/convolution.hpp"

namespace ncgeo {

double GroupCrossedProduct::norm_l1(const CrossedElement& f) const {
  double s = 0;
  for (const auto& [k, c] : f.coeffs) s += fs.B->norm(c);
  return s;
}

CrossedElement GroupCrossedProduct::torus_twist(const std::vector<Scalar>& z,
                                                const CrossedElement& f,
                                                double eps) const {
  for (const Scalar& zi : z)
    if (std::abs(zi.abs() - 1.0) > eps)
      throw std::invalid_argument("torus twist requires unit-modulus entries");
  CrossedElement out;
  for (const auto& [k, c] : f.coeffs) {
    Scalar zk = Scalar::one();
    for (size_t i = 0; i < z.size(); ++i) zk *= z[i].pow(k[i]);
    out.coeffs[k] = fs.B->scale(zk, c);
  }
  return out;
}

CrossedElement GroupCrossedProduct::star(const CrossedElement& f) const {
  const CoeffAlgebra& B = *fs.B;
  CrossedElement out;
  for (const auto& [k, c] : f.coeffs) {
    auto adj = B.adjoint(c);
    if (!adj) throw std::logic_error("coefficient algebra has no adjoint");
    MultiIndex mk = -k;
    if (twisted) {
      // f*(j) = conj(omega(j,-j)) f(-j)^*  evaluated at j = -k
      Rat t(0);
      for (size_t i = 0; i < twist_phases.size(); ++i)
        for (size_t j = 0; j < twist_phases[i].size(); ++j)
          t += twist_phases[i][j] * Rat(static_cast<std::int64_t>(mk[i]) * k[j]);
      Scalar w = Scalar::phase_of(t.mod1());
      out.coeffs[mk] = B.scale(w.conj(), *adj);
    } else {
      // f*(j) = alpha(j)((f(-j))^*)  evaluated at j = -k
      out.coeffs[mk] = fs.S_at(mk).apply(B, *adj);
    }
  }
  return out;
}

GroupCrossedProduct group_crossed_product(std::shared_ptr<const CoeffAlgebra> A,
                                          std::vector<AlgebraAutomorphism> action_gens,
                                          int n, int window) {
  FactorSystem fs;
  fs.n = n;
  fs.window = window;
  fs.B = std::move(A);
  fs.S = action_gens.empty() ? ActionRule::trivial()
                             : ActionRule::generator_powers(std::move(action_gens));
  fs.omega = OmegaRule::unit_cochain();
  return {fs, false};
}

GroupCrossedProduct twisted_group_algebra(std::shared_ptr<const CoeffAlgebra> A,
                                          std::vector<std::vector<Rat>> cocycle_phases,
                                          int window) {
  FactorSystem fs;
  fs.n = static_cast<int>(cocycle_phases.size());
  fs.window = window;
  fs.B = std::move(A);
  fs.S = ActionRule::trivial();
  fs.omega = OmegaRule::bilinear_phase(cocycle_phases);
  return {fs, true, std::move(cocycle_phases)};
}

GroupCrossedProduct heisenberg_algebra(int window) {
  auto B = make_fourier_algebra(1, window);
  const auto& fa = static_cast<const FourierAlgebra&>(*B);
  AlgElement w = fa.monomial({1});
  FactorSystem fs;
  fs.n = 2;
  fs.window = window;
  fs.B = B;
  fs.S = ActionRule::trivial(); // the center generator commutes with U, V
  fs.omega = OmegaRule::bilinear_unit_power(*B, w, {{0, 0}, {-1, 0}});
  return {fs, false};
}

AlgElement heisenberg_center_generator(const GroupCrossedProduct& h) {
  const auto& fa = static_cast<const FourierAlgebra&>(*h.fs.B);
  return fa.monomial({1});
}

} // namespace ncgeo
