#include "ncgeo/dynfree.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncgeo/linalg.hpp"

namespace ncgeo {

AlgebraAutomorphism FiniteDynSystem::action(const std::vector<int>& g) const {
  std::vector<AlgebraAutomorphism> parts;
  for (size_t i = 0; i < generator_action.size(); ++i)
    if (g[i] != 0) parts.push_back(generator_action[i].pow(*algebra, g[i]));
  return AlgebraAutomorphism::compose(std::move(parts));
}

double FiniteDynSystem::validity_defect(Rng& rng, int trials) const {
  const CoeffAlgebra& A = *algebra;
  double dev = 0;
  for (size_t i = 0; i < generator_action.size(); ++i) {
    AlgebraAutomorphism power = generator_action[i].pow(A, group.orders[i]);
    dev = std::max(dev, power.distance_to(A, AlgebraAutomorphism::identity()));
  }
  for (int t = 0; t < trials; ++t) {
    AlgElement a = A.random_element(rng);
    AlgElement b = A.random_element(rng);
    for (size_t i = 0; i < generator_action.size(); ++i) {
      const auto& phi = generator_action[i];
      dev = std::max(dev, A.distance(phi.apply(A, A.mul(a, b)),
                                     A.mul(phi.apply(A, a), phi.apply(A, b))));
      dev = std::max(dev, A.distance(phi.apply(A, A.unit()), A.unit()));
    }
  }
  return dev;
}

std::vector<std::vector<Scalar>> action_matrix(const FiniteDynSystem& sys,
                                               const std::vector<int>& g) {
  const CoeffAlgebra& A = *sys.algebra;
  const int d = sys.dim();
  AlgebraAutomorphism alpha = sys.action(g);
  std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d, Scalar::zero()));
  std::vector<AlgElement> basis = A.spanning_set();
  for (int j = 0; j < d; ++j) {
    std::vector<Scalar> col = A.coords(alpha.apply(A, basis[j]));
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return m;
}

std::vector<std::vector<Scalar>> isotypic_projector(const FiniteDynSystem& sys,
                                                    const std::vector<int>& phi) {
  const int d = sys.dim();
  std::vector<std::vector<Scalar>> acc(d, std::vector<Scalar>(d, Scalar::zero()));
  auto elements = sys.group.elements();
  Scalar inv_order = Scalar::exact(Rat(1, sys.group.size()));
  for (const auto& g : elements) {
    Scalar w = sys.group.character(phi, g).conj();
    auto m = action_matrix(sys, g);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) acc[i][j] += w * m[i][j];
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) acc[i][j] = inv_order * acc[i][j];
  return acc;
}

std::vector<std::vector<Scalar>> isotypic_component(const FiniteDynSystem& sys,
                                                    const std::vector<int>& phi,
                                                    double tol) {
  auto p = isotypic_projector(sys, phi);
  // rows of P^T span the image (columns of P)
  const int d = sys.dim();
  std::vector<std::vector<Scalar>> cols(d, std::vector<Scalar>(d, Scalar::zero()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cols[j][i] = p[i][j];
  return smat_row_space(std::move(cols), tol);
}

// ---------------------------------------------------------------------------
// characters

std::vector<CharacterPoint> algebra_characters(const CoeffAlgebra& A, double tol) {
  if (!A.commutative())
    throw std::invalid_argument("characters require a commutative algebra");
  const int d = *A.dimension();

  if (A.kind() == "finitefn") {
    const auto& F = static_cast<const FiniteFunctionAlgebra&>(A);
    std::vector<CharacterPoint> out;
    for (int i = 0; i < d; ++i) {
      CharacterPoint c;
      c.weights.assign(d, Scalar::zero());
      c.weights[i] = Scalar::one();
      c.label = "delta_" + F.points()[i];
      out.push_back(std::move(c));
    }
    return out;
  }
  if (A.kind() == "complex") {
    return {CharacterPoint{{Scalar::one()}, "id"}};
  }

  // simultaneous eigenvectors of the regular representation: characters are
  // the common left eigenvectors of all multiplication operators, found from
  // a generic element and then verified multiplicatively
  std::vector<AlgElement> basis = A.spanning_set();
  Rng rng(0x5eedULL);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    std::complex<double> c(1.0 + rng.uniform01(), rng.uniform01());
    for (int j = 0; j < d; ++j) {
      std::vector<Scalar> col = A.coords(A.mul(basis[i], basis[j]));
      for (int r = 0; r < d; ++r) M(r, j) += c * col[r].to_complex();
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M.transpose());
  std::vector<CharacterPoint> out;
  std::vector<Scalar> unit_coords = A.coords(A.unit());
  for (int v = 0; v < d; ++v) {
    Eigen::VectorXcd w = es.eigenvectors().col(v);
    // normalize chi(1) = 1
    std::complex<double> at_unit = 0;
    for (int i = 0; i < d; ++i) at_unit += w(i) * unit_coords[i].to_complex();
    if (std::abs(at_unit) < tol) continue;
    CharacterPoint c;
    c.weights.resize(d);
    for (int i = 0; i < d; ++i) c.weights[i] = Scalar::flt(w(i) / at_unit);
    // verify multiplicativity on basis pairs
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        Scalar lhs = c.eval_coords(A.coords(A.mul(basis[i], basis[j])));
        Scalar rhs = c.eval_coords(A.coords(basis[i])) *
                     c.eval_coords(A.coords(basis[j]));
        if (distance(lhs, rhs) > tol) ok = false;
      }
    if (!ok) continue;
    // drop duplicates (degenerate eigenvalues)
    bool dup = false;
    for (const auto& prev : out) {
      double dist = 0;
      for (int i = 0; i < d; ++i)
        dist = std::max(dist, distance(prev.weights[i], c.weights[i]));
      if (dist <= tol) { dup = true; break; }
    }
    if (!dup) {
      c.label = "chi_" + std::to_string(out.size());
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// bundle checks

namespace {

// invertible element in the span of the rows, searched over the declared
// candidate grid; exact decision for finite-function algebras
std::optional<std::pair<AlgElement, std::string>> find_invertible_in_span(
    const CoeffAlgebra& A, const std::vector<std::vector<Scalar>>& span_rows,
    double eps) {
  if (span_rows.empty()) return std::nullopt;
  const int d = static_cast<int>(span_rows[0].size());

  auto from_rows = [&](const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> acc(d, Scalar::zero());
    for (size_t r = 0; r < span_rows.size(); ++r)
      for (int i = 0; i < d; ++i) acc[i] += coeffs[r] * span_rows[r][i];
    return A.from_coords(acc);
  };

  if (A.kind() == "finitefn") {
    // a combination avoiding all zero sets exists iff no coordinate vanishes
    // across the whole span; build one with geometric weights and verify
    for (int i = 0; i < d; ++i) {
      bool hit = false;
      for (const auto& row : span_rows)
        if (!row[i].is_zero(eps)) { hit = true; break; }
      if (!hit) return std::nullopt; // certified: every element vanishes at i
    }
    for (std::int64_t base = 2; base < 64; ++base) {
      std::vector<Scalar> coeffs;
      Scalar c = Scalar::one();
      for (size_t r = 0; r < span_rows.size(); ++r) {
        coeffs.push_back(c);
        c *= Scalar::exact(Rat(base));
      }
      AlgElement cand = from_rows(coeffs);
      if (A.try_invert(cand, eps))
        return std::make_pair(cand, "geometric combination, base " +
                                        std::to_string(base));
    }
    return std::nullopt;
  }

  // declared grid: single rows scaled, then pairs with small rational weights
  static const std::vector<Rat> grid = {Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2),
                                        Rat(2), Rat(-2)};
  for (size_t r = 0; r < span_rows.size(); ++r) {
    std::vector<Scalar> coeffs(span_rows.size(), Scalar::zero());
    coeffs[r] = Scalar::one();
    AlgElement cand = from_rows(coeffs);
    if (A.try_invert(cand, eps))
      return std::make_pair(cand, "span basis element " + std::to_string(r));
  }
  for (size_t r = 0; r < span_rows.size(); ++r)
    for (size_t s = r + 1; s < span_rows.size(); ++s)
      for (const Rat& cr : grid)
        for (const Rat& cs : grid) {
          std::vector<Scalar> coeffs(span_rows.size(), Scalar::zero());
          coeffs[r] = Scalar::exact(cr);
          coeffs[s] = Scalar::exact(cs);
          AlgElement cand = from_rows(coeffs);
          if (A.try_invert(cand, eps))
            return std::make_pair(
                cand, "pair combination (" + std::to_string(r) + "," +
                          std::to_string(s) + ") weights " + cr.str() + "," + cs.str());
        }
  return std::nullopt;
}

// b in the fixed algebra with b^order = target, searched over the grid; for
// scalar multiples of the unit the root is taken exactly on phases
std::optional<std::pair<AlgElement, std::string>> find_root_in_fixed_algebra(
    const CoeffAlgebra& A, const std::vector<std::vector<Scalar>>& fixed_rows,
    const AlgElement& target, int order, double eps) {
  // scalar shortcut: target = lambda * 1
  {
    std::vector<Scalar> tc = A.coords(target);
    std::vector<Scalar> uc = A.coords(A.unit());
    Scalar lambda = Scalar::zero();
    bool scal = true;
    for (size_t i = 0; i < tc.size() && scal; ++i) {
      if (uc[i].is_zero(eps)) {
        if (!tc[i].is_zero(eps)) scal = false;
      } else if (lambda.is_zero(0.0)) {
        lambda = tc[i] * uc[i].inverse();
      }
    }
    if (scal && !lambda.is_zero(eps)) {
      Scalar root;
      if (lambda.is_exact() && lambda.exact_amp() == GRat(Rat(1))) {
        root = Scalar::phase_of((lambda.exact_phase() / Rat(order)).mod1());
      } else {
        std::complex<double> z = lambda.to_complex();
        root = Scalar::flt(std::pow(std::abs(z), 1.0 / order) *
                           std::exp(std::complex<double>(0, std::arg(z) / order)));
      }
      AlgElement cand = A.scale(root, A.unit());
      AlgElement p = cand;
      for (int i = 1; i < order; ++i) p = A.mul(p, cand);
      if (A.distance(p, target) <= eps)
        return std::make_pair(cand, "scalar root of the unit multiple");
    }
  }
  static const std::vector<Rat> grid = {Rat(1),     Rat(-1), Rat(1, 2),
                                        Rat(-1, 2), Rat(2),  Rat(-2), Rat(0)};
  const int d = static_cast<int>(A.coords(target).size());
  auto from_rows = [&](const std::vector<Rat>& coeffs) {
    std::vector<Scalar> acc(d, Scalar::zero());
    for (size_t r = 0; r < fixed_rows.size(); ++r)
      for (int i = 0; i < d; ++i)
        acc[i] += Scalar::exact(coeffs[r]) * fixed_rows[r][i];
    return A.from_coords(acc);
  };
  std::vector<size_t> idx(fixed_rows.size(), 0);
  if (fixed_rows.empty()) return std::nullopt;
  while (true) {
    std::vector<Rat> coeffs;
    for (size_t r = 0; r < fixed_rows.size(); ++r) coeffs.push_back(grid[idx[r]]);
    AlgElement cand = from_rows(coeffs);
    AlgElement p = cand;
    for (int i = 1; i < order; ++i) p = A.mul(p, cand);
    if (A.distance(p, target) <= eps) {
      std::ostringstream os;
      os << "fixed-algebra combination weights (";
      for (size_t r = 0; r < coeffs.size(); ++r)
        os << (r ? "," : "") << coeffs[r].str();
      os << ")";
      return std::make_pair(cand, os.str());
    }
    size_t r = 0;
    while (r < idx.size() && idx[r] == grid.size() - 1) { idx[r] = 0; ++r; }
    if (r == idx.size()) break;
    ++idx[r];
  }
  return std::nullopt;
}

} // namespace

BundleCheckReport trivial_bundle_check(const FiniteDynSystem& sys, double eps) {
  const CoeffAlgebra& A = *sys.algebra;
  BundleCheckReport rep;
  rep.search_bound =
      "span basis elements and pairs with weights {+-1, +-1/2, +-2}; "
      "finite-function components decided exactly";
  rep.pass = true;

  std::vector<std::vector<Scalar>> fixed_rows;
  {
    std::vector<int> trivial_char(sys.group.rank(), 0);
    fixed_rows = isotypic_component(sys, trivial_char, eps);
  }

  for (int i = 0; i < sys.group.rank(); ++i) {
    std::vector<int> phi(sys.group.rank(), 0);
    phi[i] = 1;
    auto rows = isotypic_component(sys, phi, eps);
    WitnessRecord w;
    w.name = "invertible in component of generator " + std::to_string(i);
    auto found = find_invertible_in_span(A, rows, eps);
    if (found) {
      w.found = true;
      w.description = found->second + ": " + A.elem_str(found->first);
      // (C2): b in fixed algebra with b^{n_i} = a^{n_i}
      AlgElement power = found->first;
      for (int t = 1; t < sys.group.orders[i]; ++t)
        power = A.mul(power, found->first);
      WitnessRecord rt;
      rt.name = "root condition for cyclic factor " + std::to_string(i);
      auto root = find_root_in_fixed_algebra(A, fixed_rows, power,
                                             sys.group.orders[i], eps);
      if (root) {
        rt.found = true;
        rt.description = root->second + ": " + A.elem_str(root->first);
      } else {
        rep.pass = false;
        rt.description = "no root over the declared candidate set";
      }
      rep.root_witnesses.push_back(std::move(rt));
    } else {
      rep.pass = false;
      w.description = "no invertible element over the declared candidate set";
    }
    rep.invertible_witnesses.push_back(std::move(w));
  }
  return rep;
}

BundleCheckReport trivial_bundle_check(const FactorSystem& fs, double eps) {
  BundleCheckReport rep;
  rep.search_bound = "grading spaces B v_k carry the invertible monomials v_k";
  rep.pass = true;
  for (int i = 0; i < fs.n; ++i) {
    MultiIndex e = mi_unit(fs.n, i);
    WitnessRecord w;
    w.name = "invertible in grading space e_" + std::to_string(i);
    CrossedElement v = crossed_monomial(fs.B->unit(), e);
    CrossedElement vinv = crossed_invert_monomial(fs, fs.B->unit(), e);
    double dev =
        std::max(crossed_distance(fs, crossed_mul(fs, v, vinv), crossed_unit(fs)),
                 crossed_distance(fs, crossed_mul(fs, vinv, v), crossed_unit(fs)));
    w.found = dev <= eps;
    w.description = "v_{e_i} with two-sided inverse, deviation " + std::to_string(dev);
    if (!w.found) rep.pass = false;
    rep.invertible_witnesses.push_back(std::move(w));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// freeness

FreenessReport freeness_by_evaluation(const FiniteDynSystem& sys, double tol) {
  const CoeffAlgebra& A = *sys.algebra;
  if (!A.commutative())
    throw std::invalid_argument("evaluation criterion requires commutative A");
  FreenessReport rep;
  auto chars = algebra_characters(A, tol);

  rep.pass = true;
  // all characters phi of G: tuples modulo the orders
  FiniteAbelianGroup dual = sys.group;
  for (const auto& phi : dual.elements()) {
    auto rows = isotypic_component(sys, phi, tol);
    for (size_t c = 0; c < chars.size(); ++c) {
      bool surj = false;
      for (const auto& row : rows)
        if (!chars[c].eval_coords(row).is_zero(tol)) { surj = true; break; }
      if (!surj) {
        rep.pass = false;
        if (rep.failure_witness.empty()) {
          std::ostringstream os;
          os << "ev not surjective at chi = " << chars[c].label << ", phi = (";
          for (size_t i = 0; i < phi.size(); ++i) os << (i ? "," : "") << phi[i];
          os << ")";
          rep.failure_witness = os.str();
        }
      }
    }
  }
  OrbitTable t = spectrum_action(sys, tol);
  rep.spectrum_action_free = t.free;
  // the criterion is sufficient: PASS must imply a free induced action
  rep.consistent = !rep.pass || rep.spectrum_action_free;
  return rep;
}

PhiMapReport freeness_by_phi_map(const FiniteDynSystem& sys, double tol) {
  const CoeffAlgebra& A = *sys.algebra;
  if (!A.commutative())
    throw std::invalid_argument("phi map requires commutative A");
  const int d = sys.dim();
  PhiMapReport rep;

  // multiplication table in complex coordinates
  std::vector<AlgElement> basis = A.spanning_set();
  std::vector<std::vector<std::complex<double>>> mul_c(
      static_cast<size_t>(d) * d, std::vector<std::complex<double>>(d, 0.0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<Scalar> coords = A.coords(A.mul(basis[i], basis[j]));
      for (int t = 0; t < d; ++t)
        mul_c[static_cast<size_t>(i) * d + j][t] = coords[t].to_complex();
    }

  // B = A^G
  std::vector<std::vector<std::complex<double>>> b_basis;
  for (const auto& row : isotypic_component(sys, std::vector<int>(sys.group.rank(), 0), tol)) {
    std::vector<std::complex<double>> r(d);
    for (int i = 0; i < d; ++i) r[i] = row[i].to_complex();
    b_basis.push_back(std::move(r));
  }

  auto elements = sys.group.elements();
  const int target = d * static_cast<int>(elements.size());
  std::vector<std::vector<std::complex<double>>> images;
  // cache action matrices
  std::vector<std::vector<std::vector<Scalar>>> mats;
  for (const auto& g : elements) mats.push_back(action_matrix(sys, g));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<std::complex<double>> img(target, 0.0);
      for (size_t gi = 0; gi < elements.size(); ++gi) {
        // e_i * (g.e_j) in coordinates
        std::vector<std::complex<double>> gej(d, 0.0);
        for (int r = 0; r < d; ++r) gej[r] = mats[gi][r][j].to_complex();
        for (int r = 0; r < d; ++r) {
          if (gej[r] == 0.0) continue;
          const auto& row = mul_c[static_cast<size_t>(i) * d + r];
          for (int t = 0; t < d; ++t)
            img[static_cast<size_t>(t) * elements.size() + gi] += gej[r] * row[t];
        }
      }
      images.push_back(std::move(img));
    }

  BalancedTensorMap bt = balanced_tensor_map(d, mul_c, b_basis, target, images, tol);
  rep.balanced_dim = bt.source_quotient_dim;
  rep.target_dim = bt.target_dim;
  rep.rank = bt.rank;
  rep.bijective = bt.bijective;
  rep.point_action_free = spectrum_action(sys, tol).free;
  rep.agree = (rep.bijective == rep.point_action_free);
  return rep;
}

OrbitTable spectrum_action(const FiniteDynSystem& sys, double tol) {
  const CoeffAlgebra& A = *sys.algebra;
  auto chars = algebra_characters(A, tol);
  auto elements = sys.group.elements();
  const int n = static_cast<int>(chars.size());

  // chi o alpha(g): weights transform through the action matrix
  auto transported = [&](const CharacterPoint& chi,
                         const std::vector<std::vector<Scalar>>& m) {
    CharacterPoint out;
    out.weights.assign(chi.weights.size(), Scalar::zero());
    for (size_t j = 0; j < chi.weights.size(); ++j)
      for (size_t i = 0; i < chi.weights.size(); ++i)
        out.weights[j] += chi.weights[i] * m[i][j];
    return out;
  };
  auto find_char = [&](const CharacterPoint& c) {
    for (int i = 0; i < n; ++i) {
      double dev = 0;
      for (size_t j = 0; j < c.weights.size(); ++j)
        dev = std::max(dev, distance(c.weights[j], chars[i].weights[j]));
      if (dev <= 1e-6) return i;
    }
    return -1;
  };

  OrbitTable table;
  for (const auto& c : chars) table.labels.push_back(c.label);

  // permutation table of the action
  std::vector<std::vector<int>> act(elements.size(), std::vector<int>(n, -1));
  for (size_t gi = 0; gi < elements.size(); ++gi) {
    auto m = action_matrix(sys, elements[gi]);
    for (int c = 0; c < n; ++c) act[gi][c] = find_char(transported(chars[c], m));
  }

  std::vector<int> orbit_of(n, -1);
  for (int c = 0; c < n; ++c) {
    if (orbit_of[c] >= 0) continue;
    std::vector<int> orbit;
    for (size_t gi = 0; gi < elements.size(); ++gi) {
      int t = act[gi][c];
      if (t >= 0 && orbit_of[t] < 0) {
        orbit_of[t] = static_cast<int>(table.orbits.size());
        orbit.push_back(t);
      }
    }
    table.orbits.push_back(orbit);
  }

  table.stabilizers.assign(n, {});
  table.free = true;
  for (int c = 0; c < n; ++c)
    for (size_t gi = 0; gi < elements.size(); ++gi)
      if (act[gi][c] == c) {
        table.stabilizers[c].push_back(elements[gi]);
        bool is_identity = std::all_of(elements[gi].begin(), elements[gi].end(),
                                       [](int v) { return v == 0; });
        if (!is_identity) table.free = false;
      }
  return table;
}

std::vector<int> nonvanishing_set(const FiniteDynSystem& sys, const AlgElement& a,
                                  double tol) {
  auto chars = algebra_characters(*sys.algebra, tol);
  std::vector<Scalar> coords = sys.algebra->coords(a);
  std::vector<int> out;
  for (size_t i = 0; i < chars.size(); ++i)
    if (!chars[i].eval_coords(coords).is_zero(tol)) out.push_back(static_cast<int>(i));
  return out;
}

// ---------------------------------------------------------------------------
// corpus helpers

FiniteDynSystem permutation_system(std::vector<int> orders,
                                   std::vector<std::string> points,
                                   std::vector<std::vector<int>> generator_perms) {
  FiniteDynSystem sys;
  sys.group = FiniteAbelianGroup{std::move(orders)};
  sys.algebra = make_finite_function_algebra(std::move(points));
  for (auto& p : generator_perms)
    sys.generator_action.push_back(AlgebraAutomorphism::point_permutation(std::move(p)));
  return sys;
}

FiniteDynSystem matrix_clock_shift_system(int m) {
  auto A = make_matrix_algebra(m);
  const auto& M = static_cast<const MatrixAlgebra&>(*A);
  auto [clock, shift] = matrix_clock_shift(M);
  FiniteDynSystem sys;
  sys.group = FiniteAbelianGroup{{m, m}};
  sys.algebra = A;
  // (zeta^k, zeta^l).X = R^l S^k X S^{-k} R^{-l}
  sys.generator_action.push_back(AlgebraAutomorphism::conjugation(M, shift));
  sys.generator_action.push_back(AlgebraAutomorphism::conjugation(M, clock));
  return sys;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> perm_power(const std::vector<int>& p, int e) {
  std::vector<int> r(p.size());
  std::iota(r.begin(), r.end(), 0);
  for (int t = 0; t < e; ++t) {
    std::vector<int> s(p.size());
    for (size_t i = 0; i < p.size(); ++i) s[i] = p[r[i]];
    r = s;
  }
  return r;
}

bool perms_commute(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[b[i]] != b[a[i]]) return false;
  return true;
}

} // namespace

std::vector<std::vector<std::vector<int>>> enumerate_actions(
    const FiniteAbelianGroup& G, int set_size) {
  auto perms = all_permutations(set_size);
  std::vector<int> identity(set_size);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> choice(G.rank());
  std::function<void(int)> rec = [&](int gen) {
    if (gen == G.rank()) {
      out.push_back(choice);
      return;
    }
    for (const auto& p : perms) {
      if (perm_power(p, G.orders[gen]) != identity) continue;
      bool ok = true;
      for (int prev = 0; prev < gen; ++prev)
        if (!perms_commute(choice[prev], p)) { ok = false; break; }
      if (!ok) continue;
      choice[gen] = p;
      rec(gen + 1);
    }
  };
  rec(0);
  return out;
}

} // namespace ncgeo
