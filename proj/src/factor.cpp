#include "ncgeo/factor.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

namespace ncgeo {

// ---------------------------------------------------------------------------
// OneCochain

OneCochain OneCochain::generator_powers(const CoeffAlgebra& B,
                                        std::vector<AlgElement> gens) {
  GeneratorPowers g;
  for (auto& u : gens) {
    auto inv = B.try_invert(u);
    if (!inv) throw std::invalid_argument("cochain generator not invertible");
    g.gen_invs.push_back(*inv);
    g.gens.push_back(std::move(u));
  }
  return OneCochain(std::move(g));
}

OneCochain OneCochain::table(std::map<MultiIndex, AlgElement> values) {
  return OneCochain(Table{
      std::make_shared<const std::map<MultiIndex, AlgElement>>(std::move(values))});
}

OneCochain OneCochain::random_phases(std::uint64_t seed, int max_den) {
  return OneCochain(RandomPhases{seed, max_den});
}

OneCochain OneCochain::pointwise_product(std::vector<OneCochain> factors) {
  return OneCochain(std::move(factors));
}

namespace {

// deterministic rational phase attached to (seed, k)
Rat hash_phase(std::uint64_t seed, const MultiIndex& k, int max_den) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (int v : k) {
    h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(v)) + 0x9e3779b97f4a7c15ull +
         (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
  }
  std::int64_t q = static_cast<std::int64_t>(h % static_cast<std::uint64_t>(max_den)) + 1;
  std::int64_t p = static_cast<std::int64_t>((h >> 32) % static_cast<std::uint64_t>(q));
  return Rat(p, q);
}

} // namespace

AlgElement OneCochain::eval(const CoeffAlgebra& B, const MultiIndex& k) const {
  if (std::holds_alternative<One>(kind_)) return B.unit();
  if (const auto* g = std::get_if<GeneratorPowers>(&kind_)) {
    AlgElement out = B.unit();
    for (size_t i = 0; i < g->gens.size(); ++i) {
      const AlgElement& base = k[i] >= 0 ? g->gens[i] : g->gen_invs[i];
      for (int t = 0; t < std::abs(k[i]); ++t) out = B.mul(out, base);
    }
    return out;
  }
  if (const auto* t = std::get_if<Table>(&kind_)) {
    if (mi_is_zero(k)) return B.unit();
    auto it = t->values->find(k);
    if (it == t->values->end())
      throw window_overflow("one-cochain table has no entry at " + mi_str(k));
    return it->second;
  }
  if (const auto* r = std::get_if<RandomPhases>(&kind_)) {
    if (mi_is_zero(k)) return B.unit();
    return B.scale(Scalar::phase_of(hash_phase(r->seed, k, r->max_den)), B.unit());
  }
  const auto& factors = std::get<std::vector<OneCochain>>(kind_);
  AlgElement out = B.unit();
  for (const auto& f : factors) out = B.mul(out, f.eval(B, k));
  return out;
}

AlgElement OneCochain::eval_inv(const CoeffAlgebra& B, const MultiIndex& k) const {
  if (std::holds_alternative<One>(kind_)) return B.unit();
  if (const auto* g = std::get_if<GeneratorPowers>(&kind_)) {
    AlgElement out = B.unit();
    for (size_t i = g->gens.size(); i-- > 0;) {
      const AlgElement& base = k[i] >= 0 ? g->gen_invs[i] : g->gens[i];
      for (int t = 0; t < std::abs(k[i]); ++t) out = B.mul(out, base);
    }
    return out;
  }
  if (const auto* r = std::get_if<RandomPhases>(&kind_)) {
    if (mi_is_zero(k)) return B.unit();
    return B.scale(Scalar::phase_of((-hash_phase(r->seed, k, r->max_den)).mod1()),
                   B.unit());
  }
  auto inv = B.try_invert(eval(B, k));
  if (!inv) throw std::domain_error("one-cochain value not invertible");
  return *inv;
}

// ---------------------------------------------------------------------------
// ActionRule

ActionRule ActionRule::generator_powers(std::vector<AlgebraAutomorphism> gens) {
  return ActionRule(GeneratorPowers{std::move(gens)});
}

ActionRule ActionRule::acted(OneCochain h, ActionRule base) {
  return ActionRule(Acted{std::move(h),
                          std::make_shared<const ActionRule>(std::move(base))});
}

AlgebraAutomorphism ActionRule::eval(const CoeffAlgebra& B,
                                     const MultiIndex& k) const {
  if (std::holds_alternative<Trivial>(kind_)) return AlgebraAutomorphism::identity();
  if (const auto* g = std::get_if<GeneratorPowers>(&kind_)) {
    std::vector<AlgebraAutomorphism> parts;
    for (size_t i = 0; i < g->gens.size(); ++i)
      if (k[i] != 0) parts.push_back(g->gens[i].pow(B, k[i]));
    return AlgebraAutomorphism::compose(std::move(parts));
  }
  const auto& a = std::get<Acted>(kind_);
  AlgebraAutomorphism base = a.base->eval(B, k);
  if (mi_is_zero(k)) return base;
  AlgebraAutomorphism conj = AlgebraAutomorphism::conjugation(B, a.h.eval(B, k));
  return base.then(conj);
}

// ---------------------------------------------------------------------------
// OmegaRule

OmegaRule OmegaRule::bilinear_phase(std::vector<std::vector<Rat>> mat) {
  return OmegaRule(BilinearPhase{std::move(mat)});
}

OmegaRule OmegaRule::bilinear_unit_power(const CoeffAlgebra& B, AlgElement u,
                                         std::vector<std::vector<int>> mat) {
  auto inv = B.try_invert(u);
  if (!inv) throw std::invalid_argument("omega unit not invertible");
  return OmegaRule(BilinearUnitPower{std::move(u), std::move(*inv), std::move(mat)});
}

OmegaRule OmegaRule::table(std::map<std::pair<MultiIndex, MultiIndex>, AlgElement> v,
                           OmegaRule base) {
  return OmegaRule(Table{
      std::make_shared<const std::map<std::pair<MultiIndex, MultiIndex>, AlgElement>>(
          std::move(v)),
      std::make_shared<const OmegaRule>(std::move(base))});
}

OmegaRule OmegaRule::perturbed(OmegaRule base, MultiIndex k0, MultiIndex l0,
                               AlgElement factor) {
  Perturbed p{std::make_shared<const OmegaRule>(std::move(base)), std::move(k0),
              std::move(l0), std::move(factor)};
  return OmegaRule(std::move(p));
}

OmegaRule OmegaRule::acted(OneCochain h, ActionRule S, OmegaRule base) {
  return OmegaRule(Acted{std::move(h),
                         std::make_shared<const ActionRule>(std::move(S)),
                         std::make_shared<const OmegaRule>(std::move(base))});
}

OmegaRule OmegaRule::coboundary(OneCochain h, ActionRule S) {
  return OmegaRule(Coboundary{std::move(h),
                              std::make_shared<const ActionRule>(std::move(S))});
}

OmegaRule OmegaRule::product(std::vector<OmegaRule> factors) {
  return OmegaRule(std::move(factors));
}

namespace {

template <class M>
Rat bilinear_rat(const M& mat, const MultiIndex& k, const MultiIndex& l) {
  Rat t(0);
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat[i].size(); ++j)
      t += mat[i][j] * Rat(static_cast<std::int64_t>(k[i]) * l[j]);
  return t;
}

std::int64_t bilinear_int(const std::vector<std::vector<int>>& mat,
                          const MultiIndex& k, const MultiIndex& l) {
  std::int64_t t = 0;
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat[i].size(); ++j)
      t += static_cast<std::int64_t>(mat[i][j]) * k[i] * l[j];
  return t;
}

AlgElement unit_power(const CoeffAlgebra& B, const AlgElement& u,
                      const AlgElement& u_inv, std::int64_t e) {
  AlgElement out = B.unit();
  const AlgElement& base = e >= 0 ? u : u_inv;
  for (std::int64_t t = 0; t < std::llabs(e); ++t) out = B.mul(out, base);
  return out;
}

} // namespace

AlgElement OmegaRule::eval(const CoeffAlgebra& B, const MultiIndex& k,
                           const MultiIndex& l) const {
  if (std::holds_alternative<Unit>(kind_)) return B.unit();
  if (const auto* b = std::get_if<BilinearPhase>(&kind_))
    return B.scale(Scalar::phase_of(bilinear_rat(b->mat, k, l).mod1()), B.unit());
  if (const auto* b = std::get_if<BilinearUnitPower>(&kind_))
    return unit_power(B, b->u, b->u_inv, bilinear_int(b->mat, k, l));
  if (const auto* t = std::get_if<Table>(&kind_)) {
    auto it = t->values->find({k, l});
    if (it != t->values->end()) return it->second;
    return t->base->eval(B, k, l);
  }
  if (const auto* p = std::get_if<Perturbed>(&kind_)) {
    AlgElement v = p->base->eval(B, k, l);
    if (k == p->k0 && l == p->l0) v = B.mul(v, p->factor);
    return v;
  }
  if (const auto* a = std::get_if<Acted>(&kind_)) {
    // h(k) S(k)(h(l)) omega(k,l) h(k+l)^{-1}
    AlgElement hk = a->h.eval(B, k);
    AlgElement shl = a->S->eval(B, k).apply(B, a->h.eval(B, l));
    AlgElement w = a->base->eval(B, k, l);
    AlgElement hkl_inv = a->h.eval_inv(B, k + l);
    return B.mul(B.mul(B.mul(hk, shl), w), hkl_inv);
  }
  if (const auto* c = std::get_if<Coboundary>(&kind_)) {
    AlgElement hk = c->h.eval(B, k);
    AlgElement shl = c->S->eval(B, k).apply(B, c->h.eval(B, l));
    AlgElement hkl_inv = c->h.eval_inv(B, k + l);
    return B.mul(B.mul(hk, shl), hkl_inv);
  }
  const auto& factors = std::get<std::vector<OmegaRule>>(kind_);
  AlgElement out = B.unit();
  for (const auto& f : factors) out = B.mul(out, f.eval(B, k, l));
  return out;
}

AlgElement OmegaRule::eval_inv(const CoeffAlgebra& B, const MultiIndex& k,
                               const MultiIndex& l) const {
  if (std::holds_alternative<Unit>(kind_)) return B.unit();
  if (const auto* b = std::get_if<BilinearPhase>(&kind_))
    return B.scale(Scalar::phase_of((-bilinear_rat(b->mat, k, l)).mod1()), B.unit());
  if (const auto* b = std::get_if<BilinearUnitPower>(&kind_))
    return unit_power(B, b->u, b->u_inv, -bilinear_int(b->mat, k, l));
  auto inv = B.try_invert(eval(B, k, l));
  if (!inv) throw std::domain_error("omega value not invertible");
  return *inv;
}

// ---------------------------------------------------------------------------
// factor system checks

AlgebraAutomorphism fs_delta_S(const FactorSystem& fs, const MultiIndex& k,
                               const MultiIndex& l) {
  AlgebraAutomorphism sk = fs.S_at(k);
  AlgebraAutomorphism sl = fs.S_at(l);
  AlgebraAutomorphism skl_inv = fs.S_at(k + l).inverse();
  return skl_inv.then(sl).then(sk); // S(k) o S(l) o S(k+l)^{-1}
}

AlgElement fs_d_omega(const FactorSystem& fs, const MultiIndex& k,
                      const MultiIndex& l, const MultiIndex& m) {
  const CoeffAlgebra& B = *fs.B;
  AlgElement t1 = fs.S_at(k).apply(B, fs.omega_at(l, m));
  AlgElement t2 = fs.omega_at(k, l + m);
  AlgElement t3 = fs.omega_inv_at(k + l, m);
  AlgElement t4 = fs.omega_inv_at(k, l);
  return B.mul(B.mul(B.mul(t1, t2), t3), t4);
}

namespace {

// deterministic parallel scan: every thread keeps the best (max deviation)
// over its chunk together with the smallest index attaining it
struct ScanHit {
  double dev = 0;
  size_t index = SIZE_MAX;
};

ScanHit parallel_scan(size_t count, int jobs,
                      const std::function<double(size_t)>& body) {
  ScanHit best;
  if (jobs <= 1 || count < 64) {
    for (size_t i = 0; i < count; ++i) {
      double d = body(i);
      if (d > best.dev) best = {d, i};
    }
    return best;
  }
  const int nthreads = std::min<int>(jobs, static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<ScanHit> hits(nthreads);
  std::vector<std::thread> threads;
  for (int t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t]() {
      ScanHit local;
      for (size_t i = t; i < count; i += nthreads) {
        double d = body(i);
        if (d > local.dev || (d == local.dev && i < local.index)) local = {d, i};
      }
      hits[t] = local;
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& h : hits)
    if (h.dev > best.dev || (h.dev == best.dev && h.index < best.index)) best = h;
  return best;
}

} // namespace

FactorSystemReport check_factor_system(const FactorSystem& fs, double eps,
                                       int jobs) {
  const CoeffAlgebra& B = *fs.B;
  FactorSystemReport rep;
  auto pts = window_points(fs.n, fs.window);
  const size_t P = pts.size();

  // delta_S = C_B o omega over window pairs
  ScanHit pair_hit = parallel_scan(P * P, jobs, [&](size_t idx) {
    const MultiIndex& k = pts[idx / P];
    const MultiIndex& l = pts[idx % P];
    AlgebraAutomorphism lhs = fs_delta_S(fs, k, l);
    AlgElement w = fs.omega_at(k, l);
    AlgebraAutomorphism rhs = AlgebraAutomorphism::conjugation(B, w);
    return lhs.distance_to(B, rhs);
  });
  rep.max_delta_dev = pair_hit.dev;
  if (pair_hit.dev > eps) {
    rep.witness = "delta_S mismatch at (" + mi_str(pts[pair_hit.index / P]) + "," +
                  mi_str(pts[pair_hit.index % P]) + ")";
  }

  // d_S omega = 1 over window triples, plus centrality of the values
  std::atomic<bool> central{true};
  ScanHit triple_hit = parallel_scan(P * P * P, jobs, [&](size_t idx) {
    const MultiIndex& k = pts[idx / (P * P)];
    const MultiIndex& l = pts[(idx / P) % P];
    const MultiIndex& m = pts[idx % P];
    AlgElement d = fs_d_omega(fs, k, l, m);
    if (!B.is_central(d, eps)) central.store(false, std::memory_order_relaxed);
    return B.distance(d, B.unit());
  });
  rep.max_cocycle_dev = triple_hit.dev;
  rep.central_values = central.load();
  if (triple_hit.dev > eps && rep.witness.empty()) {
    size_t idx = triple_hit.index;
    rep.witness = "d_S omega != 1 at (" + mi_str(pts[idx / (P * P)]) + "," +
                  mi_str(pts[(idx / P) % P]) + "," + mi_str(pts[idx % P]) + ")";
  }
  rep.pass = rep.max_delta_dev <= eps && rep.max_cocycle_dev <= eps;
  return rep;
}

FactorSystem act_on_factor_system(const OneCochain& h, const FactorSystem& fs) {
  FactorSystem out = fs;
  // conjugation is trivial over a commutative algebra, so h.S = S there
  out.S = fs.B->commutative() ? fs.S : ActionRule::acted(h, fs.S);
  out.omega = OmegaRule::acted(h, fs.S, fs.omega);
  return out;
}

// ---------------------------------------------------------------------------
// crossed elements

CrossedElement crossed_zero() { return {}; }

CrossedElement crossed_monomial(const AlgElement& b, const MultiIndex& k) {
  CrossedElement e;
  e.coeffs[k] = b;
  return e;
}

CrossedElement crossed_unit(const FactorSystem& fs) {
  return crossed_monomial(fs.B->unit(), mi_zero(fs.n));
}

CrossedElement crossed_add(const FactorSystem& fs, const CrossedElement& a,
                           const CrossedElement& b) {
  CrossedElement out = a;
  for (const auto& [k, c] : b.coeffs) {
    auto it = out.coeffs.find(k);
    if (it == out.coeffs.end())
      out.coeffs[k] = c;
    else {
      it->second = fs.B->add(it->second, c);
      if (fs.B->norm(it->second) == 0.0) out.coeffs.erase(it);
    }
  }
  return out;
}

CrossedElement crossed_sub(const FactorSystem& fs, const CrossedElement& a,
                           const CrossedElement& b) {
  CrossedElement nb;
  for (const auto& [k, c] : b.coeffs) nb.coeffs[k] = fs.B->negate(c);
  return crossed_add(fs, a, nb);
}

CrossedElement crossed_mul(const FactorSystem& fs, const CrossedElement& a,
                           const CrossedElement& b) {
  const CoeffAlgebra& B = *fs.B;
  CrossedElement out;
  for (const auto& [k, x] : a.coeffs)
    for (const auto& [l, y] : b.coeffs) {
      // b (S(k)(b')) omega(k,l) v_{k+l}
      AlgElement term = B.mul(B.mul(x, fs.S_at(k).apply(B, y)), fs.omega_at(k, l));
      MultiIndex kl = k + l;
      auto it = out.coeffs.find(kl);
      if (it == out.coeffs.end())
        out.coeffs[kl] = term;
      else
        it->second = B.add(it->second, term);
    }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    if (fs.B->norm(it->second) == 0.0)
      it = out.coeffs.erase(it);
    else
      ++it;
  }
  return out;
}

double crossed_norm(const FactorSystem& fs, const CrossedElement& a) {
  double m = 0;
  for (const auto& [k, c] : a.coeffs) m = std::max(m, fs.B->norm(c));
  return m;
}

double crossed_distance(const FactorSystem& fs, const CrossedElement& a,
                        const CrossedElement& b) {
  return crossed_norm(fs, crossed_sub(fs, a, b));
}

CrossedElement random_crossed_element(const FactorSystem& fs, Rng& rng,
                                      int radius, int max_terms) {
  CrossedElement out;
  int terms = static_cast<int>(rng.below(max_terms)) + 1;
  for (int t = 0; t < terms; ++t) {
    MultiIndex k(fs.n);
    for (int& v : k) v = static_cast<int>(rng.int_in(-radius, radius));
    out.coeffs[k] = fs.B->random_element(rng);
  }
  return out;
}

CrossedElement crossed_invert_monomial(const FactorSystem& fs,
                                       const AlgElement& b, const MultiIndex& i) {
  const CoeffAlgebra& B = *fs.B;
  auto binv = B.try_invert(b);
  if (!binv) throw std::domain_error("crossed monomial coefficient not invertible");
  AlgElement w_inv = fs.omega_inv_at(i, -i);
  AlgElement inner = B.mul(*binv, w_inv);
  AlgElement coeff = fs.S_at(i).inverse().apply(B, inner);
  return crossed_monomial(coeff, -i);
}

double crossed_associativity_defect(const FactorSystem& fs, int window, int jobs) {
  const CoeffAlgebra& B = *fs.B;
  auto pts = window_points(fs.n, window);
  const size_t P = pts.size();
  // on monomials with unit coefficient the defect reduces to the cocycle
  // comparison, which is exactly what a perturbed omega must fail
  ScanHit hit = parallel_scan(P * P * P, jobs, [&](size_t idx) {
    const MultiIndex& k = pts[idx / (P * P)];
    const MultiIndex& l = pts[(idx / P) % P];
    const MultiIndex& m = pts[idx % P];
    CrossedElement vk = crossed_monomial(B.unit(), k);
    CrossedElement vl = crossed_monomial(B.unit(), l);
    CrossedElement vm = crossed_monomial(B.unit(), m);
    CrossedElement lhs = crossed_mul(fs, crossed_mul(fs, vk, vl), vm);
    CrossedElement rhs = crossed_mul(fs, vk, crossed_mul(fs, vl, vm));
    return crossed_distance(fs, lhs, rhs);
  });
  return hit.dev;
}

EquivalenceReport equivalence_iso(const OneCochain& h, const FactorSystem& fs,
                                  const FactorSystem& fs2, Rng& rng, int trials,
                                  double eps) {
  const CoeffAlgebra& B = *fs.B;
  EquivalenceReport rep;

  // h.fs == fs2 on the window (omega values and action on a spanning set)
  FactorSystem acted = act_on_factor_system(h, fs);
  auto pts = window_points(fs.n, fs.window);
  for (const auto& k : pts) {
    double d = acted.S_at(k).distance_to(B, fs2.S_at(k));
    rep.max_system_dev = std::max(rep.max_system_dev, d);
    for (const auto& l : pts) {
      double dw = B.distance(acted.omega_at(k, l), fs2.omega_at(k, l));
      if (dw > rep.max_system_dev) {
        rep.max_system_dev = dw;
        if (dw > eps) rep.witness = "omega mismatch at (" + mi_str(k) + "," + mi_str(l) + ")";
      }
    }
  }
  rep.systems_match = rep.max_system_dev <= eps;

  // phi(b v_k) = b h(k) v_k carries m_{fs2} to m_{fs}
  auto phi = [&](const CrossedElement& x) {
    CrossedElement out;
    for (const auto& [k, c] : x.coeffs) out.coeffs[k] = B.mul(c, h.eval(B, k));
    return out;
  };
  for (int t = 0; t < trials; ++t) {
    CrossedElement a = random_crossed_element(fs2, rng, fs.window / 2 + 1);
    CrossedElement b = random_crossed_element(fs2, rng, fs.window / 2 + 1);
    CrossedElement lhs = phi(crossed_mul(fs2, a, b));
    CrossedElement rhs = crossed_mul(fs, phi(a), phi(b));
    double d = crossed_distance(fs, lhs, rhs);
    if (d > rep.max_mul_dev) {
      rep.max_mul_dev = d;
      if (d > eps && rep.witness.empty())
        rep.witness = "phi not multiplicative on sample " + std::to_string(t);
    }
  }
  rep.multiplicative = rep.max_mul_dev <= eps;
  rep.pass = rep.systems_match && rep.multiplicative;
  return rep;
}

std::vector<AlgElement> characteristic_class(const FactorSystem& fs) {
  const CoeffAlgebra& B = *fs.B;
  if (!B.commutative())
    throw std::invalid_argument("characteristic class needs commutative B");
  if (!fs.S.is_trivial_kind())
    throw std::invalid_argument("characteristic class needs trivial S");
  std::vector<AlgElement> out;
  for (int i = 0; i < fs.n; ++i)
    for (int j = i + 1; j < fs.n; ++j) {
      MultiIndex ei = mi_unit(fs.n, i), ej = mi_unit(fs.n, j);
      out.push_back(B.mul(fs.omega_at(ei, ej), fs.omega_inv_at(ej, ei)));
    }
  return out;
}

ObstructionReport kernel_obstruction(const FactorSystem& fs, double eps) {
  const CoeffAlgebra& B = *fs.B;
  ObstructionReport rep;
  auto pts = window_points(fs.n, fs.window);
  for (const auto& k : pts)
    for (const auto& l : pts)
      for (const auto& m : pts) {
        AlgElement d = fs_d_omega(fs, k, l, m);
        double dev = B.distance(d, B.unit());
        if (dev > rep.max_dev_from_unit) {
          rep.max_dev_from_unit = dev;
          if (dev > eps && rep.witness.empty())
            rep.witness = "d_S omega != 1 at (" + mi_str(k) + "," + mi_str(l) +
                          "," + mi_str(m) + ")";
        }
        if (!B.is_central(d, eps)) rep.central_values = false;
      }
  rep.vanishes = rep.max_dev_from_unit <= eps;
  return rep;
}

BetaReport beta_invariant(const FactorSystem& fs, Rng& rng, int samples) {
  if (fs.n != 2) throw std::invalid_argument("beta invariant is an n = 2 construction");
  const CoeffAlgebra& B = *fs.B;
  if (!B.commutative()) throw std::invalid_argument("beta invariant needs commutative B");

  // group law in B^x x_omega Z^2: (b,k)(b',l) = (b S(k)(b') omega(k,l), k+l)
  using ExtElem = std::pair<AlgElement, MultiIndex>;
  auto ext_mul = [&](const ExtElem& x, const ExtElem& y) -> ExtElem {
    AlgElement b = B.mul(B.mul(x.first, fs.S_at(x.second).apply(B, y.first)),
                         fs.omega_at(x.second, y.second));
    return {b, x.second + y.second};
  };
  auto ext_inv = [&](const ExtElem& x) -> ExtElem {
    auto binv = B.try_invert(x.first);
    AlgElement inner = B.mul(*binv, fs.omega_inv_at(x.second, -x.second));
    return {fs.S_at(x.second).inverse().apply(B, inner), -x.second};
  };

  ExtElem se{B.unit(), mi_unit(2, 0)};
  ExtElem sf{B.unit(), mi_unit(2, 1)};
  ExtElem comm = ext_mul(ext_mul(se, sf), ext_mul(ext_inv(se), ext_inv(sf)));

  BetaReport rep{comm.first, {}};
  // sampled generators of C = < b' (S(e) b')^{-1} b^{-1} S(e') b >
  for (int s = 0; s < samples; ++s) {
    AlgElement b = B.random_unit(rng);
    AlgElement bp = B.random_unit(rng);
    AlgElement g = B.mul(
        B.mul(bp, *B.try_invert(fs.S_at(mi_unit(2, 0)).apply(B, bp))),
        B.mul(*B.try_invert(b), fs.S_at(mi_unit(2, 1)).apply(B, b)));
    rep.c_generators.push_back(g);
  }
  return rep;
}

} // namespace ncgeo
