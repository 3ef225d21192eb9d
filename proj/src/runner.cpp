#include "ncgeo/runner.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include "ncgeo/classify.hpp"
#include "ncgeo/convolution.hpp"
#include "ncgeo/dynfree.hpp"
#include "ncgeo/graded.hpp"
#include "ncgeo/liecw.hpp"
#include "ncgeo/localize.hpp"
#include "ncgeo/torus.hpp"

namespace ncgeo {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    throw config_error(path, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// ---------------------------------------------------------------------------

void run_torus(const RunConfig& cfg, Report& rep) {
  auto alg = torus_algebra_from_json(cfg.body, "/");
  Rng rng(cfg.seed);
  const double eps = cfg.eps;

  std::vector<std::string> checks =
      cfg.body.value("checks", std::vector<std::string>{"associativity", "star",
                                                        "isotypic", "action"});
  auto random_element = [&](int radius, int terms) {
    std::map<MultiIndex, Scalar> c;
    for (int t = 0; t < terms; ++t) {
      MultiIndex k(alg->n());
      for (int& v : k) v = static_cast<int>(rng.int_in(-radius, radius));
      c[k] = Scalar::exact(rng.rat(3, 2), rng.rat(3, 2));
    }
    return TorusElement(alg, std::move(c));
  };

  for (const std::string& check : checks) {
    if (check == "associativity") {
      double dev = 0;
      for (int t = 0; t < 50; ++t) {
        TorusElement a = random_element(2, 3), b = random_element(2, 3),
                     c = random_element(2, 3);
        TorusElement lhs = torus_mul(torus_mul(a, b), c);
        TorusElement rhs = torus_mul(a, torus_mul(b, c));
        dev = std::max(dev, torus_sub(lhs, rhs).norm_max());
      }
      rep.add("torus associativity (50 random triples)", dev <= eps, dev);
    } else if (check == "star") {
      double dev = 0;
      for (int t = 0; t < 50; ++t) {
        TorusElement a = random_element(2, 3), b = random_element(2, 3);
        TorusElement lhs = torus_star(torus_mul(a, b));
        TorusElement rhs = torus_mul(torus_star(b), torus_star(a));
        dev = std::max(dev, torus_sub(lhs, rhs).norm_max());
      }
      rep.add("star anti-multiplicativity", dev <= eps, dev);
    } else if (check == "isotypic") {
      double dev = 0;
      for (int t = 0; t < 20; ++t) {
        TorusElement a = random_element(2, 4);
        TorusElement sum = TorusElement::zero(alg);
        for (const auto& [k, c] : a.coeffs())
          sum = torus_add(sum, isotypic_project(a, k));
        dev = std::max(dev, torus_sub(sum, a).norm_max());
      }
      rep.add("isotypic reconstruction", dev <= eps, dev);
    } else if (check == "action") {
      double dev = 0;
      for (int t = 0; t < 25; ++t) {
        std::vector<Scalar> z;
        for (int i = 0; i < alg->n(); ++i) z.push_back(Scalar::phase_of(rng.phase(12)));
        TorusElement a = random_element(2, 3), b = random_element(2, 3);
        TorusElement lhs = torus_action(z, torus_mul(a, b), eps);
        TorusElement rhs = torus_mul(torus_action(z, a, eps), torus_action(z, b, eps));
        dev = std::max(dev, torus_sub(lhs, rhs).norm_max());
      }
      rep.add("torus action is multiplicative", dev <= eps, dev);
    } else if (check == "oracle") {
      if (alg->n() != 2) {
        rep.skip("matrix realization oracle", "needs n = 2");
        continue;
      }
      Rat theta = alg->theta(0, 1);
      RationalRealization psi(theta, torus_grid_points(5));
      double dev = 0;
      for (int t = 0; t < 50; ++t) {
        TorusElement a = random_element(2, 3), b = random_element(2, 3);
        dev = std::max(dev, psi.homomorphism_defect(a, b));
      }
      rep.add("matrix realization oracle (25 points, 50 pairs)", dev <= eps, dev);
    } else if (check == "neumann") {
      int terms = cfg.body.value("terms", 60);
      TorusElement a = torus_sub(
          TorusElement::one(alg),
          TorusElement::monomial(alg, mi_unit(alg->n(), 0), Scalar::exact(Rat(1, 2))));
      auto inv = neumann_invert(a, terms);
      if (std::holds_alternative<NotDominated>(inv)) {
        rep.add("neumann inversion", false, 0,
                std::get<NotDominated>(inv).reason);
      } else {
        TorusElement prod = torus_mul(a, std::get<TorusElement>(inv));
        double resid = torus_sub(prod, TorusElement::one(alg)).norm_l1();
        double bound = std::pow(0.5, terms + 1) / 0.5;
        rep.add("neumann inversion residual bound", resid <= bound, resid);
      }
    } else {
      rep.skip(check, "unknown torus check");
    }
  }

  if (cfg.body.contains("element")) {
    TorusElement a = torus_element_from_json(alg, cfg.body, "/element");
    rep.artifacts["schwartz_profile"] = schwartz_profile(a);
  }
}

// ---------------------------------------------------------------------------

void run_crossed(const RunConfig& cfg, Report& rep) {
  FactorSystem fs = factor_system_from_json(need(cfg.body, "system", "/"), "/system");
  Rng rng(cfg.seed);
  const double eps = cfg.eps;

  FactorSystemReport fr = check_factor_system(fs, eps, cfg.jobs);
  rep.add("factor system identities (delta_S, d_S omega)", fr.pass,
          std::max(fr.max_delta_dev, fr.max_cocycle_dev), fr.witness);
  rep.add("d_S omega values central", fr.central_values);

  double assoc = crossed_associativity_defect(fs, fs.window, cfg.jobs);
  rep.add("crossed product associativity on window", assoc <= 3 * eps, assoc);

  if (fs.B->commutative() && fs.S.is_trivial_kind()) {
    auto cls = characteristic_class(fs);
    json values = json::array();
    for (const auto& c : cls) values.push_back(element_to_json(*fs.B, c));
    rep.artifacts["characteristic_class"] = values;
  }

  if (cfg.body.contains("classify_against")) {
    FactorSystem other =
        factor_system_from_json(cfg.body.at("classify_against"), "/classify_against");
    ConnectionResult cr = connect_cocycles(fs, other, eps);
    rep.add("classes match iff connected by a one-cochain",
            cr.connected == cr.classes_match, 0, cr.note);
    rep.artifacts["connected"] = cr.connected;
    rep.artifacts["classes_match"] = cr.classes_match;
  }

  // random equivalences act trivially on the class
  if (fs.B->commutative() && fs.S.is_trivial_kind()) {
    bool constant = true;
    for (int t = 0; t < 10; ++t) {
      OneCochain h = OneCochain::random_phases(rng.bits());
      FactorSystem moved = act_on_factor_system(h, fs);
      if (!classes_equal(fs, moved, eps)) constant = false;
    }
    rep.add("characteristic class constant on orbits (10 samples)", constant);
  }
}

// ---------------------------------------------------------------------------

template <class K>
KMat<K> matrix_from_json(const json& j, const std::string& path);

template <>
KMat<double> matrix_from_json<double>(const json& j, const std::string& path) {
  KMat<double> out;
  for (const auto& row : j) {
    KVec<double> r;
    for (const auto& e : row)
      r.push_back(e.is_number() ? e.get<double>()
                                : rat_from_json(e, path).to_double());
    out.push_back(std::move(r));
  }
  return out;
}

void run_liecw(const RunConfig& cfg, Report& rep) {
  using K = double;
  const double eps = cfg.eps;
  const json& body = cfg.body;

  int dim = need(body, "dim", "/").get<int>();
  LieAlgebra<K> ghat = LieAlgebra<K>::abelian(dim);
  for (const auto& b : need(body, "bracket", "/")) {
    int i = b.at(0).get<int>(), j = b.at(1).get<int>();
    KVec<K> v;
    for (const auto& e : b.at(2))
      v.push_back(e.is_number() ? e.get<double>()
                                : rat_from_json(e, "/bracket").to_double());
    if (i < 0 || j < 0 || i >= dim || j >= dim ||
        static_cast<int>(v.size()) != dim)
      throw config_error("/bracket", "bad bracket entry");
    ghat.set_bracket(i, j, v);
  }
  double jac = ghat.jacobi_defect();
  rep.add("jacobi identity", jac <= eps, jac);

  auto ideal = need(body, "ideal", "/").get<std::vector<int>>();
  LieExtension<K> ext = LieExtension<K>::make(ghat, ideal);
  double idef = ext.ideal_defect();
  rep.add("designated subspace is an ideal", idef <= eps, idef);

  std::vector<KMat<K>> sections;
  if (body.contains("sections")) {
    size_t i = 0;
    for (const auto& s : body.at("sections")) {
      KMat<K> m = matrix_from_json<K>(s, "/sections/" + std::to_string(i++));
      double sdef = ext.section_defect(m);
      if (sdef > eps)
        throw config_error("/sections/" + std::to_string(i - 1),
                           "not a section of the quotient");
      sections.push_back(std::move(m));
    }
  } else {
    sections.push_back(ext.canonical_section());
  }

  VModule<K> V = VModule<K>::trivial(1);
  SymPoly<K> f = SymPoly<K>::zero(1, ext.dim_n(), 1);
  if (body.contains("f")) {
    int k = need(body.at("f"), "k", "/f").get<int>();
    f = SymPoly<K>::zero(k, ext.dim_n(), 1);
    const json& vals = need(body.at("f"), "values", "/f");
    if (vals.size() != f.tuples.size())
      throw config_error("/f/values", "expected " + std::to_string(f.tuples.size()) +
                                          " entries");
    for (size_t t = 0; t < f.tuples.size(); ++t)
      f.vals[t] = {vals[t].is_number() ? vals[t].get<double>()
                                       : rat_from_json(vals[t], "/f/values").to_double()};
  } else {
    // default: sum of coordinate functionals
    for (auto& v : f.vals) v = {1.0};
  }
  double inv_dev = invariance_defect(ext, V, f);
  rep.add("invariance of f", inv_dev <= 1e-8, inv_dev);

  Cochain<K> R = curvature(ext, sections[0]);
  rep.artifacts["curvature_norm"] = R.norm_max();

  // Bianchi
  {
    Cochain<K> S = Cochain<K>::zero(1, ext.dim_g(), ext.dim_n() * ext.dim_n());
    for (int c = 0; c < ext.dim_g(); ++c) {
      KVec<K> v = ext.apply_section(sections[0], c);
      KMat<K> ad = ext.ad_on_n(v);
      KVec<K> flat;
      for (const auto& row : ad) flat.insert(flat.end(), row.begin(), row.end());
      S.at({c}) = flat;
    }
    double dev = covariant_differential(ext.quot, S, R).norm_max();
    rep.add("bianchi identity d_S R = 0", dev <= eps, dev);
  }

  if (inv_dev <= 1e-8) {
    ChernWeilResult<K> cw = chern_weil(ext, V, f, sections[0]);
    rep.add("primary class closed", cw.closedness_dev <= eps, cw.closedness_dev);
    if (sections.size() >= 2) {
      MainTheoremReport<K> mt = main_theorem_check(ext, V, f, sections);
      rep.add("transgression identity", mt.deviation <= 1e-8, mt.deviation);
      Cochain<K> delta = bott_lecomte(ext, f, sections);
      rep.artifacts["transgression_form_norm"] = delta.norm_max();
      double p0 = primary_form(ext, f, sections[0]).norm_max();
      double p1 = primary_form(ext, f, sections[1]).norm_max();
      if (p0 <= eps && p1 <= eps) {
        SecondaryClassResult<K> sc =
            secondary_class(ext, V, f, sections[0], sections[1], eps);
        rep.add("secondary class closed", sc.closedness_dev <= eps,
                sc.closedness_dev);
        rep.artifacts["secondary_class_norm"] = sc.form.norm_max();
      }
    }
  }
}

// ---------------------------------------------------------------------------

void run_dynfree(const RunConfig& cfg, Report& rep) {
  const json& body = cfg.body;
  FiniteDynSystem sys;
  sys.group = FiniteAbelianGroup{need(body, "group", "/").get<std::vector<int>>()};
  sys.algebra = algebra_from_json(need(body, "algebra", "/"), "/algebra");
  if (!sys.algebra->dimension())
    throw config_error("/algebra", "finite-dimensional algebra required");
  sys.generator_action.assign(sys.group.rank(), AlgebraAutomorphism::identity());
  for (const auto& a : need(body, "action", "/")) {
    int gen = need(a, "gen", "/action").get<int>();
    if (gen < 0 || gen >= sys.group.rank())
      throw config_error("/action", "generator index out of range");
    sys.generator_action[gen] =
        automorphism_from_json(*sys.algebra, need(a, "autom", "/action"), "/action/autom");
  }

  Rng rng(cfg.seed);
  double vdef = sys.validity_defect(rng);
  rep.add("action validity (orders, automorphism property)", vdef <= cfg.eps, vdef);

  std::vector<std::string> checks = body.value(
      "checks", std::vector<std::string>{"isotypic", "bundle", "spectrum"});
  for (const std::string& check : checks) {
    if (check == "isotypic") {
      // projections idempotent, orthogonal, complete
      auto chars = sys.group.elements();
      double dev = 0;
      int total_dim = 0;
      for (const auto& phi : chars) {
        auto rows = isotypic_component(sys, phi, cfg.eps);
        total_dim += static_cast<int>(rows.size());
      }
      bool complete = (total_dim == sys.dim());
      rep.add("isotypic components span the algebra", complete, dev,
              complete ? "" : "dimension mismatch");
    } else if (check == "bundle") {
      BundleCheckReport br = trivial_bundle_check(sys, cfg.eps);
      rep.add("trivial bundle conditions (C1)+(C2)", br.pass, 0, br.search_bound);
      json ws = json::array();
      for (const auto& w : br.invertible_witnesses)
        ws.push_back(json{{"name", w.name}, {"found", w.found},
                          {"detail", w.description}});
      for (const auto& w : br.root_witnesses)
        ws.push_back(json{{"name", w.name}, {"found", w.found},
                          {"detail", w.description}});
      rep.artifacts["bundle_witnesses"] = ws;
    } else if (check == "evaluation") {
      if (!sys.algebra->commutative()) {
        rep.skip("evaluation freeness", "needs commutative algebra");
        continue;
      }
      FreenessReport fr = freeness_by_evaluation(sys);
      rep.add("evaluation maps surjective", fr.pass, 0, fr.failure_witness);
      rep.add("criterion consistent with the induced action", fr.consistent);
    } else if (check == "phimap") {
      if (!sys.algebra->commutative()) {
        rep.skip("phi map freeness", "needs commutative algebra");
        continue;
      }
      PhiMapReport pr = freeness_by_phi_map(sys);
      rep.add("phi map bijective iff point action free", pr.agree, 0,
              "rank " + std::to_string(pr.rank) + "/" + std::to_string(pr.target_dim));
      rep.artifacts["phi_map"] = json{{"balanced_dim", pr.balanced_dim},
                                      {"target_dim", pr.target_dim},
                                      {"rank", pr.rank},
                                      {"bijective", pr.bijective},
                                      {"point_action_free", pr.point_action_free}};
    } else if (check == "spectrum") {
      if (!sys.algebra->commutative()) {
        rep.skip("spectrum action", "needs commutative algebra");
        continue;
      }
      OrbitTable t = spectrum_action(sys);
      json orbits = json::array();
      for (const auto& o : t.orbits) orbits.push_back(o);
      rep.artifacts["orbits"] = orbits;
      rep.artifacts["free"] = t.free;
      rep.add("spectrum action computed", true);
    } else {
      rep.skip(check, "unknown dynfree check");
    }
  }
}

// ---------------------------------------------------------------------------

void run_localize(const RunConfig& cfg, Report& rep) {
  const json& body = cfg.body;
  const json& rj = need(body, "ring", "/");
  std::string rkind = need(rj, "kind", "/ring").get<std::string>();
  LocalizableRing ring = LocalizableRing::rational_polynomials();
  if (rkind == "polyquot") {
    RatPoly mod;
    size_t i = 0;
    for (const auto& c : need(rj, "modulus", "/ring"))
      mod.c.push_back(rat_from_json(c, "/ring/modulus/" + std::to_string(i++)));
    ring = LocalizableRing::quotient(mod);
  } else if (rkind != "poly") {
    throw config_error("/ring/kind", "expected poly or polyquot");
  }
  RatPoly a;
  size_t i = 0;
  for (const auto& c : need(body, "a", "/"))
    a.c.push_back(rat_from_json(c, "/a/" + std::to_string(i++)));

  LocalizedRing loc(ring, a);
  rep.artifacts["zero_ring"] = loc.is_zero_ring();

  // j(a) becomes invertible
  RingFraction ja = loc.j(a);
  RingFraction prod = loc.mul(ja, loc.a_inverse());
  rep.add("j(a) inverted by 1/a", loc.equal(prod, loc.one()));

  Rng rng(cfg.seed);
  bool transitive = true;
  for (int t = 0; t < 25; ++t) {
    RatPoly r = ring.random_element(rng);
    int m = static_cast<int>(rng.below(3));
    RingFraction x{r, m};
    RingFraction y = loc.mul(x, RingFraction{ring.mul(a, ring.one()), 1}); // r*a/a^{m+1}
    RingFraction z = loc.mul(y, RingFraction{ring.mul(a, ring.one()), 1});
    if (!(loc.equal(x, y) && loc.equal(y, z) && loc.equal(x, z))) transitive = false;
  }
  rep.add("fraction equality transitive on samples", transitive);
}

// ---------------------------------------------------------------------------

void run_dispatch(const RunConfig& cfg, Report& rep);

void run_suite(const RunConfig& cfg, Report& rep) {
  if (!cfg.seed_set)
    throw config_error("/seed", "missing field \"seed\" (required for suite tasks)");
  const json& parts = need(cfg.body, "tasks", "/");
  int index = 0;
  for (const auto& part : parts) {
    RunConfig sub;
    sub.kind = need(part, "kind", "/tasks").get<std::string>();
    sub.body = part;
    sub.seed = cfg.seed + static_cast<std::uint64_t>(index);
    sub.seed_set = true;
    sub.eps = cfg.eps;
    sub.jobs = cfg.jobs;
    Report srep;
    srep.task = sub.kind;
    run_dispatch(sub, srep);
    for (auto& c : srep.checks) {
      c.name = "task" + std::to_string(index) + "/" + c.name;
      rep.checks.push_back(c);
    }
    rep.artifacts["task" + std::to_string(index)] = srep.artifacts;
    ++index;
  }
}

void run_dispatch(const RunConfig& cfg, Report& rep) {
  if (cfg.kind == "torus") run_torus(cfg, rep);
  else if (cfg.kind == "crossed") run_crossed(cfg, rep);
  else if (cfg.kind == "liecw") run_liecw(cfg, rep);
  else if (cfg.kind == "dynfree") run_dynfree(cfg, rep);
  else if (cfg.kind == "localize") run_localize(cfg, rep);
  else if (cfg.kind == "suite") run_suite(cfg, rep);
  else throw config_error("/kind", "unknown task kind \"" + cfg.kind + "\"");
}

} // namespace

RunConfig parse_config(const json& doc) {
  RunConfig cfg;
  cfg.kind = need(doc, "kind", "/").get<std::string>();
  cfg.body = doc;
  if (doc.contains("seed")) {
    cfg.seed = doc.at("seed").get<std::uint64_t>();
    cfg.seed_set = true;
  }
  if (const char* env = std::getenv("NCGEO_EPS")) cfg.eps = std::atof(env);
  if (doc.contains("eps")) cfg.eps = doc.at("eps").get<double>();
  if (doc.contains("jobs")) cfg.jobs = doc.at("jobs").get<int>();
  static const std::vector<std::string> kinds = {"torus",   "crossed",  "liecw",
                                                 "dynfree", "localize", "suite"};
  if (std::find(kinds.begin(), kinds.end(), cfg.kind) == kinds.end())
    throw config_error("/kind", "unknown task kind \"" + cfg.kind + "\"");
  if (cfg.kind == "suite" && !cfg.seed_set)
    throw config_error("/seed", "missing field \"seed\" (required for suite tasks)");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path, "cannot open config file");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw config_error(path, std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

Report run(const RunConfig& cfg) {
  Report rep;
  rep.task = cfg.kind;
  rep.version = kToolVersion;
  rep.config_echo = cfg.body;
  auto start = std::chrono::steady_clock::now();
  run_dispatch(cfg, rep);
  rep.wall_clock_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return rep;
}

} // namespace ncgeo
