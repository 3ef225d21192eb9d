#include "ncgeo/json_io.hpp"

#include <sstream>

namespace ncgeo {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    throw config_error(path, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

} // namespace

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::istringstream is(s);
    std::int64_t p = 0, q = 1;
    char slash = 0;
    is >> p;
    if (is.fail()) throw config_error(path, "expected rational, got \"" + s + "\"");
    if (is >> slash) {
      if (slash != '/' || !(is >> q))
        throw config_error(path, "expected rational p/q, got \"" + s + "\"");
    }
    return Rat(p, q);
  }
  if (j.is_number_float()) {
    // accept simple decimal fractions exactly
    double v = j.get<double>();
    std::int64_t den = 1;
    while (den < 100000000 && v * den != std::floor(v * den)) den *= 10;
    return Rat(static_cast<std::int64_t>(std::llround(v * den)), den);
  }
  throw config_error(path, "expected rational");
}

json rat_to_json(const Rat& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return Scalar::exact(rat_from_json(j, path));
  if (j.is_string()) return Scalar::exact(rat_from_json(j, path));
  if (!j.is_object()) throw config_error(path, "expected scalar");
  if (j.contains("re") || j.contains("im")) {
    double re = j.value("re", 0.0), im = j.value("im", 0.0);
    return Scalar::flt(re, im);
  }
  GRat amp(Rat(1));
  Rat phase(0);
  if (j.contains("amp")) {
    const json& a = j.at("amp");
    if (a.is_array()) {
      if (a.size() == 2)
        amp = GRat(Rat(a[0].get<std::int64_t>(), a[1].get<std::int64_t>()));
      else if (a.size() == 4)
        amp = GRat(Rat(a[0].get<std::int64_t>(), a[1].get<std::int64_t>()),
                   Rat(a[2].get<std::int64_t>(), a[3].get<std::int64_t>()));
      else
        throw config_error(path + "/amp", "expected [p,q] or [p,q,pi,qi]");
    } else {
      amp = GRat(rat_from_json(a, path + "/amp"));
    }
  }
  if (j.contains("phase")) {
    const json& p = j.at("phase");
    if (p.is_array() && p.size() == 2)
      phase = Rat(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
    else
      phase = rat_from_json(p, path + "/phase");
  }
  return Scalar::exact(amp, phase);
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) {
    json out;
    out["amp"] = {s.exact_amp().re.num(), s.exact_amp().re.den(),
                  s.exact_amp().im.num(), s.exact_amp().im.den()};
    out["phase"] = {s.exact_phase().num(), s.exact_phase().den()};
    return out;
  }
  return json{{"re", s.to_complex().real()}, {"im", s.to_complex().imag()}};
}

std::shared_ptr<CoeffAlgebra> algebra_from_json(const json& j, const std::string& path) {
  std::string kind = need(j, "kind", path).get<std::string>();
  if (kind == "complex") return make_complex_scalars();
  if (kind == "matrix") {
    int m = need(j, "m", path).get<int>();
    if (m < 1) throw config_error(path + "/m", "matrix size must be >= 1");
    return make_matrix_algebra(m);
  }
  if (kind == "fourier") {
    int d = need(j, "d", path).get<int>();
    int support = j.value("support", 1);
    return make_fourier_algebra(d, support);
  }
  if (kind == "finitefn") {
    std::vector<std::string> pts;
    for (const auto& p : need(j, "points", path)) {
      if (p.is_string())
        pts.push_back(p.get<std::string>());
      else
        pts.push_back(p.dump());
    }
    return make_finite_function_algebra(pts);
  }
  if (kind == "polyquot") {
    std::vector<Rat> mod;
    size_t i = 0;
    for (const auto& c : need(j, "modulus", path))
      mod.push_back(rat_from_json(c, path + "/modulus/" + std::to_string(i++)));
    return make_poly_quotient_ring(mod);
  }
  throw config_error(path + "/kind", "unknown algebra kind \"" + kind + "\"");
}

json algebra_to_json(const CoeffAlgebra& A) {
  json out{{"kind", A.kind()}};
  if (A.kind() == "matrix")
    out["m"] = static_cast<const MatrixAlgebra&>(A).size();
  if (A.kind() == "fourier")
    out["d"] = static_cast<const FourierAlgebra&>(A).rank();
  if (A.kind() == "finitefn")
    out["points"] = static_cast<const FiniteFunctionAlgebra&>(A).points();
  if (A.kind() == "polyquot") {
    json m = json::array();
    for (const Rat& c : static_cast<const PolyQuotientRing&>(A).modulus())
      m.push_back(rat_to_json(c));
    out["modulus"] = m;
  }
  return out;
}

AlgElement element_from_json(const CoeffAlgebra& A, const json& j,
                             const std::string& path) {
  const std::string kind = A.kind();
  if (kind == "complex") return {scalar_from_json(j, path)};
  if (kind == "matrix" || kind == "finitefn") {
    std::vector<Scalar> entries;
    size_t i = 0;
    if (kind == "matrix") {
      for (const auto& row : need(j, "entries", path))
        for (const auto& e : row)
          entries.push_back(scalar_from_json(e, path + "/entries/" + std::to_string(i++)));
    } else {
      for (const auto& e : need(j, "values", path))
        entries.push_back(scalar_from_json(e, path + "/values/" + std::to_string(i++)));
    }
    if (static_cast<int>(entries.size()) != *A.dimension())
      throw config_error(path, "element has wrong dimension");
    return {entries};
  }
  if (kind == "fourier") {
    AlgElement::Fourier f;
    for (const auto& t : need(j, "coeffs", path)) {
      MultiIndex k = t.at("k").get<MultiIndex>();
      f[k] = scalar_from_json(t.at("c"), path + "/coeffs");
    }
    return {f};
  }
  if (kind == "polyquot") {
    std::vector<Rat> c;
    size_t i = 0;
    for (const auto& e : need(j, "coeffs", path))
      c.push_back(rat_from_json(e, path + "/coeffs/" + std::to_string(i++)));
    return static_cast<const PolyQuotientRing&>(A).from_poly(c);
  }
  throw config_error(path, "cannot parse element for algebra kind " + kind);
}

json element_to_json(const CoeffAlgebra& A, const AlgElement& e) {
  const std::string kind = A.kind();
  if (kind == "complex") return scalar_to_json(e.scalar());
  if (kind == "matrix") {
    int m = static_cast<const MatrixAlgebra&>(A).size();
    json rows = json::array();
    for (int i = 0; i < m; ++i) {
      json row = json::array();
      for (int j2 = 0; j2 < m; ++j2)
        row.push_back(scalar_to_json(e.vec()[static_cast<size_t>(i) * m + j2]));
      rows.push_back(row);
    }
    return json{{"entries", rows}};
  }
  if (kind == "finitefn") {
    json vals = json::array();
    for (const auto& s : e.vec()) vals.push_back(scalar_to_json(s));
    return json{{"values", vals}};
  }
  if (kind == "fourier") {
    json coeffs = json::array();
    for (const auto& [k, c] : e.fourier())
      coeffs.push_back(json{{"k", k}, {"c", scalar_to_json(c)}});
    return json{{"coeffs", coeffs}};
  }
  json coeffs = json::array();
  for (const Rat& c : e.poly()) coeffs.push_back(rat_to_json(c));
  return json{{"coeffs", coeffs}};
}

AlgebraAutomorphism automorphism_from_json(const CoeffAlgebra& A, const json& j,
                                           const std::string& path) {
  std::string kind = need(j, "kind", path).get<std::string>();
  if (kind == "identity") return AlgebraAutomorphism::identity();
  if (kind == "conjugation") {
    AlgElement u = element_from_json(A, need(j, "unit", path), path + "/unit");
    return AlgebraAutomorphism::conjugation(A, u);
  }
  if (kind == "point_perm")
    return AlgebraAutomorphism::point_permutation(
        need(j, "perm", path).get<std::vector<int>>());
  if (kind == "index_map") {
    auto mat = need(j, "matrix", path).get<std::vector<std::vector<int>>>();
    std::vector<Rat> alpha;
    if (j.contains("phases")) {
      size_t i = 0;
      for (const auto& p : j.at("phases"))
        alpha.push_back(rat_from_json(p, path + "/phases/" + std::to_string(i++)));
    } else {
      alpha.assign(mat.size(), Rat(0));
    }
    return AlgebraAutomorphism::index_map(mat, alpha);
  }
  if (kind == "compose") {
    std::vector<AlgebraAutomorphism> items;
    size_t i = 0;
    for (const auto& it : need(j, "items", path))
      items.push_back(automorphism_from_json(A, it, path + "/items/" + std::to_string(i++)));
    return AlgebraAutomorphism::compose(std::move(items));
  }
  throw config_error(path + "/kind", "unknown automorphism kind \"" + kind + "\"");
}

FactorSystem factor_system_from_json(const json& j, const std::string& path) {
  FactorSystem fs;
  fs.n = need(j, "n", path).get<int>();
  fs.window = j.value("window", 3);
  if (fs.n < 1) throw config_error(path + "/n", "n must be >= 1");
  if (fs.window < 1) throw config_error(path + "/window", "window must be >= 1");
  fs.B = algebra_from_json(need(j, "B", path), path + "/B");

  const json& sj = need(j, "S", path);
  std::string skind = need(sj, "kind", path + "/S").get<std::string>();
  if (skind == "trivial") {
    fs.S = ActionRule::trivial();
  } else if (skind == "generators") {
    std::vector<AlgebraAutomorphism> gens;
    size_t i = 0;
    for (const auto& g : need(sj, "items", path + "/S"))
      gens.push_back(automorphism_from_json(*fs.B, g,
                                            path + "/S/items/" + std::to_string(i++)));
    if (static_cast<int>(gens.size()) != fs.n)
      throw config_error(path + "/S/items", "need one generator per coordinate");
    fs.S = ActionRule::generator_powers(std::move(gens));
  } else {
    throw config_error(path + "/S/kind", "unknown action kind \"" + skind + "\"");
  }

  const json& wj = need(j, "omega", path);
  std::string wkind = need(wj, "kind", path + "/omega").get<std::string>();
  if (wkind == "unit") {
    fs.omega = OmegaRule::unit_cochain();
  } else if (wkind == "bilinear_phase") {
    std::vector<std::vector<Rat>> mat;
    size_t r = 0;
    for (const auto& row : need(wj, "matrix", path + "/omega")) {
      std::vector<Rat> rr;
      size_t c = 0;
      for (const auto& e : row)
        rr.push_back(rat_from_json(e, path + "/omega/matrix/" + std::to_string(r) +
                                          "/" + std::to_string(c++)));
      mat.push_back(std::move(rr));
      ++r;
    }
    if (static_cast<int>(mat.size()) != fs.n)
      throw config_error(path + "/omega/matrix", "matrix must be n x n");
    fs.omega = OmegaRule::bilinear_phase(std::move(mat));
  } else if (wkind == "random_coboundary") {
    std::uint64_t seed = need(wj, "seed", path + "/omega").get<std::uint64_t>();
    fs.omega = OmegaRule::coboundary(OneCochain::random_phases(seed), fs.S);
  } else if (wkind == "table") {
    std::map<std::pair<MultiIndex, MultiIndex>, AlgElement> entries;
    for (const auto& e : need(wj, "entries", path + "/omega")) {
      MultiIndex k = e.at("k").get<MultiIndex>();
      MultiIndex l = e.at("l").get<MultiIndex>();
      entries[{k, l}] =
          element_from_json(*fs.B, e.at("value"), path + "/omega/entries");
    }
    fs.omega = OmegaRule::table(std::move(entries));
  } else if (wkind == "product") {
    std::vector<OmegaRule> factors;
    size_t i = 0;
    for (const auto& f : need(wj, "factors", path + "/omega")) {
      json sub{{"n", fs.n}, {"window", fs.window}, {"B", algebra_to_json(*fs.B)},
               {"S", sj}, {"omega", f}};
      factors.push_back(factor_system_from_json(
                            sub, path + "/omega/factors/" + std::to_string(i++))
                            .omega);
    }
    fs.omega = OmegaRule::product(std::move(factors));
  } else {
    throw config_error(path + "/omega/kind", "unknown omega kind \"" + wkind + "\"");
  }
  return fs;
}

std::shared_ptr<const TorusAlgebra> torus_algebra_from_json(const json& j,
                                                            const std::string& path) {
  const json& tj = need(j, "theta", path);
  std::vector<std::vector<Rat>> theta;
  size_t r = 0;
  for (const auto& row : tj) {
    std::vector<Rat> rr;
    size_t c = 0;
    for (const auto& e : row)
      rr.push_back(rat_from_json(e, path + "/theta/" + std::to_string(r) + "/" +
                                        std::to_string(c++)));
    theta.push_back(std::move(rr));
    ++r;
  }
  int cap = j.value("cap", 64);
  const size_t n = theta.size();
  for (size_t i = 0; i < n; ++i) {
    if (theta[i].size() != n)
      throw config_error(path + "/theta/" + std::to_string(i), "row has wrong length");
    for (size_t k = 0; k < n; ++k)
      if (theta[i][k] != -theta[k][i])
        throw config_error(path + "/theta",
                           "not skew-symmetric at (" + std::to_string(i) + "," +
                               std::to_string(k) + ")");
  }
  return std::make_shared<TorusAlgebra>(static_cast<int>(n), std::move(theta), cap);
}

TorusElement torus_element_from_json(std::shared_ptr<const TorusAlgebra> alg,
                                     const json& j, const std::string& path) {
  std::map<MultiIndex, Scalar> coeffs;
  for (const auto& t : need(j, "coeffs", path)) {
    MultiIndex k = t.at("k").get<MultiIndex>();
    Scalar c = scalar_from_json(t.at("amp"), path + "/coeffs");
    if (coeffs.count(k))
      coeffs[k] += c;
    else
      coeffs[k] = c;
  }
  return TorusElement(std::move(alg), std::move(coeffs));
}

json torus_element_to_json(const TorusElement& a) {
  json coeffs = json::array();
  for (const auto& [k, c] : a.coeffs())
    coeffs.push_back(json{{"k", k}, {"amp", scalar_to_json(c)}});
  return json{{"coeffs", coeffs}};
}

} // namespace ncgeo
