#pragma once

#include <json.hpp>

#include "ncgeo/algebra.hpp"
#include "ncgeo/factor.hpp"
#include "ncgeo/torus.hpp"

namespace ncgeo {

using nlohmann::json;

struct config_error : std::runtime_error {
  explicit config_error(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), where(path) {}
  std::string where;
};

// "3", -2, "5/7" -> Rat
Rat rat_from_json(const json& j, const std::string& path);
json rat_to_json(const Rat& r);

// {"amp":[p,q,pi,qi],"phase":[p,q]} | {"re":x,"im":y}
Scalar scalar_from_json(const json& j, const std::string& path);
json scalar_to_json(const Scalar& s);

// {"kind":"complex"|"matrix"|"fourier"|"finitefn"|"polyquot", ...}
std::shared_ptr<CoeffAlgebra> algebra_from_json(const json& j, const std::string& path);
json algebra_to_json(const CoeffAlgebra& A);

AlgElement element_from_json(const CoeffAlgebra& A, const json& j,
                             const std::string& path);
json element_to_json(const CoeffAlgebra& A, const AlgElement& e);

AlgebraAutomorphism automorphism_from_json(const CoeffAlgebra& A, const json& j,
                                           const std::string& path);

// {"n":..,"window":..,"B":{...},"S":{...},"omega":{...}}
FactorSystem factor_system_from_json(const json& j, const std::string& path);

// {"theta":[[..]],"cap":..}
std::shared_ptr<const TorusAlgebra> torus_algebra_from_json(const json& j,
                                                            const std::string& path);
// {"coeffs":[{"k":[..],"amp":<scalar>},..]}
TorusElement torus_element_from_json(std::shared_ptr<const TorusAlgebra> alg,
                                     const json& j, const std::string& path);
json torus_element_to_json(const TorusElement& a);

} // namespace ncgeo
