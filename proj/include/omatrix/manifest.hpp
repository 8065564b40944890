#ifndef OMATRIX_MANIFEST_HPP
#define OMATRIX_MANIFEST_HPP

#include <optional>
#include <string>

#include "omatrix/doubles.hpp"
#include "omatrix/lie.hpp"

namespace omatrix {

/// Parsed problem definition.  Rationals arrive as strings "p/q"; sparse
/// tensors as arrays of {indices, value}.  Validation failures carry the
/// offending field path and map to exit code 2.
struct Manifest {
  std::optional<LieAlgebra> lie_algebra;
  std::optional<Representation> representation;  // module over lie_algebra
  std::optional<Tensor> r_matrix;                // skew, dim x dim
  std::optional<Matrix> o_operator;              // dim x module-dim
  std::optional<Representation> rho;             // dual-sized module
  std::optional<BilinearProduct> product;
  std::optional<Rational> mu;
  std::optional<Rational> eps;
  std::vector<std::string> checks;
};

Manifest parse_manifest(const std::string& json_text);
Manifest load_manifest(const std::string& path);

}  // namespace omatrix

#endif
