#include "dkposc/params.hpp"

#include <cmath>

namespace dkp {

namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v))
    throw invalid_parameter(std::string(field) + " must be finite");
}

}  // namespace

void SpacetimeParams::validate() const {
  require_finite(alpha, "alpha");
  require_finite(Omega, "Omega");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw invalid_parameter("alpha must lie in (0, 1]");
  if (!(Omega >= 0.0)) throw invalid_parameter("Omega must be >= 0");
}

void PhysicsParams::validate() const {
  require_finite(M, "M");
  require_finite(omega, "omega");
  require_finite(A, "A");
  require_finite(B, "B");
  require_finite(k, "k");
  require_finite(phi, "phi");
  if (!(M > 0.0)) throw invalid_parameter("M must be > 0");
  if (!(omega > 0.0)) throw invalid_parameter("omega must be > 0");
  spacetime().validate();
}

void QuantumNumbers::validate() const {
  if (n < 0) throw invalid_parameter("n must be >= 0");
}

}  // namespace dkp
