#ifndef DESCENT_MAXWELL_HPP
#define DESCENT_MAXWELL_HPP

#include <descent/descent.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace descent {

// Named field and source components, all polynomials in (t, x, y, z).
// H and D are always derived through the vacuum relation G = star F.
struct EMConfig {
  Poly Ex, Ey, Ez;
  Poly Bx, By, Bz;
  Poly rho;
  Poly jx, jy, jz;

  EMConfig();

  // Pairs of (component name, polynomial) in a fixed order.
  std::vector<std::pair<std::string, const Poly*>> components() const;
};

// F = dt ^ E - B, a 2-form.
Form assemble_faraday(const EMConfig& c);

// G = star F for the Lorentzian metric in four dimensions.
Form assemble_ampere_vacuum(const EMConfig& c, const Metric& g);

// J = dt ^ j - R, a 3-form with R = rho dx^dy^dz.
Form assemble_current(const EMConfig& c);

struct MaxwellResiduals {
  Form faraday;     // dF
  Form ampere;      // dG - J, vacuum G
  Form continuity;  // dJ

  bool solves() const { return faraday.is_zero() && ampere.is_zero(); }
};

MaxwellResiduals residuals(const EMConfig& c, const Metric& g);

struct DescentViolation {
  std::string component;
  int axis;
};

class descent_violation_error : public std::runtime_error {
 public:
  explicit descent_violation_error(std::vector<DescentViolation> violations);
  const std::vector<DescentViolation>& violations() const { return violations_; }

 private:
  std::vector<DescentViolation> violations_;
};

// Components depending on any of the listed axes, in component order.
std::vector<DescentViolation> descent_violations(const EMConfig& c, const std::vector<int>& axes);

enum class SplitMode { single, dbl };

// Residuals of the reduced equations, keyed by stable equation ids, plus the
// componentwise scalar residuals when filled by the caller. Every id belongs
// to exactly one sector. The catalogue of ids and of the fixed basis signs
// linking the two views is documented in the README.
struct SectorReport {
  std::map<std::string, Form> residuals;
  std::map<std::string, Poly> crosscheck;
  std::vector<DescentViolation> violations;

  bool all_zero() const;
};

// One descent along z. Sectors: EEB in (Ex, Ey, Bz) and BBE in (Bx, By, Ez).
// Requires every component to be z-free; throws descent_violation_error
// otherwise. pair_z must be the coordinate pair along axis 3.
SectorReport split_single(const EMConfig& c, const Metric& g, const DescentPair& pair_z);

// Double descent along y and z. Sectors: (Ex), (Ey,Bz), (By,Ez), (Bx).
// Requires every component to be y- and z-free. pair_y and pair_z must be
// the coordinate pairs along axes 2 and 3.
SectorReport split_double(const EMConfig& c, const Metric& g, const DescentPair& pair_y,
                          const DescentPair& pair_z);

// Scalar residuals of the componentwise reduced equations, evaluated
// directly from partial derivatives of the configuration.
std::map<std::string, Poly> componentwise_crosscheck(const EMConfig& c, const Metric& g, SplitMode mode);

}  // namespace descent

#endif
