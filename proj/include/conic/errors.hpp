#pragma once

#include <stdexcept>
#include <string>

namespace conic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSpec : Error { using Error::Error; };

// model_metrics
struct OutOfChart : Error { using Error::Error; };

// geometry
struct NotSpherical : Error { using Error::Error; };

// indicial
struct NotIndicialRoot : Error { using Error::Error; };
struct InvalidNu : Error {
  InvalidNu(const std::string& msg, double max_nu) : Error(msg), max_admissible_nu(max_nu) {}
  double max_admissible_nu;
};

// mode_spectral
struct GridTooCoarse : Error { using Error::Error; };
struct NoDiscreteSpectrum : Error { using Error::Error; };
struct DegenerateFit : Error { using Error::Error; };

// liouville
struct NotUniformizable : Error {
  NotUniformizable(const std::string& msg, const std::string& why) : Error(msg), reason(why) {}
  std::string reason;
};
struct NewtonDiverged : Error { using Error::Error; };
struct SingularLinearization : Error { using Error::Error; };
struct MeshTooCoarse : Error { using Error::Error; };

// cli
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace conic
