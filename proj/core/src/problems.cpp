#include "sdc/problems.hpp"

#include <cmath>
#include <sstream>

namespace sdc {

OdeSystem linear_problem(double lambda) {
  OdeSystem sys;
  sys.name = "linear";
  sys.dimension = 1;
  sys.y0 = {1.0};
  sys.default_final_time = 10.0;
  sys.rhs = [lambda](const Vec& y) { return Vec{lambda * y[0]}; };
  sys.jacobian = [lambda](const Vec&) { return Mat{{lambda}}; };
  sys.lipschitz_hint = std::abs(lambda);
  sys.exact = [lambda](double t) { return Vec{std::exp(lambda * t)}; };
  return sys;
}

OdeSystem constant_problem(double c, int dimension) {
  OdeSystem sys;
  sys.name = "constant";
  sys.dimension = dimension;
  sys.y0.assign(dimension, 0.0);
  sys.default_final_time = 1.0;
  sys.rhs = [c, dimension](const Vec&) { return Vec(dimension, c); };
  sys.jacobian = [dimension](const Vec&) { return Mat(dimension, Vec(dimension, 0.0)); };
  sys.lipschitz_hint = 0.0;
  sys.exact = [c, dimension](double t) { return Vec(dimension, c * t); };
  return sys;
}

OdeSystem pendulum_problem() {
  OdeSystem sys;
  sys.name = "pendulum";
  sys.dimension = 2;
  sys.y0 = {0.0, 1.0};
  sys.default_final_time = 10.0;
  sys.rhs = [](const Vec& y) { return Vec{y[1], -std::sin(y[0])}; };
  sys.jacobian = [](const Vec& y) {
    return Mat{{0.0, 1.0}, {-std::cos(y[0]), 0.0}};
  };
  sys.lipschitz_hint = 1.0;
  return sys;
}

OdeSystem vdp_problem(double eps) {
  if (!(eps > 0.0)) throw ConfigError("vdp requires eps > 0");
  OdeSystem sys;
  sys.name = "vdp";
  sys.dimension = 2;
  sys.y0 = {2.0, -0.666666654321};
  sys.default_final_time = 4.0;
  sys.rhs = [eps](const Vec& y) {
    return Vec{y[1], (-y[0] + (1.0 - y[0] * y[0]) * y[1]) / eps};
  };
  sys.rhs_explicit = [](const Vec& y) { return Vec{y[1], 0.0}; };
  sys.rhs_implicit = [eps](const Vec& y) {
    return Vec{0.0, (-y[0] + (1.0 - y[0] * y[0]) * y[1]) / eps};
  };
  sys.jacobian = [eps](const Vec& y) {
    return Mat{{0.0, 1.0},
               {(-1.0 - 2.0 * y[0] * y[1]) / eps, (1.0 - y[0] * y[0]) / eps}};
  };
  sys.jacobian_implicit = [eps](const Vec& y) {
    return Mat{{0.0, 0.0},
               {(-1.0 - 2.0 * y[0] * y[1]) / eps, (1.0 - y[0] * y[0]) / eps}};
  };
  return sys;
}

std::vector<std::string> problem_names() { return {"linear", "pendulum", "vdp", "constant"}; }

OdeSystem make_problem(const std::string& name, const ProblemParams& params) {
  OdeSystem sys;
  if (name == "linear") {
    sys = linear_problem(params.lambda.value_or(-1.0));
  } else if (name == "pendulum") {
    sys = pendulum_problem();
  } else if (name == "vdp") {
    sys = vdp_problem(params.eps.value_or(1.0));
  } else if (name == "constant") {
    sys = constant_problem(params.value.value_or(1.0));
  } else {
    std::ostringstream msg;
    msg << "unknown problem '" << name << "' (valid:";
    for (const auto& n : problem_names()) msg << " " << n;
    msg << ")";
    throw ConfigError(msg.str());
  }
  if (params.final_time) sys.default_final_time = *params.final_time;
  if (params.y0) {
    if (static_cast<int>(params.y0->size()) != sys.dimension)
      throw ConfigError("y0 override has wrong dimension for problem '" + name + "'");
    sys.y0 = *params.y0;
    sys.exact = nullptr;  // closed form no longer applies
  }
  return sys;
}

}  // namespace sdc
