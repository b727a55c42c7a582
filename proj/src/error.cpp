#include "kerrsplit/error.hpp"

#include <fmt/format.h>

namespace kerrsplit {

CutoffTooSmall::CutoffTooSmall(int n_cut, int required, double tail_mass)
    : std::runtime_error(fmt::format(
          "cutoff too small: n_cut={} drops tail mass {:.3g}; need n_cut >= {}", n_cut,
          tail_mass, required)),
      n_cut_(n_cut),
      required_(required),
      tail_mass_(tail_mass) {}

DimensionCapExceeded::DimensionCapExceeded(std::size_t product_dimension, std::size_t cap)
    : std::runtime_error(fmt::format(
          "two-mode dimension {} exceeds cap {} (dense density matrix would be {}x{})",
          product_dimension, cap, product_dimension, product_dimension)),
      product_dimension_(product_dimension),
      cap_(cap) {}

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message),
      field_(std::move(field)) {}

}  // namespace kerrsplit

namespace kerrsplit {

ScenarioInfeasible::ScenarioInfeasible(double nu, int m, const std::string& reason)
    : std::runtime_error(fmt::format("scenario point (nu={}, m={}) infeasible: {}", nu, m, reason)),
      nu_(nu),
      m_(m) {}

}  // namespace kerrsplit
