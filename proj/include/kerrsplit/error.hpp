#pragma once

#include <stdexcept>
#include <string>

namespace kerrsplit {

/// The retained Fock basis drops more probability than the cutoff policy allows.
class CutoffTooSmall : public std::runtime_error {
 public:
  CutoffTooSmall(int n_cut, int required, double tail_mass);

  int n_cut() const noexcept { return n_cut_; }
  int required() const noexcept { return required_; }
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  int n_cut_;
  int required_;
  double tail_mass_;
};

/// A dense two-mode density matrix would exceed the configured size cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  DimensionCapExceeded(std::size_t product_dimension, std::size_t cap);

  std::size_t product_dimension() const noexcept { return product_dimension_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t product_dimension_;
  std::size_t cap_;
};

/// Scenario configuration rejected; `field()` names the offending JSON path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace kerrsplit

namespace kerrsplit {

/// A scenario point cannot be computed within the resource caps.
class ScenarioInfeasible : public std::runtime_error {
 public:
  ScenarioInfeasible(double nu, int m, const std::string& reason);

  double nu() const noexcept { return nu_; }
  int m() const noexcept { return m_; }

 private:
  double nu_;
  int m_;
};

}  // namespace kerrsplit
