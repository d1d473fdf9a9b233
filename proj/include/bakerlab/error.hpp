#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bakerlab {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// unknown catalog id
struct catalog_error : error {
  using error::error;
};

// exp argument beyond the overflow guard; carries the offending point
struct overflow_error : error {
  std::complex<double> at;
  overflow_error(std::string msg, std::complex<double> z)
      : error(std::move(msg)), at(z) {}
};

// evaluation within the pole-proximity guard
struct pole_error : error {
  using error::error;
};

struct precondition_error : error {
  using error::error;
};

// Newton derivative underflow / non-convergence
struct branch_error : error {
  using error::error;
};

// path lift blocked; carries the curve parameter where halving underflowed
struct obstruction_error : error {
  double parameter;
  obstruction_error(std::string msg, double s)
      : error(std::move(msg)), parameter(s) {}
};

// probe or sample budget exhausted where the contract demands an error
struct budget_error : error {
  using error::error;
};

}  // namespace bakerlab
