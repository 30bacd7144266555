#pragma once

#include <stdexcept>
#include <string>

namespace ckzeta {

// Base for failures of mathematically well-posed requests: the input is
// shaped correctly but the answer cannot be produced (bad reduction, budget,
// pole, no rational form of the asked degrees ...).  Malformed input and
// violated preconditions raise std::invalid_argument instead.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The curve does not reduce to a smooth curve at this prime.
class bad_reduction : public domain_error {
 public:
  bad_reduction(std::uint64_t p, const std::string& what)
      : domain_error(what), prime(p) {}
  std::uint64_t prime;
};

// An enumeration or evaluation would exceed its configured budget.
class budget_exceeded : public domain_error {
 public:
  using domain_error::domain_error;
};

// A partial product was requested at a point where a factor has a pole.
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Rational reconstruction: the data does not pin down a unique candidate.
class underdetermined_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Rational reconstruction: no function of the requested degrees matches.
class no_solution_error : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace ckzeta
