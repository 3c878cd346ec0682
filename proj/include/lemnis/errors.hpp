#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lemnis {

/// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument (index out of range, bad tolerance, ...).
class argument_error : public error
{
public:
  using error::error;
};

/// A value overflowed double precision.
class range_error : public error
{
public:
  using error::error;
};

/// A Pochhammer factor in a denominator vanishes.
class pole_error : public error
{
public:
  using error::error;
};

/// The series diverges for the requested argument.
class divergence_error : public error
{
public:
  using error::error;
};

/// Summation hit its iteration cap before the tail bound fell below tolerance.
class convergence_error : public error
{
public:
  using error::error;
};

/// A parameter lies outside the domain where the formula is valid.
class domain_error : public error
{
public:
  using error::error;
};

/// A family violates the coefficient hypothesis (S1 >= 1).
class hypothesis_error : public error
{
public:
  using error::error;
};

/// Root finding: no sign change on the bracket.
class bracket_error : public error
{
public:
  using error::error;
};

/// Root finding: the condition returned a non-finite value.
class evaluation_error : public error
{
public:
  using error::error;
};

/// f(z)/z vanished (or nearly so) at a sample point.
class zero_of_f_error : public error
{
public:
  zero_of_f_error(const std::string& what, std::complex<double> z)
    : error(what), z_(z)
  {}

  std::complex<double> where() const noexcept { return z_; }

private:
  std::complex<double> z_;
};

} // namespace lemnis
