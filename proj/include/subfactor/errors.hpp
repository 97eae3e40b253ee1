#ifndef SUBFACTOR_ERRORS_HPP
#define SUBFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subfactor {

/// Malformed or mathematically invalid input (bad table, non-projective
/// matrices, schema errors). The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error
{
public:
  explicit ValidationError(const std::string& what, std::string field = {})
  : std::runtime_error(what), field_(std::move(field))
  {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// A numerical procedure could not resolve its result (degenerate spectrum,
/// non-integral multiplicity). Retrying with another seed may help.
class NumericalError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Two independently computed quantities that must agree did not.
/// Never patched over; the CLI maps this to exit code 2.
class InconsistencyError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace subfactor

#endif // SUBFACTOR_ERRORS_HPP
