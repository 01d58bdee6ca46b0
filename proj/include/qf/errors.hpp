#ifndef QF_ERRORS_HPP
#define QF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qf {

/* Domain-level failure with a stable machine-readable code (used by the
 * CLI to build error payloads).  The code is a short snake_case token,
 * e.g. "square_discriminant" or "bound_exceeded". */
class domain_error : public std::runtime_error {
public:
  domain_error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string &code() const { return code_; }

private:
  std::string code_;
};

} // namespace qf

#endif
