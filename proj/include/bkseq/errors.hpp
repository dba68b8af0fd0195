#ifndef BKSEQ_ERRORS_HPP
#define BKSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bkseq {

// Inputs outside an operation's domain throw std::invalid_argument directly.
// The types below exist where callers need to tell failure classes apart
// (the CLI maps them to distinct exit statuses).

class NotInvertible : public std::invalid_argument {
 public:
  explicit NotInvertible(const std::string& what_arg)
      : std::invalid_argument(what_arg) {}
};

// An instance exceeds a configured size cap. `required` carries the count
// that would be needed (decimal) so callers can raise the cap deliberately.
class InstanceTooLarge : public std::runtime_error {
 public:
  InstanceTooLarge(const std::string& what_arg, std::string required_count)
      : std::runtime_error(what_arg), required(std::move(required_count)) {}

  std::string required;
};

}  // namespace bkseq

#endif
