#ifndef FAIRBARY_ERRORS_HPP
#define FAIRBARY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fairbary {

// Exit-code families used by the CLI. Library code throws these so the
// front end can map failures without string matching.
enum class ErrorKind {
  Schema = 2,     // malformed input, bad arguments
  Infeasible = 3, // structurally valid input that admits no solution
  Internal = 4,   // broken invariant inside the solver
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error schema_error(const std::string& what) {
  return Error(ErrorKind::Schema, what);
}
inline Error infeasible_error(const std::string& what) {
  return Error(ErrorKind::Infeasible, what);
}
inline Error internal_error(const std::string& what) {
  return Error(ErrorKind::Internal, what);
}

}  // namespace fairbary

#endif
