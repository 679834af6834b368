#ifndef HOCHSCHILD_ERROR_HPP_
#define HOCHSCHILD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hochschild {

  enum class ErrorKind {
    // malformed input
    dangling_endpoint,
    duplicate_name,
    empty_vertex_set,
    short_generator,
    non_minimal,
    antisymmetry,
    syntax,
    unresolved_name,
    duplicate_definition,
    invalid_argument,
    // well-formed input outside the supported range
    infinite_path_set,
    narrowness_requires_acyclicity,
    infinite_basis,
    infinite_slice,
    infinite_dimensional,
    not_pregenerated,
    not_narrow,
    cyclic_unsupported,
    disconnected,
    formula_unavailable,
    dimension_guard,
    // internal consistency guards
    associativity_failure,
    invalid_bimodule,
  };

  inline char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::dangling_endpoint: return "dangling endpoint";
      case ErrorKind::duplicate_name: return "duplicate name";
      case ErrorKind::empty_vertex_set: return "empty vertex set";
      case ErrorKind::short_generator: return "length < 2 generator";
      case ErrorKind::non_minimal: return "non-minimal";
      case ErrorKind::antisymmetry: return "antisymmetry violation";
      case ErrorKind::syntax: return "syntax error";
      case ErrorKind::unresolved_name: return "unresolved name";
      case ErrorKind::duplicate_definition: return "duplicate definition";
      case ErrorKind::invalid_argument: return "invalid argument";
      case ErrorKind::infinite_path_set: return "infinite path set";
      case ErrorKind::narrowness_requires_acyclicity:
        return "narrowness requires acyclicity";
      case ErrorKind::infinite_basis: return "infinite basis";
      case ErrorKind::infinite_slice: return "infinite slice";
      case ErrorKind::infinite_dimensional: return "infinite dimensional";
      case ErrorKind::not_pregenerated: return "not pre-generated";
      case ErrorKind::not_narrow: return "not narrow";
      case ErrorKind::cyclic_unsupported: return "cyclic quiver unsupported";
      case ErrorKind::disconnected: return "disconnected quiver";
      case ErrorKind::formula_unavailable:
        return "formula unavailable, use oracle";
      case ErrorKind::dimension_guard: return "dimension guard exceeded";
      case ErrorKind::associativity_failure: return "associativity failure";
      case ErrorKind::invalid_bimodule: return "invalid bimodule";
    }
    return "unknown error";
  }

  //! Exception thrown by every operation of the library. The kind is stable
  //! and machine-readable; the message adds context for humans.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail)
        : std::runtime_error(detail.empty()
                                 ? std::string(to_string(kind))
                                 : std::string(to_string(kind)) + ": " + detail),
          _kind(kind) {}

    explicit Error(ErrorKind kind) : Error(kind, std::string()) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

    //! True for errors caused by malformed input, as opposed to valid input
    //! that no implemented method supports.
    [[nodiscard]] bool is_input_error() const noexcept {
      return _kind <= ErrorKind::invalid_argument;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace hochschild

#endif  // HOCHSCHILD_ERROR_HPP_
