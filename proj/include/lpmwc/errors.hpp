#pragma once

#include <stdexcept>
#include <string>

namespace lpmwc {

// Exit-code taxonomy used by the CLI: parse=2, infeasible=3, budget=4,
// unsupported=5. Library code throws; the CLI maps code() to the process
// exit status.
enum class ErrorCode : int {
    parse = 2,
    infeasible = 3,
    budget = 4,
    unsupported = 5,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(ErrorCode::parse, msg) {}
};

struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& msg) : Error(ErrorCode::infeasible, msg) {}
};

struct InfeasibleAssignment : Error {
    explicit InfeasibleAssignment(const std::string& msg) : Error(ErrorCode::infeasible, msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(ErrorCode::budget, msg) {}
};

struct SizeLimit : Error {
    explicit SizeLimit(const std::string& msg) : Error(ErrorCode::budget, msg) {}
};

struct IterationCap : Error {
    explicit IterationCap(const std::string& msg) : Error(ErrorCode::budget, msg) {}
};

struct UnsupportedP : Error {
    explicit UnsupportedP(const std::string& msg) : Error(ErrorCode::unsupported, msg) {}
};

struct InvalidP : Error {
    explicit InvalidP(const std::string& msg) : Error(ErrorCode::unsupported, msg) {}
};

struct OddN : Error {
    explicit OddN(const std::string& msg) : Error(ErrorCode::unsupported, msg) {}
};

struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg) : Error(ErrorCode::unsupported, msg) {}
};

struct UnionNotV : Error {
    explicit UnionNotV(const std::string& msg) : Error(ErrorCode::unsupported, msg) {}
};

}  // namespace lpmwc
