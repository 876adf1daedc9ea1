#pragma once

#include <stdexcept>
#include <string>

namespace palk {

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[noreturn]] void contract_failure(const char* expr, const char* file, int line, const std::string& msg);

}  // namespace palk

#define PALK_EXPECT(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond)) ::palk::contract_failure(#cond, __FILE__, __LINE__, msg); \
    } while (0)
