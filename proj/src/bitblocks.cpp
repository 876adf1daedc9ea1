#include "palk/bitblocks.hpp"

#include <sstream>

namespace palk {

void contract_failure(const char* expr, const char* file, int line, const std::string& msg) {
    std::ostringstream os;
    os << file << ':' << line << ": contract violation: " << msg << " (" << expr << ')';
    throw ContractViolation(os.str());
}

WordParams::WordParams(int beta) : beta_(beta), mask_(low_mask(beta + 1)), g_(static_cast<std::size_t>(beta) + 1, 0) {
    PALK_EXPECT(beta >= 1 && beta < kWordBits, "beta must fit in a machine word");
    for (int i = 1; i <= beta; ++i) {
        Word g = 0;
        for (int j = 0; j <= beta / i; ++j) g |= Word{1} << (i * j);
        g_[static_cast<std::size_t>(i)] = g;
    }
}

Word mask_g(const WordParams& params, int i) {
    PALK_EXPECT(i >= 1 && i <= params.beta(), "g index out of range");
    return params.g(i);
}

namespace {
void check_width(const WordParams& params, std::int64_t i0, std::int64_t i1) {
    PALK_EXPECT(i1 >= i0 && i1 - i0 <= params.beta(), "window wider than beta+1 bits");
}
}  // namespace

Word read_forward(const WordParams& params, const BitArray& a, std::int64_t i0, std::int64_t i1) {
    check_width(params, i0, i1);
    return a.fwd(i0, i1);
}

Word read_backward(const WordParams& params, const BitArray& a, std::int64_t i0, std::int64_t i1) {
    check_width(params, i0, i1);
    return a.bwd(i0, i1);
}

void or_assign_forward(const WordParams& params, BitArray& a, std::int64_t i0, std::int64_t i1, Word x) {
    check_width(params, i0, i1);
    a.or_assign_forward(i0, i1, x);
}

void or_assign_backward(const WordParams& params, BitArray& a, std::int64_t i0, std::int64_t i1, Word x) {
    check_width(params, i0, i1);
    a.or_assign_backward(i0, i1, x);
}

}  // namespace palk
