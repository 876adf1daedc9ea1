#pragma once

#include <cstdint>
#include <string>

#include "palk/engine.hpp"

namespace palk {

/// O(n log n) engine: visits only the leading suffix-palindromes; the array z
/// folds each cubic leading palindrome's series of non-leading suffixes into
/// one bit.
class NlognEngine final : public PalEngine {
public:
    explicit NlognEngine(bool m0, std::int64_t fault_at = -1);

    bool append(std::uint8_t a, bool b) override;
    EngineKind kind() const noexcept override { return EngineKind::nlogn; }

    bool z_at(std::int64_t i) const { return z_.get(i); }

    /// Recomputes j_i, p_i, d_i for every i by brute force and checks the z
    /// invariant. On failure returns false and writes a description.
    bool debug_check_z(std::string* failure = nullptr) const;

private:
    BitArray z_;
    std::int64_t fault_at_;
};

}  // namespace palk
