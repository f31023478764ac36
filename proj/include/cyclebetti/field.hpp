#pragma once
// Coefficient field selection: a prime field GF(p) or the rationals.

#include <cstdint>
#include <string>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

class FieldSpec {
public:
    static FieldSpec prime(std::uint32_t p) {
        if (!is_prime(p))
            throw invalid_parameter_error("field characteristic " + std::to_string(p) +
                                          " is not prime");
        FieldSpec f;
        f.p_ = p;
        return f;
    }

    static FieldSpec rationals() { return FieldSpec(); }

    // CLI convention: 0 denotes the rationals, a positive integer a prime field.
    static FieldSpec from_flag(long long flag) {
        if (flag == 0) return rationals();
        if (flag < 0 || flag > 0x7fffffff)
            throw invalid_parameter_error("field flag out of range: " + std::to_string(flag));
        return prime(static_cast<std::uint32_t>(flag));
    }

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    std::string name() const {
        return is_rationals() ? "QQ" : ("GF(" + std::to_string(p_) + ")");
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    FieldSpec() = default;
    std::uint32_t p_ = 0;  // 0 encodes the rationals
};

}  // namespace cyclebetti
