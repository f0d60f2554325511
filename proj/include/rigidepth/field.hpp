#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rigidepth {

/// Coefficient field: the rationals or a prime field F_p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws std::invalid_argument unless p is prime.
    static FieldSpec prime(std::int64_t p);
    /// Accepts "q" or "fp:<p>".
    static FieldSpec parse(std::string_view text);

    bool is_rationals() const { return characteristic_ == 0; }
    std::int64_t characteristic() const { return characteristic_; }
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::int64_t c) : characteristic_(c) {}
    std::int64_t characteristic_;
};

bool is_prime(std::int64_t p);

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntMatrix& m);

/// Exact rank over the field. Rationals use fraction-free (Bareiss)
/// elimination in 64-bit arithmetic, restarting in arbitrary precision if an
/// intermediate overflows; F_p uses elimination mod p.
std::size_t rank(const IntMatrix& m, const FieldSpec& field);

}  // namespace rigidepth
