#include "rigidepth/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <optional>
#include <stdexcept>

namespace rigidepth {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    // Products of two residues must fit in 64 bits.
    if (!is_prime(p) || p > (std::int64_t{1} << 31)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a supported prime");
    }
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.starts_with("fp:")) {
        std::int64_t p = 0;
        const auto digits = text.substr(3);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime(p);
    }
    throw std::invalid_argument("unrecognized field '" + std::string(text) +
                                "' (expected q or fp:<prime>)");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "F_" + std::to_string(characteristic_);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const auto v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(k, j);
        }
    }
    return out;
}

bool is_zero(const IntMatrix& m) {
    for (auto v : m.data) {
        if (v != 0) return false;
    }
    return true;
}

namespace {

// One Bareiss update (a*b - c*d) / divisor, or nullopt on 64-bit overflow.
std::optional<std::int64_t> bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c,
                                         std::int64_t d, std::int64_t divisor) {
    std::int64_t ab = 0;
    std::int64_t cd = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
        __builtin_sub_overflow(ab, cd, &diff)) {
        return std::nullopt;
    }
    return diff / divisor;
}

template <typename Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::optional<std::size_t> bareiss_rank_i64(const IntMatrix& in) {
    std::vector<std::vector<std::int64_t>> m(in.rows, std::vector<std::int64_t>(in.cols));
    for (std::size_t i = 0; i < in.rows; ++i) {
        for (std::size_t j = 0; j < in.cols; ++j) m[i][j] = in.at(i, j);
    }
    std::size_t r = 0;
    std::int64_t prev = 1;
    for (std::size_t c = 0; c < in.cols && r < in.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < in.rows && m[pivot][c] == 0) ++pivot;
        if (pivot == in.rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < in.rows; ++i) {
            for (std::size_t j = c + 1; j < in.cols; ++j) {
                auto next = bareiss_step(m[r][c], m[i][j], m[i][c], m[r][j], prev);
                if (!next) return std::nullopt;
                m[i][j] = *next;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::size_t rank_mod_p(const IntMatrix& in, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> m(in.rows, std::vector<std::int64_t>(in.cols));
    for (std::size_t i = 0; i < in.rows; ++i) {
        for (std::size_t j = 0; j < in.cols; ++j) m[i][j] = ((in.at(i, j) % p) + p) % p;
    }
    auto inverse = [p](std::int64_t a) {
        std::int64_t result = 1;
        std::int64_t e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < in.cols && r < in.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < in.rows && m[pivot][c] == 0) ++pivot;
        if (pivot == in.rows) continue;
        std::swap(m[pivot], m[r]);
        const std::int64_t inv = inverse(m[r][c]);
        for (std::size_t i = r + 1; i < in.rows; ++i) {
            if (m[i][c] == 0) continue;
            const std::int64_t factor = m[i][c] * inv % p;
            for (std::size_t j = c; j < in.cols; ++j) {
                m[i][j] = ((m[i][j] - factor * m[r][j]) % p + p) % p;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (!field.is_rationals()) return rank_mod_p(m, field.characteristic());
    if (auto fast = bareiss_rank_i64(m)) return *fast;
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> big(m.rows, std::vector<cpp_int>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) big[i][j] = m.at(i, j);
    }
    return bareiss_rank(std::move(big), m.cols);
}

}  // namespace rigidepth
