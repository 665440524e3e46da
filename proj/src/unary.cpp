#include "lss/unary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lss/error.hpp"

namespace lss {

namespace {

void require_positive(int m, int n) {
    if (m < 1 || n < 1) {
        throw PreconditionError("bound arguments must be positive, got (" + std::to_string(m) + "," +
                                std::to_string(n) + ")");
    }
}

std::int64_t lcm64(int i, int j) { return std::lcm(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)); }

} // namespace

std::int64_t big_f(int m, int n) {
    require_positive(m, n);
    std::int64_t best = 0;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            best = std::max(best, std::max<std::int64_t>(m - i, n - j) + lcm64(i, j));
        }
    }
    return best;
}

std::int64_t big_g(int m, int n) {
    if (m < 0 || n < 0) {
        throw PreconditionError("G is undefined for negative arguments");
    }
    std::int64_t best = 0;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            best = std::max(best, lcm64(i, j));
        }
    }
    return best;
}

std::optional<std::pair<int, int>> big_g_prime_argmax(int m, int n) {
    require_positive(m, n);
    std::optional<std::pair<int, int>> arg;
    std::int64_t best = 0;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == m && j == n) {
                continue;
            }
            if (const std::int64_t v = lcm64(i, j); v > best) {
                best = v;
                arg = {i, j};
            }
        }
    }
    return arg;
}

std::int64_t big_g_prime(int m, int n) {
    const auto arg = big_g_prime_argmax(m, n);
    return arg ? lcm64(arg->first, arg->second) : 0;
}

UnaryFiniteLang::UnaryFiniteLang(std::set<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) {
        throw PreconditionError("finite unary language must be nonempty");
    }
    if (*exponents_.begin() < 0) {
        throw PreconditionError("exponents must be non-negative");
    }
}

std::optional<int> unary_power_decide(const UnaryFiniteLang& a, const UnaryFiniteLang& b) {
    if (a.min() < 1 || b.min() < 1) {
        throw PreconditionError("unary_power_decide requires nonempty words (exponent 0 is not allowed)");
    }
    if (a.min() > b.max() || b.min() > a.max()) {
        return std::nullopt;
    }

    // lengths[k] of A^k and B^k as bitmaps; any answer has k <= max exponent.
    const int cap = std::max(a.max(), b.max());
    const std::size_t width = static_cast<std::size_t>(cap) * static_cast<std::size_t>(cap) + 1;
    auto advance = [&](const std::vector<char>& prev, const UnaryFiniteLang& lang) {
        std::vector<char> next(width, 0);
        for (std::size_t len = 0; len < width; ++len) {
            if (!prev[len]) {
                continue;
            }
            for (int e : lang.exponents()) {
                if (len + static_cast<std::size_t>(e) < width) {
                    next[len + static_cast<std::size_t>(e)] = 1;
                }
            }
        }
        return next;
    };

    std::vector<char> la(width, 0);
    std::vector<char> lb(width, 0);
    la[0] = lb[0] = 1;
    for (int k = 1; k <= cap; ++k) {
        la = advance(la, a);
        lb = advance(lb, b);
        for (std::size_t len = 0; len < width; ++len) {
            if (la[len] && lb[len]) {
                return k;
            }
        }
    }
    throw std::logic_error("unary_power_decide: no k found although min/max criterion holds");
}

} // namespace lss
