#ifndef LSS_UNARY_HPP
#define LSS_UNARY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>

namespace lss {

/// F(m,n) = max over 1<=i<=m, 1<=j<=n of max(m-i, n-j) + lcm(i,j).
std::int64_t big_f(int m, int n);

/// G(m,n) = max lcm(i,j) over 1<=i<=m, 1<=j<=n. G(0,.) = G(.,0) = 0.
std::int64_t big_g(int m, int n);

/// G'(m,n): the maximum of G's range with the corner (m,n) excluded; 0 when nothing is left.
std::int64_t big_g_prime(int m, int n);

/// First pair (scanning i, then j, ascending) attaining G'(m,n); nullopt for m = n = 1.
std::optional<std::pair<int, int>> big_g_prime_argmax(int m, int n);

/// Finite unary language {a^e : e in exponents}.
class UnaryFiniteLang {
public:
    explicit UnaryFiniteLang(std::set<int> exponents);

    const std::set<int>& exponents() const noexcept { return exponents_; }
    int min() const { return *exponents_.begin(); }
    int max() const { return *exponents_.rbegin(); }

private:
    std::set<int> exponents_;
};

/// Least k >= 1 with A^k ∩ B^k nonempty, or nullopt when no such k exists.
/// Requires every exponent to be at least 1.
std::optional<int> unary_power_decide(const UnaryFiniteLang& a, const UnaryFiniteLang& b);

} // namespace lss

#endif
