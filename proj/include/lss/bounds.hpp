#ifndef LSS_BOUNDS_HPP
#define LSS_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lss {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundKind { F, G, GPrime, Lemma, Scalar, Power };

std::string_view bound_name(BoundKind kind);
/// Accepts the CLI spellings F, G, Gprime, lemma, scalar, power.
BoundKind parse_bound_kind(std::string_view name);

/// A named bound evaluated exactly.
struct BoundReport {
    BoundKind kind;
    std::vector<std::int64_t> parameters;
    BigInt value;

    /// "name(p1,p2,...) = value"
    std::string to_string() const;
    /// Recomputes the value from the parameters.
    bool verify() const;
};

/// Dispatches to big_f / big_g / big_g_prime / lemma_bound / scalar_bound / power_length_bound.
/// Parameter arity: F, G, Gprime take (m, n); lemma (v, k, d); scalar (v, k); power (s1, ..., sd).
BoundReport compute_bound(BoundKind kind, std::vector<std::int64_t> parameters);

} // namespace lss

#endif
