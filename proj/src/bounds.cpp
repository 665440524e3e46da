#include "lss/bounds.hpp"

#include <limits>
#include <sstream>

#include "lss/error.hpp"
#include "lss/unary.hpp"
#include "lss/weighted.hpp"

namespace lss {

std::string_view bound_name(BoundKind kind) {
    switch (kind) {
    case BoundKind::F: return "F";
    case BoundKind::G: return "G";
    case BoundKind::GPrime: return "Gprime";
    case BoundKind::Lemma: return "lemma";
    case BoundKind::Scalar: return "scalar";
    case BoundKind::Power: return "power";
    }
    return "?";
}

BoundKind parse_bound_kind(std::string_view name) {
    for (BoundKind k : {BoundKind::F, BoundKind::G, BoundKind::GPrime, BoundKind::Lemma, BoundKind::Scalar,
                        BoundKind::Power}) {
        if (bound_name(k) == name) {
            return k;
        }
    }
    throw PreconditionError("unknown bound '" + std::string(name) + "' (expected F, G, Gprime, lemma, scalar, power)");
}

std::string BoundReport::to_string() const {
    std::ostringstream out;
    out << bound_name(kind) << '(';
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        out << (i ? "," : "") << parameters[i];
    }
    out << ") = " << value;
    return out.str();
}

bool BoundReport::verify() const {
    return value >= 0 && compute_bound(kind, parameters).value == value;
}

namespace {

void require_arity(const std::vector<std::int64_t>& p, std::size_t n, BoundKind kind) {
    if (p.size() != n) {
        throw PreconditionError(std::string(bound_name(kind)) + " takes " + std::to_string(n) + " parameters");
    }
}

int narrow(std::int64_t v) {
    if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
        throw PreconditionError("parameter out of range");
    }
    return static_cast<int>(v);
}

} // namespace

BoundReport compute_bound(BoundKind kind, std::vector<std::int64_t> parameters) {
    BoundReport report{kind, std::move(parameters), 0};
    const auto& p = report.parameters;
    switch (kind) {
    case BoundKind::F:
        require_arity(p, 2, kind);
        report.value = big_f(narrow(p[0]), narrow(p[1]));
        break;
    case BoundKind::G:
        require_arity(p, 2, kind);
        if (p[0] < 1 || p[1] < 1) {
            throw PreconditionError("G needs positive arguments");
        }
        report.value = big_g(narrow(p[0]), narrow(p[1]));
        break;
    case BoundKind::GPrime:
        require_arity(p, 2, kind);
        report.value = big_g_prime(narrow(p[0]), narrow(p[1]));
        break;
    case BoundKind::Lemma:
        require_arity(p, 3, kind);
        report.value = lemma_bound(p[0], p[1], p[2]);
        break;
    case BoundKind::Scalar:
        require_arity(p, 2, kind);
        report.value = scalar_bound(p[0], p[1]);
        break;
    case BoundKind::Power:
        report.value = power_length_bound(p);
        break;
    }
    return report;
}

} // namespace lss
