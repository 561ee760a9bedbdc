#include "tilepot/bounds.hpp"

#include <stdexcept>

namespace tilepot {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

BoundValue exact(long long v) { return {v, v, v}; }

BoundValue range(long long lower, long long upper) {
    if (lower == upper) return exact(lower);
    return {std::nullopt, lower, upper};
}

void check_common(int scenario, int n) {
    if (scenario < 1 || scenario > 3)
        throw std::invalid_argument("scenario must be 1, 2, or 3");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

} // namespace

BoundValue lollipop_bound(BoundKind kind, int scenario, int m, int n) {
    check_common(scenario, n);
    if (m == 3) return tadpole_bound(kind, scenario, m, n);
    if (m < 4) throw std::invalid_argument("lollipop bounds require m >= 3");

    const bool bond = kind == BoundKind::BondTypes;
    const bool even = m % 2 == 0;
    const long long k = m / 2;

    if (scenario == 1) {
        if (bond) return exact(1);
        return exact(n == 1 ? 3 : 4);
    }
    if (scenario == 2) {
        if (n == 1) {
            if (bond) return exact(even ? 1 : 2);
            return exact(even ? 3 : 4);
        }
        if (n <= m) {
            if (bond) return exact(n);
            return exact(even ? n + 2 : n + 3);
        }
        if (even) {
            const long long step = ceil_div(n - 2 * k + 1, 2);
            if (bond) return range(step + 2 * k - 1, n);
            return range(step + 2 * k + 2, n + 2);
        }
        const long long step = ceil_div(n - 2 * k, 2);
        if (bond) return range(step + 2 * k, n);
        return range(step + 2 * k + 4, n + 3);
    }
    // Scenario 3.
    if (n == 1) {
        if (bond) return exact(m - 1);
        return exact(m + 1);
    }
    if (bond) return range(m + n - 2, m + n - 1);
    return exact(m + n);
}

BoundValue tadpole_bound(BoundKind kind, int scenario, int m, int n) {
    check_common(scenario, n);
    if (m < 3) throw std::invalid_argument("tadpole bounds require m >= 3");

    const bool bond = kind == BoundKind::BondTypes;
    const long long half_up = ceil_div(m, 2);
    const long long half_down = m / 2;

    if (scenario == 1) return exact(bond ? 1 : 3);
    if (n < half_up) {
        if (scenario == 2) {
            if (bond) return exact(half_up);
            return exact(half_up + 2);
        }
        if (bond) return exact(half_down + n);
        return exact(half_up + n + 1);
    }
    if (n <= m) {
        if (bond) return exact(n);
        return exact(n + 2);
    }
    if (scenario == 2) {
        const long long step = ceil_div(n - m + 1, 2);
        if (bond) return range(step + m - 1, n);
        return range(step + m + 1, n + 1);
    }
    if (bond) return exact(n);
    return exact(n + 1);
}

long long appended_path_lower_bound(BoundKind kind, int scenario, int m,
                                    int n) {
    if (scenario < 2 || scenario > 3)
        throw std::invalid_argument("scenario must be 2 or 3");
    if (m < 1 || n < 1)
        throw std::invalid_argument("m and n must be >= 1");
    if (scenario == 3) return n;
    if (n <= m) return n;
    const long long step = ceil_div(n - m + 1, 2);
    return kind == BoundKind::BondTypes ? step + m - 1 : step + m;
}

BoundValue reference_bound(const std::string& family, BoundKind kind,
                           int scenario, int m) {
    if (scenario < 1 || scenario > 3)
        throw std::invalid_argument("scenario must be 1, 2, or 3");
    if (m < 3) throw std::invalid_argument("reference bounds require m >= 3");

    const bool bond = kind == BoundKind::BondTypes;
    if (family == "complete") {
        const bool even = m % 2 == 0;
        switch (scenario) {
            case 1: return exact(bond ? 1 : (even ? 2 : 1));
            case 2:
                if (bond) return exact(even ? 1 : 2);
                return exact(even ? 2 : 3);
            default: return exact(bond ? m - 1 : m);
        }
    }
    if (family == "cycle") {
        if (scenario == 1) return exact(1);
        const long long half_up = ceil_div(m, 2);
        return exact(bond ? half_up : half_up + 1);
    }
    throw std::invalid_argument(
        "reference_bound: family must be \"complete\" or \"cycle\"");
}

} // namespace tilepot
