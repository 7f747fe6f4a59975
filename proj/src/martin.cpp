#include "skewpf/martin.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "skewpf/errors.hpp"

namespace skewpf {

void IntPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Int IntPolynomial::eval(const Int& x) const {
    Int out = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * x + *it;
    return out;
}

std::string IntPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ' ';
        out << coeffs[i].get_str();
    }
    return out.str();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    IntPolynomial out;
    out.coeffs.resize(std::max(coeffs.size(), other.coeffs.size()), Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
    for (size_t i = 0; i < other.coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
    out.normalize();
    return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    IntPolynomial out;
    if (coeffs.empty() || other.coeffs.empty()) return out;
    out.coeffs.assign(coeffs.size() + other.coeffs.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        for (size_t j = 0; j < other.coeffs.size(); ++j) {
            out.coeffs[i + j] += coeffs[i] * other.coeffs[j];
        }
    }
    out.normalize();
    return out;
}

namespace {

// All perfect pairings of the given darts (even count), as index pairs.
void enumerate_pairings(std::vector<int>& items,
                        std::vector<std::pair<int, int>>& current,
                        const std::function<void(const std::vector<std::pair<int, int>>&)>& cb) {
    if (items.empty()) {
        cb(current);
        return;
    }
    const int first = items.front();
    for (size_t j = 1; j < items.size(); ++j) {
        const int partner = items[j];
        std::vector<int> rest;
        rest.reserve(items.size() - 2);
        for (size_t t = 1; t < items.size(); ++t)
            if (t != j) rest.push_back(items[t]);
        current.emplace_back(first, partner);
        enumerate_pairings(rest, current, cb);
        current.pop_back();
    }
}

Int transition_system_count(const std::vector<int>& degrees) {
    Int count = 1;
    for (int d : degrees) count *= double_factorial(d - 1);
    return count;
}

}  // namespace

IntPolynomial circuit_partition_polynomial(const Multigraph& g, unsigned long long bound) {
    IntPolynomial j;
    if (!is_eulerian(g)) return j;

    const auto degrees = g.degrees();
    const Int states = transition_system_count(degrees);
    if (states > Int(static_cast<unsigned long>(bound))) throw TooLargeError(states, bound);

    // Pairing tables per vertex.
    auto darts = g.darts_at();
    std::vector<std::vector<std::vector<std::pair<int, int>>>> pairings(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<std::pair<int, int>> cur;
        enumerate_pairings(darts[v], cur,
                           [&](const auto& p) { pairings[v].push_back(p); });
    }

    std::vector<Int> counts;  // counts[c] = transition systems with c closed walks
    std::vector<int> choice(g.vertex_count, 0);
    std::vector<int> mate(g.dart_count(), -1);
    std::vector<bool> seen(g.dart_count());
    while (true) {
        for (int v = 0; v < g.vertex_count; ++v) {
            for (const auto& [a, b] : pairings[v][choice[v]]) {
                mate[a] = b;
                mate[b] = a;
            }
        }
        // Closed walks alternate edge partners and vertex pairings.
        std::fill(seen.begin(), seen.end(), false);
        int walks = 0;
        for (int d0 = 0; d0 < g.dart_count(); ++d0) {
            if (seen[d0]) continue;
            ++walks;
            int d = d0;
            do {
                seen[d] = true;
                const int partner = (d % 2 == 0) ? d + 1 : d - 1;
                seen[partner] = true;
                d = mate[partner];
            } while (d != d0);
        }
        if (g.dart_count() > 0) {
            if (static_cast<int>(counts.size()) <= walks) counts.resize(walks + 1, Int(0));
            counts[walks] += 1;
        } else {
            if (counts.empty()) counts.resize(1, Int(0));
            counts[0] += 1;
        }
        int v = 0;
        while (v < g.vertex_count &&
               choice[v] + 1 == static_cast<int>(pairings[v].size())) {
            choice[v++] = 0;
        }
        if (v == g.vertex_count) break;
        ++choice[v];
    }
    j.coeffs = std::move(counts);
    j.normalize();
    // Each circle contributes a factor x.
    if (g.circle_count > 0 && !j.is_zero()) {
        j.coeffs.insert(j.coeffs.begin(), g.circle_count, Int(0));
    }
    return j;
}

namespace {

bool advance_assignment(std::vector<int>& assign, int radix) {
    size_t i = 0;
    while (i < assign.size() && assign[i] == radix - 1) assign[i++] = 0;
    if (i == assign.size()) return false;
    ++assign[i];
    return true;
}

}  // namespace

Int eval_positive(const Multigraph& g, int k, unsigned long long bound) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (!is_eulerian(g)) return 0;
    const Int scans = int_pow(k, g.edge_count());
    if (scans > Int(static_cast<unsigned long>(bound))) throw TooLargeError(scans, bound);

    Int total = 0;
    std::vector<int> assign(g.edge_count(), 0);
    std::vector<int> class_degree(static_cast<size_t>(g.vertex_count) * k);
    do {
        std::fill(class_degree.begin(), class_degree.end(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            class_degree[static_cast<size_t>(g.edges[e].first) * k + assign[e]] += 1;
            class_degree[static_cast<size_t>(g.edges[e].second) * k + assign[e]] += 1;
        }
        Int prod = 1;
        for (size_t i = 0; i < class_degree.size() && prod != 0; ++i) {
            prod *= double_factorial(class_degree[i] - 1);
        }
        total += prod;
    } while (advance_assignment(assign, k));
    return total * int_pow(k, g.circle_count);
}

Int eval_negative_even(const Multigraph& g, int ell, unsigned long long bound) {
    if (ell < 1) throw PreconditionError("ell must be positive");
    if (!is_eulerian(g)) return 0;
    const Int scans = int_pow(ell, g.edge_count());
    if (scans > Int(static_cast<unsigned long>(bound))) throw TooLargeError(scans, bound);

    Int total = 0;
    std::vector<int> assign(g.edge_count(), 0);
    std::vector<std::vector<int>> classes(ell);
    // Non-throwing variant of two_regular_components for the inner scan.
    std::vector<int> dart_counts(g.vertex_count);
    std::vector<int> parent(g.vertex_count);
    auto class_components = [&](const std::vector<int>& subset) -> int {
        std::fill(dart_counts.begin(), dart_counts.end(), 0);
        for (int e : subset) {
            ++dart_counts[g.edges[e].first];
            ++dart_counts[g.edges[e].second];
        }
        for (int v = 0; v < g.vertex_count; ++v) {
            if (dart_counts[v] != 0 && dart_counts[v] != 2) return -1;
            parent[v] = v;
        }
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : subset) parent[find(g.edges[e].first)] = find(g.edges[e].second);
        int components = 0;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (dart_counts[v] == 2 && find(v) == v) ++components;
        }
        return components;
    };
    do {
        for (auto& c : classes) c.clear();
        for (int e = 0; e < g.edge_count(); ++e) classes[assign[e]].push_back(e);
        int cycle_sum = 0;
        bool admissible = true;
        for (const auto& c : classes) {
            const int components = class_components(c);
            if (components < 0) {
                admissible = false;
                break;
            }
            cycle_sum += components;
        }
        if (admissible) total += int_pow(Int(-2), cycle_sum);
    } while (advance_assignment(assign, ell));
    return total * int_pow(Int(-2 * ell), g.circle_count);
}

}  // namespace skewpf
