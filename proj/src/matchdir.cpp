#include "skewpf/matchdir.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "skewpf/errors.hpp"

namespace skewpf {

DirectedMatching::DirectedMatching(std::vector<std::pair<int, int>> arcs_)
    : m(static_cast<int>(arcs_.size())), arcs(std::move(arcs_)) {
    std::vector<bool> seen(2 * m + 1, false);
    for (const auto& [a, b] : arcs) {
        for (int x : {a, b}) {
            if (x < 1 || x > 2 * m || seen[x]) {
                throw PreconditionError("arcs must cover [2m] exactly once");
            }
            seen[x] = true;
        }
    }
    std::sort(arcs.begin(), arcs.end(), [](const auto& p, const auto& q) {
        return std::min(p.first, p.second) < std::min(q.first, q.second);
    });
}

DirectedMatching DirectedMatching::canonical(int m) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i) arcs.emplace_back(2 * i + 1, 2 * i + 2);
    return DirectedMatching(std::move(arcs));
}

namespace {

void enumerate_undirected(std::vector<int>& free_points,
                          std::vector<std::pair<int, int>>& current,
                          const std::function<void(const std::vector<std::pair<int, int>>&)>& cb) {
    if (free_points.empty()) {
        cb(current);
        return;
    }
    const int first = free_points.front();
    for (size_t j = 1; j < free_points.size(); ++j) {
        std::vector<int> rest;
        rest.reserve(free_points.size() - 2);
        for (size_t t = 1; t < free_points.size(); ++t)
            if (t != j) rest.push_back(free_points[t]);
        current.emplace_back(first, free_points[j]);
        enumerate_undirected(rest, current, cb);
        current.pop_back();
    }
}

}  // namespace

std::vector<DirectedMatching> all_directed_matchings(int m, unsigned long long bound) {
    Int count = int_pow(2, m) * double_factorial(2 * m - 1);
    if (count > Int(static_cast<unsigned long>(bound))) throw TooLargeError(count, bound);
    std::vector<DirectedMatching> out;
    std::vector<int> points(2 * m);
    std::iota(points.begin(), points.end(), 1);
    std::vector<std::pair<int, int>> cur;
    enumerate_undirected(points, cur, [&](const std::vector<std::pair<int, int>>& und) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<std::pair<int, int>> arcs = und;
            for (int i = 0; i < m; ++i) {
                if (mask & (1u << i)) std::swap(arcs[i].first, arcs[i].second);
            }
            out.emplace_back(std::move(arcs));
        }
    });
    return out;
}

DirectedMatching permute_matching(const DirectedMatching& mm, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != 2 * mm.m) {
        throw SizeMismatchError("permutation must act on [2m]");
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(mm.arcs.size());
    for (const auto& [a, b] : mm.arcs) arcs.emplace_back(perm[a - 1], perm[b - 1]);
    return DirectedMatching(std::move(arcs));
}

DirectedMatching flip_arc(const DirectedMatching& mm, int arc_index) {
    auto arcs = mm.arcs;
    std::swap(arcs[arc_index].first, arcs[arc_index].second);
    return DirectedMatching(std::move(arcs));
}

std::pair<int, int> union_stats(const DirectedMatching& m1, const DirectedMatching& m2) {
    if (m1.m != m2.m) throw SizeMismatchError("matchings must share a ground set");
    const int n = 2 * m1.m;
    // partner_1[x], partner_2[x]: the other endpoint of x's arc in each
    // matching, with the arc direction remembered for the odd-arc count.
    std::vector<int> partner1(n + 1), partner2(n + 1);
    std::vector<bool> forward1(n + 1), forward2(n + 1);  // arc points away from x
    for (const auto& [a, b] : m1.arcs) {
        partner1[a] = b;
        partner1[b] = a;
        forward1[a] = true;
        forward1[b] = false;
    }
    for (const auto& [a, b] : m2.arcs) {
        partner2[a] = b;
        partner2[b] = a;
        forward2[a] = true;
        forward2[b] = false;
    }
    std::vector<bool> visited(n + 1, false);
    int cycles = 0;
    int odd = 0;
    for (int start = 1; start <= n; ++start) {
        if (visited[start]) continue;
        ++cycles;
        // Alternate the two matchings, beginning with the first; the
        // traversal direction is the cycle orientation.
        int x = start;
        bool use_first = true;
        do {
            visited[x] = true;
            const int y = use_first ? partner1[x] : partner2[x];
            const bool along = use_first ? forward1[x] : forward2[x];
            if (!along) ++odd;
            x = y;
            use_first = !use_first;
        } while (!(x == start && use_first));
    }
    return {cycles, odd % 2};
}

int matching_sign(const DirectedMatching& mm) {
    // Arcs are stored by increasing smaller endpoint; send arc r to
    // (2r-1, 2r) and read off the permutation's sign.
    std::vector<int> perm(2 * mm.m);
    for (int r = 0; r < mm.m; ++r) {
        perm[mm.arcs[r].first - 1] = 2 * r + 1;
        perm[mm.arcs[r].second - 1] = 2 * r + 2;
    }
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j] - 1) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

SparseTensor tau(const DirectedMatching& mm, int ell) { return tau_matching(mm.arcs, ell); }

std::pair<RationalMatrix, RationalMatrix> build_A_B(int ell, int m, unsigned long long bound) {
    const auto matchings = all_directed_matchings(m, bound);
    const int n = static_cast<int>(matchings.size());
    const Int pair_count = Int(n) * Int(n);
    if (pair_count > Int(static_cast<unsigned long>(bound))) throw TooLargeError(pair_count, bound);
    RationalMatrix a(n, n), b(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto [cycles, odd] = union_stats(matchings[i], matchings[j]);
            a.at(i, j) = Rat(int_pow(Int(-2 * ell), cycles));
            Int bij = int_pow(Int(2 * ell), cycles);
            if ((odd + m) % 2 != 0) bij = -bij;
            b.at(i, j) = Rat(bij);
        }
    }
    return {std::move(a), std::move(b)};
}

bool verify_sign_identity(int m, unsigned long long bound) {
    const auto matchings = all_directed_matchings(m, bound);
    for (const auto& m1 : matchings) {
        const int s1 = matching_sign(m1);
        for (const auto& m2 : matchings) {
            const auto [cycles, odd] = union_stats(m1, m2);
            const int lhs = (odd % 2 == 0) ? 1 : -1;
            const int rhs = s1 * matching_sign(m2) * (cycles % 2 == 0 ? 1 : -1);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        for (size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) sign = -sign;
        }
    }
    return sign;
}

}  // namespace

bool v0_annihilation(int ell, int m, unsigned long long bound) {
    if (2 * m < 2 * ell + 2) {
        throw PreconditionError("the kernel generator needs 2m >= 2*ell + 2");
    }
    const int group = 2 * ell + 2;
    const Int terms = factorial(group) * int_pow(2 * ell, m);
    if (terms > Int(static_cast<unsigned long>(bound))) throw TooLargeError(terms, bound);

    const DirectedMatching m0 = DirectedMatching::canonical(m);
    // Alternating sum over the subgroup permuting [2*ell+2] and fixing the
    // remaining points.
    SparseTensor sum;
    sum.ell = ell;
    sum.order = 2 * m;
    std::vector<int> sub(group);
    std::iota(sub.begin(), sub.end(), 1);
    do {
        std::vector<int> perm(2 * m);
        std::iota(perm.begin(), perm.end(), 1);
        for (int i = 0; i < group; ++i) perm[i] = sub[i];
        SparseTensor image = tau(permute_matching(m0, perm), ell);
        image *= Rat(permutation_sign(sub));
        sum += image;
    } while (std::next_permutation(sub.begin(), sub.end()));
    if (!sum.is_zero()) return false;

    // Single arc flips generate the negative-flip relations.
    for (const auto& mm : all_directed_matchings(m, bound)) {
        for (int i = 0; i < m; ++i) {
            SparseTensor s = tau(mm, ell);
            s += tau(flip_arc(mm, i), ell);
            if (!s.is_zero()) return false;
        }
    }
    return true;
}

bool gram_check(int ell, int m, unsigned long long bound) {
    const auto matchings = all_directed_matchings(m, bound);
    const Int cost = Int(matchings.size()) * Int(matchings.size()) * int_pow(2 * ell, m);
    if (cost > Int(static_cast<unsigned long>(bound))) throw TooLargeError(cost, bound);
    std::vector<SparseTensor> images;
    images.reserve(matchings.size());
    for (const auto& mm : matchings) images.push_back(tau(mm, ell));
    for (size_t i = 0; i < matchings.size(); ++i) {
        for (size_t j = 0; j < matchings.size(); ++j) {
            const auto [cycles, odd] = union_stats(matchings[i], matchings[j]);
            Int expected = int_pow(Int(2 * ell), cycles);
            if ((odd + m) % 2 != 0) expected = -expected;
            if (bilinear_form(images[i], images[j]) != Rat(expected)) return false;
        }
    }
    return true;
}

}  // namespace skewpf
