#include "skewpf/skew_tensor.hpp"

#include <algorithm>
#include <functional>

#include "skewpf/errors.hpp"

namespace skewpf {

Rat SkewTensor::coeff(const std::vector<int>& sorted_subset) const {
    auto it = coeffs.find(sorted_subset);
    return it == coeffs.end() ? Rat(0) : it->second;
}

std::pair<int, int> dual_vector(int i, int ell) {
    if (i < 1 || i > 2 * ell) throw IndexOutOfRangeError("dual index out of range");
    return i <= ell ? std::pair<int, int>{-1, i + ell} : std::pair<int, int>{+1, i - ell};
}

Rat eval_skew(const SkewTensor& h, std::span<const int> word) {
    const int dim = h.dimension();
    for (int letter : word) {
        if (letter < 1 || letter > dim) throw IndexOutOfRangeError("word letter out of range");
    }
    if (word.size() > static_cast<size_t>(dim)) return Rat(0);
    // Insertion sort, counting swaps; a duplicate letter kills the term.
    int buf[32];
    std::vector<int> heap_buf;
    int* sorted = buf;
    if (word.size() > 32) {
        heap_buf.resize(word.size());
        sorted = heap_buf.data();
    }
    int sign = 1;
    for (size_t i = 0; i < word.size(); ++i) {
        int x = word[i];
        size_t j = i;
        while (j > 0 && sorted[j - 1] >= x) {
            if (sorted[j - 1] == x) return Rat(0);
            sorted[j] = sorted[j - 1];
            sign = -sign;
            --j;
        }
        sorted[j] = x;
    }
    auto it = h.coeffs.find(std::vector<int>(sorted, sorted + word.size()));
    if (it == h.coeffs.end()) return Rat(0);
    return sign > 0 ? it->second : Rat(-it->second);
}

namespace {

int word_sort_sign(std::vector<int> word) {
    int sign = 1;
    for (size_t i = 1; i < word.size(); ++i) {
        for (size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
            std::swap(word[j - 1], word[j]);
            sign = -sign;
        }
    }
    return sign;
}

}  // namespace

SkewTensor build_martin_model(int ell) {
    if (ell < 1) throw PreconditionError("ell must be positive");
    if (ell > 16) throw TooLargeError(int_pow(2, ell), 1u << 16);
    SkewTensor h;
    h.ell = ell;
    // One coefficient per subset T of [ell]: support on S = T union (T+ell).
    for (unsigned mask = 0; mask < (1u << ell); ++mask) {
        std::vector<int> interleaved, subset;
        int k = 0;
        for (int t = 1; t <= ell; ++t) {
            if (mask & (1u << (t - 1))) {
                interleaved.push_back(t);
                interleaved.push_back(t + ell);
                ++k;
            }
        }
        subset = interleaved;
        std::sort(subset.begin(), subset.end());
        const int sign = word_sort_sign(interleaved);
        h.coeffs[subset] = Rat((k % 2 == 0 ? 1 : -1) * sign);
    }
    return h;
}

Rat SymModel::value(const std::vector<int>& sorted_multiset) const {
    if (static_cast<int>(sorted_multiset.size()) > max_arity) {
        throw PreconditionError("model not tabulated at this arity");
    }
    auto it = values.find(sorted_multiset);
    return it == values.end() ? Rat(0) : it->second;
}

namespace {

void for_each_multiset(int k, int size, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& cb) {
    if (size == 0) {
        cb(cur);
        return;
    }
    const int low = cur.empty() ? 1 : cur.back();
    for (int c = low; c <= k; ++c) {
        cur.push_back(c);
        for_each_multiset(k, size - 1, cur, cb);
        cur.pop_back();
    }
}

}  // namespace

SymModel build_double_factorial_model(int k, int max_arity) {
    if (k < 1) throw PreconditionError("color count must be positive");
    SymModel model;
    model.color_count = k;
    model.max_arity = max_arity;
    for (int n = 0; n <= max_arity; ++n) {
        std::vector<int> cur;
        for_each_multiset(k, n, cur, [&](const std::vector<int>& ms) {
            std::vector<long> mult(k, 0);
            for (int c : ms) ++mult[c - 1];
            Int v = 1;
            for (int c = 0; c < k; ++c) {
                v *= double_factorial(mult[c] - 1);
                if (v == 0) break;
            }
            if (v != 0) model.values[ms] = Rat(v);
        });
    }
    return model;
}

SymModel build_constant_model(int k, const Rat& value, int max_arity) {
    if (k < 1) throw PreconditionError("color count must be positive");
    SymModel model;
    model.color_count = k;
    model.max_arity = max_arity;
    if (value == 0) return model;
    for (int n = 0; n <= max_arity; ++n) {
        std::vector<int> cur;
        for_each_multiset(k, n, cur,
                          [&](const std::vector<int>& ms) { model.values[ms] = value; });
    }
    return model;
}

bool SparseTensor::is_zero() const {
    return std::all_of(terms.begin(), terms.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

void SparseTensor::add_term(const std::vector<int>& word, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& other) {
    if (ell != other.ell || order != other.order) {
        throw OrderMismatchError("tensor shape mismatch in addition");
    }
    for (const auto& [word, c] : other.terms) add_term(word, c);
    return *this;
}

SparseTensor& SparseTensor::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [word, c] : terms) c *= scalar;
    return *this;
}

bool SparseTensor::operator==(const SparseTensor& other) const {
    if (ell != other.ell || order != other.order) return false;
    SparseTensor diff = *this;
    SparseTensor negated = other;
    negated *= Rat(-1);
    diff += negated;
    return diff.is_zero();
}

SparseTensor tau_matching(const std::vector<std::pair<int, int>>& arcs, int ell) {
    const int m = static_cast<int>(arcs.size());
    SparseTensor t;
    t.ell = ell;
    t.order = 2 * m;
    std::vector<bool> seen(2 * m + 1, false);
    for (const auto& [a, b] : arcs) {
        for (int x : {a, b}) {
            if (x < 1 || x > 2 * m || seen[x]) {
                throw PreconditionError("arcs must cover [2m] exactly once");
            }
            seen[x] = true;
        }
    }
    // One color per arc; tail slot carries the color, head slot its dual.
    std::vector<int> color(m, 1);
    while (true) {
        std::vector<int> word(2 * m, 0);
        int sign = 1;
        for (int i = 0; i < m; ++i) {
            const auto [s, idx] = dual_vector(color[i], ell);
            word[arcs[i].first - 1] = color[i];
            word[arcs[i].second - 1] = idx;
            sign *= s;
        }
        t.add_term(word, Rat(sign));
        int i = 0;
        while (i < m && color[i] == 2 * ell) color[i++] = 1;
        if (i == m) break;
        ++color[i];
    }
    return t;
}

Rat bilinear_form(const SparseTensor& x, const SparseTensor& y) {
    if (x.ell != y.ell || x.order != y.order) {
        throw OrderMismatchError("tensors must share dimension and order");
    }
    const int ell = x.ell;
    // The form pairs e_a only with e_{a +/- ell}; for each word of x there
    // is a single partner word with nonzero product.
    Rat total(0);
    std::vector<int> partner(x.order);
    for (const auto& [word, cx] : x.terms) {
        int sign = 1;
        for (int i = 0; i < x.order; ++i) {
            const int a = word[i];
            if (a <= ell) {
                partner[i] = a + ell;
            } else {
                partner[i] = a - ell;
                sign = -sign;
            }
        }
        auto it = y.terms.find(partner);
        if (it == y.terms.end()) continue;
        Rat term = cx * it->second;
        if (sign < 0) term = -term;
        total += term;
    }
    return total;
}

}  // namespace skewpf
