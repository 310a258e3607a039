#include "ghwforge/set_system.hpp"

#include <algorithm>
#include <string>

#include "ghwforge/errors.hpp"

namespace ghwforge {
namespace {

// Calls fn(I) for every nonempty I subset of {0..k-1}, ordered by size then
// lexicographically. Stops early when fn returns false.
template <class Fn>
void for_each_index_set(int k, BudgetMeter& meter, Fn&& fn) {
    std::vector<int> comb;
    for (int size = 1; size <= k; ++size) {
        comb.resize(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            meter.charge();
            if (!fn(comb)) return;
            // next combination
            int i = size - 1;
            while (i >= 0 && comb[i] == k - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
}

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

void check_k_bound(int k) {
    if (k > 20)
        throw TooLargeError("2^" + std::to_string(k) +
                            " index sets exceed the supported range (k <= 20)");
}

}  // namespace

SubsetSystem::SubsetSystem(int n_in, std::vector<std::vector<int>> sets_in)
    : n(n_in), sets(std::move(sets_in)) {
    if (n < 1) throw BadDimsError("subset system needs n >= 1");
    if (sets.empty()) throw BadDimsError("subset system needs k >= 1");
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int x : s)
            if (x < 0 || x >= n)
                throw BadIndexError("coordinate " + std::to_string(x) +
                                    " outside [0," + std::to_string(n) + ")");
    }
}

std::vector<int> intersection_over(const SubsetSystem& s,
                                   const std::vector<int>& index_set) {
    if (index_set.empty()) throw EmptyIndexSetError("empty index set");
    std::vector<int> idx = index_set;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (int i : idx)
        if (i < 0 || i >= s.k())
            throw BadIndexError("row index " + std::to_string(i) + " outside [0," +
                                std::to_string(s.k()) + ")");
    std::vector<int> acc = s.sets[idx[0]];
    for (size_t t = 1; t < idx.size() && !acc.empty(); ++t)
        acc = intersect_sorted(acc, s.sets[idx[t]]);
    return acc;
}

ConstraintReport check_mds_condition(const SubsetSystem& s, const Budget& budget) {
    check_k_bound(s.k());
    BudgetMeter meter(budget);
    ConstraintReport report;
    const int k = s.k();
    for_each_index_set(k, meter, [&](const std::vector<int>& I) {
        const int inter = static_cast<int>(intersection_over(s, I).size());
        const int measured = static_cast<int>(I.size()) + inter;
        if (measured > k)
            report.violations.push_back({I, measured, k});
        return true;
    });
    return report;
}

ConstraintReport check_ghw_constraints(const SubsetSystem& s,
                                       const std::vector<int>& d, int n,
                                       const Budget& budget) {
    if (static_cast<int>(d.size()) != s.k())
        throw ShapeMismatchError("hierarchy length differs from subset count");
    if (n != s.n) throw ShapeMismatchError("ambient size differs");
    check_k_bound(s.k());
    BudgetMeter meter(budget);
    ConstraintReport report;
    for_each_index_set(s.k(), meter, [&](const std::vector<int>& I) {
        const int inter = static_cast<int>(intersection_over(s, I).size());
        const int bound = n - d[I.size() - 1];
        if (inter > bound)
            report.violations.push_back({I, inter, bound});
        return true;
    });
    return report;
}

ConstraintReport check_cardinality(const SubsetSystem& s) {
    ConstraintReport report;
    const int bound = s.k() - 1;
    for (int i = 0; i < s.k(); ++i) {
        const int size = static_cast<int>(s.sets[i].size());
        if (size > bound)
            report.violations.push_back({{i}, size, bound});
    }
    return report;
}

}  // namespace ghwforge
