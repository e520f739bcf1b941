#include "starsym/order.hpp"

#include "starsym/generators.hpp"
#include "starsym/normalform.hpp"

#include <algorithm>
#include <bit>

namespace starsym {

namespace {

Ordering from_three_way(int v) {
    if (v < 0) return Ordering::less;
    if (v > 0) return Ordering::greater;
    return Ordering::equal;
}

// Reverse-lexicographic comparison of two same-size squarefree layers: the one
// avoiding the largest differing index wins.
Ordering revlex_layers(FormSubset a, FormSubset b) {
    std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) return Ordering::equal;
    int top = 63 - std::countl_zero(diff);
    return ((b.bits >> top) & 1u) != 0 ? Ordering::greater : Ordering::less;
}

}  // namespace

Ordering alex_compare(const Partition& p, const Partition& q) {
    long long wp = 0, wq = 0;
    for (int d : p) wp += d;
    for (int d : q) wq += d;
    if (wp != wq) throw invalid_input("mismatched-weight: partitions of different integers");
    if (p.size() != q.size())
        return p.size() < q.size() ? Ordering::greater : Ordering::less;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != q[i]) return from_three_way(p[i] - q[i]);
    return Ordering::equal;
}

Ordering revlex_compare(const FMonomial& A, const FMonomial& B) {
    if (A.size() != B.size())
        throw invalid_input("invalid-range: monomials over different form counts");
    if (fdegree(A) != fdegree(B))
        throw invalid_input("degree-mismatch: revlex compares equal degrees only");
    for (std::size_t j = A.size(); j-- > 0;)
        if (A[j] != B[j]) return A[j] < B[j] ? Ordering::greater : Ordering::less;
    return Ordering::equal;
}

Ordering ggrevlex_compare(const FMonomial& M, const FMonomial& N, const StarParams& params) {
    params.validate();
    if (static_cast<int>(M.size()) != params.s || static_cast<int>(N.size()) != params.s)
        throw invalid_input("invalid-range: monomial has the wrong number of forms");
    NormalForm a = normal_form(M);
    NormalForm b = normal_form(N);
    if (a.size() != b.size())
        throw invalid_input("partition-mismatch: different layer counts");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].size() != b[i].size())
            throw invalid_input("partition-mismatch: different layer sizes");
    for (std::size_t i = 0; i < a.size(); ++i) {
        Ordering o = revlex_layers(a[i], b[i]);
        if (o != Ordering::equal) return o;
    }
    return Ordering::equal;
}

Ordering tau_compare(const FMonomial& M, const FMonomial& N, const StarParams& params) {
    Partition p = partition_of(M, params);
    Partition q = partition_of(N, params);
    Ordering o = alex_compare(p, q);
    if (o != Ordering::equal) return o;
    return ggrevlex_compare(M, N, params);
}

int index_of_overlap(const Partition& p) {
    if (p.size() <= 1) throw invalid_input("length-one: no overlap index exists");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw invalid_input("invalid-range: parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw invalid_input("invalid-range: parts must weakly decrease");
    }
    for (int j = static_cast<int>(p.size()) - 1; j >= 2; --j)
        if (p[j - 1] < p[j - 2]) return j;
    return 1;  // the virtual infinite part before the first entry
}

bool is_maximal_partition(const Partition& p, const StarParams& params) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] != params.c) return false;
    return p.back() >= 1 && p.back() <= params.c;
}

int m_index(FormSubset B, const FMonomial& M) {
    FormSubset supp = support(M);
    if (supp.empty()) throw invalid_input("empty-monomial: no largest dividing form");
    if (!supp.subset_of(B))
        throw invalid_input("support-outside-B: M must be supported inside B");
    std::vector<int> elements = B.indices();
    int largest = supp.indices().back();
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == largest) return static_cast<int>(i) + 1;
    throw check_failure("m_index: support element not found in B");
}

namespace {

struct SetData {
    int size;
    FormSubset elements;
};

SetData set_data(const FMonomial& M, const StarParams& params) {
    const int s = params.s, c = params.c;
    Partition p = partition_of(M, params);
    NormalForm layers = normal_form(M);
    const int t = static_cast<int>(p.size());

    if (is_maximal_partition(p, params)) {
        // Only generators sharing all full layers precede M; the colon is cut
        // out inside the last layer, below its largest element.
        FormSubset last = layers[t - 1];
        int largest = last.indices().back();
        FormSubset elements;
        for (int j : last.complement_in(s).indices())
            if (j < largest) elements.add(j);
        return {largest - s + c - p[t - 1], elements};
    }

    const int i0 = index_of_overlap(p);
    const int d_i0 = p[i0 - 1];
    const int d_t = p[t - 1];
    FormSubset pivot = layers[i0 - 1];

    if (d_t == d_i0) return {c - d_i0, pivot.complement_in(s)};

    // Smaller last part: forms outside the pivot layer, plus the forms the
    // last layer dropped from the pivot that sit below its largest element.
    FormSubset last = layers[t - 1];
    std::vector<int> pivot_elems = pivot.indices();
    int largest = last.indices().back();
    int pos_largest = 0;
    for (std::size_t i = 0; i < pivot_elems.size(); ++i)
        if (pivot_elems[i] == largest) pos_largest = static_cast<int>(i) + 1;
    FormSubset elements = pivot.complement_in(s);
    for (int i = 0; i < pos_largest - 1; ++i)
        if (!last.contains(pivot_elems[i])) elements.add(pivot_elems[i]);
    return {c - d_i0 + pos_largest - (s - c + d_t), elements};
}

}  // namespace

int set_size(const FMonomial& M, const StarParams& params) {
    SetData data = set_data(M, params);
    if (data.size != data.elements.size())
        throw check_failure("set size and element count disagree");
    return data.size;
}

FormSubset set_elements(const FMonomial& M, const StarParams& params) {
    SetData data = set_data(M, params);
    if (data.size != data.elements.size())
        throw check_failure("set size and element count disagree");
    return data.elements;
}

void tau_sort_descending(std::vector<FMonomial>& gens, const StarParams& params) {
    std::stable_sort(gens.begin(), gens.end(),
                     [&](const FMonomial& a, const FMonomial& b) {
                         return tau_compare(a, b, params) == Ordering::greater;
                     });
}

}  // namespace starsym
