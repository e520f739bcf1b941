#include "starsym/normalform.hpp"

#include <algorithm>

namespace starsym {

FormSubset support(const FMonomial& M) {
    if (static_cast<int>(M.size()) > FormSubset::max_forms)
        throw invalid_input("invalid-range: too many forms");
    FormSubset out;
    for (std::size_t j = 0; j < M.size(); ++j) {
        if (M[j] < 0) throw invalid_input("invalid-range: exponents must be >= 0");
        if (M[j] > 0) out.add(static_cast<int>(j) + 1);
    }
    return out;
}

NormalForm normal_form(const FMonomial& M) {
    FormSubset supp = support(M);
    if (supp.empty()) throw invalid_input("empty-monomial: the unit has no layers");
    int top = *std::max_element(M.begin(), M.end());
    NormalForm layers(top);
    for (std::size_t j = 0; j < M.size(); ++j)
        for (int i = 0; i < M[j]; ++i) layers[i].add(static_cast<int>(j) + 1);
    return layers;
}

FMonomial from_layers(const NormalForm& layers, int s) {
    if (s < 1 || s > FormSubset::max_forms)
        throw invalid_input("invalid-range: need 1 <= s <= 63");
    if (layers.empty()) throw invalid_input("empty-layer: need at least one layer");
    FormSubset universe = FormSubset::full(s);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].empty()) throw invalid_input("empty-layer: layers must be nonempty");
        if (!layers[i].subset_of(universe))
            throw invalid_input("invalid-range: layer exceeds the form count");
        if (i > 0 && !layers[i].subset_of(layers[i - 1]))
            throw invalid_input("not-nested: each layer must contain the next");
    }
    FMonomial M(s, 0);
    for (const FormSubset& layer : layers)
        for (int j : layer.indices()) ++M[j - 1];
    return M;
}

int lambda(const FMonomial& M) {
    return static_cast<int>(normal_form(M).size());
}

int sdeg(const FMonomial& M, const StarParams& params) {
    params.validate();
    if (static_cast<int>(M.size()) != params.s)
        throw invalid_input("invalid-range: monomial has the wrong number of forms");
    if (support(M).empty()) return 0;
    int total = 0;
    for (const FormSubset& layer : normal_form(M))
        total += std::max(0, params.c - params.s + layer.size());
    return total;
}

}  // namespace starsym
