#include "advlin/perm.hpp"

namespace advlin {

void Perm::validate() const {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw DomainError("images do not form a permutation");
        seen[v] = true;
    }
}

int perm_signature(const Perm& p) {
    int inversions = 0;
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p(i) > p(j)) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace advlin
