#pragma once

#include <numeric>
#include <vector>

#include "advlin/error.hpp"
#include "advlin/matrix.hpp"

namespace advlin {

// Permutation of {1,...,N}. Stored 0-based; the public data model
// (JSON, CLI) is 1-based and converted at the boundary.
class Perm {
  public:
    Perm() = default;

    explicit Perm(std::vector<int> images) : img_(std::move(images)) { validate(); }

    static Perm identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    static Perm from_one_based(const std::vector<int>& images) {
        std::vector<int> v(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) v[i] = images[i] - 1;
        return Perm(std::move(v));
    }

    std::vector<int> to_one_based() const {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
        return v;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    // Left-to-right composition: (a.then(b))(i) = b(a(i)).
    Perm then(const Perm& b) const {
        if (size() != b.size()) throw DomainError("permutation size mismatch");
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) v[i] = b.img_[img_[i]];
        return Perm(std::move(v));
    }

    Perm inverse() const {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
        return Perm(std::move(v));
    }

    int fixed_points() const {
        int c = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] == static_cast<int>(i)) ++c;
        return c;
    }

  private:
    void validate() const;

    std::vector<int> img_;
};

// (-1)^{#inversions}
int perm_signature(const Perm& p);

// 0-1 matrix with the 1 of row i in column sigma(i).
template <typename T>
Matrix<T> perm_matrix(const Perm& p) {
    Matrix<T> m(p.size(), p.size());
    for (int i = 0; i < p.size(); ++i) m(i, p(i)) = T(1);
    return m;
}

}  // namespace advlin
