#include <algorithm>
#include <cmath>

#include "advlin/jordan.hpp"
#include "advlin/poly.hpp"
#include "advlin/spectra.hpp"

namespace advlin::poly {

std::vector<Scalar> roots(const Poly& p) {
    // Strip leading coefficients that are exactly zero.
    std::vector<Scalar> c = p.c;
    while (c.size() > 1 && c.back() == Scalar(0)) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) throw DomainError("roots need degree >= 1");
    double lead = std::abs(c[n]);
    if (lead == 0.0) throw DomainError("roots of the zero polynomial");

    std::vector<Scalar> monic(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) monic[i] = c[i] / c[n];
    CMat comp = jordan::companion(Poly(std::move(monic)));
    std::vector<Scalar> rts = spectra::eigenvalues(comp);

    // One Newton polish per root; keep the polish only if it helps.
    Poly q(c);
    Poly dq = q.derivative();
    for (auto& x : rts) {
        for (int it = 0; it < 3; ++it) {
            Scalar f = q.eval(x);
            Scalar df = dq.eval(x);
            if (std::abs(df) < 1e-300) break;
            Scalar step = f / df;
            if (!is_finite(step)) break;
            Scalar nx = x - step;
            if (std::abs(q.eval(nx)) < std::abs(f)) x = nx;
            else break;
        }
    }
    std::sort(rts.begin(), rts.end(), [](Scalar a, Scalar b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return rts;
}

}  // namespace advlin::poly
