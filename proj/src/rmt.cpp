#include "advlin/rmt.hpp"

#include <algorithm>
#include <cmath>

#include "advlin/factor.hpp"

namespace advlin::rmt {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::uint64_t Rng::next() {
    state += 0x9E3779B97F4A7C15ULL;
    return mix64(state);
}

std::uint64_t Rng::bounded(std::uint64_t n) {
    // Multiply-shift; bias is negligible for the sample counts used here.
    unsigned __int128 wide = static_cast<unsigned __int128>(next()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::gauss() {
    if (have_spare) {
        have_spare = false;
        return spare;
    }
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = kTwoPi * u2;
    spare = radius * std::sin(angle);
    have_spare = true;
    return radius * std::cos(angle);
}

Rng SeedSpec::stream(std::uint64_t sample_index) const {
    Rng r;
    r.state = mix64(mix64(master) ^ mix64(sample_index + 0x632BE59BD9B4E019ULL));
    return r;
}

double EnsembleSpec::trace_normalization() const {
    switch (kind) {
        case EnsembleKind::gaussian:
        case EnsembleKind::wigner:
            return 1.0 / std::sqrt(static_cast<double>(n));
        case EnsembleKind::wishart:
            return 1.0 / static_cast<double>(n);
    }
    return 1.0;
}

namespace {

Scalar complex_gaussian(Rng& rng, double t) {
    double root = std::sqrt(t / 2.0);
    return {root * rng.gauss(), root * rng.gauss()};
}

}  // namespace

CMat sample_ensemble(const EnsembleSpec& spec, const SeedSpec& seed, std::uint64_t index) {
    if (spec.n < 1 || spec.t <= 0.0) throw DomainError("ensemble needs n >= 1 and t > 0");
    Rng rng = seed.stream(index);
    switch (spec.kind) {
        case EnsembleKind::gaussian: {
            CMat z(spec.n, spec.n);
            for (auto& e : z.data()) e = complex_gaussian(rng, spec.t);
            return z;
        }
        case EnsembleKind::wigner: {
            CMat z(spec.n, spec.n);
            for (std::size_t i = 0; i < spec.n; ++i) {
                z(i, i) = Scalar(std::sqrt(spec.t) * rng.gauss(), 0.0);
                for (std::size_t j = i + 1; j < spec.n; ++j) {
                    Scalar g = complex_gaussian(rng, spec.t);
                    z(i, j) = g;
                    z(j, i) = std::conj(g);
                }
            }
            return z;
        }
        case EnsembleKind::wishart: {
            if (spec.m < 1) throw DomainError("wishart needs m >= 1");
            CMat y(spec.n, spec.m);
            for (auto& e : y.data()) e = complex_gaussian(rng, spec.t);
            CMat w(spec.n, spec.n);
            for (std::size_t i = 0; i < spec.n; ++i)
                for (std::size_t j = i; j < spec.n; ++j) {
                    Scalar s(0);
                    for (std::size_t r = 0; r < spec.m; ++r) s += y(i, r) * std::conj(y(j, r));
                    w(i, j) = s;
                    w(j, i) = std::conj(s);  // hermitian by construction
                }
            for (std::size_t i = 0; i < spec.n; ++i) w(i, i) = Scalar(w(i, i).real(), 0.0);
            return w;
        }
    }
    throw DomainError("unknown ensemble kind");
}

Scalar empirical_colored_moment(const std::vector<CMat>& samples, const parts::ColoredWord& word,
                                double normalization) {
    if (samples.empty()) throw DomainError("empirical moment needs samples");
    Scalar acc(0);
    for (const auto& z : samples) {
        const std::size_t n = z.rows();
        CMat prod = CMat::identity(n);
        for (parts::Color c : word) {
            CMat factor = (c == parts::Color::white) ? z : adjoint(z);
            factor *= Scalar(normalization, 0.0);
            prod = prod * factor;
        }
        acc += prod.trace() / static_cast<double>(n);
    }
    return acc / static_cast<double>(samples.size());
}

namespace {

long count_wick_pairings(std::vector<int>& paired, const std::vector<WickLetter>& word) {
    const int s = static_cast<int>(word.size());
    int first = -1;
    for (int i = 0; i < s; ++i)
        if (paired[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) return 1;
    long total = 0;
    for (int j = first + 1; j < s; ++j) {
        if (paired[j] >= 0) continue;
        if (word[j].variable != word[first].variable) continue;
        if (word[j].color == word[first].color) continue;  // matching pairs o with b
        paired[first] = j;
        paired[j] = first;
        total += count_wick_pairings(paired, word);
        paired[first] = -1;
        paired[j] = -1;
    }
    return total;
}

}  // namespace

BigRat wick_moment(const std::vector<WickLetter>& word, const BigRat& t) {
    if (word.size() > 12) throw BudgetError("wick budget is words of length <= 12");
    if (word.size() % 2 != 0) return 0;
    std::vector<int> paired(word.size(), -1);
    long cnt = count_wick_pairings(paired, word);
    if (cnt == 0) return 0;
    BigRat tp = 1;
    for (std::size_t i = 0; i < word.size() / 2; ++i) tp *= t;
    return tp * BigRat(cnt);
}

BigRat poisson_raw_moment(const BigRat& t, int k) {
    // Dobinski-style expansion over partitions: sum of t^{|pi|}.
    return parts::asymptotic_moment(parts::Category::P(), k, t);
}

BigRat limit_moment(const LimitLaw& law, int k) {
    if (k < 0) throw DomainError("moment order must be nonnegative");
    switch (law.kind) {
        case LimitLawKind::gauss:
            return parts::asymptotic_moment(parts::Category::P2(), k, law.t);
        case LimitLawKind::poisson:
            return parts::asymptotic_moment(parts::Category::P(), k, law.t);
        case LimitLawKind::marchenko_pastur:
            return parts::asymptotic_moment(parts::Category::NC(), k, law.t);
        case LimitLawKind::semicircle: {
            if (k % 2 == 1) return 0;
            BigRat tp = 1;
            for (int i = 0; i < k / 2; ++i) tp *= law.t;
            return tp * BigRat(parts::catalan(k / 2));
        }
        case LimitLawKind::bessel: {
            // chi = a1 - a2 with a_i independent Poisson(t/2).
            BigRat half = law.t / 2;
            BigRat acc = 0;
            for (int j = 0; j <= k; ++j) {
                BigRat term = BigRat(binomial(k, j)) * poisson_raw_moment(half, j) *
                              poisson_raw_moment(half, k - j);
                if ((k - j) % 2 == 1) acc -= term;
                else acc += term;
            }
            return acc;
        }
        case LimitLawKind::complex_gauss:
            throw DomainError("complex gaussian moments take a colored word");
        case LimitLawKind::bessel_s:
            throw DomainError("level-s bessel moments are served by the sampling oracle");
    }
    throw DomainError("unknown limit law");
}

BigRat limit_moment(const LimitLaw& law, const parts::ColoredWord& word) {
    switch (law.kind) {
        case LimitLawKind::complex_gauss: {
            BigRat acc = 0;
            for (const auto& p : parts::enumerate(word, parts::Category::MatchingP2())) {
                BigRat tp = 1;
                for (int b = 0; b < p.blocks(); ++b) tp *= law.t;
                acc += tp;
            }
            return acc;
        }
        default: {
            // Colored moments of a real law reduce to plain ones.
            return limit_moment(law, static_cast<int>(word.size()));
        }
    }
}

double semicircle_density(double t, double x) {
    if (t <= 0.0) throw DomainError("semicircle needs t > 0");
    double supp = 4.0 * t - x * x;
    if (supp <= 0.0) return 0.0;
    return std::sqrt(supp) / (kTwoPi * t);
}

double semicircle_cdf(double t, double x) {
    if (t <= 0.0) throw DomainError("semicircle needs t > 0");
    double edge = 2.0 * std::sqrt(t);
    if (x <= -edge) return 0.0;
    if (x >= edge) return 1.0;
    return 0.5 + x * std::sqrt(4.0 * t - x * x) / (2.0 * kTwoPi * t) +
           std::asin(x / edge) / (kTwoPi / 2.0);
}

double marchenko_pastur_atom(double t) { return std::max(1.0 - t, 0.0); }

double marchenko_pastur_density(double t, double x) {
    if (t <= 0.0) throw DomainError("marchenko-pastur needs t > 0");
    if (x <= 0.0) return 0.0;
    double supp = 4.0 * t - (x - 1.0 - t) * (x - 1.0 - t);
    if (supp <= 0.0) return 0.0;
    return std::sqrt(supp) / (kTwoPi * x);
}

double poisson_pmf(double t, long k) {
    if (k < 0) return 0.0;
    double logp = -t + k * std::log(t) - std::lgamma(static_cast<double>(k) + 1.0);
    return std::exp(logp);
}

double bessel_pmf(double t, long k) {
    long a = std::labs(k);
    // e^{-t} sum_p (t/2)^{a+2p} / ((a+p)! p!)
    double half = t / 2.0;
    double term = std::exp(-t + a * std::log(half) - std::lgamma(static_cast<double>(a) + 1.0));
    double acc = 0.0;
    for (long p = 0;; ++p) {
        acc += term;
        term *= half * half / (static_cast<double>(a + p + 1) * static_cast<double>(p + 1));
        if (term < 1e-16 * (acc + 1e-300)) break;
        if (p > 4096) break;
    }
    return acc;
}

double bessel_convolve_check(double s, double t, int support) {
    const int pad = support + 64;
    auto pmf_s = [&](long k) { return bessel_pmf(s, k); };
    double worst = 0.0;
    for (long m = -support; m <= support; ++m) {
        double conv = 0.0;
        for (long j = -pad; j <= pad; ++j) conv += pmf_s(j) * bessel_pmf(t, m - j);
        worst = std::max(worst, std::abs(conv - bessel_pmf(s + t, m)));
    }
    return worst;
}

namespace {

std::vector<int> fisher_yates(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

long sample_poisson(double lambda, Rng& rng) {
    double limit = std::exp(-lambda);
    long k = 0;
    double prod = rng.uniform01();
    while (prod > limit) {
        ++k;
        prod *= rng.uniform01();
    }
    return k;
}

}  // namespace

std::vector<Scalar> sample_reflection_char(ReflectionGroup group, int n, double t, int level_s,
                                           const SeedSpec& seed, std::size_t count) {
    int truncate = static_cast<int>(std::floor(t * n));
    if (truncate < 1 || truncate > n) throw DomainError("need 1 <= floor(tN) <= N");
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        Rng rng = seed.stream(c);
        auto sigma = fisher_yates(n, rng);
        Scalar chi(0);
        for (int i = 0; i < truncate; ++i) {
            if (sigma[i] != i) continue;
            switch (group) {
                case ReflectionGroup::S_N:
                    chi += 1.0;
                    break;
                case ReflectionGroup::H_N:
                    chi += (rng.next() & 1) ? 1.0 : -1.0;
                    break;
                case ReflectionGroup::H_N_s: {
                    if (level_s < 1) throw DomainError("level s must be >= 1");
                    long r = static_cast<long>(rng.bounded(level_s));
                    chi += root_of_unity(r, level_s);
                    break;
                }
                case ReflectionGroup::K_N:
                    chi += std::polar(1.0, kTwoPi * rng.uniform01());
                    break;
            }
        }
        out.push_back(chi);
    }
    return out;
}

std::vector<Scalar> sample_compound_poisson(int level_s, double t, const SeedSpec& seed,
                                            std::size_t count) {
    if (level_s < 1) throw DomainError("level s must be >= 1");
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        Rng rng = seed.stream(c);
        Scalar x(0);
        for (int i = 0; i < level_s; ++i) {
            long a = sample_poisson(t / level_s, rng);
            x += static_cast<double>(a) * root_of_unity(i, level_s);
        }
        out.push_back(x);
    }
    return out;
}

std::array<double, 4> sample_s3(Rng& rng) {
    while (true) {
        std::array<double, 4> v{rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
        double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
        if (norm < 1e-12) continue;
        for (auto& x : v) x /= norm;
        return v;
    }
}

CMat euler_rodrigues(double p, double q, double r, double s) {
    CMat u(3, 3);
    u(0, 0) = p * p + q * q - r * r - s * s;
    u(0, 1) = 2.0 * (q * r - p * s);
    u(0, 2) = 2.0 * (p * r + q * s);
    u(1, 0) = 2.0 * (p * s + q * r);
    u(1, 1) = p * p + r * r - q * q - s * s;
    u(1, 2) = 2.0 * (r * s - p * q);
    u(2, 0) = 2.0 * (q * s - p * r);
    u(2, 1) = 2.0 * (p * q + r * s);
    u(2, 2) = p * p + s * s - q * q - r * r;
    return u;
}

std::vector<double> sample_rotation_char(RotationGroup group, const SeedSpec& seed,
                                         std::size_t count) {
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        Rng rng = seed.stream(c);
        auto v = sample_s3(rng);
        out.push_back(group == RotationGroup::SU2 ? 2.0 * v[0] : 4.0 * v[0] * v[0]);
    }
    return out;
}

CMat haar_orthogonal(std::size_t n, Rng& rng) {
    CMat g(n, n);
    for (auto& e : g.data()) e = Scalar(rng.gauss(), 0.0);
    auto d = factor::qr(g);
    return d.q;
}

namespace {

// Book convention m!! = (m-1)(m-3)..., stopping above zero.
BigInt odd_double_factorial(long m) {
    BigInt r = 1;
    for (long j = m - 1; j >= 1; j -= 2) r *= j;
    return r;
}

}  // namespace

BigRat hyperspherical_moment(int n, int p) {
    if (n < 2 || p < 0) throw DomainError("hyperspherical moment needs N >= 2, p >= 0");
    if (p % 2 == 1) return 0;
    return BigRat(odd_double_factorial(n - 1) * odd_double_factorial(p)) /
           BigRat(odd_double_factorial(n + p - 1));
}

Scalar EmpiricalLaw::moment(int k) const {
    Scalar acc(0);
    for (auto s : samples) acc += std::pow(s, k);
    return acc / static_cast<double>(samples.size());
}

Scalar EmpiricalLaw::colored_moment(int white_count, int black_count) const {
    Scalar acc(0);
    for (auto s : samples) {
        Scalar term(1.0, 0.0);
        for (int i = 0; i < white_count; ++i) term *= s;
        for (int i = 0; i < black_count; ++i) term *= std::conj(s);
        acc += term;
    }
    return acc / static_cast<double>(samples.size());
}

double EmpiricalLaw::real_moment(int k) const { return moment(k).real(); }

double EmpiricalLaw::moment_stderr(int k) const {
    double m1 = 0.0, m2 = 0.0;
    for (auto s : samples) {
        double v = std::pow(s.real(), k);
        m1 += v;
        m2 += v * v;
    }
    const double n = static_cast<double>(samples.size());
    m1 /= n;
    m2 /= n;
    return std::sqrt(std::max(m2 - m1 * m1, 0.0) / n);
}

double EmpiricalLaw::integer_pmf(long m) const {
    std::size_t hits = 0;
    for (auto s : samples)
        if (std::llround(s.real()) == m && std::abs(s.imag()) < 1e-9) ++hits;
    return static_cast<double>(hits) / static_cast<double>(samples.size());
}

double EmpiricalLaw::tv_against(const std::vector<std::pair<long, double>>& pmf) const {
    double acc = 0.0;
    for (const auto& [m, p] : pmf) acc += std::abs(integer_pmf(m) - p);
    return acc / 2.0;
}

double EmpiricalLaw::ks_against(const std::function<double(double)>& cdf) const {
    std::vector<double> xs;
    xs.reserve(samples.size());
    for (auto s : samples) xs.push_back(s.real());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double f = cdf(xs[i]);
        worst = std::max(worst, std::abs(f - static_cast<double>(i) / n));
        worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return worst;
}

}  // namespace advlin::rmt
