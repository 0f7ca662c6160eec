#pragma once

#include <array>
#include <functional>
#include <cstdint>
#include <string>
#include <vector>

#include "advlin/matrix.hpp"
#include "advlin/partition.hpp"

namespace advlin::rmt {

// Counter-based deterministic randomness: every sample index derives its
// own stream from the master seed, so parallel order cannot matter.
struct Rng {
    std::uint64_t state = 0;
    bool have_spare = false;
    double spare = 0.0;

    std::uint64_t next();
    std::uint64_t bounded(std::uint64_t n);
    double uniform01();  // [0, 1)
    double gauss();      // standard normal, Box-Muller
};

struct SeedSpec {
    std::uint64_t master = 0;
    Rng stream(std::uint64_t sample_index) const;
};

enum class EnsembleKind { gaussian, wigner, wishart };

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::wigner;
    std::size_t n = 1;
    std::size_t m = 1;   // second dimension for wishart
    double t = 1.0;      // entry variance parameter

    double trace_normalization() const;  // Z/sqrt(N), W/N
};

CMat sample_ensemble(const EnsembleSpec& spec, const SeedSpec& seed, std::uint64_t index);

// Mean over samples of (1/N) Tr(Z^{e_1} ... Z^{e_s}), white = Z,
// black = Z*, with the kind's normalization applied first.
Scalar empirical_colored_moment(const std::vector<CMat>& samples, const parts::ColoredWord& word,
                                double normalization);

// Letters of a Wick word: color plus variable index.
struct WickLetter {
    parts::Color color;
    int variable;
};
// t^{s/2} #{matching pairings below ker i}; zero for odd or unbalanced words.
BigRat wick_moment(const std::vector<WickLetter>& word, const BigRat& t);

enum class LimitLawKind { gauss, complex_gauss, poisson, bessel, bessel_s, semicircle, marchenko_pastur };

struct LimitLaw {
    LimitLawKind kind = LimitLawKind::semicircle;
    BigRat t = BigRat(1);
    int s = 2;  // level for bessel_s

    static LimitLaw semicircle(const BigRat& t) { return {LimitLawKind::semicircle, t, 2}; }
    static LimitLaw marchenko_pastur(const BigRat& t) { return {LimitLawKind::marchenko_pastur, t, 2}; }
    static LimitLaw poisson(const BigRat& t) { return {LimitLawKind::poisson, t, 1}; }
    static LimitLaw bessel(const BigRat& t) { return {LimitLawKind::bessel, t, 2}; }
    static LimitLaw gauss(const BigRat& t) { return {LimitLawKind::gauss, t, 1}; }
    static LimitLaw complex_gauss(const BigRat& t) { return {LimitLawKind::complex_gauss, t, 1}; }
};

// Exact moments: partition sums for gauss/poisson/MP, Catalan numbers for
// the semicircle, compound Poisson moments for the Bessel law.
BigRat limit_moment(const LimitLaw& law, int k);
// Colored moments (complex Gaussian).
BigRat limit_moment(const LimitLaw& law, const parts::ColoredWord& word);

// Densities and pmfs.
double semicircle_density(double t, double x);
double marchenko_pastur_density(double t, double x);
double marchenko_pastur_atom(double t);
double semicircle_cdf(double t, double x);
double poisson_pmf(double t, long k);
double bessel_pmf(double t, long k);  // series truncated below 1e-16

// sup_{|m| <= K} | (b_s * b_t)(m) - b_{s+t}(m) |
double bessel_convolve_check(double s, double t, int support);

// E[alpha^k] for alpha ~ Poisson(t), exact.
BigRat poisson_raw_moment(const BigRat& t, int k);

enum class ReflectionGroup { S_N, H_N, H_N_s, K_N };

std::vector<Scalar> sample_reflection_char(ReflectionGroup group, int n, double t, int level_s,
                                           const SeedSpec& seed, std::size_t count);

// Simulation oracle for the compound Poisson law of level s.
std::vector<Scalar> sample_compound_poisson(int level_s, double t, const SeedSpec& seed,
                                            std::size_t count);

enum class RotationGroup { SU2, SO3 };

// Uniform point of S^3 from four normals.
std::array<double, 4> sample_s3(Rng& rng);

// The 3x3 rotation attached to a unit quaternion.
CMat euler_rodrigues(double p, double q, double r, double s);

std::vector<double> sample_rotation_char(RotationGroup group, const SeedSpec& seed,
                                         std::size_t count);

// Haar orthogJ matrix via QR of a Gaussian matrix with the R diagonal
// made positive.
CMat haar_orthogonal(std::size_t n, Rng& rng);

// (N-1)!! p!! / (N+p-1)!! with m!! = (m-1)(m-3)..., zero for odd p.
BigRat hyperspherical_moment(int n, int p);

// Sampled law with helpers for moment and distribution comparisons.
struct EmpiricalLaw {
    std::vector<Scalar> samples;

    Scalar moment(int k) const;
    Scalar colored_moment(int white_count, int black_count) const;  // E[x^a conj(x)^b]
    double real_moment(int k) const;
    double moment_stderr(int k) const;
    // Empirical probability of the integer m (for +-1 integer-valued laws).
    double integer_pmf(long m) const;
    // (1/2) sum_{|m| <= K} |phat(m) - pmf(m)|
    double tv_against(const std::vector<std::pair<long, double>>& pmf) const;
    // sup-CDF (Kolmogorov-Smirnov style) distance against a continuous law.
    double ks_against(const std::function<double(double)>& cdf) const;
};

}  // namespace advlin::rmt
