// advlin: command-line front end for the linear-algebra library.
//
// Subcommands: poly, matrix, special, graph, wg, rmt, laws. All file I/O
// uses the JSON formats documented in the README; stochastic commands echo
// the effective seed; exact-arithmetic commands ignore --tol and say so.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "advlin/det.hpp"
#include "advlin/factor.hpp"
#include "advlin/graph.hpp"
#include "advlin/io.hpp"
#include "advlin/jordan.hpp"
#include "advlin/partition.hpp"
#include "advlin/poly.hpp"
#include "advlin/rmt.hpp"
#include "advlin/spectra.hpp"
#include "advlin/structured.hpp"

using namespace advlin;
using nlohmann::json;

namespace {

struct GlobalOpts {
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

std::uint64_t effective_seed(const GlobalOpts& g) {
    if (g.seed_set) return g.seed;
    if (const char* env = std::getenv("ADVLIN_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json scalar_list(const std::vector<Scalar>& v) {
    json a = json::array();
    for (auto z : v) a.push_back(io::scalar_to_json(z));
    return a;
}

poly::Poly poly_from_file(const std::string& path) {
    return io::poly_from_json(io::read_json_file(path));
}

// Integer polynomial when every coefficient is a plain integer.
std::optional<poly::ZPoly> try_exact_poly(const poly::Poly& p) {
    std::vector<BigInt> c;
    for (auto z : p.c) {
        if (z.imag() != 0.0 || z.real() != std::floor(z.real())) return std::nullopt;
        c.emplace_back(static_cast<long>(z.real()));
    }
    return poly::trim(poly::ZPoly(std::move(c)));
}

Scalar parse_scalar_arg(const std::string& s) {
    // "re" or "re,im"
    auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

json atomic_law_json(const spectra::AtomicLaw& law) {
    json atoms = json::array();
    for (auto [loc, w] : law.atoms)
        atoms.push_back({{"location", io::scalar_to_json(loc)}, {"weight", w}});
    return {{"atoms", atoms}};
}

int run_poly(const std::string& op, const std::vector<std::string>& files, Scalar p, Scalar q,
             Scalar r, const GlobalOpts& g) {
    if (op == "solve3") {
        auto roots = poly::solve_cubic(p, q);
        emit({{"equation", "x^3 + 3px + 2q = 0"},
              {"roots", scalar_list({roots.begin(), roots.end()})}});
        return 0;
    }
    if (op == "solve4") {
        auto roots = poly::solve_quartic(p, q, r);
        emit({{"equation", "x^4 + 6px^2 + 4qx + 3r = 0"},
              {"roots", scalar_list({roots.begin(), roots.end()})}});
        return 0;
    }
    if (files.empty()) throw DomainError("this poly operation needs a polynomial file");
    poly::Poly first = poly_from_file(files[0]);
    if (op == "roots") {
        auto rts = poly::roots(first);
        auto clusters = poly::cluster_roots(rts);
        json cj = json::array();
        for (auto& [loc, mult] : clusters)
            cj.push_back({{"root", io::scalar_to_json(loc)}, {"multiplicity", mult}});
        emit({{"roots", scalar_list(rts)}, {"clusters", cj}});
        return 0;
    }
    if (op == "resultant") {
        if (files.size() < 2) throw DomainError("resultant needs two polynomial files");
        poly::Poly second = poly_from_file(files[1]);
        auto e1 = try_exact_poly(first), e2 = try_exact_poly(second);
        if (e1 && e2) {
            emit({{"resultant", poly::resultant(*e1, *e2).get_str()},
                  {"backend", "exact-integer"},
                  {"tol_ignored", true}});
        } else {
            emit({{"resultant", io::scalar_to_json(poly::resultant(first, second))},
                  {"backend", "float"}});
        }
        return 0;
    }
    if (op == "discriminant") {
        auto e1 = try_exact_poly(first);
        if (e1) {
            emit({{"discriminant", poly::discriminant(*e1).get_str()},
                  {"backend", "exact-integer"},
                  {"tol_ignored", true}});
        } else {
            emit({{"discriminant", io::scalar_to_json(poly::discriminant(first))},
                  {"backend", "float"}});
        }
        return 0;
    }
    if (op == "classify") {
        std::vector<double> coeffs;
        for (auto z : first.c) {
            if (z.imag() != 0.0) throw DomainError("classification needs real coefficients");
            coeffs.push_back(z.real());
        }
        auto rc = poly::classify_real_roots(coeffs, g.tol);
        emit({{"degree", rc.degree},
              {"real_roots", rc.real_roots},
              {"discriminant", rc.discriminant_value}});
        return 0;
    }
    throw DomainError("unknown poly operation: " + op);
}

int run_matrix(const std::string& op, const std::string& file, const std::string& kind,
               double cluster_tol, const GlobalOpts& g) {
    CMat m = io::cmat_from_json(io::read_json_file(file));
    if (op == "eigen") {
        spectra::EigenKind ek = spectra::EigenKind::general;
        if (kind == "hermitian") ek = spectra::EigenKind::hermitian;
        else if (kind == "normal") ek = spectra::EigenKind::normal;
        else if (kind != "general" && !kind.empty()) throw DomainError("unknown eigen kind");
        auto d = spectra::eigen(m, ek, g.tol);
        emit({{"values", scalar_list(d.values)}, {"passage", io::to_json(d.passage)}});
        return 0;
    }
    if (op == "law") {
        emit(atomic_law_json(spectra::matrix_law(m, g.tol)));
        return 0;
    }
    if (op == "expm") {
        emit(io::to_json(spectra::expm(m)));
        return 0;
    }
    if (op == "polar") {
        auto d = spectra::polar(m, g.tol);
        emit({{"isometry", io::to_json(d.isometry)}, {"modulus", io::to_json(d.modulus)}});
        return 0;
    }
    if (op == "svd") {
        auto d = spectra::svd(m);
        emit({{"left", io::to_json(d.left)},
              {"singulars", d.singulars},
              {"right", io::to_json(d.right)}});
        return 0;
    }
    if (op == "inertia") {
        auto i = spectra::inertia(m, g.tol);
        emit({{"n_plus", i.n_plus}, {"n_minus", i.n_minus}, {"n_zero", i.n_zero}});
        return 0;
    }
    if (op == "positivity") {
        const char* names[] = {"not_selfadjoint", "indefinite", "positive", "strictly_positive"};
        emit({{"class", names[static_cast<int>(spectra::positivity_class(m, g.tol))]}});
        return 0;
    }
    if (op == "jordan") {
        auto jf = jordan::jordan_form(m, cluster_tol);
        json blocks = json::array();
        for (auto& [lam, sz] : jf.blocks)
            blocks.push_back({{"eigenvalue", io::scalar_to_json(lam)}, {"size", sz}});
        emit({{"blocks", blocks},
              {"passage", io::to_json(jf.passage)},
              {"residual", jf.residual}});
        return 0;
    }
    if (op == "factor") {
        if (kind == "plu") {
            auto d = factor::plu(m);
            emit({{"perm", d.perm.to_one_based()},
                  {"lower", io::to_json(d.lower)},
                  {"upper", io::to_json(d.upper)}});
        } else if (kind == "ldu") {
            auto d = factor::ldu(m, g.tol);
            emit({{"lower", io::to_json(d.lower)},
                  {"diag", io::to_json(d.diag)},
                  {"upper", io::to_json(d.upper)}});
        } else if (kind == "qr") {
            auto d = factor::qr(m);
            emit({{"q", io::to_json(d.q)}, {"r", io::to_json(d.r)}});
        } else if (kind == "schur") {
            auto d = factor::schur(m);
            emit({{"q", io::to_json(d.q)}, {"t", io::to_json(d.t)}});
        } else {
            throw DomainError("factor kind must be plu|ldu|qr|schur");
        }
        return 0;
    }
    throw DomainError("unknown matrix operation: " + op);
}

int run_graph(const std::string& op, const std::string& file, int base, int k) {
    graphs::Graph g = io::graph_from_json(io::read_json_file(file));
    if (op == "trees") {
        emit({{"spanning_trees", graphs::spanning_tree_count(g).get_str()},
              {"backend", "exact-integer"},
              {"tol_ignored", true}});
        return 0;
    }
    if (op == "laplacian") {
        emit(io::to_json(graphs::laplacian(g)));
        return 0;
    }
    if (op == "loops") {
        emit({{"base", base},
              {"k", k},
              {"count", graphs::loop_count(g, base - 1, k).get_str()},
              {"measure", atomic_law_json(graphs::loop_measure(g, base - 1))}});
        return 0;
    }
    if (op == "spectrum") {
        auto vals = spectra::hermitian_eigenvalues(to_cmat(g.adjacency()));
        emit({{"adjacency_spectrum", vals}});
        return 0;
    }
    if (op == "components") {
        emit({{"components", graphs::component_count(g)}});
        return 0;
    }
    throw DomainError("unknown graph operation: " + op);
}

int run_special(const std::string& op, long n, const std::string& kind, long qprime, int kpow,
                const std::string& file, const GlobalOpts& g) {
    if (op == "fourier") {
        emit(io::to_json(structured::fourier_matrix(n)));
        return 0;
    }
    if (op == "circulant") {
        json j = io::read_json_file(file);
        std::vector<Scalar> xi;
        const json& arr = j.is_array() ? j : j.at("xi");
        for (const auto& e : arr) xi.push_back(io::scalar_from_json(e));
        auto d = structured::circulant_diagonalize(xi);
        emit({{"q", scalar_list(d.q)}, {"residual", d.residual}});
        return 0;
    }
    if (op == "hadamard") {
        ZMat h;
        if (kind == "walsh") h = structured::walsh(kpow);
        else if (kind == "paley1") h = structured::paley1(qprime);
        else if (kind == "paley2") h = structured::paley2(qprime);
        else if (kind == "williamson") {
            json j = io::read_json_file(file);
            auto grab = [&](const char* name) {
                std::vector<int> v;
                for (const auto& e : j.at(name)) v.push_back(e.get<int>());
                return v;
            };
            h = structured::williamson(grab("A"), grab("B"), grab("C"), grab("D"));
        } else throw DomainError("hadamard kind must be walsh|paley1|paley2|williamson");
        std::cout << structured::sign_matrix_to_text(h);
        if (!structured::is_hadamard(h)) throw DomainError("construction failed verification");
        return 0;
    }
    if (op == "check") {
        std::ifstream in(file);
        if (!in) throw DomainError("cannot open file: " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        ZMat h = structured::sign_matrix_from_text(buf.str());
        emit({{"is_hadamard", structured::is_hadamard(h)}});
        return 0;
    }
    if (op == "chc-search") {
        auto found = structured::circulant_hadamard_search(static_cast<int>(n));
        json lst = json::array();
        for (const auto& v : found) {
            std::string s;
            for (int x : v) s += (x > 0 ? '+' : '-');
            lst.push_back(s);
        }
        emit({{"n", n}, {"solutions", lst}, {"count", found.size()}});
        return 0;
    }
    if (op == "bistochastic") {
        CMat m = io::cmat_from_json(io::read_json_file(file));
        auto rep = structured::bistochastic_check(m, g.tol);
        emit({{"row_sums", scalar_list(rep.row_sums)},
              {"col_sums", scalar_list(rep.col_sums)},
              {"is_bistochastic", rep.is_bistochastic},
              {"common_sum",
               rep.has_common_sum ? io::scalar_to_json(rep.common_sum) : json(nullptr)}});
        return 0;
    }
    throw DomainError("unknown special operation: " + op);
}

int run_wg(const std::string& op, const std::string& cat_name, int k, long n, long s,
           const std::string& t_str, long catalan_k) {
    if (op == "catalan") {
        emit({{"k", catalan_k}, {"catalan", parts::catalan(static_cast<int>(catalan_k)).get_str()}});
        return 0;
    }
    parts::Category cat = parts::category_from_name(cat_name);
    if (op == "gram") {
        auto ps = parts::enumerate(k, cat);
        json names = json::array();
        for (auto& p : ps) names.push_back(p.rgs_string());
        emit({{"cat", cat_name},
              {"k", k},
              {"N", n},
              {"partitions", names},
              {"gram", io::to_json(parts::gram(ps, n))},
              {"tol_ignored", true}});
        return 0;
    }
    if (op == "weingarten") {
        auto ps = parts::enumerate(k, cat);
        json names = json::array();
        for (auto& p : ps) names.push_back(p.rgs_string());
        emit({{"cat", cat_name},
              {"k", k},
              {"N", n},
              {"partitions", names},
              {"weingarten", io::to_json(parts::weingarten(ps, n))},
              {"tol_ignored", true}});
        return 0;
    }
    if (op == "moment") {
        BigRat v = parts::truncated_char_moment(cat, k, n, s);
        emit({{"cat", cat_name},
              {"k", k},
              {"N", n},
              {"s", s},
              {"moment", v.get_str()},
              {"moment_float", to_double(v)},
              {"tol_ignored", true}});
        return 0;
    }
    if (op == "asymptotic") {
        BigRat t(t_str);
        t.canonicalize();
        auto coeffs = parts::asymptotic_moment_coeffs(cat, k);
        json cj = json::array();
        for (auto& c : coeffs) cj.push_back(c.get_str());
        BigRat v = parts::asymptotic_moment(cat, k, t);
        emit({{"cat", cat_name},
              {"k", k},
              {"t", t.get_str()},
              {"coefficients_by_block_count", cj},
              {"value", v.get_str()},
              {"value_float", to_double(v)}});
        return 0;
    }
    throw DomainError("unknown wg operation: " + op);
}

rmt::EnsembleSpec parse_ensemble(const std::string& kind, std::size_t n, std::size_t m, double t) {
    rmt::EnsembleSpec spec;
    if (kind == "gaussian") spec.kind = rmt::EnsembleKind::gaussian;
    else if (kind == "wigner") spec.kind = rmt::EnsembleKind::wigner;
    else if (kind == "wishart") spec.kind = rmt::EnsembleKind::wishart;
    else throw DomainError("ensemble kind must be gaussian|wigner|wishart");
    spec.n = n;
    spec.m = m ? m : n;
    spec.t = t;
    return spec;
}

rmt::LimitLaw parse_law(const std::string& name, const std::string& t_str, int s) {
    BigRat t(t_str);
    t.canonicalize();
    if (name == "semicircle") return rmt::LimitLaw::semicircle(t);
    if (name == "mp" || name == "marchenko-pastur") return rmt::LimitLaw::marchenko_pastur(t);
    if (name == "poisson") return rmt::LimitLaw::poisson(t);
    if (name == "bessel") return rmt::LimitLaw::bessel(t);
    if (name == "gauss") return rmt::LimitLaw::gauss(t);
    if (name == "cgauss" || name == "complex-gauss") return rmt::LimitLaw::complex_gauss(t);
    if (name == "bessel_s") return {rmt::LimitLawKind::bessel_s, t, s};
    throw DomainError("unknown law: " + name);
}

int run_rmt_sample(const std::string& kind, std::size_t n, std::size_t m, double t,
                   std::size_t count, const GlobalOpts& g) {
    auto spec = parse_ensemble(kind, n, m, t);
    rmt::SeedSpec seed{effective_seed(g)};
    json out;
    out["seed"] = seed.master;
    out["kind"] = kind;
    json arr = json::array();
    for (std::size_t i = 0; i < count; ++i)
        arr.push_back(io::to_json(rmt::sample_ensemble(spec, seed, i)));
    out["samples"] = arr;
    emit(out);
    return 0;
}

int run_rmt_moments(const std::string& kind, std::size_t n, std::size_t m, double t,
                    std::size_t count, int kmin, int kmax, const std::string& law_name,
                    const GlobalOpts& g) {
    auto spec = parse_ensemble(kind, n, m, t);
    rmt::SeedSpec seed{effective_seed(g)};
    std::vector<CMat> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) samples.push_back(rmt::sample_ensemble(spec, seed, i));
    std::string effective_law = law_name;
    if (effective_law.empty())
        effective_law = (spec.kind == rmt::EnsembleKind::wishart) ? "mp" : "semicircle";
    std::ostringstream t_str;
    t_str << t;
    rmt::LimitLaw law = parse_law(effective_law, t_str.str(), 2);
    // CSV moment table, plus the seed echoed on stderr-like metadata line.
    std::cout << "k,empirical,limit,abs_err,stderr\n";
    const double norm = spec.trace_normalization();
    for (int k = kmin; k <= kmax; ++k) {
        parts::ColoredWord word(k, parts::Color::white);
        // per-sample normalized traces for the standard error
        std::vector<double> per;
        per.reserve(count);
        for (const auto& z : samples)
            per.push_back(rmt::empirical_colored_moment({z}, word, norm).real());
        double mean = 0.0;
        for (double v : per) mean += v;
        mean /= static_cast<double>(per.size());
        double var = 0.0;
        for (double v : per) var += (v - mean) * (v - mean);
        double se = per.size() > 1 ? std::sqrt(var / (per.size() * (per.size() - 1.0))) : 0.0;
        double limit = to_double(rmt::limit_moment(law, k));
        std::cout << k << "," << mean << "," << limit << "," << std::abs(mean - limit) << ","
                  << se << "\n";
    }
    std::cerr << "{\"seed\": " << seed.master << "}\n";
    return 0;
}

int run_rmt_chars(const std::string& group, int n, double t, int s, std::size_t count,
                  const GlobalOpts& g) {
    rmt::SeedSpec seed{effective_seed(g)};
    rmt::ReflectionGroup rg;
    if (group == "SN") rg = rmt::ReflectionGroup::S_N;
    else if (group == "HN") rg = rmt::ReflectionGroup::H_N;
    else if (group == "HNs") rg = rmt::ReflectionGroup::H_N_s;
    else if (group == "KN") rg = rmt::ReflectionGroup::K_N;
    else throw DomainError("group must be SN|HN|HNs|KN");
    auto samples = rmt::sample_reflection_char(rg, n, t, s, seed, count);
    rmt::EmpiricalLaw law{samples};
    json out{{"seed", seed.master}, {"group", group}, {"N", n}, {"t", t}, {"count", count}};
    json moments = json::array();
    for (int k = 1; k <= 4; ++k) {
        json entry{{"k", k},
                   {"empirical", io::scalar_to_json(law.moment(k))},
                   {"stderr", law.moment_stderr(k)}};
        if (rg == rmt::ReflectionGroup::S_N)
            entry["limit"] = to_double(rmt::limit_moment(rmt::LimitLaw::poisson(BigRat(t)), k));
        else if (rg == rmt::ReflectionGroup::H_N)
            entry["limit"] = to_double(rmt::limit_moment(rmt::LimitLaw::bessel(BigRat(t)), k));
        moments.push_back(std::move(entry));
    }
    out["moments"] = moments;
    if (rg == rmt::ReflectionGroup::S_N || rg == rmt::ReflectionGroup::H_N) {
        std::vector<std::pair<long, double>> pmf;
        long lo = (rg == rmt::ReflectionGroup::S_N) ? 0 : -6;
        for (long kk = lo; kk <= 6; ++kk)
            pmf.emplace_back(kk, rg == rmt::ReflectionGroup::S_N ? rmt::poisson_pmf(t, kk)
                                                                 : rmt::bessel_pmf(t, kk));
        out["tv_against_limit"] = law.tv_against(pmf);
        out["limit_law"] = (rg == rmt::ReflectionGroup::S_N) ? "poisson" : "bessel";
    }
    emit(out);
    return 0;
}

int run_laws_eval(const std::string& name, const std::string& t_str, int s, double x, long k,
                  bool has_x, bool has_k, const std::string& grid) {
    BigRat t(t_str);
    t.canonicalize();
    double td = to_double(t);
    auto density = [&](double xx) -> double {
        if (name == "semicircle") return rmt::semicircle_density(td, xx);
        if (name == "mp" || name == "marchenko-pastur") return rmt::marchenko_pastur_density(td, xx);
        throw DomainError("grid/x evaluation is for continuous laws (semicircle, mp)");
    };
    auto pmf = [&](long kk) -> double {
        if (name == "poisson") return rmt::poisson_pmf(td, kk);
        if (name == "bessel") return rmt::bessel_pmf(td, kk);
        throw DomainError("k evaluation is for discrete laws (poisson, bessel)");
    };
    (void)s;
    if (!grid.empty()) {
        // a:b:n
        double a, b;
        int npts;
        if (std::sscanf(grid.c_str(), "%lf:%lf:%d", &a, &b, &npts) != 3 || npts < 2)
            throw DomainError("grid format is a:b:n");
        std::cout << "x,density\n";
        for (int i = 0; i < npts; ++i) {
            double xx = a + (b - a) * i / (npts - 1);
            std::cout << xx << "," << density(xx) << "\n";
        }
        return 0;
    }
    if (has_x) {
        emit({{"law", name}, {"t", t.get_str()}, {"x", x}, {"density", density(x)}});
        return 0;
    }
    if (has_k) {
        emit({{"law", name}, {"t", t.get_str()}, {"k", k}, {"pmf", pmf(k)}});
        return 0;
    }
    if (name == "mp" || name == "marchenko-pastur") {
        emit({{"law", name}, {"t", t.get_str()}, {"atom_at_zero", rmt::marchenko_pastur_atom(td)}});
        return 0;
    }
    throw DomainError("laws eval needs --x, --k or --grid");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"advlin: exact and numerical linear algebra toolkit"};
    app.require_subcommand(0, 1);
    GlobalOpts g;
    app.add_option("--tol", g.tol, "numerical tolerance (exact commands ignore it)");
    auto* seed_opt = app.add_option("--seed", g.seed, "master seed (falls back to ADVLIN_SEED)");

    // poly
    auto* cpoly = app.add_subcommand("poly", "polynomial operations");
    cpoly->fallthrough();
    std::string poly_op;
    std::vector<std::string> poly_files;
    std::string ps = "0", qs = "0", rs = "0";
    cpoly->add_option("op", poly_op, "roots|resultant|discriminant|classify|solve3|solve4")
        ->required();
    cpoly->add_option("files", poly_files, "polynomial JSON files");
    cpoly->add_option("--p", ps, "p as re[,im]");
    cpoly->add_option("--q", qs, "q as re[,im]");
    cpoly->add_option("--r", rs, "r as re[,im]");

    // matrix
    auto* cmatrix = app.add_subcommand("matrix", "matrix decompositions");
    cmatrix->fallthrough();
    std::string mat_op, mat_file, mat_kind;
    double cluster_tol = 0.0;
    cmatrix->add_option("op", mat_op, "eigen|law|expm|polar|svd|inertia|positivity|jordan|factor")
        ->required();
    cmatrix->add_option("file", mat_file, "matrix JSON file")->required();
    cmatrix->add_option("--kind", mat_kind, "eigen kind or factor kind");
    cmatrix->add_option("--cluster-tol", cluster_tol, "jordan eigenvalue cluster tolerance");

    // graph
    auto* cgraph = app.add_subcommand("graph", "graph spectra and spanning trees");
    cgraph->fallthrough();
    std::string graph_op, graph_file;
    int base = 1, loops_k = 2;
    cgraph->add_option("op", graph_op, "trees|laplacian|loops|spectrum|components")->required();
    cgraph->add_option("file", graph_file, "graph JSON file")->required();
    cgraph->add_option("--base", base, "base vertex (1-based)");
    cgraph->add_option("--k", loops_k, "loop length");

    // special
    auto* cspecial = app.add_subcommand("special", "structured matrices");
    cspecial->fallthrough();
    std::string sp_op, sp_kind, sp_file, sp_symbol, sp_arg;
    long sp_q = 3;
    int sp_k = 1;
    cspecial->add_option("op", sp_op, "fourier|circulant|hadamard|check|chc-search|bistochastic")
        ->required();
    cspecial->add_option("arg", sp_arg, "size argument, or input file for bistochastic/check");
    cspecial->add_option("--kind", sp_kind, "hadamard kind walsh|paley1|paley2|williamson");
    cspecial->add_option("--q", sp_q, "prime for paley constructions");
    cspecial->add_option("--k", sp_k, "walsh tensor power");
    cspecial->add_option("--file", sp_file, "input file (sign matrix, williamson quadruple)");
    cspecial->add_option("--symbol", sp_symbol, "circulant symbol JSON file");

    // wg
    auto* cwg = app.add_subcommand("wg", "partition lattice and Weingarten calculus");
    cwg->fallthrough();
    std::string wg_op, wg_cat = "P", wg_t = "1";
    int wg_k = 2;
    long wg_n = 5, wg_s = 2, wg_catalan = 0;
    cwg->add_option("op", wg_op, "gram|weingarten|moment|asymptotic|catalan")->required();
    cwg->add_option("arg", wg_catalan, "argument for catalan");
    cwg->add_option("--cat", wg_cat, "P|Peven|P2|mP2|NC|NC2|mNC2|Ps<s>");
    cwg->add_option("--k", wg_k, "word length");
    cwg->add_option("--N", wg_n, "group dimension");
    cwg->add_option("--trunc", wg_s, "truncation s");
    cwg->add_option("--t", wg_t, "parameter t (rational like 1/2 accepted)");

    // rmt
    auto* crmt = app.add_subcommand("rmt", "random matrix and character sampling");
    crmt->fallthrough();
    std::string rmt_op, rmt_kind = "wigner", rmt_law, rmt_group = "SN", rmt_krange;
    std::size_t rmt_n = 50, rmt_m = 0, rmt_count = 10;
    double rmt_t = 1.0;
    int rmt_kmax = 4, rmt_s = 2;
    crmt->add_option("op", rmt_op, "sample|moments|compare|chars")->required();
    crmt->add_option("--kind", rmt_kind, "gaussian|wigner|wishart");
    crmt->add_option("--N", rmt_n, "matrix size");
    crmt->add_option("--M", rmt_m, "second wishart dimension");
    crmt->add_option("--t", rmt_t, "parameter t");
    crmt->add_option("--count", rmt_count, "number of samples");
    crmt->add_option("--kmax", rmt_kmax, "largest moment order");
    crmt->add_option("--k", rmt_krange, "moment range like 1..6");
    crmt->add_option("--law", rmt_law, "limit law for comparisons");
    crmt->add_option("--group", rmt_group, "SN|HN|HNs|KN");
    crmt->add_option("--s", rmt_s, "reflection level s");

    // laws
    auto* claws = app.add_subcommand("laws", "limit law evaluation");
    claws->fallthrough();
    std::string laws_op = "eval", laws_name = "semicircle", laws_t = "1", laws_grid;
    double laws_x = 0.0;
    long laws_k = 0;
    int laws_s = 2;
    claws->add_option("op", laws_op, "eval");
    claws->add_option("--law", laws_name, "semicircle|mp|poisson|bessel");
    claws->add_option("--t", laws_t, "parameter (rational accepted)");
    auto* xopt = claws->add_option("--x", laws_x, "evaluation point");
    auto* kopt = claws->add_option("--k", laws_k, "integer support point");
    claws->add_option("--grid", laws_grid, "a:b:n grid for CSV output");
    claws->add_option("--s", laws_s, "bessel level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // unknown subcommand / bad usage
    }
    g.seed_set = seed_opt->count() > 0;

    try {
        if (cpoly->parsed())
            return run_poly(poly_op, poly_files, parse_scalar_arg(ps), parse_scalar_arg(qs),
                            parse_scalar_arg(rs), g);
        if (cmatrix->parsed()) return run_matrix(mat_op, mat_file, mat_kind, cluster_tol, g);
        if (cgraph->parsed()) return run_graph(graph_op, graph_file, base, loops_k);
        if (cspecial->parsed()) {
            long sp_n = 0;
            std::string in_file = sp_file;
            if (sp_op == "bistochastic" || sp_op == "check") {
                if (in_file.empty()) in_file = sp_arg;
            } else if (sp_op == "circulant") {
                if (!sp_symbol.empty()) in_file = sp_symbol;
                else if (in_file.empty()) in_file = sp_arg;
            } else if (!sp_arg.empty()) {
                sp_n = std::stol(sp_arg);
            }
            return run_special(sp_op, sp_n, sp_kind, sp_q, sp_k, in_file, g);
        }
        if (cwg->parsed()) return run_wg(wg_op, wg_cat, wg_k, wg_n, wg_s, wg_t, wg_catalan);
        if (crmt->parsed()) {
            if (rmt_op == "sample") return run_rmt_sample(rmt_kind, rmt_n, rmt_m, rmt_t, rmt_count, g);
            if (rmt_op == "moments" || rmt_op == "compare") {
                int kmin = 1, kmax = rmt_kmax;
                if (!rmt_krange.empty()) {
                    auto dots = rmt_krange.find("..");
                    if (dots == std::string::npos) kmin = kmax = std::stoi(rmt_krange);
                    else {
                        kmin = std::stoi(rmt_krange.substr(0, dots));
                        kmax = std::stoi(rmt_krange.substr(dots + 2));
                    }
                }
                return run_rmt_moments(rmt_kind, rmt_n, rmt_m, rmt_t, rmt_count, kmin, kmax,
                                       rmt_law, g);
            }
            if (rmt_op == "chars") return run_rmt_chars(rmt_group, rmt_n, rmt_t, rmt_s, rmt_count, g);
            throw DomainError("unknown rmt operation: " + rmt_op);
        }
        if (claws->parsed())
            return run_laws_eval(laws_name, laws_t, laws_s, laws_x, laws_k, xopt->count() > 0,
                                 kopt->count() > 0, laws_grid);
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        emit({{"error", e.what()}, {"context", "budget"}});
        return 1;
    } catch (const RefusalError& e) {
        emit({{"error", e.what()}, {"context", "refusal"}});
        return 1;
    } catch (const DomainError& e) {
        emit({{"error", e.what()}, {"context", "contract"}});
        return 1;
    } catch (const std::exception& e) {
        emit({{"error", e.what()}, {"context", "input"}});
        return 1;
    }
}
