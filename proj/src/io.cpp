#include "advlin/io.hpp"

#include <fstream>

namespace advlin::io {

json scalar_to_json(Scalar z) { return json::array({z.real(), z.imag()}); }

Scalar scalar_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    throw DomainError("scalar entries are numbers or [re,im] pairs");
}

json to_json(const CMat& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json to_json(const ZMat& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"backend", "int"}, {"data", std::move(data)}};
}

json to_json(const QMat& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"backend", "rat"}, {"data", std::move(data)}};
}

namespace {

void check_shape(const json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw DomainError("matrix json needs rows, cols, data");
    std::size_t rows = j["rows"].get<std::size_t>();
    if (j["data"].size() != rows) throw DomainError("matrix json row count mismatch");
}

}  // namespace

CMat cmat_from_json(const json& j) {
    check_shape(j);
    std::size_t rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
    CMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["data"][i];
        if (row.size() != cols) throw DomainError("matrix json column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = row[c];
            if (e.is_string()) {
                BigRat q(e.get<std::string>());
                q.canonicalize();
                m(i, c) = to_scalar(q);
            } else {
                m(i, c) = scalar_from_json(e);
            }
        }
    }
    return m;
}

ZMat zmat_from_json(const json& j) {
    check_shape(j);
    std::size_t rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
    ZMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["data"][i];
        if (row.size() != cols) throw DomainError("matrix json column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = row[c];
            if (e.is_string()) m(i, c) = BigInt(e.get<std::string>());
            else if (e.is_number_integer()) m(i, c) = BigInt(e.get<long>());
            else if (e.is_array() && e.size() == 2 && e[1].get<double>() == 0.0 &&
                     e[0].get<double>() == std::floor(e[0].get<double>()))
                m(i, c) = BigInt(static_cast<long>(e[0].get<double>()));
            else throw DomainError("integer matrix entries must be integers");
        }
    }
    return m;
}

json to_json(const poly::Poly& p) {
    json coeffs = json::array();
    for (auto c : p.c) coeffs.push_back(scalar_to_json(c));
    return {{"coeffs", std::move(coeffs)}};
}

poly::Poly poly_from_json(const json& j) {
    if (!j.contains("coeffs")) throw DomainError("polynomial json needs coeffs");
    std::vector<Scalar> c;
    for (const auto& e : j["coeffs"]) c.push_back(scalar_from_json(e));
    return poly::Poly(std::move(c));
}

json to_json(const graphs::Graph& g) {
    json edges = json::array();
    for (auto [i, j2] : g.edges()) edges.push_back(json::array({i + 1, j2 + 1}));
    return {{"n", g.n()}, {"edges", std::move(edges)}};
}

graphs::Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw DomainError("graph json needs n, edges");
    graphs::Graph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw DomainError("edges are 1-based pairs");
        g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
    }
    return g;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace advlin::io
