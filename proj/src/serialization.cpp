#include "qmod/serialization.hpp"

#include <filesystem>
#include <fstream>

namespace qmod {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw std::invalid_argument("rational: expected a \"p/q\" string");
    return Rational(j.get<std::string>());
}

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exps"] = e;
        t["coef"] = rational_to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["n_vars"] = p.n_vars();
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial p(j.at("n_vars").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exps").get<Exponents>(), rational_from_json(t.at("coef")));
    return p;
}

Json multivector_to_json(const MultiVector& m) {
    Json comps = Json::array();
    for (const auto& [tup, poly] : m.components()) {
        Json c;
        std::vector<int> one_based;
        one_based.reserve(tup.size());
        for (int i : tup)
            one_based.push_back(i + 1);
        c["indices"] = std::move(one_based);
        c["terms"] = polynomial_to_json(poly)["terms"];
        comps.push_back(std::move(c));
    }
    Json j;
    j["n_vars"] = m.n_vars();
    j["degree"] = m.degree();
    j["components"] = std::move(comps);
    return j;
}

MultiVector multivector_from_json(const Json& j) {
    const int n = j.at("n_vars").get<int>();
    MultiVector m(n, j.at("degree").get<int>());
    for (const auto& c : j.at("components")) {
        IndexTuple tup;
        for (int i : c.at("indices").get<std::vector<int>>())
            tup.push_back(i - 1);
        Polynomial p(n);
        for (const auto& t : c.at("terms"))
            p.add_term(t.at("exps").get<Exponents>(), rational_from_json(t.at("coef")));
        m.add_component(std::move(tup), p);
    }
    return m;
}

Json lie_algebra_to_json(const LieAlgebra& g) {
    Json brackets = Json::array();
    for (const auto& t : g.bracket_list())
        brackets.push_back(Json::array({t.i + 1, t.j + 1, t.k + 1, rational_to_json(t.c)}));
    Json j;
    j["dim"] = g.dim();
    j["brackets"] = std::move(brackets);
    return j;
}

LieAlgebra lie_algebra_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<BracketTerm> terms;
    for (const auto& b : j.at("brackets")) {
        if (!b.is_array() || b.size() != 4)
            throw std::invalid_argument("lie algebra: bracket entries are [i, j, k, coef]");
        terms.push_back({b[0].get<int>() - 1, b[1].get<int>() - 1, b[2].get<int>() - 1,
                         rational_from_json(b[3])});
    }
    return LieAlgebra::validated(dim, terms);
}

Json lie_module_to_json(const LieModule& m) {
    Json action = Json::array();
    for (int i = 0; i < m.algebra().dim(); ++i) {
        Json mat = Json::array();
        for (int r = 0; r < m.dim_v(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.dim_v(); ++c)
                row.push_back(rational_to_json(m.action(i).at(r, c)));
            mat.push_back(std::move(row));
        }
        action.push_back(std::move(mat));
    }
    Json j;
    j["dim_v"] = m.dim_v();
    j["action"] = std::move(action);
    return j;
}

LieModule lie_module_from_json(const Json& j, const LieAlgebra& g) {
    const int m = j.at("dim_v").get<int>();
    std::vector<Matrix> action;
    for (const auto& mat : j.at("action")) {
        Matrix a(m, m);
        int r = 0;
        for (const auto& row : mat) {
            int c = 0;
            for (const auto& v : row)
                a.at(r, c++) = rational_from_json(v);
            ++r;
        }
        action.push_back(std::move(a));
    }
    return LieModule::validated(g, std::move(action));
}

Json weight_table_to_json(const WeightTable& wt) {
    Json j;
    j["w_parallel"] = rational_to_json(wt.w_parallel);
    j["w_left"] = rational_to_json(wt.w_left);
    j["w_right"] = rational_to_json(wt.w_right);
    j["w_cycle"] = rational_to_json(wt.w_cycle);
    j["wheel_sign"] = wt.wheel_sign;
    return j;
}

WeightTable weight_table_from_json(const Json& j) {
    WeightTable wt;
    wt.w_parallel = rational_from_json(j.at("w_parallel"));
    wt.w_left = rational_from_json(j.at("w_left"));
    wt.w_right = rational_from_json(j.at("w_right"));
    wt.w_cycle = rational_from_json(j.at("w_cycle"));
    wt.wheel_sign = j.at("wheel_sign").get<int>() >= 0 ? +1 : -1;
    return wt;
}

CounterexampleData counterexample_from_json(const Json& j, const std::string& base_dir) {
    namespace fs = std::filesystem;
    auto load_algebra = [&](const Json& ref) {
        fs::path p = ref.get<std::string>();
        if (p.is_relative())
            p = fs::path(base_dir) / p;
        return lie_algebra_from_json(read_json_file(p.string()));
    };
    CounterexampleData d;
    d.g = load_algebra(j.at("g"));
    d.h = load_algebra(j.at("h"));
    std::vector<std::tuple<int, int, Rational>> entries;
    for (const auto& e : j.at("C")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("counterexample: C entries are [a, b, coef]");
        entries.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1, rational_from_json(e[2]));
    }
    d.c = CounterexampleData::cocycle_matrix(d.h.dim(), entries);
    return d;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace qmod
