#include "ghwforge/json_io.hpp"

#include <fstream>

#include "ghwforge/errors.hpp"

namespace ghwforge {
namespace {

using nlohmann::json;

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
    return v.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw ParseError(std::string(what) + " entries must be integers");
        out.push_back(e.get<int>());
    }
    return out;
}

json rows_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

}  // namespace

json field_to_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    const Field f = Field::make(need_int(j, "p"), need_int(j, "m"));
    if (j.contains("modulus")) {
        const std::vector<int> given = int_list(j.at("modulus"), "modulus");
        if (given != f.modulus())
            throw ParseError("modulus differs from the canonical one for GF(p^m)");
    }
    return f;
}

json matrix_to_json(const Matrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows_to_json(m)}};
}

Matrix matrix_from_json(const Field& f, const json& j) {
    const int rows = need_int(j, "rows"), cols = need_int(j, "cols");
    const json& entries = need(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ParseError("entries must hold one array per row");
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const std::vector<int> row = int_list(entries.at(i), "matrix row");
        if (static_cast<int>(row.size()) != cols)
            throw ParseError("row length differs from cols");
        for (int c = 0; c < cols; ++c) m.set(i, c, row[c]);
    }
    return m;
}

json code_to_json(const LinearCode& c) {
    return json{{"field", field_to_json(c.field())},
                {"n", c.length()},
                {"k", c.dimension()},
                {"generator", rows_to_json(c.generator())}};
}

LinearCode code_from_json(const json& j) {
    const Field f = field_from_json(need(j, "field"));
    const int n = need_int(j, "n"), k = need_int(j, "k");
    const json& gen = need(j, "generator");
    if (!gen.is_array() || static_cast<int>(gen.size()) != k)
        throw ParseError("generator must hold k rows");
    Matrix g(f, k, n);
    for (int i = 0; i < k; ++i) {
        const std::vector<int> row = int_list(gen.at(i), "generator row");
        if (static_cast<int>(row.size()) != n)
            throw ParseError("generator row length differs from n");
        for (int c = 0; c < n; ++c) g.set(i, c, row[c]);
    }
    return LinearCode(std::move(g));
}

json subset_system_to_json(const SubsetSystem& s) {
    json sets = json::array();
    for (const auto& one : s.sets) {
        json arr = json::array();
        for (int x : one) arr.push_back(x + 1);  // files are 1-based
        sets.push_back(std::move(arr));
    }
    return json{{"n", s.n}, {"sets", std::move(sets)}};
}

SubsetSystem subset_system_from_json(const json& j) {
    const int n = need_int(j, "n");
    const json& sets = need(j, "sets");
    if (!sets.is_array() || sets.empty())
        throw ParseError("sets must be a nonempty array");
    std::vector<std::vector<int>> zero_based;
    for (const auto& one : sets) {
        std::vector<int> s = int_list(one, "set");
        for (int& x : s) {
            if (x < 1 || x > n)
                throw ParseError("coordinate " + std::to_string(x) +
                                 " outside [1," + std::to_string(n) + "]");
            x -= 1;
        }
        zero_based.push_back(std::move(s));
    }
    return SubsetSystem(n, std::move(zero_based));
}

json cubic_to_json(const PlaneCubic& c) {
    return json{{"cubic", c.coeffs}, {"line", c.line}};
}

PlaneCubic cubic_from_json(const json& j) {
    const std::vector<int> coeffs = int_list(need(j, "cubic"), "cubic");
    const std::vector<int> line = int_list(need(j, "line"), "line");
    if (coeffs.size() != 10) throw ParseError("cubic needs 10 coefficients");
    if (line.size() != 3) throw ParseError("line needs 3 coefficients");
    PlaneCubic out;
    std::copy(coeffs.begin(), coeffs.end(), out.coeffs.begin());
    std::copy(line.begin(), line.end(), out.line.begin());
    return out;
}

json outcome_to_json(const SolveOutcome& o) {
    if (o.feasible())
        return json{{"status", "feasible"}, {"generator", rows_to_json(*o.generator)}};
    json witness = json::array();
    for (int i : o.witness) witness.push_back(i + 1);  // 1-based rows
    return json{{"status", "infeasible"},
                {"witness", std::move(witness)},
                {"dim", o.deficient_dim}};
}

json report_to_json(const ConstraintReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        json rows = json::array();
        for (int i : v.index_set) rows.push_back(i + 1);
        violations.push_back(
            json{{"rows", std::move(rows)}, {"measured", v.measured}, {"bound", v.bound}});
    }
    return json{{"pass", r.passed()}, {"violations", std::move(violations)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace ghwforge
