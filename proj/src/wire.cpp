#include "camspec/wire.hpp"

#include <fstream>
#include <sstream>

#include "camspec/error.hpp"

namespace camspec {

namespace {

using nlohmann::json;

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    return j;
}

const json& expect_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected an array");
    return j;
}

const json& field(const json& j, const std::string& key, const std::string& path) {
    expect_object(j, path);
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing field \"" + key + "\"");
    return *it;
}

void check_schema(const json& doc, const std::string& schema_name, const std::string& path) {
    const json& tag = field(doc, "schema", path);
    if (!tag.is_string()) throw ParseError(path + ".schema: expected a string");
    const std::string expected = schema_name + "/1";
    if (tag.get<std::string>() != expected)
        throw ParseError(path + ".schema: expected \"" + expected + "\", found \"" +
                         tag.get<std::string>() + "\"");
}

} // namespace

json scalar_to_wire(const GaussianRational& q) {
    return json::array({q.re().get_num().get_str(), q.re().get_den().get_str(),
                        q.im().get_num().get_str(), q.im().get_den().get_str()});
}

GaussianRational scalar_from_wire(const json& j, const std::string& path) {
    expect_array(j, path);
    if (j.size() != 4) throw ParseError(path + ": a scalar is a 4-array of integer strings");
    std::string parts[4];
    for (int k = 0; k < 4; ++k) {
        if (!j[k].is_string())
            throw ParseError(path + "[" + std::to_string(k) + "]: expected an integer string");
        parts[k] = j[k].get<std::string>();
    }
    try {
        return GaussianRational::from_strings(parts[0], parts[1], parts[2], parts[3]);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json vector_to_wire(const std::vector<GaussianRational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(scalar_to_wire(q));
    return out;
}

std::vector<GaussianRational> vector_from_wire(const json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<GaussianRational> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(scalar_from_wire(j[k], path + "[" + std::to_string(k) + "]"));
    return out;
}

json matrix_to_wire(const Matrix& m) {
    json out = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_wire(m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_wire(const json& j, const std::string& path) {
    expect_array(j, path);
    if (j.empty()) throw ParseError(path + ": a matrix needs at least one row");
    std::vector<std::vector<GaussianRational>> rows;
    for (std::size_t r = 0; r < j.size(); ++r)
        rows.push_back(vector_from_wire(j[r], path + "[" + std::to_string(r) + "]"));
    for (const auto& row : rows)
        if (row.size() != rows.front().size())
            throw ParseError(path + ": ragged rows");
    return Matrix::from_rows(rows);
}

long long int_from_wire(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
    return j.get<long long>();
}

json higgs_to_wire(const HiggsPoint& hp) {
    json doc;
    doc["schema"] = "higgs-point/1";
    doc["p"] = hp.p;
    doc["beta"] = matrix_to_wire(hp.beta);
    doc["gamma"] = matrix_to_wire(hp.gamma);
    return doc;
}

HiggsPoint higgs_from_wire(const json& doc) {
    check_schema(doc, "higgs-point", "$");
    const long long p = int_from_wire(field(doc, "p", "$"), "$.p");
    if (p < 1 || p > 64) throw ParseError("$.p: rank out of supported range");
    const Matrix beta = matrix_from_wire(field(doc, "beta", "$"), "$.beta");
    const Matrix gamma = matrix_from_wire(field(doc, "gamma", "$"), "$.gamma");
    const int pi = static_cast<int>(p);
    if (beta.rows() != pi + 1 || beta.cols() != pi)
        throw ParseError("$.beta: expected shape " + std::to_string(pi + 1) + "x" + std::to_string(pi));
    if (gamma.rows() != pi || gamma.cols() != pi + 1)
        throw ParseError("$.gamma: expected shape " + std::to_string(pi) + "x" + std::to_string(pi + 1));
    return make_higgs(pi, beta, gamma);
}

json fiber_to_wire(const FiberDocument& doc, const std::string& schema_name) {
    json out;
    out["schema"] = schema_name + "/1";
    out["p"] = doc.base.p;
    out["omega"] = vector_to_wire(doc.base.omega);
    out["roots"] = vector_to_wire(doc.roots);
    return out;
}

FiberDocument fiber_from_wire(const json& doc, const std::string& schema_name) {
    check_schema(doc, schema_name, "$");
    FiberDocument out;
    const long long p = int_from_wire(field(doc, "p", "$"), "$.p");
    if (p < 1 || p > 64) throw ParseError("$.p: rank out of supported range");
    out.base.p = static_cast<int>(p);
    out.base.omega = vector_from_wire(field(doc, "omega", "$"), "$.omega");
    if (static_cast<long long>(out.base.omega.size()) != p)
        throw ParseError("$.omega: expected exactly p scalars");
    out.roots = vector_from_wire(field(doc, "roots", "$"), "$.roots");
    if (static_cast<long long>(out.roots.size()) != 2 * p + 1)
        throw ParseError("$.roots: expected exactly 2p+1 scalars");
    return out;
}

json ledger_to_wire(const DegreeLedger& ledger) {
    json doc;
    doc["schema"] = "degree-ledger/1";
    json entries = json::object();
    for (const auto& kv : ledger.entries) entries[kv.first] = kv.second;
    doc["entries"] = entries;
    return doc;
}

DegreeLedger ledger_from_wire(const json& doc) {
    check_schema(doc, "degree-ledger", "$");
    const json& entries = field(doc, "entries", "$");
    expect_object(entries, "$.entries");
    DegreeLedger ledger;
    for (auto it = entries.begin(); it != entries.end(); ++it)
        ledger.entries[it.key()] = int_from_wire(it.value(), "$.entries." + it.key());
    return ledger;
}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

json load_json_file(const std::string& file_name) {
    std::ifstream in(file_name, std::ios::binary);
    if (!in) throw ParseError(file_name + ": cannot open input file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), file_name);
}

} // namespace camspec
