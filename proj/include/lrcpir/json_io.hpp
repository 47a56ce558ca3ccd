#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "lrcpir/capacity.hpp"

namespace lrcpir {

using nlohmann::json;

// --- matrices ----------------------------------------------------------------

inline json matrix_rows_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_rows_from_json(const FieldPtr& f, const json& rows) {
    if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty())
        throw ParseError("matrix must be a nonempty array of rows");
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(i, j, parse_element(f, rows[i][j].get<std::string>()));
    }
    return m;
}

inline json to_json(const Matrix& m) {
    return json{{"field", field_literal(*m.field())},
                {"n_rows", m.rows()},
                {"n_cols", m.cols()},
                {"rows", matrix_rows_to_json(m)}};
}

inline Matrix matrix_from_json(const json& j) {
    FieldPtr f = parse_field_literal(j.at("field").get<std::string>());
    Matrix m = matrix_rows_from_json(f, j.at("rows"));
    if (j.contains("n_rows") && j["n_rows"].get<std::size_t>() != m.rows())
        throw ParseError("row count mismatch");
    if (j.contains("n_cols") && j["n_cols"].get<std::size_t>() != m.cols())
        throw ParseError("column count mismatch");
    return m;
}

// --- code descriptors ----------------------------------------------------------

/// {field, n, k, H, optional G}
inline json to_json(const LinearCode& c) {
    json j{{"field", field_literal(*c.field())},
           {"n", c.n()},
           {"k", c.k()},
           {"G", matrix_rows_to_json(c.generator())}};
    if (c.has_parity_check()) j["H"] = matrix_rows_to_json(c.parity_check());
    return j;
}

inline LinearCode code_from_json(const json& j) {
    FieldPtr f = parse_field_literal(j.at("field").get<std::string>());
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t k = j.at("k").get<std::size_t>();
    if (!j.contains("H")) {
        if (k != n) throw ParseError("descriptor without H must have k == n");
        Matrix g = matrix_rows_from_json(f, j.at("G"));
        return from_generator(g);
    }
    Matrix h = matrix_rows_from_json(f, j.at("H"));
    if (h.cols() != n || h.rows() != n - k) throw ParseError("H dimensions disagree with n, k");
    if (j.contains("G")) {
        Matrix g = matrix_rows_from_json(f, j.at("G"));
        if (g.rows() != k || g.cols() != n) throw ParseError("G dimensions disagree with n, k");
        return LinearCode(g, h);
    }
    return from_parity_check(h);
}

/// {field, n, k, r, delta, P_blocks, M_blocks}
inline json to_json(const LrcCode& c) {
    json pb = json::array(), mb = json::array();
    for (const Matrix& b : c.p_blocks) pb.push_back(matrix_rows_to_json(b));
    for (const Matrix& b : c.m_blocks) mb.push_back(matrix_rows_to_json(b));
    return json{{"field", field_literal(*c.code.field())},
                {"n", c.profile.n},
                {"k", c.profile.k},
                {"r", c.profile.r},
                {"delta", c.profile.delta},
                {"P_blocks", pb},
                {"M_blocks", mb}};
}

inline LrcCode lrc_from_json(const json& j) {
    FieldPtr f = parse_field_literal(j.at("field").get<std::string>());
    std::vector<Matrix> pb, mb;
    for (const json& b : j.at("P_blocks")) pb.push_back(matrix_rows_from_json(f, b));
    for (const json& b : j.at("M_blocks")) mb.push_back(matrix_rows_from_json(f, b));
    return make_lrc(f, j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>(),
                    j.at("r").get<std::size_t>(), j.at("delta").get<std::size_t>(),
                    std::move(pb), std::move(mb));
}

/// A code file is either an LRC descriptor (carries P_blocks) or a plain
/// code descriptor.
struct LoadedCode {
    std::optional<LrcCode> lrc;
    std::optional<LinearCode> plain;

    const LinearCode& linear() const { return lrc ? lrc->code : *plain; }
    bool is_lrc() const { return lrc.has_value(); }
};

inline LoadedCode load_code(const json& j) {
    LoadedCode out;
    if (j.contains("P_blocks")) out.lrc = lrc_from_json(j);
    else out.plain = code_from_json(j);
    return out;
}

// --- reports -------------------------------------------------------------------

inline json to_json(const ComplianceReport& r) {
    json j{{"group_sizes_ok", r.group_sizes_ok},
           {"local_distance_ok", r.local_distance_ok},
           {"information_rank_ok", r.information_rank_ok},
           {"locals_mds", r.locals_mds},
           {"layout_ok", r.layout_ok},
           {"hmds_mds", r.hmds_mds},
           {"dmin_bound", r.dmin_bound},
           {"ok", r.ok()}};
    if (r.dmin) j["dmin"] = *r.dmin;
    if (r.distance_optimal) j["distance_optimal"] = *r.distance_optimal;
    return j;
}

inline ComplianceReport compliance_from_json(const json& j) {
    ComplianceReport r;
    r.group_sizes_ok = j.at("group_sizes_ok").get<bool>();
    r.local_distance_ok = j.at("local_distance_ok").get<bool>();
    r.information_rank_ok = j.at("information_rank_ok").get<bool>();
    r.locals_mds = j.at("locals_mds").get<bool>();
    r.layout_ok = j.at("layout_ok").get<bool>();
    r.hmds_mds = j.at("hmds_mds").get<bool>();
    r.dmin_bound = j.at("dmin_bound").get<std::size_t>();
    if (j.contains("dmin")) r.dmin = j["dmin"].get<std::size_t>();
    if (j.contains("distance_optimal")) r.distance_optimal = j["distance_optimal"].get<bool>();
    return r;
}

inline json to_json(const ValidationReport& r) {
    return json{{"n", r.n},
                {"expected_weight", r.expected_weight},
                {"row_weights", r.row_weights},
                {"col_weights", r.col_weights},
                {"row_correctable", r.row_correctable},
                {"weights_ok", r.weights_ok},
                {"rows_ok", r.rows_ok},
                {"verdict", r.verdict}};
}

inline ValidationReport validation_from_json(const json& j) {
    ValidationReport r;
    r.n = j.at("n").get<std::size_t>();
    r.expected_weight = j.at("expected_weight").get<std::size_t>();
    r.row_weights = j.at("row_weights").get<std::vector<std::size_t>>();
    r.col_weights = j.at("col_weights").get<std::vector<std::size_t>>();
    r.row_correctable = j.at("row_correctable").get<std::vector<bool>>();
    r.weights_ok = j.at("weights_ok").get<bool>();
    r.rows_ok = j.at("rows_ok").get<bool>();
    r.verdict = j.at("verdict").get<bool>();
    return r;
}

inline json to_json(const SwapTrace& t) {
    json seeds = json::array();
    for (const auto& sup : t.seed_supports) seeds.push_back(sup);
    json its = json::array();
    for (const IterationSwaps& it : t.iterations) {
        json parts = json::array();
        for (const PartitionSwaps& ps : it.partitions) {
            json swaps = json::array();
            for (const SwapRecord& s : ps.swaps)
                swaps.push_back(json{{"row", s.row}, {"from_col", s.from_col}, {"to_col", s.to_col}});
            parts.push_back(json{{"partition", ps.partition},
                                 {"block", ps.block},
                                 {"s", ps.s},
                                 {"rows", ps.rows},
                                 {"swaps", std::move(swaps)}});
        }
        its.push_back(json{{"iteration", it.iteration}, {"partitions", std::move(parts)}});
    }
    return json{{"seed_supports", std::move(seeds)}, {"iterations", std::move(its)}};
}

inline SwapTrace trace_from_json(const json& j) {
    SwapTrace t;
    if (j.contains("seed_supports"))
        t.seed_supports = j["seed_supports"].get<std::vector<std::vector<std::size_t>>>();
    for (const json& ij : j.at("iterations")) {
        IterationSwaps it;
        it.iteration = ij.at("iteration").get<std::size_t>();
        for (const json& pj : ij.at("partitions")) {
            PartitionSwaps ps;
            ps.partition = pj.at("partition").get<std::size_t>();
            ps.block = pj.at("block").get<std::size_t>();
            ps.s = pj.at("s").get<std::vector<int>>();
            ps.rows = pj.at("rows").get<std::vector<std::size_t>>();
            for (const json& sj : pj.at("swaps"))
                ps.swaps.push_back({sj.at("row").get<std::size_t>(),
                                    sj.at("from_col").get<std::size_t>(),
                                    sj.at("to_col").get<std::size_t>()});
            it.partitions.push_back(std::move(ps));
        }
        t.iterations.push_back(std::move(it));
    }
    return t;
}

inline std::string rational_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline json to_json(const AchievabilityVerdict& v) {
    json j{{"status", to_string(v.status)},
           {"n", v.n},
           {"k", v.k},
           {"c_infinity", rational_string(v.c_infinity)},
           {"via_search", v.via_search}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.witness) {
        json rows = json::array();
        for (std::size_t i = 0; i < v.witness->rows(); ++i) {
            std::string bits;
            for (std::size_t c = 0; c < v.witness->cols(); ++c)
                bits += v.witness->at(i, c) ? '1' : '0';
            rows.push_back(bits);
        }
        j["witness"] = std::move(rows);
    }
    return j;
}

inline AchievabilityVerdict verdict_from_json(const json& j) {
    AchievabilityVerdict v;
    std::string st = j.at("status").get<std::string>();
    if (st == "ACHIEVING") v.status = AchievabilityVerdict::Status::achieving;
    else if (st == "NOT_WITNESSED") v.status = AchievabilityVerdict::Status::not_witnessed;
    else if (st == "UNKNOWN") v.status = AchievabilityVerdict::Status::unknown;
    else throw ParseError("unknown verdict status '" + st + "'");
    v.n = j.at("n").get<std::size_t>();
    v.k = j.at("k").get<std::size_t>();
    v.c_infinity = rational_from_string(j.at("c_infinity").get<std::string>());
    v.via_search = j.at("via_search").get<bool>();
    if (j.contains("reason")) v.reason = j["reason"].get<std::string>();
    if (j.contains("witness")) {
        const json& rows = j["witness"];
        BinaryMatrix e(rows.size(), rows[0].get<std::string>().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string bits = rows[i].get<std::string>();
            for (std::size_t c = 0; c < bits.size(); ++c) e.set(i, c, bits[c] == '1');
        }
        v.witness = std::move(e);
    }
    return v;
}

}  // namespace lrcpir
