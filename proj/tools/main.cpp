#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lrcpir/json_io.hpp"

using namespace lrcpir;

namespace {

struct RunConfig {
    bool json = false;
    std::uint64_t seed = 0;  // recorded only; every code path is deterministic
    std::string out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) std::cout << text;
    else write_file(cfg.out, text);
}

LoadedCode load_code_file(const std::string& path) {
    return load_code(json::parse(read_file(path)));
}

LrcCode load_lrc_file(const std::string& path) {
    LoadedCode lc = load_code_file(path);
    if (!lc.is_lrc()) throw ParseError("'" + path + "' is not an LRC descriptor");
    return std::move(*lc.lrc);
}

int cmd_construct(const RunConfig& cfg, std::size_t n_prime, std::size_t k, std::size_t r,
                  std::size_t delta, const std::string& field) {
    FieldPtr f = field.empty() ? default_binary_field(static_cast<unsigned>(n_prime + 1))
                               : parse_field_literal(field);
    LrcCode code = build_from_mds_parent(rs_code(f, n_prime, k), r, delta);
    emit(cfg, to_json(code).dump(2) + "\n");
    if (!cfg.out.empty())
        std::cerr << "wrote [" << code.profile.n << "," << code.profile.k << "] descriptor to "
                  << cfg.out << "\n";
    return 0;
}

int cmd_check(const RunConfig& cfg, const std::string& code_path) {
    LrcCode code = load_lrc_file(code_path);
    ComplianceReport rep = check_compliance(code);
    if (cfg.json) {
        emit(cfg, to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        auto line = [&](const char* name, bool v) { os << name << ": " << (v ? "ok" : "FAIL") << "\n"; };
        line("group sizes", rep.group_sizes_ok);
        line("local distances", rep.local_distance_ok);
        line("information rank", rep.information_rank_ok);
        line("local codes MDS", rep.locals_mds);
        line("parity-check layout", rep.layout_ok);
        line("stitched code MDS", rep.hmds_mds);
        if (rep.dmin) os << "d_min: " << *rep.dmin << " (bound " << rep.dmin_bound << ")\n";
        else os << "d_min: skipped (q^k too large), bound " << rep.dmin_bound << "\n";
        os << "compliant: " << (rep.ok() ? "yes" : "no") << "\n";
        emit(cfg, os.str());
    }
    return rep.ok() ? 0 : 1;
}

int cmd_ematrix(const RunConfig& cfg, const std::string& code_path, const std::string& trace_path) {
    LrcCode code = load_lrc_file(code_path);
    Construction built = construct_ematrix(code);
    emit(cfg, write_binary_matrix_text(built.em.e));
    if (!trace_path.empty()) write_file(trace_path, to_json(built.trace).dump(2) + "\n");
    return 0;
}

int cmd_validate(const RunConfig& cfg, const std::string& code_path,
                 const std::string& matrix_path) {
    LoadedCode lc = load_code_file(code_path);
    BinaryMatrix e = parse_binary_matrix_text(read_file(matrix_path));
    ValidationReport rep = validate_ematrix(e, lc.linear());
    if (cfg.json) {
        emit(cfg, to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "expected weight: " << rep.expected_weight << "\n";
        os << "weights: " << (rep.weights_ok ? "ok" : "FAIL") << "\n";
        for (std::size_t i = 0; i < rep.row_correctable.size(); ++i)
            if (!rep.row_correctable[i]) os << "row " << i + 1 << ": uncorrectable\n";
        os << "verdict: " << (rep.verdict ? "valid" : "invalid") << "\n";
        emit(cfg, os.str());
    }
    return rep.verdict ? 0 : 1;
}

int cmd_search(const RunConfig& cfg, const std::string& code_path, std::uint64_t budget) {
    LoadedCode lc = load_code_file(code_path);
    SearchResult res = search_ematrix(lc.linear(), budget);
    if (res.status == SearchResult::Status::found) {
        emit(cfg, write_binary_matrix_text(*res.witness));
        return 0;
    }
    std::cerr << (res.status == SearchResult::Status::not_found
                      ? "no witness exists for this code\n"
                      : "search budget exceeded before a conclusion\n");
    return 1;
}

int cmd_capacity(const RunConfig& cfg, std::size_t n, std::size_t k, std::uint64_t files) {
    Rational cf = pir_capacity_finite(n, k, files);
    Rational cinf = pir_capacity_asymptotic(n, k);
    if (cfg.json) {
        json j{{"n", n},
               {"k", k},
               {"files", files},
               {"c_f", rational_string(cf)},
               {"c_f_decimal", to_decimal_string(cf)},
               {"c_infinity", rational_string(cinf)},
               {"c_infinity_decimal", to_decimal_string(cinf)}};
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "C_" << files << " = " << rational_string(cf) << " = " << to_decimal_string(cf)
           << "\n";
        os << "C_inf = " << rational_string(cinf) << " = " << to_decimal_string(cinf) << "\n";
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_verdict(const RunConfig& cfg, const std::string& code_path, std::uint64_t budget,
                const std::string& witness_path) {
    LrcCode code = load_lrc_file(code_path);
    AchievabilityVerdict v = achievability_verdict(code, budget);
    if (cfg.json) {
        emit(cfg, to_json(v).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << to_string(v.status) << "\n";
        os << "C_inf = " << rational_string(v.c_infinity) << " = " << to_decimal_string(v.c_infinity)
           << "\n";
        if (v.via_search) os << "witness found by exhaustive search\n";
        if (!v.reason.empty()) os << "reason: " << v.reason << "\n";
        if (v.witness) os << "witness:\n" << write_binary_matrix_text(*v.witness);
        emit(cfg, os.str());
    }
    if (v.witness && !witness_path.empty())
        write_file(witness_path, write_binary_matrix_text(*v.witness));
    return v.status == AchievabilityVerdict::Status::achieving ? 0 : 1;
}

int cmd_dmin(const RunConfig& cfg, const std::string& code_path) {
    LoadedCode lc = load_code_file(code_path);
    std::size_t d = dmin_bruteforce(lc.linear());
    if (cfg.json)
        emit(cfg, json{{"n", lc.linear().n()}, {"k", lc.linear().k()}, {"dmin", d}}.dump(2) + "\n");
    else
        emit(cfg, "d_min = " + std::to_string(d) + "\n");
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"distance-optimal locality codes and their retrieval-capacity certificates"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_flag("--json", cfg.json, "machine-readable JSON output");
    app.add_option("--seed", cfg.seed, "seed recorded in reports (all paths are deterministic)");
    app.add_option("-o,--out", cfg.out, "write primary output to a file instead of stdout");

    std::size_t n_prime = 0, k = 0, r = 0, delta = 0, n = 0;
    std::uint64_t files = 1, budget = 5'000'000;
    std::string field, code_path, matrix_path, trace_path, witness_path;

    CLI::App* construct = app.add_subcommand("construct", "build an LRC from an RS parent");
    construct->add_option("--n-prime", n_prime, "parent code length")->required();
    construct->add_option("--k", k, "code dimension")->required();
    construct->add_option("--r", r, "locality")->required();
    construct->add_option("--delta", delta, "local distance")->required();
    construct->add_option("--field", field, "field literal, e.g. GF(2^4):poly=[1,0,0,1,1]");

    CLI::App* check = app.add_subcommand("check", "compliance-check an LRC descriptor");
    check->add_option("--code", code_path, "LRC descriptor JSON")->required();

    CLI::App* ematrix = app.add_subcommand("ematrix", "construct the witness matrix");
    ematrix->add_option("--code", code_path, "LRC descriptor JSON")->required();
    ematrix->add_option("--trace", trace_path, "write the swap trace JSON here");

    CLI::App* validate = app.add_subcommand("validate", "validate a witness matrix against a code");
    validate->add_option("--code", code_path, "code or LRC descriptor JSON")->required();
    validate->add_option("--matrix", matrix_path, "witness as rows of 0/1")->required();

    CLI::App* search = app.add_subcommand("search-e", "exhaustive witness search");
    search->add_option("--code", code_path, "code or LRC descriptor JSON")->required();
    search->add_option("--budget", budget, "node budget");

    CLI::App* capacity = app.add_subcommand("capacity", "retrieval capacity for [n,k] storage");
    capacity->add_option("--n", n, "code length")->required();
    capacity->add_option("--k", k, "code dimension")->required();
    capacity->add_option("--files", files, "number of stored files");

    CLI::App* verdict = app.add_subcommand("verdict", "capacity-achievability certificate");
    verdict->add_option("--code", code_path, "LRC descriptor JSON")->required();
    verdict->add_option("--budget", budget, "fallback search budget");
    verdict->add_option("--witness", witness_path, "write the witness matrix here");

    CLI::App* dmin = app.add_subcommand("dmin", "minimum distance by enumeration");
    dmin->add_option("--code", code_path, "code or LRC descriptor JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(cfg, n_prime, k, r, delta, field);
        if (check->parsed()) return cmd_check(cfg, code_path);
        if (ematrix->parsed()) return cmd_ematrix(cfg, code_path, trace_path);
        if (validate->parsed()) return cmd_validate(cfg, code_path, matrix_path);
        if (search->parsed()) return cmd_search(cfg, code_path, budget);
        if (capacity->parsed()) return cmd_capacity(cfg, n, k, files);
        if (verdict->parsed()) return cmd_verdict(cfg, code_path, budget, witness_path);
        if (dmin->parsed()) return cmd_dmin(cfg, code_path);
    } catch (const NonCompliantCode& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SwapExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
