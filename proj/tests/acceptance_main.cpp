// Acceptance suite: one line per criterion, exit 0 only when all pass.
// Everything here is exact; there are no tolerances to tune.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrcpir/capacity.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/replay.hpp"
#include "support/test_fixtures.hpp"

using namespace lrcpir;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open fixture '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const std::string& name) {
    return std::string(LRCPIR_FIXTURES_DIR) + "/pyramid_7_4/" + name;
}

struct Harness {
    int failures = 0;

    void run(int number, const std::string& title, const std::function<void()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (error.empty() ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
                  << title << " (" << std::fixed << std::setprecision(2) << secs << " s)";
        if (!error.empty()) {
            std::cout << "\n       " << error;
            ++failures;
        }
        std::cout << "\n";
    }
};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

FieldPtr gf16() { return Field::make(2, 4, {1, 0, 0, 1, 1}); }
FieldPtr gf32() { return Field::make(2, 5, {1, 0, 0, 1, 0, 1}); }

// --- criterion 1: fixture code reproduction ---------------------------------

void criterion1() {
    Matrix hc = parse_matrix_text(slurp(fixture("H.txt")));
    LinearCode code = from_parity_check(hc);
    require(code.n() == 7 && code.k() == 4, "fixture parity check is not [7,4]");

    for (IndexSet s : {IndexSet{1, 2, 3}, IndexSet{4, 5, 6}}) {
        LinearCode local = puncture(code, s);
        require(local.n() == 3 && local.k() == 2, "local code is not [3,2]");
        require(is_mds(local), "local code is not MDS");
        require(dmin_bruteforce(local) == 2, "local distance is not 2");
    }
    require(dmin_bruteforce(code) == 3, "overall minimum distance is not 3");
    require(locality_profile(7, 4, 2, 2).dmin_bound() == 3, "optimality bound is not 3");

    // the defining polynomial of GF(8) is a free choice; record which of the
    // two candidates makes the fixture's stitched parity check MDS
    std::string witness_polys;
    for (auto poly : {std::vector<unsigned>{1, 0, 1, 1}, std::vector<unsigned>{1, 1, 0, 1}}) {
        FieldPtr f = Field::make(2, 3, poly);
        std::istringstream raw(slurp(fixture("H_mds.txt")));
        std::string header, line, body;
        std::getline(raw, header);
        body = field_literal(*f) + "\n";
        while (std::getline(raw, line)) body += line + "\n";
        if (is_mds(from_parity_check(parse_matrix_text(body)))) {
            if (!witness_polys.empty()) witness_polys += " and ";
            witness_polys += field_literal(*f);
        }
    }
    require(!witness_polys.empty(), "no candidate polynomial makes the stitched code MDS");
    std::cout << "       stitched code is MDS under " << witness_polys << "\n";
}

// --- criterion 2: fixture witness validation ---------------------------------

void criterion2() {
    BinaryMatrix e = parse_binary_matrix_text(slurp(fixture("E.txt")));
    LinearCode code = from_parity_check(parse_matrix_text(slurp(fixture("H.txt"))));
    ValidationReport rep = validate_ematrix(e, code);
    for (std::size_t w : rep.row_weights) require(w == 3, "row weight != 3");
    for (std::size_t w : rep.col_weights) require(w == 3, "column weight != 3");
    for (bool ok : rep.row_correctable) require(ok, "a fixture row is uncorrectable");
    require(rep.verdict, "fixture witness rejected");
}

// --- criterion 3: constructive witness across the sweep ----------------------

void criterion3() {
    std::size_t count = 0;
    for (const FieldPtr& f : {gf16(), gf32()}) {
        for (const LrcCode& c : corpus::build_all(f, 15)) {
            Construction built = construct_ematrix(c);
            ValidationReport rep = validate_ematrix(built.em.e, c.code);
            if (!rep.verdict) {
                std::ostringstream os;
                os << "construction rejected for n=" << c.profile.n << " k=" << c.profile.k
                   << " r=" << c.profile.r << " delta=" << c.profile.delta << " over q="
                   << f->size();
                throw std::runtime_error(os.str());
            }
            ++count;
        }
    }
    require(count >= 80, "parameter sweep unexpectedly small");
    std::cout << "       " << count << " codes constructed and validated\n";
}

// --- criterion 4: oracle agreement on small codes -----------------------------

void criterion4() {
    std::size_t codes = 0, patterns = 0;
    for (const LrcCode& c : corpus::build_all(gf16(), 10)) {
        const std::size_t n = c.profile.n, nk = n - c.profile.k;

        SearchResult sr = search_ematrix(c.code, 50'000'000);
        bool constructed = true;
        try {
            construct_ematrix(c);
        } catch (const Error&) {
            constructed = false;
        }
        require(constructed == (sr.status == SearchResult::Status::found),
                "search and construction disagree on witness existence");
        require(sr.status != SearchResult::Status::budget_exceeded, "search budget exceeded");

        auto masks = oracles::nonzero_support_masks(c.code);
        for (std::uint32_t pat = 0; pat < (std::uint32_t(1) << n); ++pat) {
            if (static_cast<std::size_t>(__builtin_popcount(pat)) > nk) continue;
            ErasurePattern e(n);
            for (std::size_t j = 0; j < n; ++j)
                if (pat & (std::uint32_t(1) << j)) e.set_erased(j + 1, true);
            bool by_rank = is_correctable(c.code, e);
            bool by_completion = oracles::correctable_by_masks(masks, pat);
            if (by_rank != by_completion) {
                std::ostringstream os;
                os << "criteria disagree on pattern " << pat << " for n=" << n;
                throw std::runtime_error(os.str());
            }
            ++patterns;
        }
        ++codes;
    }
    std::cout << "       " << codes << " codes, " << patterns << " patterns cross-checked\n";
}

// --- criterion 5: swap bookkeeping --------------------------------------------

void criterion5() {
    std::size_t audited = 0;
    for (const LrcCode& c : corpus::build_all(gf16(), 15)) {
        if (c.profile.r_bar == 0) continue;
        Construction built = construct_ematrix(c);
        if (auto err = replay::audit_trace(c, built.trace)) {
            std::ostringstream os;
            os << *err << " (n=" << c.profile.n << " k=" << c.profile.k << ")";
            throw std::runtime_error(os.str());
        }
        ++audited;
    }
    require(audited > 0, "no strip-bearing instances in the sweep");
    std::cout << "       " << audited << " swap schedules audited\n";
}

// --- criterion 6: capacity formulas --------------------------------------------

void criterion6() {
    std::size_t cases = 0;
    for (std::size_t n = 2; n <= 11 && cases < 50; ++n)
        for (std::size_t k = 1; k < n && cases < 50; ++k) {
            require(pir_capacity_finite(n, k, 1) == Rational(1), "C_1 != 1");
            Rational cinf = pir_capacity_asymptotic(n, k);
            Rational prev = pir_capacity_finite(n, k, 1);
            Rational prev_gap = prev - cinf;
            for (std::uint64_t f = 2; f <= 64; ++f) {
                Rational cf = pir_capacity_finite(n, k, f);
                require(cf < prev, "C_f is not strictly decreasing");
                Rational gap = cf - cinf;
                require(gap > 0, "C_f does not dominate the asymptotic value");
                require(gap < prev_gap, "C_f - C_inf is not shrinking");
                prev = cf;
                prev_gap = gap;
            }
            ++cases;
        }
    require(cases == 50, "grid smaller than 50 cases");
    require(pir_capacity_asymptotic(7, 4) == Rational(3, 7), "C_inf(7,4) != 3/7");
}

// --- criterion 7: simultaneous local correction --------------------------------

void criterion7() {
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
    for (const FieldPtr& f : {gf16(), gf32()}) {
        for (const LrcCode& c : corpus::build_all(f, 15)) {
            for (const auto& nu : corpus::feasible_surpluses(c.profile)) {
                Lemma3Result res;
                try {
                    res = lemma3_check(c, nu, 1'000'000);
                } catch (const TooLarge&) {
                    continue;  // criterion scope: enumerable pattern spaces only
                }
                checked += res.patterns_checked;
                if (res.status != Lemma3Status::fails) continue;

                // certify the failure: exhibit the codeword sitting on the
                // pattern and re-verify it by direct multiplication
                std::ostringstream os;
                os << "n=" << c.profile.n << " k=" << c.profile.k << " r=" << c.profile.r
                   << " delta=" << c.profile.delta << " q=" << f->size() << " nu=(";
                for (std::size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
                os << ") erased {";
                IndexSet supp = res.counterexample->support();
                for (std::size_t i = 0; i < supp.size(); ++i) os << (i ? "," : "") << supp[i];
                os << "}";
                auto word = oracles::codeword_inside(c.code, *res.counterexample);
                if (word) {
                    os << ", codeword (";
                    for (std::size_t j = 0; j < word->size(); ++j)
                        os << (j ? " " : "")
                           << to_string(FieldElement(c.code.field().get(), (*word)[j]));
                    os << ") makes it ambiguous";
                } else {
                    os << ", but no certifying codeword found (checker fault)";
                }
                counterexamples.push_back(os.str());
            }
        }
    }
    if (!counterexamples.empty()) {
        for (const std::string& s : counterexamples) std::cout << "       counterexample: " << s << "\n";
        std::ostringstream os;
        os << counterexamples.size()
           << " surplus vector(s) admit uncorrectable patterns on compliant codes";
        throw std::runtime_error(os.str());
    }
    std::cout << "       " << checked << " simultaneous-erasure patterns verified\n";
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "fixture code structure and distances", criterion1);
    h.run(2, "fixture witness matrix validates", criterion2);
    h.run(3, "constructive witness for the full parameter sweep", criterion3);
    h.run(4, "search and rank criteria agree with the completion oracle", criterion4);
    h.run(5, "swap bookkeeping audits cleanly", criterion5);
    h.run(6, "capacity formulas are exact and monotone", criterion6);
    h.run(7, "simultaneous local-erasure correction holds", criterion7);

    if (h.failures) {
        std::cout << h.failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
