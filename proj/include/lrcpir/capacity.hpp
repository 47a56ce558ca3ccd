#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "lrcpir/ematrix.hpp"

namespace lrcpir {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Retrieval rate ceiling for an [n,k]-coded store of f files:
/// (1 - k/n) / (1 - (k/n)^f), evaluated exactly.
inline Rational pir_capacity_finite(std::size_t n, std::size_t k, std::uint64_t f) {
    if (k == 0 || k >= n) throw ParameterMismatch("need 1 <= k < n");
    if (f == 0) throw ParameterMismatch("need at least one file");
    BigInt nf = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(f));
    BigInt kf = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(f));
    BigInt nf1 = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(f - 1));
    return Rational(BigInt(n - k) * nf1, nf - kf);
}

/// Limit of the finite capacity as the file count grows: 1 - k/n.
inline Rational pir_capacity_asymptotic(std::size_t n, std::size_t k) {
    if (k == 0 || k >= n) throw ParameterMismatch("need 1 <= k < n");
    return Rational(n - k, n);
}

/// Fixed-point decimal rendering of a nonnegative rational, for display.
inline std::string to_decimal_string(const Rational& r, unsigned digits = 12) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    std::string out = sign + BigInt(num / den).str();
    BigInt rem = num % den;
    if (rem == 0) return out;
    out += ".";
    for (unsigned i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        out += BigInt(rem / den).str();
        rem %= den;
    }
    return out;
}

/// Outcome of the constructive capacity certificate.
///   achieving:     a witness matrix exists (built or found by search)
///   not_witnessed: the exhaustive search ruled every witness out; the
///                  sufficient condition fails, nothing more is implied
///   unknown:       construction failed and the search ran out of budget
struct AchievabilityVerdict {
    enum class Status { achieving, unknown, not_witnessed };
    Status status = Status::unknown;
    std::optional<BinaryMatrix> witness;
    bool via_search = false;
    std::string reason;
    std::size_t n = 0, k = 0;
    Rational c_infinity;
};

inline const char* to_string(AchievabilityVerdict::Status s) {
    switch (s) {
        case AchievabilityVerdict::Status::achieving: return "ACHIEVING";
        case AchievabilityVerdict::Status::not_witnessed: return "NOT_WITNESSED";
        default: return "UNKNOWN";
    }
}

/// Runs the construction and falls back to the brute-force search when it
/// fails. A missing witness is never reported as a disproof.
inline AchievabilityVerdict achievability_verdict(const LrcCode& code,
                                                  std::uint64_t search_budget = 5'000'000) {
    AchievabilityVerdict v;
    v.n = code.profile.n;
    v.k = code.profile.k;
    v.c_infinity = pir_capacity_asymptotic(v.n, v.k);
    try {
        Construction built = construct_ematrix(code);
        v.status = AchievabilityVerdict::Status::achieving;
        v.witness = std::move(built.em.e);
        return v;
    } catch (const NonCompliantCode& e) {
        v.reason = std::string("NonCompliantCode: ") + e.what();
    } catch (const SwapExhausted& e) {
        v.reason = std::string("SwapExhausted: ") + e.what();
    } catch (const InfeasibleRho& e) {
        v.reason = std::string("InfeasibleRho: ") + e.what();
    }
    SearchResult sr = search_ematrix(code.code, search_budget);
    if (sr.status == SearchResult::Status::found) {
        v.status = AchievabilityVerdict::Status::achieving;
        v.witness = std::move(sr.witness);
        v.via_search = true;
        v.reason.clear();
    } else if (sr.status == SearchResult::Status::not_found) {
        v.status = AchievabilityVerdict::Status::not_witnessed;
    } else {
        v.status = AchievabilityVerdict::Status::unknown;
        v.reason += "; search budget exceeded";
    }
    return v;
}

}  // namespace lrcpir
