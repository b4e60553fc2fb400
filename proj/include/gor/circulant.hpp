#ifndef GOR_CIRCULANT_HPP
#define GOR_CIRCULANT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gor/gorenstein.hpp"

namespace gor {

// (n,a,b) -> (d, (n/d, a/d, b/d)) for d = gcd(n,a,b): the graph is d
// disjoint copies of the reduced circulant.
struct GcdDecomposition {
    long copies = 1;
    std::array<long, 3> reduced{};
};

GcdDecomposition gcd_decompose(long n, long a, long b);

// C_n(a,b) ~ C_n(1,d) when a (or b) is a unit mod n; verifies the
// explicit isomorphism by edge comparison before returning d.
std::optional<long> normalize_unit(long n, long a, long b);

// Closed-form rule for the band circulant C_n(1,...,d).
bool classify_band(long n, long d);

// Closed-form rule for the cubic circulant C_m(a, m/2), m even.
bool classify_cubic(long m, long a);

enum class QuarticVerdict { Gorenstein, W2Only, Neither };

// Membership of (n,a,b) in the closed-form degree-4 families.
bool quartic_gorenstein_family(long n, long a, long b);
bool quartic_w2_family(long n, long a, long b);
QuarticVerdict classify_quartic(long n, long a, long b);

std::string to_string(QuarticVerdict v);

enum class SurveyFamily { Quartic, Cubic, Band };

struct SurveyRow {
    long n = 0, a = 0, b = 0;
    std::string prediction;
    bool skipped = false;
    Verdict verdict;   // brute-force result (empty when skipped)
    bool match = false;
    double millis = 0;
};

struct SurveyOptions {
    long max_n = 14;
    int jobs = 1;
    CharSpec field = CharSpec::all();
};

// Exhaustive cross-validation of a closed-form family against the
// brute-force engine.  Rows are emitted in canonical (n,a,b) order;
// instances over the vertex cap are marked skipped.
std::vector<SurveyRow> survey(SurveyFamily family, const SurveyOptions& opts);

bool survey_all_match(const std::vector<SurveyRow>& rows);

std::string survey_row_csv_header();
std::string survey_row_csv(const SurveyRow& row);

}  // namespace gor

#endif
