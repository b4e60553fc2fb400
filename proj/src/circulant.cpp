#include "gor/circulant.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gor {

GcdDecomposition gcd_decompose(long n, long a, long b) {
    long d = std::gcd(std::gcd(n, a), b);
    return {d, {n / d, a / d, b / d}};
}

namespace {

long mod_inverse(long a, long n) {
    long t = 0, new_t = 1, r = n, new_r = a % n;
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("not a unit");
    return ((t % n) + n) % n;
}

}  // namespace

std::optional<long> normalize_unit(long n, long a, long b) {
    if (!(1 <= a && a < b && 2 * b < n)) throw std::invalid_argument("need 1 <= a < b < n/2");
    long inv, other;
    if (std::gcd(n, a) == 1) {
        inv = mod_inverse(a, n);
        other = b;
    } else if (std::gcd(n, b) == 1) {
        inv = mod_inverse(b, n);
        other = a;
    } else {
        return std::nullopt;
    }
    long d0 = (inv % n) * (other % n) % n;
    long d = std::min(d0, n - d0);

    // verify the rotation-by-`unit` map i -> i*unit is an isomorphism
    long unit = (std::gcd(n, a) == 1) ? a : b;
    Graph from = circulant({static_cast<int>(n), {1, static_cast<int>(d)}});
    Graph to = circulant({static_cast<int>(n), {static_cast<int>(a), static_cast<int>(b)}});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (from.adjacent(u, v) !=
                to.adjacent(static_cast<int>((u * unit) % n),
                            static_cast<int>((v * unit) % n)))
                throw std::logic_error("normalize_unit: map is not an isomorphism");
    return d;
}

bool classify_band(long n, long d) {
    if (n < 3 || d < 1 || 2 * d > n) throw std::invalid_argument("need 3 <= n, 1 <= d <= n/2");
    return n == 2 * d + 3;
}

bool classify_cubic(long m, long a) {
    if (m % 2 != 0 || a < 1 || 2 * a >= m)
        throw std::invalid_argument("need m even, 1 <= a < m/2");
    return m / std::gcd(a, m) == 3;
}

namespace {

constexpr std::array<std::array<long, 3>, 6> kGorensteinPatterns{{
    {7, 1, 2}, {7, 1, 3}, {7, 2, 3}, {13, 1, 5}, {13, 2, 3}, {13, 4, 6}}};

constexpr std::array<std::array<long, 3>, 3> kW2ExtraPatterns{{
    {5, 1, 2}, {8, 1, 2}, {8, 2, 3}}};

template <std::size_t N>
bool matches_any(const std::array<std::array<long, 3>, N>& patterns, long n,
                 long a, long b) {
    for (const auto& p : patterns) {
        if (n % p[0] != 0) continue;
        long d = n / p[0];
        if (a == p[1] * d && b == p[2] * d) return true;
    }
    return false;
}

}  // namespace

bool quartic_gorenstein_family(long n, long a, long b) {
    return matches_any(kGorensteinPatterns, n, a, b);
}

bool quartic_w2_family(long n, long a, long b) {
    return quartic_gorenstein_family(n, a, b) || matches_any(kW2ExtraPatterns, n, a, b);
}

QuarticVerdict classify_quartic(long n, long a, long b) {
    if (!(1 <= a && a < b && 2 * b < n)) throw std::invalid_argument("need 1 <= a < b < n/2");
    if (quartic_gorenstein_family(n, a, b)) return QuarticVerdict::Gorenstein;
    if (quartic_w2_family(n, a, b)) return QuarticVerdict::W2Only;
    return QuarticVerdict::Neither;
}

std::string to_string(QuarticVerdict v) {
    switch (v) {
        case QuarticVerdict::Gorenstein: return "gorenstein";
        case QuarticVerdict::W2Only: return "w2-only";
        default: return "neither";
    }
}

namespace {

struct Instance {
    long n, a, b;
    CirculantSpec spec;
    std::string prediction;
    bool want_w2;  // compare the W2 side as well
};

std::vector<Instance> build_instances(SurveyFamily family, long max_n) {
    std::vector<Instance> out;
    switch (family) {
        case SurveyFamily::Quartic:
            for (long n = 5; n <= max_n; ++n)
                for (long a = 1; 2 * a < n; ++a)
                    for (long b = a + 1; 2 * b < n; ++b)
                        out.push_back({n, a, b,
                                       {static_cast<int>(n),
                                        {static_cast<int>(a), static_cast<int>(b)}},
                                       to_string(classify_quartic(n, a, b)),
                                       true});
            break;
        case SurveyFamily::Cubic:
            for (long m = 4; m <= max_n; m += 2)
                for (long a = 1; 2 * a < m; ++a)
                    out.push_back({m, a, m / 2,
                                   {static_cast<int>(m),
                                    {static_cast<int>(a), static_cast<int>(m / 2)}},
                                   classify_cubic(m, a) ? "gorenstein" : "neither",
                                   false});
            break;
        case SurveyFamily::Band:
            for (long n = 3; n <= max_n; ++n)
                for (long d = 1; 2 * d <= n; ++d) {
                    std::vector<int> conns(d);
                    std::iota(conns.begin(), conns.end(), 1);
                    out.push_back({n, 1, d, {static_cast<int>(n), std::move(conns)},
                                   classify_band(n, d) ? "gorenstein" : "neither",
                                   false});
                }
            break;
    }
    return out;
}

// Whole-graph W2 is the conjunction over components.
bool whole_w2(const Verdict& v) {
    for (const auto& c : v.components)
        if (!c.w2 || !c.w2->verdict) return false;
    return !v.components.empty();
}

SurveyRow run_instance(const Instance& inst, const CharSpec& field) {
    SurveyRow row;
    row.n = inst.n;
    row.a = inst.a;
    row.b = inst.b;
    row.prediction = inst.prediction;
    if (inst.n > vertex_cap()) {
        row.skipped = true;
        return row;
    }
    auto start = std::chrono::steady_clock::now();
    EngineOptions opts;
    opts.field = field;
    opts.with_w2 = inst.want_w2;
    row.verdict = is_gorenstein(circulant(inst.spec), opts);
    row.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    std::string actual;
    if (inst.want_w2) {
        if (row.verdict.gorenstein)
            actual = "gorenstein";
        else if (whole_w2(row.verdict))
            actual = "w2-only";
        else
            actual = "neither";
    } else {
        actual = row.verdict.gorenstein ? "gorenstein" : "neither";
    }
    row.match = actual == inst.prediction;
    return row;
}

}  // namespace

std::vector<SurveyRow> survey(SurveyFamily family, const SurveyOptions& opts) {
    auto instances = build_instances(family, opts.max_n);
    std::vector<SurveyRow> rows(instances.size());
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            rows[i] = run_instance(instances[i], opts.field);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            rows[i] = run_instance(instances[i], opts.field);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rows;
}

bool survey_all_match(const std::vector<SurveyRow>& rows) {
    for (const auto& r : rows)
        if (!r.skipped && !r.match) return false;
    return true;
}

namespace {

// aggregate an optional clause over components: false wins, all-true is
// true, anything unevaluated otherwise stays blank
std::string aggregate(const Verdict& v,
                      std::optional<bool> (*get)(const ComponentVerdict&)) {
    bool all_true = true;
    for (const auto& c : v.components) {
        auto val = get(c);
        if (val && !*val) return "false";
        if (!val) all_true = false;
    }
    return all_true && !v.components.empty() ? "true" : "";
}

}  // namespace

std::string survey_row_csv_header() {
    return "n,a,b,prediction,wellCovered,w2,cm,eulerOk,linkOk,gorenstein,match,millis";
}

std::string survey_row_csv(const SurveyRow& row) {
    std::ostringstream out;
    out << row.n << ',' << row.a << ',' << row.b << ',' << row.prediction << ',';
    if (row.skipped) {
        out << ",,,,,SKIPPED,,";
        return out.str();
    }
    auto opt_wc = [](const ComponentVerdict& c) {
        // K1/K2 shortcut components are trivially well-covered
        return c.path == DecisionPath::Trivial ? std::optional<bool>(true)
                                               : c.well_covered;
    };
    auto opt_w2 = [](const ComponentVerdict& c) {
        return c.w2 ? std::optional<bool>(c.w2->verdict) : std::nullopt;
    };
    auto opt_cm = [](const ComponentVerdict& c) { return c.cm; };
    auto opt_euler = [](const ComponentVerdict& c) { return c.euler_ok; };
    auto opt_link = [](const ComponentVerdict& c) { return c.link_condition_ok; };
    out << aggregate(row.verdict, opt_wc) << ',' << aggregate(row.verdict, opt_w2)
        << ',' << aggregate(row.verdict, opt_cm) << ','
        << aggregate(row.verdict, opt_euler) << ','
        << aggregate(row.verdict, opt_link) << ','
        << (row.verdict.gorenstein ? "true" : "false") << ','
        << (row.match ? "true" : "false") << ',' << row.millis;
    return out.str();
}

}  // namespace gor
