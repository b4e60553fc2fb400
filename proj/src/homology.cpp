#include "gor/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gor {

CharSpec CharSpec::prime(long p) {
    if (p < 2) throw std::invalid_argument("characteristic must be prime");
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("characteristic must be prime");
    return {false, p};
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::vector<BigInt> smith_normal_form(Matrix m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pick the smallest-magnitude nonzero entry in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr == rows || abs_big(m[i][j]) < abs_big(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;  // block is zero
        std::swap(m[t], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i)
                        std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix: pivot must divide every remaining entry
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj)
                            m[t][jj] += m[i][jj];
                        clean = false;
                    }
        }
        diag.push_back(abs_big(m[t][t]));
        ++t;
    }
    return diag;
}

std::vector<Matrix> boundary_matrices(const SimplicialComplex& c) {
    auto levels = faces_by_card(c);
    std::vector<Matrix> out;
    for (std::size_t k = 1; k < levels.size(); ++k) {
        const auto& rows = levels[k - 1];
        const auto& cols = levels[k];
        std::unordered_map<VertexSet, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
        Matrix b(rows.size(), std::vector<BigInt>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            auto verts = set_members(cols[j]);
            for (std::size_t idx = 0; idx < verts.size(); ++idx) {
                VertexSet sub = cols[j] & ~bit(verts[idx]);
                b[row_index.at(sub)][j] = (idx % 2 == 0) ? 1 : -1;
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

long HomologyProfile::betti_q(int i) const {
    int c = i + 1;
    if (c < 0 || c >= static_cast<int>(face_counts.size())) return 0;
    long rank_c = (c >= 1) ? static_cast<long>(factors[c].size()) : 0;
    long rank_up = (c + 1 < static_cast<int>(factors.size()))
                       ? static_cast<long>(factors[c + 1].size())
                       : 0;
    return face_counts[c] - rank_c - rank_up;
}

std::vector<BigInt> HomologyProfile::torsion(int i) const {
    std::vector<BigInt> out;
    int c = i + 2;  // the map into dimension i
    if (c >= 1 && c < static_cast<int>(factors.size()))
        for (const BigInt& f : factors[c])
            if (f > 1) out.push_back(f);
    return out;
}

long HomologyProfile::betti_over(int i, long p) const {
    int c = i + 1;
    if (c < 0 || c >= static_cast<int>(face_counts.size())) return 0;
    auto rank_mod_p = [&](int k) -> long {
        if (k < 1 || k >= static_cast<int>(factors.size())) return 0;
        long r = 0;
        for (const BigInt& f : factors[k])
            if (f % p != 0) ++r;
        return r;
    };
    return face_counts[c] - rank_mod_p(c) - rank_mod_p(c + 1);
}

long HomologyProfile::betti_over(int i, const CharSpec& k) const {
    if (k.every_field)
        throw std::invalid_argument("betti_over needs a fixed characteristic");
    return k.characteristic == 0 ? betti_q(i) : betti_over(i, k.characteristic);
}

bool HomologyProfile::has_torsion() const {
    for (const auto& fs : factors)
        for (const BigInt& f : fs)
            if (f > 1) return true;
    return false;
}

std::vector<long> HomologyProfile::torsion_primes() const {
    std::set<long> primes;
    for (const auto& fs : factors)
        for (BigInt f : fs) {
            for (long p = 2; p * p <= f; ++p)
                while (f % p == 0) {
                    primes.insert(p);
                    f /= p;
                }
            if (f > 1) primes.insert(static_cast<long>(f));
        }
    return {primes.begin(), primes.end()};
}

BigInt HomologyProfile::reduced_euler() const {
    BigInt sum = 0;
    for (int i = -1; i <= dim; ++i)
        sum += (i % 2 == 0) ? betti_q(i) : -betti_q(i);
    return sum;
}

HomologyProfile homology(const SimplicialComplex& c) {
    HomologyProfile p;
    p.dim = c.dim();
    auto levels = faces_by_card(c);
    for (const auto& level : levels)
        p.face_counts.push_back(static_cast<long>(level.size()));
    p.factors.resize(levels.size());
    auto boundaries = boundary_matrices(c);
    for (std::size_t k = 1; k < levels.size(); ++k)
        p.factors[k] = smith_normal_form(std::move(boundaries[k - 1]));
    return p;
}

}  // namespace gor
