#ifndef GOR_HOMOLOGY_HPP
#define GOR_HOMOLOGY_HPP

#include <vector>

#include "gor/complex.hpp"
#include "gor/indsets.hpp"

namespace gor {

// Field selector: a fixed characteristic (0 or a prime), or every field.
struct CharSpec {
    bool every_field = false;
    long characteristic = 0;

    static CharSpec all() { return {true, 0}; }
    static CharSpec zero() { return {false, 0}; }
    static CharSpec prime(long p);

    bool operator==(const CharSpec&) const = default;
};

using Matrix = std::vector<std::vector<BigInt>>;

// Nonzero diagonal of the Smith normal form, as a divisibility chain of
// positive integers.
std::vector<BigInt> smith_normal_form(Matrix m);

// Reduced chain complex of c, indexed by face cardinality: result[k] is
// the boundary map from card-(k+1) faces to card-k faces, k = 0..dim.
// result[0] is the augmentation (vertices -> empty face).
std::vector<Matrix> boundary_matrices(const SimplicialComplex& c);

// Exact reduced integer homology.  Dimensions run from -1 to dim; all
// accessors take the dimension i and return 0 / empty outside the range.
struct HomologyProfile {
    int dim = -1;
    std::vector<long> face_counts;  // index = cardinality, [0] = 1 (empty face)
    // factors[k] = invariant factors of the boundary map card k -> card k-1
    std::vector<std::vector<BigInt>> factors;  // index k = 1..dim+1

    long betti_q(int i) const;
    std::vector<BigInt> torsion(int i) const;
    long betti_over(int i, long p) const;  // rank over a field of char p
    long betti_over(int i, const CharSpec& k) const;

    bool has_torsion() const;
    std::vector<long> torsion_primes() const;

    // Alternating sum of rational Betti numbers, dims -1..dim.
    BigInt reduced_euler() const;
};

HomologyProfile homology(const SimplicialComplex& c);

}  // namespace gor

#endif
