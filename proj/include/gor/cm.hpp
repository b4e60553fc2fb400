#ifndef GOR_CM_HPP
#define GOR_CM_HPP

#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "gor/homology.hpp"

namespace gor {

// Memo of independence-complex homology profiles for connected graphs,
// keyed by the relabeled adjacency table.  Many private subgraphs G_F
// coincide after relabeling, so this is shared across all Reisner scans.
class HomologyCache {
public:
    const HomologyProfile& profile(const Graph& connected);

private:
    std::map<std::vector<VertexSet>, HomologyProfile> memo_;
    std::mutex mutex_;
};

HomologyCache& global_homology_cache();

struct CmResult {
    bool cm = false;
    // On failure: the independent set F and the dimension where the
    // reduced homology of the link fails to vanish.
    std::optional<std::pair<VertexSet, int>> witness;
};

// Reisner's criterion for the independence complex of g: for every
// independent set F (including the empty set), the reduced homology of
// the independence complex of G_F vanishes below its dimension over k.
// For k = every field, rational homology must vanish and no torsion may
// appear in the tested range.
CmResult is_cm(const Graph& g, const CharSpec& k, HomologyCache& cache);
CmResult is_cm(const Graph& g, const CharSpec& k);

}  // namespace gor

#endif
