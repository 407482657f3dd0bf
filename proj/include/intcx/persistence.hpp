#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intcx/complex.hpp"
#include "intcx/field.hpp"
#include "intcx/homology.hpp"

namespace intcx {

// Nested complexes at strictly increasing weight values; the last step is
// the full complex.
struct Filtration {
    std::vector<IntComplex> steps;
    std::vector<Rational> values;
    std::size_t size() const { return steps.size(); }
};

// Sublevel filtration of a weighted complex: one step per distinct weight.
Filtration filtration_from_weights(const WeightedIntComplex& w);

struct PDPoint {
    Rational birth;
    std::optional<Rational> death;   // nullopt = essential (never dies)

    bool operator==(const PDPoint& o) const { return birth == o.birth && death == o.death; }
    bool operator<(const PDPoint& o) const {
        if (birth != o.birth) return birth < o.birth;
        if (death.has_value() != o.death.has_value()) return death.has_value();
        if (!death) return false;
        return *death < *o.death;
    }
};

// Multiset of (birth, death) pairs of one homology degree, kept sorted.
struct PersistenceDiagram {
    int degree = 0;
    std::vector<PDPoint> points;

    bool operator==(const PersistenceDiagram& o) const {
        return degree == o.degree && points == o.points;
    }
};

// Rank of H_p(steps[i]) -> H_p(steps[j]) under inclusion; 0-based step
// indices, i <= j.
int persistent_rank(const Filtration& f, int p, std::size_t i, std::size_t j,
                    const FieldSpec& fs = {});

// Full table r[i][j] (entries for i > j are 0). Validates the rank-function
// laws and throws with a diagnostic on violation.
std::vector<std::vector<int>> rank_table(const Filtration& f, int p, const FieldSpec& fs = {});

// Interval decomposition of the degree-p persistent homology by
// inclusion-exclusion over the rank table. Bars are half-open [birth,
// death) in weight values; essential classes get an absent death.
PersistenceDiagram diagram(const Filtration& f, int p, const FieldSpec& fs = {});

// The layer graph G_p of the full complex, weighted: each edge carries the
// weight of its p-interaction, each vertex the minimum weight over the
// p-interactions it is a daughter of.
WeightedIntComplex layer_weighted_graph(const WeightedIntComplex& w, int p);

// Sublevel filtration of layer_weighted_graph.
Filtration layer_filtration(const WeightedIntComplex& w, int p);

// True iff a partial matching exists whose matched pairs all cost at most
// delta (d-infinity on points) and whose unmatched points each cost at
// most half their lifetime. Requires equal degrees.
bool delta_matching_exists(const PersistenceDiagram& a, const PersistenceDiagram& b,
                           const Rational& delta);

// Exact bottleneck distance; nullopt encodes +infinity (diagrams whose
// essential points cannot be matched). Requires equal degrees.
std::optional<Rational> bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Renderings. JSON follows {"dim": p, "bars": [{"birth": x, "death":
// y|null}, ...]} with bars sorted by (birth, death); numbers are exact
// decimals. Text draws one line per bar with '-' runs and '>' marking
// essential bars.
std::string barcode_json(const PersistenceDiagram& d);
std::string barcode_text(const PersistenceDiagram& d);
std::string barcode_svg(const PersistenceDiagram& d);

} // namespace intcx
