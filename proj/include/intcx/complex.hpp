#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intcx/field.hpp"
#include "intcx/interaction.hpp"

namespace intcx {

// A finite nonempty collection of interactions, bucketed into layers by
// order. Layers are kept sorted and duplicate-free, so iteration order is
// deterministic. Instances are immutable after construction.
class IntComplex {
  public:
    // Deduplicates and buckets; throws on empty input.
    static IntComplex from_items(std::vector<Interaction> items);

    // The p-th layer, possibly empty.
    const std::vector<Interaction>& layer(int p) const;
    // Largest p with a nonempty layer.
    int max_order() const { return layers_.empty() ? 0 : layers_.rbegin()->first; }
    // Orders p with nonempty layers, ascending.
    std::vector<int> orders() const;

    bool contains(const Interaction& s) const;
    std::size_t size() const;
    std::vector<Interaction> all() const;

    bool operator==(const IntComplex& other) const { return layers_ == other.layers_; }

  private:
    std::map<int, std::vector<Interaction>> layers_;
};

// A complex together with a total weight function (exact rationals).
struct WeightedIntComplex {
    IntComplex complex;
    std::map<Interaction, Rational> weight;

    // Validates that every member is weighted; throws otherwise.
    static WeightedIntComplex make(IntComplex c, std::map<Interaction, Rational> w);
};

struct FreePair {
    Interaction sigma;   // order p
    Interaction tau;     // order p+1
};

inline IntComplex build_complex(std::vector<Interaction> items) {
    return IntComplex::from_items(std::move(items));
}

// True iff every layer of `a` is contained in the matching layer of `b`.
bool is_subcomplex(const IntComplex& a, const IntComplex& b);

// Layer-wise union after renaming colliding labels of `b` with a fresh
// numeric suffix. Homology is additive across the two parts.
IntComplex disjoint_union(const IntComplex& a, const IntComplex& b);

// Partition of the vertex set (layer 1) into reachability classes. Two
// vertices are connected when a chain of 2-interactions links them; chain
// endpoints are allowed to pass through labels that are not themselves
// vertices of the complex, which keeps the component count equal to the
// first betti number for every complex. Classes are sorted.
std::vector<std::vector<std::string>> connected_components(const IntComplex& c);

// The digraph of one layer: vertices are the daughters of p-interactions
// (as opaque serialized labels), edges are the p-interactions themselves.
// Throws when layer p is empty or p < 2.
IntComplex layer_graph(const IntComplex& c, int p);

// Same construction over an explicit subset S of the complex, which may
// mix orders. Members of order 1 contribute nothing and are ignored;
// throws when S is not a subset of the complex or contains no member of
// order >= 2.
IntComplex subset_graph(const IntComplex& c, const std::vector<Interaction>& s);

// All pairs (sigma_p, tau_{p+1}) with sigma in the complex, sigma a face
// of tau, and sigma a face of no other (p+1)-interaction of the complex.
std::vector<FreePair> free_pairs(const IntComplex& c);

// Removes {sigma, tau}. Throws when the pair is not free in `c` or the
// removal would empty the complex.
IntComplex collapse(const IntComplex& c, const FreePair& pair);

// Layer 1 = vertices, layer 2 = arcs. Throws on arcs with unknown ends.
IntComplex digraph_to_complex(const std::vector<std::string>& vertices,
                              const std::vector<std::pair<std::string, std::string>>& arcs);

struct RandomComplexParams {
    int vertex_count = 3;
    int max_order = 3;
    int per_layer = 3;   // attempted interactions per layer above 1
};

// Deterministic pseudo-random complex: layer 1 holds all vertices, higher
// layers are built bottom-up by joining previously generated interactions.
IntComplex random_complex(std::uint64_t seed, const RandomComplexParams& params);

// Checks the structural invariants (layer key = order, sorted unique
// layers, nonempty). Throws on violation; used by property tests.
void validate(const IntComplex& c);

} // namespace intcx
