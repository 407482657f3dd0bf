#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "intcx/error.hpp"

namespace intcx {

// An interaction is a leaf-labelled proper binary tree: either a single
// vertex or an ordered pair of two interactions. Values are immutable and
// share structure, so copies are cheap and instances can be used freely
// across threads.
//
// Leaf labels admit any nonempty string without whitespace whose
// parentheses are balanced and whose commas all sit inside parentheses.
// The text parser is stricter ([A-Za-z0-9_]+ only); the relaxed internal
// rule exists so that derived graphs can use whole serialized interactions
// as opaque vertex names. Under this rule (order, leaf-flag, text) is a
// faithful identity, which is what equality and ordering use.
class Interaction {
  public:
    static Interaction leaf(std::string label);
    static Interaction pair(Interaction left, Interaction right);

    bool is_leaf() const { return node_->leaf; }
    const std::string& label() const;     // leaf only
    const Interaction& left() const;      // pair only
    const Interaction& right() const;     // pair only

    // Number of leaves.
    int order() const { return node_->order; }

    // Canonical fully parenthesized form, no whitespace.
    const std::string& text() const { return node_->text; }

    std::size_t hash() const { return node_->hash; }

    friend bool operator==(const Interaction& a, const Interaction& b) {
        return a.node_ == b.node_ ||
               (a.node_->leaf == b.node_->leaf &&
                a.node_->order == b.node_->order &&
                a.node_->text == b.node_->text);
    }
    friend bool operator!=(const Interaction& a, const Interaction& b) { return !(a == b); }
    friend bool operator<(const Interaction& a, const Interaction& b) {
        if (a.node_->order != b.node_->order) return a.node_->order < b.node_->order;
        if (a.node_->leaf != b.node_->leaf) return a.node_->leaf && !b.node_->leaf;
        return a.node_->text < b.node_->text;
    }

  private:
    struct Node {
        bool leaf = true;
        std::string label;
        std::vector<Interaction> kids;   // empty for a leaf, size 2 otherwise
        int order = 1;
        std::string text;
        std::size_t hash = 0;
    };
    explicit Interaction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend struct InteractionHash;
};

struct InteractionHash {
    std::size_t operator()(const Interaction& s) const { return s.hash(); }
};

// Number-pair form: the leaf sequence plus one (l, r) gap-position pair per
// internal node, positions numbered 1..n+1. Pairs are kept sorted by (l, r).
struct NPRep {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> pairs;
};

// Grammar: Int := VERTEX | "(" Int "," Int ")", VERTEX := [A-Za-z0-9_]+.
// Whitespace between tokens is ignored. Throws parse_error with the byte
// offset of the first offending character.
Interaction parse_interaction(std::string_view text);

inline const std::string& serialize(const Interaction& s) { return s.text(); }

NPRep to_np(const Interaction& s);

// Inverse of to_np. Throws np_error when the pairs violate the nesting
// conditions or do not tile the vertex sequence.
Interaction from_np(const NPRep& rep);

// The unique narrowest pair (l, r) with l <= j < r; j is a 1-based leaf
// index. Requires order >= 2.
std::pair<int, int> minimal_pair(const Interaction& s, int j);

// Replace the minimal subtree containing leaf j by its other child.
// Requires order >= 2 and 1 <= j <= order.
Interaction face(const Interaction& s, int j);

// All faces [face(s,1), ..., face(s,n)], in leaf order.
std::vector<Interaction> faces(const Interaction& s);

inline Interaction join(const Interaction& a, const Interaction& b) {
    return Interaction::pair(a, b);
}

// Relabel every leaf through `f`. Throws when a leaf label is missing
// from the map. The tree shape (and hence the NP pair set) is preserved.
Interaction apply_vertex_map(const Interaction& s,
                             const std::map<std::string, std::string>& f);

} // namespace intcx
