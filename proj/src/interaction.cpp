#include "intcx/interaction.hpp"

#include <algorithm>
#include <cctype>

namespace intcx {

namespace {

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    int depth = 0;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (c == '(') ++depth;
        else if (c == ')') { if (--depth < 0) return false; }
        else if (c == ',' && depth == 0) return false;
    }
    return depth == 0;
}

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace

Interaction Interaction::leaf(std::string label) {
    if (!valid_label(label))
        throw error("invalid vertex label: '" + label + "'");
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->text = n->label = std::move(label);
    n->order = 1;
    n->hash = mix(std::hash<std::string>{}(n->text), 1);
    return Interaction(std::move(n));
}

Interaction Interaction::pair(Interaction left, Interaction right) {
    auto n = std::make_shared<Node>();
    n->leaf = false;
    n->order = left.order() + right.order();
    n->text.reserve(left.text().size() + right.text().size() + 3);
    n->text += '(';
    n->text += left.text();
    n->text += ',';
    n->text += right.text();
    n->text += ')';
    n->hash = mix(mix(left.hash(), right.hash()), 2);
    n->kids.reserve(2);
    n->kids.push_back(std::move(left));
    n->kids.push_back(std::move(right));
    return Interaction(std::move(n));
}

const std::string& Interaction::label() const {
    if (!node_->leaf) throw error("label() called on a non-leaf interaction");
    return node_->label;
}

const Interaction& Interaction::left() const {
    if (node_->leaf) throw error("left() called on a 1-interaction");
    return node_->kids[0];
}

const Interaction& Interaction::right() const {
    if (node_->leaf) throw error("right() called on a 1-interaction");
    return node_->kids[1];
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    static bool token_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Interaction parse_int() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Interaction l = parse_int();
            skip_ws();
            if (pos >= text.size() || text[pos] != ',')
                fail("expected ','");
            ++pos;
            Interaction r = parse_int();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                fail("expected ')'");
            ++pos;
            return Interaction::pair(std::move(l), std::move(r));
        }
        if (!token_char(c)) fail(std::string("expected vertex or '(', got '") + c + "'");
        std::size_t start = pos;
        while (pos < text.size() && token_char(text[pos])) ++pos;
        return Interaction::leaf(std::string(text.substr(start, pos - start)));
    }
};

} // namespace

Interaction parse_interaction(std::string_view text) {
    Parser p{text};
    Interaction s = p.parse_int();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters after interaction");
    return s;
}

namespace {

// Walks the tree collecting leaves and one gap pair per internal node: a
// subtree spanning leaves i..j (1-based) contributes the pair (i, j+1).
void np_walk(const Interaction& s, int base, NPRep& out) {
    if (s.is_leaf()) {
        out.vertices.push_back(s.label());
        return;
    }
    out.pairs.emplace_back(base, base + s.order());
    np_walk(s.left(), base, out);
    np_walk(s.right(), base + s.left().order(), out);
}

} // namespace

NPRep to_np(const Interaction& s) {
    NPRep rep;
    rep.vertices.reserve(static_cast<std::size_t>(s.order()));
    np_walk(s, 1, rep);
    std::sort(rep.pairs.begin(), rep.pairs.end());
    return rep;
}

namespace {

struct NPBuilder {
    const NPRep& rep;
    std::size_t used = 0;

    // Longest pair starting exactly at gap `l` and strictly inside (l, r).
    const std::pair<int, int>* widest_at(int l, int r) const {
        const std::pair<int, int>* best = nullptr;
        for (const auto& p : rep.pairs)
            if (p.first == l && p.second < r && (!best || p.second > best->second))
                best = &p;
        return best;
    }

    bool has_pair(int l, int r) const {
        return std::binary_search(rep.pairs.begin(), rep.pairs.end(), std::make_pair(l, r));
    }

    // Builds the subtree for vertex positions a..b (inclusive, 1-based).
    Interaction build(int a, int b) {
        if (a == b) return Interaction::leaf(rep.vertices[static_cast<std::size_t>(a - 1)]);
        // Split: left child covers a..m, right child m+1..b.
        int m = a;
        if (const auto* p = widest_at(a, b + 1)) {
            m = p->second - 1;
            ++used;
        }
        if (m + 1 < b) {
            if (!has_pair(m + 1, b + 1))
                throw np_error("pairs do not tile positions " + std::to_string(m + 1) +
                               ".." + std::to_string(b));
            ++used;
        }
        Interaction l = build(a, m);
        Interaction r = build(m + 1, b);
        return Interaction::pair(std::move(l), std::move(r));
    }
};

} // namespace

Interaction from_np(const NPRep& rep) {
    const int n = static_cast<int>(rep.vertices.size());
    if (n < 1) throw np_error("empty vertex sequence");
    if (rep.pairs.size() != static_cast<std::size_t>(n - 1))
        throw np_error("expected " + std::to_string(n - 1) + " pairs, got " +
                       std::to_string(rep.pairs.size()));
    for (const auto& [l, r] : rep.pairs) {
        if (l < 1 || r > n + 1 || r - l < 2)
            throw np_error("pair (" + std::to_string(l) + "," + std::to_string(r) +
                           ") out of range for " + std::to_string(n) + " vertices");
    }
    auto sorted = rep.pairs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw np_error("duplicate pair");
    if (n > 1 && !std::binary_search(sorted.begin(), sorted.end(), std::make_pair(1, n + 1)))
        throw np_error("missing spanning pair (1," + std::to_string(n + 1) + ")");
    // Any two pairs must be strictly nested, disjoint, or touch in exactly
    // one shared endpoint.
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            auto [l1, r1] = sorted[i];
            auto [l2, r2] = sorted[j];
            bool nested = (l1 <= l2 && r2 <= r1 && (l1 < l2 || r2 < r1)) ||
                          (l2 <= l1 && r1 <= r2 && (l2 < l1 || r1 < r2));
            bool apart = r1 <= l2 || r2 <= l1;
            if (!nested && !apart)
                throw np_error("pairs (" + std::to_string(l1) + "," + std::to_string(r1) +
                               ") and (" + std::to_string(l2) + "," + std::to_string(r2) +
                               ") overlap");
        }
    NPRep canon{rep.vertices, sorted};
    NPBuilder b{canon};
    b.used = (n > 1) ? 1 : 0;   // the spanning pair is the root's own pair
    Interaction s = b.build(1, n);
    if (b.used != sorted.size())
        throw np_error("unused pairs: the set does not describe one tree");
    return s;
}

std::pair<int, int> minimal_pair(const Interaction& s, int j) {
    const int n = s.order();
    if (n < 2) throw error("a 1-interaction has no pairs");
    if (j < 1 || j > n)
        throw error("leaf index " + std::to_string(j) + " out of range 1.." + std::to_string(n));
    // The narrowest enclosing pair is the immediate parent of leaf j.
    const Interaction* cur = &s;
    int base = 1;
    for (;;) {
        const int lo = cur->left().order();
        const Interaction& child = (j <= lo) ? cur->left() : cur->right();
        if (child.is_leaf()) return {base, base + cur->order()};
        if (j <= lo) {
            cur = &cur->left();
        } else {
            base += lo;
            j -= lo;
            cur = &cur->right();
        }
    }
}

Interaction face(const Interaction& s, int j) {
    const int n = s.order();
    if (n < 2) throw error("cannot take a face of a 1-interaction");
    if (j < 1 || j > n)
        throw error("face index " + std::to_string(j) + " out of range 1.." + std::to_string(n));
    const int lo = s.left().order();
    if (j <= lo) {
        if (s.left().is_leaf()) return s.right();
        return Interaction::pair(face(s.left(), j), s.right());
    }
    if (s.right().is_leaf()) return s.left();
    return Interaction::pair(s.left(), face(s.right(), j - lo));
}

std::vector<Interaction> faces(const Interaction& s) {
    const int n = s.order();
    if (n < 2) throw error("cannot take faces of a 1-interaction");
    std::vector<Interaction> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) out.push_back(face(s, j));
    return out;
}

Interaction apply_vertex_map(const Interaction& s,
                             const std::map<std::string, std::string>& f) {
    if (s.is_leaf()) {
        auto it = f.find(s.label());
        if (it == f.end()) throw error("vertex map undefined on '" + s.label() + "'");
        return Interaction::leaf(it->second);
    }
    return Interaction::pair(apply_vertex_map(s.left(), f), apply_vertex_map(s.right(), f));
}

} // namespace intcx
