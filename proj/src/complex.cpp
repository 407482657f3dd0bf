#include "intcx/complex.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace intcx {

IntComplex IntComplex::from_items(std::vector<Interaction> items) {
    if (items.empty()) throw error("an IntComplex must be nonempty");
    IntComplex c;
    for (auto& s : items) c.layers_[s.order()].push_back(std::move(s));
    for (auto& [p, layer] : c.layers_) {
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    return c;
}

const std::vector<Interaction>& IntComplex::layer(int p) const {
    static const std::vector<Interaction> empty;
    auto it = layers_.find(p);
    return it == layers_.end() ? empty : it->second;
}

std::vector<int> IntComplex::orders() const {
    std::vector<int> out;
    for (const auto& [p, layer] : layers_)
        if (!layer.empty()) out.push_back(p);
    return out;
}

bool IntComplex::contains(const Interaction& s) const {
    const auto& layer_p = layer(s.order());
    return std::binary_search(layer_p.begin(), layer_p.end(), s);
}

std::size_t IntComplex::size() const {
    std::size_t n = 0;
    for (const auto& [p, layer] : layers_) n += layer.size();
    return n;
}

std::vector<Interaction> IntComplex::all() const {
    std::vector<Interaction> out;
    out.reserve(size());
    for (const auto& [p, layer] : layers_) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

WeightedIntComplex WeightedIntComplex::make(IntComplex c, std::map<Interaction, Rational> w) {
    for (const auto& s : c.all())
        if (!w.count(s)) throw error("missing weight for " + s.text());
    return {std::move(c), std::move(w)};
}

bool is_subcomplex(const IntComplex& a, const IntComplex& b) {
    for (int p : a.orders()) {
        const auto& la = a.layer(p);
        const auto& lb = b.layer(p);
        if (!std::includes(lb.begin(), lb.end(), la.begin(), la.end())) return false;
    }
    return true;
}

namespace {

void collect_labels(const Interaction& s, std::set<std::string>& out) {
    if (s.is_leaf()) { out.insert(s.label()); return; }
    collect_labels(s.left(), out);
    collect_labels(s.right(), out);
}

std::set<std::string> all_labels(const IntComplex& c) {
    std::set<std::string> out;
    for (const auto& s : c.all()) collect_labels(s, out);
    return out;
}

} // namespace

IntComplex disjoint_union(const IntComplex& a, const IntComplex& b) {
    const auto labels_a = all_labels(a);
    const auto labels_b = all_labels(b);
    std::map<std::string, std::string> rename;
    std::set<std::string> taken = labels_a;
    taken.insert(labels_b.begin(), labels_b.end());
    for (const auto& lbl : labels_b) {
        if (!labels_a.count(lbl)) { rename[lbl] = lbl; continue; }
        int k = 1;
        std::string fresh;
        do {
            fresh = lbl + "_" + std::to_string(k++);
        } while (taken.count(fresh));
        taken.insert(fresh);
        rename[lbl] = fresh;
    }
    auto items = a.all();
    for (const auto& s : b.all()) items.push_back(apply_vertex_map(s, rename));
    return IntComplex::from_items(std::move(items));
}

std::vector<std::vector<std::string>> connected_components(const IntComplex& c) {
    // Union-find over every label touched by layer 2 plus the vertex set.
    std::vector<std::string> ids;
    std::unordered_map<std::string, std::size_t> index;
    auto id_of = [&](const std::string& lbl) {
        auto [it, fresh] = index.try_emplace(lbl, ids.size());
        if (fresh) ids.push_back(lbl);
        return it->second;
    };
    std::vector<std::size_t> parent;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (const auto& v : c.layer(1)) id_of(v.label());
    for (const auto& e : c.layer(2)) {
        std::set<std::string> lbls;
        collect_labels(e, lbls);
        for (const auto& l : lbls) id_of(l);
    }
    parent.resize(ids.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    for (const auto& e : c.layer(2)) {
        const std::size_t u = id_of(e.left().label());
        const std::size_t v = id_of(e.right().label());
        parent[find(u)] = find(v);
    }

    std::map<std::size_t, std::vector<std::string>> classes;
    for (const auto& v : c.layer(1)) classes[find(id_of(v.label()))].push_back(v.label());
    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

IntComplex graph_of(const std::vector<Interaction>& members) {
    std::vector<Interaction> items;
    for (const auto& s : members) {
        Interaction u = Interaction::leaf(s.left().text());
        Interaction v = Interaction::leaf(s.right().text());
        items.push_back(u);
        items.push_back(v);
        items.push_back(Interaction::pair(u, v));
    }
    return IntComplex::from_items(std::move(items));
}

} // namespace

IntComplex layer_graph(const IntComplex& c, int p) {
    if (p < 2) throw error("layer graph requires p >= 2");
    const auto& layer_p = c.layer(p);
    if (layer_p.empty()) throw error("layer " + std::to_string(p) + " is empty");
    return graph_of(layer_p);
}

IntComplex subset_graph(const IntComplex& c, const std::vector<Interaction>& s) {
    std::vector<Interaction> members;
    for (const auto& x : s) {
        if (!c.contains(x)) throw error(x.text() + " is not a member of the complex");
        if (x.order() >= 2) members.push_back(x);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw error("subset contains no interaction of order >= 2");
    return graph_of(members);
}

std::vector<FreePair> free_pairs(const IntComplex& c) {
    std::vector<FreePair> out;
    for (int p : c.orders()) {
        const auto& upper = c.layer(p + 1);
        if (upper.empty()) continue;
        // for each p-interaction of the complex, the (p+1)-members having
        // it as a face
        std::map<Interaction, std::set<std::size_t>> cofaces;
        for (std::size_t t = 0; t < upper.size(); ++t)
            for (const auto& f : faces(upper[t])) {
                if (c.contains(f)) cofaces[f].insert(t);
            }
        for (const auto& [sigma, taus] : cofaces)
            if (taus.size() == 1) out.push_back({sigma, upper[*taus.begin()]});
    }
    std::sort(out.begin(), out.end(), [](const FreePair& a, const FreePair& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        return a.tau < b.tau;
    });
    return out;
}

IntComplex collapse(const IntComplex& c, const FreePair& pair) {
    if (!c.contains(pair.sigma) || !c.contains(pair.tau))
        throw error("collapse: pair members must belong to the complex");
    if (pair.tau.order() != pair.sigma.order() + 1)
        throw error("collapse: tau must have order one above sigma");
    const auto fs = faces(pair.tau);
    if (std::find(fs.begin(), fs.end(), pair.sigma) == fs.end())
        throw error("collapse: sigma is not a face of tau");
    for (const auto& other : c.layer(pair.tau.order())) {
        if (other == pair.tau) continue;
        const auto ofs = faces(other);
        if (std::find(ofs.begin(), ofs.end(), pair.sigma) != ofs.end())
            throw error("collapse: sigma is a face of " + other.text() + " as well");
    }
    std::vector<Interaction> rest;
    for (const auto& s : c.all())
        if (s != pair.sigma && s != pair.tau) rest.push_back(s);
    if (rest.empty()) throw error("collapse would empty the complex");
    return IntComplex::from_items(std::move(rest));
}

IntComplex digraph_to_complex(const std::vector<std::string>& vertices,
                              const std::vector<std::pair<std::string, std::string>>& arcs) {
    std::set<std::string> known(vertices.begin(), vertices.end());
    std::vector<Interaction> items;
    for (const auto& v : vertices) items.push_back(Interaction::leaf(v));
    for (const auto& [u, v] : arcs) {
        if (!known.count(u) || !known.count(v))
            throw error("arc (" + u + "," + v + ") references an unknown vertex");
        items.push_back(Interaction::pair(Interaction::leaf(u), Interaction::leaf(v)));
    }
    return IntComplex::from_items(std::move(items));
}

IntComplex random_complex(std::uint64_t seed, const RandomComplexParams& params) {
    if (params.vertex_count < 1 || params.max_order < 1 || params.per_layer < 0)
        throw error("random_complex: parameters must be positive");
    std::mt19937_64 rng(seed);
    std::map<int, std::vector<Interaction>> pool;
    for (int i = 0; i < params.vertex_count; ++i)
        pool[1].push_back(Interaction::leaf("v" + std::to_string(i)));

    auto pick = [&](const std::vector<Interaction>& v) -> const Interaction& {
        std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
        return v[d(rng)];
    };

    for (int p = 2; p <= params.max_order; ++p) {
        for (int k = 0; k < params.per_layer; ++k) {
            // choose a split with both sides available
            std::vector<int> splits;
            for (int q = 1; q < p; ++q)
                if (!pool[q].empty() && !pool[p - q].empty()) splits.push_back(q);
            if (splits.empty()) break;
            std::uniform_int_distribution<std::size_t> d(0, splits.size() - 1);
            const int q = splits[d(rng)];
            pool[p].push_back(Interaction::pair(pick(pool[q]), pick(pool[p - q])));
        }
        auto& layer = pool[p];
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }

    std::vector<Interaction> items;
    for (auto& [p, layer] : pool) items.insert(items.end(), layer.begin(), layer.end());
    return IntComplex::from_items(std::move(items));
}

void validate(const IntComplex& c) {
    if (c.size() == 0) throw error("validate: empty complex");
    for (int p : c.orders()) {
        const auto& layer = c.layer(p);
        for (const auto& s : layer)
            if (s.order() != p)
                throw error("validate: " + s.text() + " stored under order " + std::to_string(p));
        if (!std::is_sorted(layer.begin(), layer.end()))
            throw error("validate: layer " + std::to_string(p) + " not sorted");
        if (std::adjacent_find(layer.begin(), layer.end()) != layer.end())
            throw error("validate: duplicate in layer " + std::to_string(p));
    }
}

} // namespace intcx
