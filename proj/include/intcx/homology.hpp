#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intcx/complex.hpp"
#include "intcx/field.hpp"
#include "intcx/interaction.hpp"
#include "intcx/matrix.hpp"

namespace intcx {

// Alternating sum of faces with coefficients combined (so coinciding faces
// cancel); empty for order 1. Field-independent integer signs.
std::vector<std::pair<Interaction, long long>> boundary_signs(const Interaction& s);

// Signed chains over the integers, used by the structural property tests.
using SignChain = std::map<Interaction, long long>;
SignChain boundary_of(const SignChain& chain);
SignChain chain_of(const Interaction& s);

// A finite field-coefficient combination of interactions of one order.
template <class F>
struct FormalChain {
    using K = typename F::Value;
    int degree = 0;
    std::map<Interaction, K> terms;   // zero coefficients absent
};

template <class F>
FormalChain<F> boundary(const F& f, const Interaction& s) {
    FormalChain<F> out;
    out.degree = s.order() - 1;
    for (const auto& [face_s, sign] : boundary_signs(s)) out.terms[face_s] = f.from_int(sign);
    return out;
}

template <class F>
FormalChain<F> boundary_chain(const F& f, const FormalChain<F>& c) {
    FormalChain<F> out;
    out.degree = c.degree - 1;
    for (const auto& [s, coeff] : c.terms) {
        if (s.order() < 2) continue;
        for (const auto& [face_s, sign] : boundary_signs(s)) {
            auto& acc = out.terms.try_emplace(face_s, f.zero()).first->second;
            acc = f.add(acc, f.mul(coeff, f.from_int(sign)));
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = f.is_zero(it->second) ? out.terms.erase(it) : std::next(it);
    return out;
}

// Per-degree chain data of one complex: the generator basis of A_p, the
// finite ambient slice of Lambda_{p-1} actually touched by boundaries, the
// boundary matrix between them, and a basis of the admissible subspace
// Omega_p = { a in A_p : boundary(a) supported on I_{p-1} }.
template <class F>
struct ChainSpace {
    using K = typename F::Value;
    int degree = 0;
    std::vector<Interaction> gens;       // ordered basis of A_p
    std::vector<Interaction> ambient;    // I_{p-1} together with all faces of gens
    Matrix<K> d;                         // ambient.size() x gens.size()
    std::vector<std::vector<K>> omega;   // Omega_p basis, coordinates over gens
};

template <class F>
class HomologyEngine {
  public:
    using K = typename F::Value;

    HomologyEngine(F field, const IntComplex& complex)
        : field_(std::move(field)), complex_(complex) {}

    const ChainSpace<F>& space(int p) {
        auto it = spaces_.find(p);
        if (it != spaces_.end()) return it->second;
        return spaces_.emplace(p, build_space(p)).first->second;
    }

    // Basis of Z_p = Ker d_p on A_p. A cycle has zero boundary, so it lies
    // in Omega_p automatically; no basis change is needed.
    const std::vector<std::vector<K>>& cycle_space(int p) {
        auto it = cycles_.find(p);
        if (it != cycles_.end()) return it->second;
        const auto& sp = space(p);
        return cycles_.emplace(p, kernel_basis(field_, sp.d)).first->second;
    }

    // Spanning vectors of B_p = boundary(Omega_{p+1}), coordinates over the
    // degree-p generators.
    const std::vector<std::vector<K>>& boundary_space(int p) {
        auto it = boundaries_.find(p);
        if (it != boundaries_.end()) return it->second;
        std::vector<std::vector<K>> vecs;
        const auto& up = space(p + 1);
        const auto& sp = space(p);
        std::map<Interaction, std::size_t> gen_index;
        for (std::size_t i = 0; i < sp.gens.size(); ++i) gen_index[sp.gens[i]] = i;
        for (const auto& w : up.omega) {
            std::vector<K> img(sp.gens.size(), field_.zero());
            for (std::size_t r = 0; r < up.ambient.size(); ++r) {
                K v = field_.zero();
                for (std::size_t cidx = 0; cidx < up.gens.size(); ++cidx)
                    v = field_.add(v, field_.mul(up.d.at(r, cidx), w[cidx]));
                if (field_.is_zero(v)) continue;
                auto git = gen_index.find(up.ambient[r]);
                if (git == gen_index.end())
                    throw error("omega boundary leaves the complex at " + up.ambient[r].text());
                img[git->second] = v;
            }
            vecs.push_back(std::move(img));
        }
        return boundaries_.emplace(p, std::move(vecs)).first->second;
    }

    int betti(int p) {
        if (p < 1) throw error("betti degree must be >= 1");
        const auto& sp = space(p);
        if (sp.gens.empty()) return 0;
        const std::size_t z = sp.gens.size() - rank(field_, sp.d);
        const std::size_t b = rank(field_, Matrix<K>::from_rows(boundary_space(p)));
        return static_cast<int>(z - b);
    }

    // Cycles whose classes form a homology basis in degree p: extends an
    // echelon of the boundary space by kernel vectors.
    std::vector<std::vector<K>> cycle_representatives(int p) {
        const auto& sp = space(p);
        std::vector<std::vector<K>> span = boundary_space(p);
        std::size_t current = rank(field_, Matrix<K>::from_rows(span));
        std::vector<std::vector<K>> reps;
        for (const auto& z : cycle_space(p)) {
            auto trial = span;
            trial.push_back(z);
            const std::size_t r = rank(field_, Matrix<K>::from_rows(trial));
            if (r > current) {
                current = r;
                span.push_back(z);
                reps.push_back(z);
            }
        }
        (void)sp;
        return reps;
    }

    std::vector<FormalChain<F>> omega_chains(int p) {
        const auto& sp = space(p);
        return chains_from(sp, sp.omega);
    }

    std::vector<FormalChain<F>> representative_chains(int p) {
        const auto& sp = space(p);
        return chains_from(sp, cycle_representatives(p));
    }

    const F& field() const { return field_; }
    const IntComplex& complex() const { return complex_; }

  private:
    std::vector<FormalChain<F>> chains_from(const ChainSpace<F>& sp,
                                            const std::vector<std::vector<K>>& vecs) const {
        std::vector<FormalChain<F>> out;
        for (const auto& v : vecs) {
            FormalChain<F> c;
            c.degree = sp.degree;
            for (std::size_t i = 0; i < sp.gens.size(); ++i)
                if (!field_.is_zero(v[i])) c.terms.emplace(sp.gens[i], v[i]);
            out.push_back(std::move(c));
        }
        return out;
    }

    ChainSpace<F> build_space(int p) const {
        ChainSpace<F> sp;
        sp.degree = p;
        sp.gens = complex_.layer(p);
        const std::size_t m = sp.gens.size();
        if (p == 1) {
            // Lambda_0 = 0 and the boundary out of degree 1 vanishes, so
            // Omega_1 is all of A_1.
            sp.d = Matrix<K>(0, m);
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<K> e(m, field_.zero());
                e[j] = field_.one();
                sp.omega.push_back(std::move(e));
            }
            return sp;
        }
        std::vector<Interaction> ambient = complex_.layer(p - 1);
        std::vector<std::vector<std::pair<Interaction, long long>>> cols;
        cols.reserve(m);
        for (const auto& g : sp.gens) {
            cols.push_back(boundary_signs(g));
            for (const auto& [face_g, sign] : cols.back()) ambient.push_back(face_g);
        }
        std::sort(ambient.begin(), ambient.end());
        ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
        sp.ambient = std::move(ambient);

        std::map<Interaction, std::size_t> row_of;
        for (std::size_t i = 0; i < sp.ambient.size(); ++i) row_of[sp.ambient[i]] = i;
        sp.d = Matrix<K>(sp.ambient.size(), m);
        for (std::size_t r = 0; r < sp.ambient.size(); ++r)
            for (std::size_t c = 0; c < m; ++c) sp.d.at(r, c) = field_.zero();
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& [face_g, sign] : cols[j])
                sp.d.at(row_of[face_g], j) = field_.from_int(sign);

        // rows of the ambient outside I_{p-1}; Omega_p is the kernel of the
        // boundary projected onto those rows
        std::vector<std::size_t> outside;
        const auto& lower = complex_.layer(p - 1);
        for (std::size_t i = 0; i < sp.ambient.size(); ++i)
            if (!std::binary_search(lower.begin(), lower.end(), sp.ambient[i])) outside.push_back(i);
        Matrix<K> proj(outside.size(), m);
        for (std::size_t i = 0; i < outside.size(); ++i)
            for (std::size_t c = 0; c < m; ++c) proj.at(i, c) = sp.d.at(outside[i], c);
        sp.omega = kernel_basis(field_, proj);
        return sp;
    }

    F field_;
    const IntComplex& complex_;
    std::map<int, ChainSpace<F>> spaces_;
    std::map<int, std::vector<std::vector<K>>> cycles_;
    std::map<int, std::vector<std::vector<K>>> boundaries_;
};

// Matrix of the map induced on degree-p homology by a vertex map that
// sends every interaction of `source` into `target`. Rows index the
// target homology basis, columns the source basis; both bases are the
// deterministic cycle representatives. Throws when the vertex map is not
// an interaction map between the two complexes.
template <class F>
Matrix<typename F::Value> induced_map(const F& f, const IntComplex& source,
                                      const IntComplex& target, int p,
                                      const std::map<std::string, std::string>& vertex_map) {
    using K = typename F::Value;
    for (const auto& s : source.all()) {
        Interaction img = apply_vertex_map(s, vertex_map);
        if (!target.contains(img))
            throw error("not an interaction map: image " + img.text() + " missing from target");
    }
    HomologyEngine<F> src(f, source);
    HomologyEngine<F> tgt(f, target);
    const auto src_reps = src.cycle_representatives(p);
    const auto& src_gens = src.space(p).gens;
    const auto tgt_reps = tgt.cycle_representatives(p);
    const auto& tgt_bnd = tgt.boundary_space(p);
    const auto& tgt_gens = tgt.space(p).gens;
    std::map<Interaction, std::size_t> tgt_index;
    for (std::size_t i = 0; i < tgt_gens.size(); ++i) tgt_index[tgt_gens[i]] = i;

    // columns of the solve: target representatives then boundaries
    Matrix<K> sys(tgt_gens.size(), tgt_reps.size() + tgt_bnd.size());
    for (std::size_t r = 0; r < tgt_gens.size(); ++r)
        for (std::size_t c = 0; c < sys.cols; ++c)
            sys.at(r, c) = c < tgt_reps.size() ? tgt_reps[c][r]
                                               : tgt_bnd[c - tgt_reps.size()][r];

    Matrix<K> out(tgt_reps.size(), src_reps.size());
    for (std::size_t r = 0; r < out.rows; ++r)
        for (std::size_t c = 0; c < out.cols; ++c) out.at(r, c) = f.zero();
    for (std::size_t j = 0; j < src_reps.size(); ++j) {
        std::vector<K> img(tgt_gens.size(), f.zero());
        for (std::size_t i = 0; i < src_gens.size(); ++i) {
            if (f.is_zero(src_reps[j][i])) continue;
            Interaction mapped = apply_vertex_map(src_gens[i], vertex_map);
            const std::size_t t = tgt_index.at(mapped);
            img[t] = f.add(img[t], src_reps[j][i]);
        }
        auto sol = solve(f, sys, img);
        if (!sol) throw error("induced cycle is not expressible in the target homology basis");
        for (std::size_t r = 0; r < out.rows; ++r) out.at(r, j) = (*sol)[r];
    }
    return out;
}

// Identity-label map for subcomplex inclusions.
template <class F>
Matrix<typename F::Value> induced_map_inclusion(const F& f, const IntComplex& source,
                                                const IntComplex& target, int p) {
    std::map<std::string, std::string> identity;
    for (const auto& s : source.all()) {
        std::vector<const Interaction*> stack{&s};
        while (!stack.empty()) {
            const Interaction* cur = stack.back();
            stack.pop_back();
            if (cur->is_leaf()) identity.emplace(cur->label(), cur->label());
            else { stack.push_back(&cur->left()); stack.push_back(&cur->right()); }
        }
    }
    return induced_map(f, source, target, p, identity);
}

// Betti numbers plus per-layer betti pairs; the record compared in the
// digraph distinguishability experiment.
struct Signature {
    std::vector<int> betti;                          // degrees 1..N
    std::map<int, std::pair<int, int>> layer;        // p -> (b1, b2), nonempty layers only

    bool operator==(const Signature& o) const { return betti == o.betti && layer == o.layer; }
    bool operator<(const Signature& o) const {
        if (betti != o.betti) return betti < o.betti;
        return layer < o.layer;
    }
    std::string to_json() const;
};

// Runtime-field entry points.
int betti(const IntComplex& c, int p, const FieldSpec& fs = {});
std::vector<int> betti_profile(const IntComplex& c, const FieldSpec& fs = {});
// (b1(G_p), b2(G_p)); throws when layer p is empty or p < 2.
std::pair<int, int> layer_betti(const IntComplex& c, int p, const FieldSpec& fs = {});
int multilayer_betti(const IntComplex& c, const std::vector<Interaction>& s,
                     const FieldSpec& fs = {});
// Betti through degree max_dim (0 = the complex's max order) plus layer
// pairs for every nonempty layer from 2 up.
Signature signature_of(const IntComplex& c, const FieldSpec& fs = {}, int max_dim = 0);

} // namespace intcx
