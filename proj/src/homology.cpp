#include "intcx/homology.hpp"

namespace intcx {

std::vector<std::pair<Interaction, long long>> boundary_signs(const Interaction& s) {
    std::vector<std::pair<Interaction, long long>> out;
    if (s.order() < 2) return out;
    std::map<Interaction, long long> acc;
    const int n = s.order();
    for (int j = 1; j <= n; ++j) acc[face(s, j)] += (j % 2 == 1) ? 1 : -1;
    for (auto& [t, c] : acc)
        if (c != 0) out.emplace_back(t, c);
    return out;
}

SignChain chain_of(const Interaction& s) { return SignChain{{s, 1}}; }

SignChain boundary_of(const SignChain& chain) {
    SignChain out;
    for (const auto& [s, coeff] : chain) {
        if (s.order() < 2) continue;
        for (const auto& [t, sign] : boundary_signs(s)) {
            auto it = out.try_emplace(t, 0).first;
            it->second += coeff * sign;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

namespace {

template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::prime) return fn(PrimeField(fs.q));
    return fn(RationalField{});
}

} // namespace

int betti(const IntComplex& c, int p, const FieldSpec& fs) {
    return with_field(fs, [&](auto f) {
        HomologyEngine<decltype(f)> eng(f, c);
        return eng.betti(p);
    });
}

std::vector<int> betti_profile(const IntComplex& c, const FieldSpec& fs) {
    const int top = c.max_order();
    return with_field(fs, [&](auto f) {
        HomologyEngine<decltype(f)> eng(f, c);
        std::vector<int> out;
        for (int p = 1; p <= top; ++p) out.push_back(eng.betti(p));
        if (out.empty()) out.push_back(0);
        return out;
    });
}

std::pair<int, int> layer_betti(const IntComplex& c, int p, const FieldSpec& fs) {
    IntComplex g = layer_graph(c, p);
    return with_field(fs, [&](auto f) {
        HomologyEngine<decltype(f)> eng(f, g);
        return std::make_pair(eng.betti(1), eng.betti(2));
    });
}

int multilayer_betti(const IntComplex& c, const std::vector<Interaction>& s,
                     const FieldSpec& fs) {
    IntComplex g = subset_graph(c, s);
    return with_field(fs, [&](auto f) {
        HomologyEngine<decltype(f)> eng(f, g);
        return eng.betti(2);
    });
}

Signature signature_of(const IntComplex& c, const FieldSpec& fs, int max_dim) {
    if (max_dim <= 0) max_dim = std::max(1, c.max_order());
    Signature sig;
    with_field(fs, [&](auto f) {
        HomologyEngine<decltype(f)> eng(f, c);
        for (int p = 1; p <= max_dim; ++p) sig.betti.push_back(eng.betti(p));
        return 0;
    });
    for (int p = 2; p <= max_dim; ++p) {
        if (c.layer(p).empty()) continue;
        sig.layer[p] = layer_betti(c, p, fs);
    }
    return sig;
}

std::string Signature::to_json() const {
    std::string out = "{\"betti\":[";
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(betti[i]);
    }
    out += "],\"layer\":{";
    bool first = true;
    for (const auto& [p, lb] : layer) {
        if (!first) out += ',';
        first = false;
        out += "\"" + std::to_string(p) + "\":[" + std::to_string(lb.first) + "," +
               std::to_string(lb.second) + "]";
    }
    out += "}}";
    return out;
}

} // namespace intcx
