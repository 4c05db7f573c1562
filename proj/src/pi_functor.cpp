#include "xcc/pi_functor.hpp"

#include <numeric>
#include <sstream>

namespace xcc {

Element hal_boundary(const SimplicialSet& K, const FreeCrossedComplex& c, int dim, int x) {
    if (dim < 2) throw Error("hal_boundary: defined for dimensions >= 2 only");
    if (x < 0 || x >= K.count(dim)) throw Error("hal_boundary: simplex out of range");
    if (dim == 2) {
        std::vector<Letter> ls = {neg(K.face(2, x, 1)), pos(K.face(2, x, 2)), pos(K.face(2, x, 0))};
        return c.word_element(Word::make(c.graph(), ls));
    }
    if (dim == 3) {
        int u = K.face0_iter(3, x, 2);  // an edge
        Word uw = Word::generator(c.graph(), u);
        auto id_at = [&](int face) { return Word::identity(K.face0_iter(2, face, 2)); };
        std::vector<Dim2Term> terms = {{+1, K.face(3, x, 3), uw},
                                       {-1, K.face(3, x, 0), id_at(K.face(3, x, 0))},
                                       {-1, K.face(3, x, 2), id_at(K.face(3, x, 2))},
                                       {+1, K.face(3, x, 1), id_at(K.face(3, x, 1))}};
        return c.dim2_element(std::move(terms));
    }
    int u = K.face0_iter(dim, x, dim - 1);  // an edge
    std::vector<std::tuple<int, Word, long long>> terms;
    terms.push_back({K.face(dim, x, dim), Word::generator(c.graph(), u), 1});
    for (int i = 0; i < dim; ++i) {
        int f = K.face(dim, x, i);
        long long sign = (dim - i) % 2 == 0 ? 1 : -1;
        terms.push_back({f, Word::identity(K.face0_iter(dim - 1, f, dim - 1)), sign});
    }
    return c.module_element(dim - 1, terms);
}

PiComplex fundamental_crossed_complex(const SimplicialSet& K, NormalizerPtr normalizer_override,
                                      std::size_t budget) {
    ValidationReport vr = validate(K);
    if (!vr.ok()) {
        std::ostringstream os;
        os << "fundamental_crossed_complex: simplicial identities fail:";
        for (const auto& i : vr.issues) os << "\n  " << i.rule << " (" << i.detail << ")";
        throw Error(os.str());
    }
    auto c = std::make_shared<FreeCrossedComplex>(K.trunc_level());
    for (int p = 0; p < K.count(0); ++p) c->add_object(K.name(0, p));
    for (int e = 0; e < K.count(1); ++e)
        c->add_edge(K.name(1, e), K.face(1, e, 1), K.face(1, e, 0));
    if (K.trunc_level() >= 2)
        for (int x = 0; x < K.count(2); ++x)
            c->add_generator(2, K.name(2, x), K.face0_iter(2, x, 2), hal_boundary(K, *c, 2, x));
    if (normalizer_override) {
        c->set_normalizer(normalizer_override);
    } else {
        std::vector<Word> relators;
        for (int g = 0; g < c->generator_count(2); ++g)
            relators.push_back(c->generator_boundary(2, g).word());
        c->set_normalizer(select_normalizer(c->graph(), relators, budget));
    }
    for (int n = 3; n <= K.trunc_level(); ++n)
        for (int x = 0; x < K.count(n); ++x)
            c->add_generator(n, K.name(n, x), K.face0_iter(n, x, n), hal_boundary(K, *c, n, x));
    return PiComplex{K, c};
}

Pi1Presentation pi1_presentation(const SimplicialSet& K) {
    Pi1Presentation pres;
    for (int p = 0; p < K.count(0); ++p) pres.graph.add_object(K.name(0, p));
    for (int e = 0; e < K.count(1); ++e)
        pres.graph.add_edge(K.name(1, e), K.face(1, e, 1), K.face(1, e, 0));
    for (int x = 0; x < K.count(2) && K.trunc_level() >= 2; ++x) {
        std::vector<Letter> ls = {neg(K.face(2, x, 1)), pos(K.face(2, x, 2)), pos(K.face(2, x, 0))};
        pres.relators.push_back(Word::make(pres.graph, ls));
    }
    // components of the underlying graph
    std::vector<int> uf(K.count(0));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int a) {
        while (uf[a] != a) {
            uf[a] = uf[uf[a]];
            a = uf[a];
        }
        return a;
    };
    for (int e = 0; e < pres.graph.edge_count(); ++e) {
        int a = find(pres.graph.src(e)), b = find(pres.graph.tgt(e));
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
    for (int p = 0; p < K.count(0); ++p)
        if (find(p) == p) ++pres.component_count;
    return pres;
}

} // namespace xcc
