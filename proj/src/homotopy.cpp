#include "xcc/homotopy.hpp"

#include <sstream>

namespace xcc {

Element Homotopy::on_word(const Word& w) const {
    BasisMapExtension ext(f, h1, hn);
    return ext.on_word(w);
}

Element Homotopy::on_element(const Element& e) const {
    if (e.dim() > defined_through)
        throw Error("homotopy: no values at dimension " + std::to_string(e.dim()));
    BasisMapExtension ext(f, h1, hn);
    return ext.on_element(e);
}

HomotopyBuildReport build_homotopy(Morphism f, std::vector<Word> h0, std::vector<Element> h1,
                                   std::vector<std::vector<Element>> hn, int defined_through) {
    HomotopyBuildReport rep;
    const FreeCrossedComplex& src = *f.source;
    auto fail = [&](const std::string& s) { rep.violations.push_back(s); };

    if (static_cast<int>(h0.size()) != src.object_count()) {
        fail("h0 table is not total");
        return rep;
    }
    for (int p = 0; p < src.object_count(); ++p)
        if (h0[p].end() != f.on_object[p])
            fail("t(h x) != t(f x) at object " + src.graph().object_name(p));
    if (defined_through >= 1) {
        if (static_cast<int>(h1.size()) != src.edge_count()) {
            fail("h1 table is not total");
            return rep;
        }
        for (int e = 0; e < src.edge_count(); ++e) {
            if (h1[e].dim() != 2) {
                fail("h value of edge " + src.graph().edge_name(e) + " must have dimension 2");
                continue;
            }
            if (h1[e].endpoint() != f.word(Word::generator(src.graph(), e)).end())
                fail("t(h x) != t(f x) at edge " + src.graph().edge_name(e));
        }
    }
    for (int dim = 2; dim <= defined_through; ++dim) {
        if (static_cast<int>(hn.size()) < dim - 1 ||
            static_cast<int>(hn[dim - 2].size()) != src.generator_count(dim)) {
            fail("h table is not total in dimension " + std::to_string(dim));
            return rep;
        }
        for (int g = 0; g < src.generator_count(dim); ++g) {
            const Element& v = hn[dim - 2][g];
            if (v.dim() != dim + 1) {
                fail("h value of " + src.generator_name(dim, g) + " must have dimension " +
                     std::to_string(dim + 1));
                continue;
            }
            if (v.endpoint() != f.on_object[src.generator_endpoint(dim, g)])
                fail("t(h x) != t(f x) at generator " + src.generator_name(dim, g));
        }
    }
    if (!rep.violations.empty()) return rep;
    rep.homotopy = Homotopy{std::move(f), std::move(h0), std::move(h1), std::move(hn), defined_through};
    return rep;
}

Homotopy make_homotopy(Morphism f, std::vector<Word> h0, std::vector<Element> h1,
                       std::vector<std::vector<Element>> hn, int defined_through) {
    HomotopyBuildReport r =
        build_homotopy(std::move(f), std::move(h0), std::move(h1), std::move(hn), defined_through);
    if (!r.ok()) {
        std::ostringstream os;
        os << "homotopy violates its endpoint conditions:";
        for (const auto& v : r.violations) os << "\n  " << v;
        throw Error(os.str());
    }
    return *std::move(r.homotopy);
}

Morphism derived_morphism(const Homotopy& h) {
    const Morphism& f = h.f;
    const FreeCrossedComplex& src = *f.source;
    const FreeCrossedComplex& tgt = *f.target;
    int through = std::min(h.defined_through, f.defined_through);

    std::vector<int> on_object(src.object_count());
    for (int p = 0; p < src.object_count(); ++p) on_object[p] = h.h0[p].start();

    std::vector<Word> on_edge;
    for (int e = 0; e < src.edge_count() && through >= 1; ++e) {
        Word fx = f.word(Word::generator(src.graph(), e));
        Word w = compose(h.h0[src.graph().src(e)], fx);
        w = compose(w, tgt.boundary(h.h1[e]).word());
        w = compose(w, invert(h.h0[src.graph().tgt(e)]));
        on_edge.push_back(w);
    }

    std::vector<std::vector<Element>> on_gen(std::max(0, through - 1));
    for (int dim = 2; dim <= through; ++dim)
        for (int g = 0; g < src.generator_count(dim); ++g) {
            Element body = f(src.generator_element(dim, g));
            body = tgt.add(body, h.on_element(src.generator_boundary(dim, g)));
            body = tgt.add(body, tgt.boundary(h.hn[dim - 2][g]));
            on_gen[dim - 2].push_back(tgt.act(body, invert(h.h0[src.generator_endpoint(dim, g)])));
        }

    return make_morphism(f.source, f.target, std::move(on_object), std::move(on_edge),
                         std::move(on_gen), through);
}

CylinderMorphism cylinder_morphism(const Homotopy& h) {
    Morphism f0 = derived_morphism(h);
    const Morphism& f = h.f;
    const FreeCrossedComplex& src = *f.source;
    CylinderResult cyl = cylinder(f.source);
    // dimension d of the cylinder holds 0&r, 1&r (r of dim d) and i&r
    // (r of dim d-1); one extra dimension is covered when the source has
    // no generators there
    int through = f0.defined_through;
    if (src.generator_count(through + 1) == 0 && through + 1 <= cyl.cylinder->trunc_level()) ++through;

    std::vector<int> on_object(cyl.cylinder->object_count(), -1);
    for (int p = 0; p < src.object_count(); ++p) {
        on_object[cyl.obj_end[0][p]] = f0.on_object[p];
        on_object[cyl.obj_end[1][p]] = f.on_object[p];
    }
    std::vector<Word> on_edge(cyl.cylinder->edge_count());
    for (int e = 0; e < src.edge_count(); ++e) {
        on_edge[cyl.edge_end[0][e]] = f0.on_edge[e];
        on_edge[cyl.edge_end[1][e]] = f.on_edge[e];
    }
    for (int p = 0; p < src.object_count(); ++p) on_edge[cyl.iota_obj[p]] = h.h0[p];

    std::vector<std::vector<Element>> on_gen(std::max(0, through - 1));
    for (int dim = 2; dim <= through; ++dim) {
        on_gen[dim - 2].resize(cyl.cylinder->generator_count(dim), Element{});
        for (int g = 0; g < src.generator_count(dim); ++g) {
            on_gen[dim - 2][cyl.gen_end[0][dim - 2][g]] = f0.on_gen[dim - 2][g];
            on_gen[dim - 2][cyl.gen_end[1][dim - 2][g]] = f.on_gen[dim - 2][g];
        }
        if (dim == 2)
            for (int e = 0; e < src.edge_count(); ++e) on_gen[0][cyl.iota_edge[e]] = h.h1[e];
        else
            for (int g = 0; g < src.generator_count(dim - 1); ++g)
                on_gen[dim - 2][cyl.iota_gen[dim - 3][g]] = h.hn[dim - 3][g];
    }
    Morphism m = make_morphism(cyl.cylinder, f.target, std::move(on_object), std::move(on_edge),
                               std::move(on_gen), through);
    return CylinderMorphism{std::move(cyl), std::move(m)};
}

} // namespace xcc
