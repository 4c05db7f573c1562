#include "xcc/tensor_constructs.hpp"

#include <sstream>

namespace xcc {

namespace {

std::string tag(const std::string& prefix, const std::string& name) { return prefix + "(" + name + ")"; }

}  // namespace

Element ConeResult::iota_of(const Element& e) const {
    const FreeCrossedComplex& C = *cone;
    switch (e.dim()) {
        case 1: {
            // i&(x+y) = i&x + i&y and i&(-e) = -(i&e): everything lands at v
            std::vector<Dim2Term> terms;
            for (Letter l : e.word().letters())
                terms.push_back({positive(l) ? +1 : -1, iota_edge[edge_of(l)], Word::identity(vertex)});
            return C.dim2_element(std::move(terms), vertex);
        }
        case 2: {
            // operators vanish: i&(x^c) = i&x
            std::vector<std::tuple<int, Word, long long>> terms;
            for (const Dim2Term& t : e.terms())
                terms.push_back({iota_gen[0][t.gen], Word::identity(vertex), t.sign});
            return C.module_element(3, terms, vertex);
        }
        default: {
            if (e.dim() < 1) throw Error("cone: i&x needs dim >= 1");
            std::vector<std::tuple<int, Word, long long>> terms;
            for (const auto& [key, c] : e.sum())
                terms.push_back({iota_gen[e.dim() - 2][key.first], Word::identity(vertex), c});
            return C.module_element(e.dim() + 1, terms, vertex);
        }
    }
}

ConeResult cone(const CrsPtr& base) {
    const FreeCrossedComplex& B = *base;
    const int N = B.trunc_level();
    auto C = std::make_shared<FreeCrossedComplex>(N + 1);
    ConeResult res;
    res.base = base;

    for (int p = 0; p < B.object_count(); ++p)
        res.obj0.push_back(C->add_object(tag("0", B.graph().object_name(p))));
    res.vertex = C->add_object("v");
    for (int e = 0; e < B.edge_count(); ++e)
        res.edge0.push_back(C->add_edge(tag("0", B.graph().edge_name(e)), res.obj0[B.graph().src(e)],
                                        res.obj0[B.graph().tgt(e)]));
    for (int p = 0; p < B.object_count(); ++p)
        res.iota_obj.push_back(C->add_edge(tag("i", B.graph().object_name(p)), res.obj0[p], res.vertex));

    res.gen0.resize(std::max(0, N - 1));
    res.iota_gen.resize(std::max(0, N));
    res.cone = C;  // iota_of needs the maps; boundaries below only use
                   // generators of lower dimensions, which are in place

    auto map_word = [&](const Word& w) {
        if (w.is_identity()) return Word::identity(res.obj0[w.start()]);
        std::vector<Letter> ls;
        for (Letter l : w.letters()) ls.push_back(positive(l) ? pos(res.edge0[edge_of(l)]) : neg(res.edge0[edge_of(l)]));
        return Word::make(C->graph(), ls);
    };

    // dim 2: 0&r for dim-2 r, and i&e for edges e
    if (N >= 2)
        for (int g = 0; g < B.generator_count(2); ++g)
            res.gen0[0].push_back(C->add_generator(2, tag("0", B.generator_name(2, g)),
                                                   res.obj0[B.generator_endpoint(2, g)],
                                                   C->word_element(map_word(B.generator_boundary(2, g).word()))));
    for (int e = 0; e < B.edge_count(); ++e) {
        // delta(i&e) = -i&se + 0&e + i&te
        std::vector<Letter> ls = {neg(res.iota_obj[B.graph().src(e)]), pos(res.edge0[e]),
                                  pos(res.iota_obj[B.graph().tgt(e)])};
        res.iota_edge.push_back(C->add_generator(2, tag("i", B.graph().edge_name(e)), res.vertex,
                                                 C->word_element(Word::make(C->graph(), ls))));
    }
    C->set_normalizer(make_simply_connected_normalizer(C->graph()));

    // dims >= 3: 0&r (boundary 0&dr) and i&r (boundary -(i&dr) + (0&r)^{i&tr})
    for (int dim = 3; dim <= N + 1; ++dim) {
        if (dim <= N)
            for (int g = 0; g < B.generator_count(dim); ++g) {
                const Element& b = B.generator_boundary(dim, g);
                Element mapped;
                if (dim == 3) {
                    std::vector<Dim2Term> ts;
                    for (const Dim2Term& t : b.terms()) ts.push_back({t.sign, res.gen0[0][t.gen], map_word(t.op)});
                    mapped = C->dim2_element(std::move(ts), res.obj0[b.endpoint()]);
                } else {
                    std::vector<std::tuple<int, Word, long long>> ts;
                    for (const auto& [key, coeff] : b.sum())
                        ts.push_back({res.gen0[dim - 3][key.first], map_word(key.second), coeff});
                    mapped = C->module_element(dim - 1, ts, res.obj0[b.endpoint()]);
                }
                res.gen0[dim - 2].push_back(C->add_generator(dim, tag("0", B.generator_name(dim, g)),
                                                             res.obj0[B.generator_endpoint(dim, g)], mapped));
            }
        int src_dim = dim - 1;  // i&r for r of dimension src_dim
        for (int g = 0; g < B.generator_count(src_dim); ++g) {
            int tr = B.generator_endpoint(src_dim, g);
            Letter vl = pos(res.iota_obj[tr]);
            Word iota_tr = Word::make(C->graph(), std::span<const Letter>(&vl, 1));
            Element zero_g = C->act(
                src_dim == 2 ? C->generator_element(2, res.gen0[0][g])
                             : C->generator_element(src_dim, res.gen0[src_dim - 2][g]),
                iota_tr);
            Element body = C->add(C->negate(res.iota_of(B.generator_boundary(src_dim, g))), zero_g);
            res.iota_gen[src_dim - 2].push_back(
                C->add_generator(dim, tag("i", B.generator_name(src_dim, g)), res.vertex, body));
        }
    }

    // the base embeds along 0&-
    std::vector<Word> on_edge;
    for (int e = 0; e < B.edge_count(); ++e) on_edge.push_back(Word::generator(C->graph(), res.edge0[e]));
    std::vector<std::vector<Element>> on_gen(std::max(0, N - 1));
    for (int dim = 2; dim <= N; ++dim)
        for (int g = 0; g < B.generator_count(dim); ++g)
            on_gen[dim - 2].push_back(C->generator_element(dim, res.gen0[dim - 2][g]));
    res.embed = make_morphism(base, C, res.obj0, std::move(on_edge), std::move(on_gen), N);
    return res;
}

Element CylinderResult::iota_of(const Element& e) const {
    const FreeCrossedComplex& C = *cylinder;
    auto end1_word = [&](const Word& w) { return end1.word(w); };
    const Graph& bg = base->graph();
    switch (e.dim()) {
        case 1: {
            // fold: i&(l + rest) = (i&l)^{1&rest} + i&rest
            const auto& ls = e.word().letters();
            int endpoint = obj_end[1][e.word().end()];
            std::vector<Dim2Term> acc;
            Word suffix = Word::identity(endpoint);
            for (size_t i = ls.size(); i-- > 0;) {
                Letter l = ls[i];
                Word letter1 = end1_word(positive(l) ? Word::generator(bg, edge_of(l))
                                                     : invert(Word::generator(bg, edge_of(l))));
                Dim2Term t{positive(l) ? +1 : -1, iota_edge[edge_of(l)],
                           positive(l) ? suffix : compose(letter1, suffix)};
                acc.insert(acc.begin(), t);
                suffix = compose(letter1, suffix);
            }
            return C.dim2_element(std::move(acc), endpoint);
        }
        case 2: {
            std::vector<std::tuple<int, Word, long long>> terms;
            for (const Dim2Term& t : e.terms())
                terms.push_back({iota_gen[0][t.gen], end1_word(t.op), t.sign});
            return C.module_element(3, terms, obj_end[1][e.endpoint()]);
        }
        default: {
            if (e.dim() < 1) throw Error("cylinder: i&x needs dim >= 1");
            std::vector<std::tuple<int, Word, long long>> terms;
            for (const auto& [key, c] : e.sum())
                terms.push_back({iota_gen[e.dim() - 2][key.first], end1_word(key.second), c});
            return C.module_element(e.dim() + 1, terms, obj_end[1][e.endpoint()]);
        }
    }
}

CylinderResult cylinder(const CrsPtr& base, std::size_t budget) {
    const FreeCrossedComplex& B = *base;
    const int N = B.trunc_level();
    auto C = std::make_shared<FreeCrossedComplex>(N + 1);
    CylinderResult res;
    res.base = base;
    res.obj_end.assign(2, {});
    res.edge_end.assign(2, {});
    res.gen_end.assign(2, std::vector<std::vector<int>>(std::max(0, N - 1)));
    res.iota_gen.resize(std::max(0, N));

    const char* side_tag[2] = {"0", "1"};
    for (int s = 0; s < 2; ++s)
        for (int p = 0; p < B.object_count(); ++p)
            res.obj_end[s].push_back(C->add_object(tag(side_tag[s], B.graph().object_name(p))));
    for (int s = 0; s < 2; ++s)
        for (int e = 0; e < B.edge_count(); ++e)
            res.edge_end[s].push_back(C->add_edge(tag(side_tag[s], B.graph().edge_name(e)),
                                                  res.obj_end[s][B.graph().src(e)],
                                                  res.obj_end[s][B.graph().tgt(e)]));
    for (int p = 0; p < B.object_count(); ++p)
        res.iota_obj.push_back(
            C->add_edge(tag("i", B.graph().object_name(p)), res.obj_end[0][p], res.obj_end[1][p]));

    res.cylinder = C;
    auto map_word = [&](int s, const Word& w) {
        if (w.is_identity()) return Word::identity(res.obj_end[s][w.start()]);
        std::vector<Letter> ls;
        for (Letter l : w.letters())
            ls.push_back(positive(l) ? pos(res.edge_end[s][edge_of(l)]) : neg(res.edge_end[s][edge_of(l)]));
        return Word::make(C->graph(), ls);
    };

    if (N >= 2)
        for (int s = 0; s < 2; ++s)
            for (int g = 0; g < B.generator_count(2); ++g)
                res.gen_end[s][0].push_back(
                    C->add_generator(2, tag(side_tag[s], B.generator_name(2, g)),
                                     res.obj_end[s][B.generator_endpoint(2, g)],
                                     C->word_element(map_word(s, B.generator_boundary(2, g).word()))));
    for (int e = 0; e < B.edge_count(); ++e) {
        // delta(i&e) = -1&e - i&se + 0&e + i&te
        std::vector<Letter> ls = {neg(res.edge_end[1][e]), neg(res.iota_obj[B.graph().src(e)]),
                                  pos(res.edge_end[0][e]), pos(res.iota_obj[B.graph().tgt(e)])};
        res.iota_edge.push_back(C->add_generator(2, tag("i", B.graph().edge_name(e)),
                                                 res.obj_end[1][B.graph().tgt(e)],
                                                 C->word_element(Word::make(C->graph(), ls))));
    }
    {
        std::vector<Word> relators;
        for (int g = 0; g < C->generator_count(2); ++g)
            relators.push_back(C->generator_boundary(2, g).word());
        C->set_normalizer(select_normalizer(C->graph(), relators, budget));
    }

    // end morphisms usable from here on (needed by iota_of)
    for (int s = 0; s < 2; ++s) {
        std::vector<Word> on_edge;
        for (int e = 0; e < B.edge_count(); ++e)
            on_edge.push_back(Word::generator(C->graph(), res.edge_end[s][e]));
        std::vector<std::vector<Element>> on_gen(std::max(0, N - 1));
        if (N >= 2)
            for (int g = 0; g < B.generator_count(2); ++g)
                on_gen[0].push_back(C->generator_element(2, res.gen_end[s][0][g]));
        Morphism m;
        m.source = base;
        m.target = C;
        m.on_object = res.obj_end[s];
        m.on_edge = std::move(on_edge);
        m.on_gen = std::move(on_gen);
        m.defined_through = std::min(N, 2);
        (s == 0 ? res.end0 : res.end1) = std::move(m);
    }

    for (int dim = 3; dim <= N + 1; ++dim) {
        if (dim <= N)
            for (int s = 0; s < 2; ++s)
                for (int g = 0; g < B.generator_count(dim); ++g) {
                    const Element& b = B.generator_boundary(dim, g);
                    Element mapped;
                    if (dim == 3) {
                        std::vector<Dim2Term> ts;
                        for (const Dim2Term& t : b.terms())
                            ts.push_back({t.sign, res.gen_end[s][0][t.gen], map_word(s, t.op)});
                        mapped = C->dim2_element(std::move(ts), res.obj_end[s][b.endpoint()]);
                    } else {
                        std::vector<std::tuple<int, Word, long long>> ts;
                        for (const auto& [key, coeff] : b.sum())
                            ts.push_back({res.gen_end[s][dim - 3][key.first], map_word(s, key.second), coeff});
                        mapped = C->module_element(dim - 1, ts, res.obj_end[s][b.endpoint()]);
                    }
                    res.gen_end[s][dim - 2].push_back(
                        C->add_generator(dim, tag(side_tag[s], B.generator_name(dim, g)),
                                         res.obj_end[s][B.generator_endpoint(dim, g)], mapped));
                }
        // extend the end morphisms one dimension before using them in iota_of
        for (int s = 0; s < 2 && dim <= N; ++s) {
            Morphism& m = s == 0 ? res.end0 : res.end1;
            for (int g = 0; g < B.generator_count(dim); ++g)
                m.on_gen[dim - 2].push_back(C->generator_element(dim, res.gen_end[s][dim - 2][g]));
            m.defined_through = dim;
        }
        int src_dim = dim - 1;
        for (int g = 0; g < B.generator_count(src_dim); ++g) {
            int tr = B.generator_endpoint(src_dim, g);
            Letter vl = pos(res.iota_obj[tr]);
            Word iota_tr = Word::make(C->graph(), std::span<const Letter>(&vl, 1));
            // delta(i&r) = -(i&dr) - 1&r + (0&r)^{i&tr}
            Element one_r = src_dim == 2 ? C->generator_element(2, res.gen_end[1][0][g])
                                         : C->generator_element(src_dim, res.gen_end[1][src_dim - 2][g]);
            Element zero_r = src_dim == 2 ? C->generator_element(2, res.gen_end[0][0][g])
                                          : C->generator_element(src_dim, res.gen_end[0][src_dim - 2][g]);
            Element body = C->add(C->add(C->negate(res.iota_of(B.generator_boundary(src_dim, g))),
                                         C->negate(one_r)),
                                  C->act(zero_r, iota_tr));
            res.iota_gen[src_dim - 2].push_back(
                C->add_generator(dim, tag("i", B.generator_name(src_dim, g)), res.obj_end[1][tr], body));
        }
    }
    return res;
}

std::vector<AlgebraicSimplex> algebraic_simplex(int n) {
    if (n < 0) throw Error("algebraic_simplex: n >= 0");
    std::vector<AlgebraicSimplex> out;
    AlgebraicSimplex a0;
    a0.n = 0;
    auto pt = std::make_shared<FreeCrossedComplex>(0);
    a0.sigma = pt->add_object("v0");
    a0.vertices = {a0.sigma};
    pt->set_normalizer(make_simply_connected_normalizer(pt->graph()));
    a0.complex = pt;
    out.push_back(std::move(a0));

    for (int m = 1; m <= n; ++m) {
        const AlgebraicSimplex& prev = out.back();
        ConeResult cr = cone(prev.complex);
        AlgebraicSimplex cur;
        cur.n = m;
        cur.complex = cr.cone;
        for (int v : prev.vertices) cur.vertices.push_back(cr.obj0[v]);
        cur.vertices.push_back(cr.vertex);
        for (size_t k = 0; k < prev.u_edges.size(); ++k) cur.u_edges.push_back(cr.edge0[prev.u_edges[k]]);
        cur.u_edges.push_back(cr.iota_obj[prev.vertices.back()]);  // u_m = i&v_{m-1}
        if (m == 1)
            cur.sigma = cr.iota_obj[prev.sigma];
        else if (m == 2)
            cur.sigma = cr.iota_edge[prev.sigma];
        else
            cur.sigma = cr.iota_gen[m - 3][prev.sigma];
        // faces: d_i sigma^m = i&(d_i sigma^{m-1}) for i < m, 0&sigma^{m-1} for i = m
        cur.faces.resize(m + 1);
        for (int i = 0; i < m; ++i) {
            if (m == 1)
                cur.faces[i] = cr.vertex;  // d_0 sigma^1 = t(iota) = v
            else if (m == 2)
                cur.faces[i] = cr.iota_obj[prev.faces[i]];
            else if (m == 3)
                cur.faces[i] = cr.iota_edge[prev.faces[i]];
            else
                cur.faces[i] = cr.iota_gen[m - 4][prev.faces[i]];
        }
        if (m == 1)
            cur.faces[1] = cr.obj0[prev.sigma];
        else if (m == 2)
            cur.faces[2] = cr.edge0[prev.sigma];
        else
            cur.faces[m] = cr.gen0[m - 3][prev.sigma];
        out.push_back(std::move(cur));
    }
    return out;
}

HalReport hal_consistency_check(int max_dim) {
    if (max_dim < 2) throw Error("hal_consistency_check: max_dim >= 2");
    HalReport rep;
    auto chain = algebraic_simplex(max_dim);
    for (int m = 2; m <= max_dim; ++m) {
        const AlgebraicSimplex& cur = chain[m];
        const AlgebraicSimplex& prev = chain[m - 1];
        const FreeCrossedComplex& C = *cur.complex;
        HalCheck check;
        check.n = m;
        Element cone_delta = C.generator_boundary(m, cur.sigma);

        Element hal;
        if (m == 2) {
            std::vector<Letter> ls = {neg(cur.faces[1]), pos(cur.faces[2]), pos(cur.faces[0])};
            hal = C.word_element(Word::make(C.graph(), ls));
        } else if (m == 3) {
            Word u = Word::generator(C.graph(), cur.u_edges[2]);  // u_3
            auto id_at = [&](int g) { return Word::identity(C.generator_endpoint(2, g)); };
            hal = C.dim2_element({{+1, cur.faces[3], u},
                                  {-1, cur.faces[0], id_at(cur.faces[0])},
                                  {-1, cur.faces[2], id_at(cur.faces[2])},
                                  {+1, cur.faces[1], id_at(cur.faces[1])}});
        } else {
            std::vector<std::tuple<int, Word, long long>> terms;
            terms.push_back({cur.faces[m], Word::generator(C.graph(), cur.u_edges[m - 1]), 1});
            for (int i = 0; i < m; ++i)
                terms.push_back({cur.faces[i], Word::identity(C.generator_endpoint(m - 1, cur.faces[i])),
                                 (m - i) % 2 == 0 ? 1 : -1});
            hal = C.module_element(m - 1, terms);
        }
        if (m == 2)
            check.direct_ok = cone_delta.word() == hal.word();
        else
            check.direct_ok = C.equal(cone_delta, hal);

        // inductive step (m >= 3): delta sigma^m = (0&sigma^{m-1})^{i&v_{m-1}} - i&(delta sigma^{m-1})
        if (m >= 3) {
            ConeResult cr = cone(prev.complex);  // rebuild tags for this step
            Element prev_delta = prev.complex->generator_boundary(m - 1, prev.sigma);
            Element zero_sigma = cr.cone->act(
                m - 1 == 2 ? cr.cone->generator_element(2, cr.gen0[0][prev.sigma])
                           : cr.cone->generator_element(m - 1, cr.gen0[m - 3][prev.sigma]),
                Word::generator(cr.cone->graph(), cr.iota_obj[prev.vertices.back()]));
            Element rhs = cr.cone->add(zero_sigma, cr.cone->negate(cr.iota_of(prev_delta)));
            Element lhs = cr.cone->generator_boundary(
                m, m == 2 ? cr.iota_edge[prev.sigma] : cr.iota_gen[m - 3][prev.sigma]);
            check.inductive_ok = cr.cone->equal(lhs, rhs);
        } else {
            check.inductive_ok = true;
        }
        if (!check.direct_ok || !check.inductive_ok) {
            std::ostringstream os;
            os << "n=" << m << ": cone boundary " << C.to_string(cone_delta) << " vs HAL "
               << C.to_string(hal);
            check.detail = os.str();
        }
        rep.checks.push_back(std::move(check));
    }
    return rep;
}

} // namespace xcc
