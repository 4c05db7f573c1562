#include "xcc/morphism.hpp"

#include <algorithm>
#include <sstream>

namespace xcc {

Word Morphism::word(const Word& w) const {
    if (w.is_identity()) return Word::identity(on_object.at(w.start()));
    Word out = Word::identity(on_object.at(w.start()));
    for (Letter l : w.letters()) {
        const Word& img = on_edge.at(edge_of(l));
        out = compose(out, positive(l) ? img : invert(img));
    }
    return out;
}

Element Morphism::operator()(const Element& e) const {
    const FreeCrossedComplex& tgt = *target;
    if (e.dim() > defined_through)
        throw Error("morphism: no values at dimension " + std::to_string(e.dim()));
    switch (e.dim()) {
        case 0:
            return tgt.object_element(on_object.at(e.object()));
        case 1:
            return tgt.word_element(word(e.word()));
        case 2: {
            Element out = tgt.trivial(2, on_object.at(e.endpoint()));
            for (const Dim2Term& t : e.terms()) {
                Element v = tgt.act(on_gen.at(0).at(t.gen), word(t.op));
                out = tgt.add(out, t.sign > 0 ? v : tgt.negate(v));
            }
            return out;
        }
        default: {
            Element out = tgt.trivial(e.dim(), on_object.at(e.endpoint()));
            for (const auto& [key, c] : e.sum()) {
                Element v = tgt.act(on_gen.at(e.dim() - 2).at(key.first), word(key.second));
                out = tgt.add(out, tgt.scale(v, c));
            }
            return out;
        }
    }
}

MorphismBuildReport build_morphism(CrsPtr source, CrsPtr target, std::vector<int> on_object,
                                   std::vector<Word> on_edge,
                                   std::vector<std::vector<Element>> on_gen, int defined_through) {
    MorphismBuildReport report;
    const FreeCrossedComplex& src = *source;
    const FreeCrossedComplex& tgt = *target;
    auto fail = [&](const std::string& s) { report.violations.push_back(s); };

    if (static_cast<int>(on_object.size()) != src.object_count()) {
        fail("object table is not total");
        return report;
    }
    for (int p = 0; p < src.object_count(); ++p)
        if (on_object[p] < 0 || on_object[p] >= tgt.object_count()) {
            fail("object value out of range at " + src.graph().object_name(p));
            return report;
        }
    if (defined_through >= 1 && static_cast<int>(on_edge.size()) != src.edge_count()) {
        fail("edge table is not total");
        return report;
    }

    Morphism m{std::move(source), std::move(target), std::move(on_object), std::move(on_edge),
               std::move(on_gen), defined_through};

    for (int e = 0; e < src.edge_count() && defined_through >= 1; ++e) {
        const Word& img = m.on_edge[e];
        if (img.start() != m.on_object[src.graph().src(e)])
            fail("sfx != fsx at edge " + src.graph().edge_name(e));
        if (img.end() != m.on_object[src.graph().tgt(e)])
            fail("tfx != ftx at edge " + src.graph().edge_name(e));
    }
    for (int dim = 2; dim <= defined_through; ++dim) {
        if (static_cast<int>(m.on_gen.size()) < dim - 1 ||
            static_cast<int>(m.on_gen[dim - 2].size()) != src.generator_count(dim)) {
            fail("value table is not total in dimension " + std::to_string(dim));
            return report;
        }
        for (int g = 0; g < src.generator_count(dim); ++g) {
            const Element& v = m.on_gen[dim - 2][g];
            const std::string label = src.generator_name(dim, g);
            if (v.dim() != dim) {
                fail("value of " + label + " has wrong dimension");
                continue;
            }
            if (v.endpoint() != m.on_object[src.generator_endpoint(dim, g)]) {
                fail("tfx != ftx at generator " + label);
                continue;
            }
            Element lhs = tgt.boundary(v);
            Element rhs = m(src.generator_boundary(dim, g));
            if (!tgt.equal(lhs, rhs))
                fail("dfx != fdx at generator " + label + ": " + tgt.to_string(lhs) +
                     " vs " + tgt.to_string(rhs));
        }
    }
    if (!report.violations.empty()) return report;
    report.morphism = std::move(m);
    return report;
}

Morphism make_morphism(CrsPtr source, CrsPtr target, std::vector<int> on_object,
                       std::vector<Word> on_edge, std::vector<std::vector<Element>> on_gen,
                       int defined_through) {
    MorphismBuildReport r = build_morphism(std::move(source), std::move(target), std::move(on_object),
                                           std::move(on_edge), std::move(on_gen), defined_through);
    if (!r.ok()) {
        std::ostringstream os;
        os << "morphism violates its defining conditions:";
        for (const auto& v : r.violations) os << "\n  " << v;
        throw Error(os.str());
    }
    return *std::move(r.morphism);
}

Morphism identity_morphism(const CrsPtr& c) {
    Morphism m;
    m.source = m.target = c;
    m.defined_through = c->trunc_level();
    m.on_object.resize(c->object_count());
    for (int p = 0; p < c->object_count(); ++p) m.on_object[p] = p;
    m.on_edge.resize(c->edge_count());
    for (int e = 0; e < c->edge_count(); ++e) m.on_edge[e] = Word::generator(c->graph(), e);
    if (c->trunc_level() >= 2) m.on_gen.resize(c->trunc_level() - 1);
    for (int dim = 2; dim <= c->trunc_level(); ++dim)
        for (int g = 0; g < c->generator_count(dim); ++g)
            m.on_gen[dim - 2].push_back(c->generator_element(dim, g));
    return m;
}

Morphism compose_morphisms(const Morphism& f, const Morphism& g) {
    if (f.target.get() != g.source.get())
        throw Error("compose_morphisms: middle complexes differ");
    Morphism m;
    m.source = f.source;
    m.target = g.target;
    m.defined_through = std::min(f.defined_through, g.defined_through);
    for (int p : f.on_object) m.on_object.push_back(g.on_object.at(p));
    for (const Word& w : f.on_edge) m.on_edge.push_back(g.word(w));
    m.on_gen.resize(std::max(0, m.defined_through - 1));
    for (int dim = 2; dim <= m.defined_through; ++dim)
        for (const Element& v : f.on_gen[dim - 2]) m.on_gen[dim - 2].push_back(g(v));
    return m;
}

BasisMapExtension::BasisMapExtension(Morphism f, std::vector<Element> edge_values,
                                     std::vector<std::vector<Element>> gen_values)
    : f_(std::move(f)), edge_values_(std::move(edge_values)), gen_values_(std::move(gen_values)) {}

bool BasisMapExtension::has_dim(int dim) const {
    if (dim == 1) return !edge_values_.empty() || f_.source->edge_count() == 0;
    return static_cast<int>(gen_values_.size()) >= dim - 1 &&
           (!gen_values_[dim - 2].empty() || f_.source->generator_count(dim) == 0);
}

Element BasisMapExtension::on_word(const Word& w) const {
    const FreeCrossedComplex& tgt = *f_.target;
    const Graph& g = f_.source->graph();
    // fold from the right: h(l + rest) = h(l)^{f rest} + h(rest)
    Element acc = tgt.trivial(edge_values_.empty() ? 2 : edge_values_.front().dim(),
                              f_.on_object.at(w.end()));
    Word f_suffix = Word::identity(f_.on_object.at(w.end()));
    const auto& ls = w.letters();
    for (size_t i = ls.size(); i-- > 0;) {
        Letter l = ls[i];
        Element hl = edge_values_.at(edge_of(l));
        Word letter_word = positive(l) ? Word::generator(g, edge_of(l))
                                       : invert(Word::generator(g, edge_of(l)));
        if (!positive(l)) hl = tgt.negate(tgt.act(hl, f_.word(letter_word)));
        acc = tgt.add(tgt.act(hl, f_suffix), acc);
        f_suffix = compose(f_.word(letter_word), f_suffix);
    }
    return acc;
}

Element BasisMapExtension::on_element(const Element& e) const {
    if (e.dim() == 1) return on_word(e.word());
    if (e.dim() < 1) throw Error("extension: defined for dimensions >= 1");
    const FreeCrossedComplex& tgt = *f_.target;
    if (!has_dim(e.dim()))
        throw Error("extension: no values at dimension " + std::to_string(e.dim()));
    const auto& values = gen_values_.at(e.dim() - 2);
    int value_dim = e.dim() + 1;
    for (const Element& v : values)
        if (v.dim() >= 0) { value_dim = v.dim(); break; }
    Element out = tgt.trivial(value_dim, f_.on_object.at(e.endpoint()));
    if (e.dim() == 2) {
        for (const Dim2Term& t : e.terms()) {
            Element v = tgt.act(values.at(t.gen), f_.word(t.op));
            out = tgt.add(out, t.sign > 0 ? v : tgt.negate(v));
        }
        return out;
    }
    for (const auto& [key, c] : e.sum()) {
        Element v = tgt.act(values.at(key.first), f_.word(key.second));
        out = tgt.add(out, tgt.scale(v, c));
    }
    return out;
}

bool GradedGenSet::contains_edge(int e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool GradedGenSet::contains_gen(int dim, int g) const {
    if (dim < 2 || dim - 2 >= static_cast<int>(gens.size())) return false;
    return std::find(gens[dim - 2].begin(), gens[dim - 2].end(), g) != gens[dim - 2].end();
}

namespace {

Word project_word(const Graph& quotient_graph, const std::vector<int>& edge_map, const Word& w) {
    std::vector<Letter> kept;
    for (Letter l : w.letters()) {
        int ne = edge_map[edge_of(l)];
        if (ne < 0) continue;
        kept.push_back(positive(l) ? pos(ne) : neg(ne));
    }
    if (kept.empty()) return Word::identity(w.start());  // object ids unchanged
    return Word::make(quotient_graph, kept);
}

}  // namespace

KillResult kill_basis(const CrsPtr& c, const GradedGenSet& s, NormalizerPtr normalizer_override,
                      std::size_t budget) {
    const FreeCrossedComplex& C = *c;
    for (int e : s.edges)
        if (C.graph().src(e) != C.graph().tgt(e))
            throw Error("kill_basis: dim-1 member '" + C.graph().edge_name(e) + "' is not a loop");

    auto q = std::make_shared<FreeCrossedComplex>(C.trunc_level());
    KillResult res;
    for (int p = 0; p < C.object_count(); ++p) {
        q->add_object(C.graph().object_name(p));
        res.object_map.push_back(p);
    }
    res.edge_map.assign(C.edge_count(), -1);
    for (int e = 0; e < C.edge_count(); ++e) {
        if (s.contains_edge(e)) continue;
        res.edge_map[e] = q->add_edge(C.graph().edge_name(e), C.graph().src(e), C.graph().tgt(e));
    }

    // normal-structure check and quotient construction go bottom-up: the
    // boundary of each killed generator must vanish once everything killed
    // below it is gone.
    res.gen_map.assign(std::max(0, C.trunc_level() - 1), {});
    for (int dim = 2; dim <= C.trunc_level(); ++dim) {
        if (dim == 3) {
            // dim-2 boundaries are in place; the quotient's pi1 is presented
            // by the surviving edges and projected relators
            if (normalizer_override) {
                q->set_normalizer(normalizer_override);
            } else {
                std::vector<Word> relators;
                for (int g = 0; g < q->generator_count(2); ++g)
                    relators.push_back(q->generator_boundary(2, g).word());
                q->set_normalizer(select_normalizer(q->graph(), relators, budget));
            }
        }
        res.gen_map[dim - 2].assign(C.generator_count(dim), -1);
        for (int g = 0; g < C.generator_count(dim); ++g) {
            const Element& b = C.generator_boundary(dim, g);
            // project the boundary into the quotient-so-far
            Element pb;
            if (dim == 2) {
                pb = q->word_element(project_word(q->graph(), res.edge_map, b.word()));
            } else if (dim == 3) {
                std::vector<Dim2Term> terms;
                for (const Dim2Term& t : b.terms()) {
                    int ng = res.gen_map[0][t.gen];
                    if (ng < 0) continue;
                    terms.push_back({t.sign, ng, project_word(q->graph(), res.edge_map, t.op)});
                }
                pb = q->dim2_element(std::move(terms), b.endpoint());
            } else {
                std::vector<std::tuple<int, Word, long long>> terms;
                for (const auto& [key, coeff] : b.sum()) {
                    int ng = res.gen_map[dim - 3][key.first];
                    if (ng < 0) continue;
                    terms.push_back({ng, project_word(q->graph(), res.edge_map, key.second), coeff});
                }
                pb = q->module_element(dim - 1, terms, b.endpoint());
            }
            if (s.contains_gen(dim, g)) {
                if (!q->is_trivial(pb))
                    throw Error("kill_basis: '" + C.generator_name(dim, g) +
                                "' is not a normal structure member; its boundary survives as " +
                                q->to_string(pb));
                continue;
            }
            res.gen_map[dim - 2][g] =
                q->add_generator(dim, C.generator_name(dim, g), C.generator_endpoint(dim, g), pb);
        }
    }
    if (C.trunc_level() < 3 && !normalizer_override) {
        std::vector<Word> relators;
        for (int g = 0; g < q->generator_count(2); ++g)
            relators.push_back(q->generator_boundary(2, g).word());
        q->set_normalizer(select_normalizer(q->graph(), relators, budget));
    } else if (C.trunc_level() < 3 && normalizer_override) {
        q->set_normalizer(normalizer_override);
    }

    CrsPtr quotient = q;
    // projection morphism: killed members go to the trivial element
    std::vector<Word> on_edge;
    for (int e = 0; e < C.edge_count(); ++e) {
        int ne = res.edge_map[e];
        on_edge.push_back(ne >= 0 ? Word::generator(quotient->graph(), ne)
                                  : Word::identity(C.graph().src(e)));
    }
    std::vector<std::vector<Element>> on_gen(std::max(0, C.trunc_level() - 1));
    for (int dim = 2; dim <= C.trunc_level(); ++dim)
        for (int g = 0; g < C.generator_count(dim); ++g) {
            int ng = res.gen_map[dim - 2][g];
            on_gen[dim - 2].push_back(ng >= 0 ? quotient->generator_element(dim, ng)
                                              : quotient->trivial(dim, C.generator_endpoint(dim, g)));
        }
    res.projection = make_morphism(c, quotient, res.object_map, std::move(on_edge), std::move(on_gen),
                                   C.trunc_level());
    res.quotient = quotient;
    return res;
}

CrsPtr truncate(const CrsPtr& c, int level) {
    const FreeCrossedComplex& C = *c;
    if (level > C.trunc_level()) throw Error("truncate: level exceeds the complex's truncation");
    auto out = std::make_shared<FreeCrossedComplex>(level);
    for (int p = 0; p < C.object_count(); ++p) out->add_object(C.graph().object_name(p));
    for (int e = 0; e < C.edge_count(); ++e)
        out->add_edge(C.graph().edge_name(e), C.graph().src(e), C.graph().tgt(e));
    out->set_normalizer(C.normalizer());
    for (int dim = 2; dim <= level; ++dim)
        for (int g = 0; g < C.generator_count(dim); ++g)
            out->add_generator(dim, C.generator_name(dim, g), C.generator_endpoint(dim, g),
                               C.generator_boundary(dim, g));
    return out;
}

} // namespace xcc
