#include "xcc/crossed_complex.hpp"

#include <algorithm>
#include <sstream>

namespace xcc {

int Element::endpoint() const {
    switch (dim_) {
        case 0:
            return object_;
        case 1:
            return word_.end();
        default:
            return object_;
    }
}

bool Element::is_empty() const {
    switch (dim_) {
        case 0:
            return false;
        case 1:
            return word_.is_identity();
        case 2:
            return terms_.empty();
        default:
            return sum_.empty();
    }
}

FreeCrossedComplex::FreeCrossedComplex(int trunc_level) : trunc_(trunc_level) {
    if (trunc_level < 0) throw Error("crossed complex: negative truncation");
    if (trunc_level >= 2) gens_.resize(trunc_level - 1);
    normalizer_ = make_free_normalizer();
}

void FreeCrossedComplex::check_dim(int dim, int lo) const {
    if (dim < lo || dim > trunc_)
        throw Error("crossed complex: dimension " + std::to_string(dim) + " out of range");
}

int FreeCrossedComplex::add_generator(int dim, const std::string& name, int endpoint,
                                      const Element& boundary) {
    check_dim(dim, 2);
    if (endpoint < 0 || endpoint >= graph_.object_count())
        throw Error("generator '" + name + "': endpoint out of range");
    if (boundary.dim() != dim - 1)
        throw Error("generator '" + name + "': boundary has wrong dimension");
    if (dim == 2) {
        const Word& w = boundary.word();
        if (w.start() != w.end() || w.end() != endpoint)
            throw Error("generator '" + name + "': dim-2 boundary must be a loop at the base point");
    } else {
        if (boundary.endpoint() != endpoint)
            throw Error("generator '" + name + "': boundary endpoint differs from t(g)");
    }
    if (find_generator(dim, name) >= 0) throw Error("duplicate generator name '" + name + "'");
    gens_[dim - 2].push_back({name, endpoint, boundary});
    return static_cast<int>(gens_[dim - 2].size()) - 1;
}

int FreeCrossedComplex::generator_count(int dim) const {
    if (dim < 2 || dim > trunc_) return 0;
    return static_cast<int>(gens_[dim - 2].size());
}

const FreeCrossedComplex::Generator& FreeCrossedComplex::gen(int dim, int g) const {
    check_dim(dim, 2);
    return gens_.at(dim - 2).at(g);
}

const std::string& FreeCrossedComplex::generator_name(int dim, int g) const { return gen(dim, g).name; }
int FreeCrossedComplex::generator_endpoint(int dim, int g) const { return gen(dim, g).endpoint; }
const Element& FreeCrossedComplex::generator_boundary(int dim, int g) const { return gen(dim, g).boundary; }

int FreeCrossedComplex::find_generator(int dim, const std::string& name) const {
    if (dim < 2 || dim > trunc_) return -1;
    const auto& v = gens_[dim - 2];
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i].name == name) return i;
    return -1;
}

Element FreeCrossedComplex::trivial(int dim, int at) const {
    if (at < 0 || at >= graph_.object_count()) throw Error("trivial: object out of range");
    Element e;
    e.dim_ = dim;
    if (dim == 0) {
        e.object_ = at;
    } else if (dim == 1) {
        e.word_ = Word::identity(at);
    } else {
        e.object_ = at;
    }
    return e;
}

Element FreeCrossedComplex::object_element(int p) const { return trivial(0, p); }

Element FreeCrossedComplex::word_element(const Word& w) const {
    Element e;
    e.dim_ = 1;
    e.word_ = w;
    return e;
}

Element FreeCrossedComplex::generator_element(int dim, int g) const {
    check_dim(dim, 2);
    int tp = gen(dim, g).endpoint;
    if (dim == 2) return dim2_element({{+1, g, Word::identity(tp)}});
    return module_element(dim, {{g, Word::identity(tp), 1}});
}

Element FreeCrossedComplex::dim2_element(std::vector<Dim2Term> terms, int endpoint_if_empty) const {
    Element e;
    e.dim_ = 2;
    if (terms.empty()) {
        if (endpoint_if_empty < 0) throw Error("dim2_element: empty term list needs an endpoint");
        e.object_ = endpoint_if_empty;
        return e;
    }
    int end = terms.front().op.end();
    for (const Dim2Term& t : terms) {
        if (t.sign != 1 && t.sign != -1) throw Error("dim2_element: sign must be +-1");
        if (t.gen < 0 || t.gen >= generator_count(2)) throw Error("dim2_element: unknown generator");
        if (t.op.start() != gen(2, t.gen).endpoint)
            throw Error("dim2_element: operator does not start at t(gen)");
        if (t.op.end() != end) throw Error("dim2_element: operators end at different objects");
    }
    e.object_ = end;
    e.terms_ = std::move(terms);
    return e;
}

Element FreeCrossedComplex::module_element(int dim,
                                           const std::vector<std::tuple<int, Word, long long>>& terms,
                                           int endpoint_if_empty) const {
    check_dim(dim, 3);
    Element e;
    e.dim_ = dim;
    int end = endpoint_if_empty;
    for (const auto& [g, w, c] : terms) {
        if (g < 0 || g >= generator_count(dim)) throw Error("module_element: unknown generator");
        if (w.start() != gen(dim, g).endpoint)
            throw Error("module_element: operator does not start at t(gen)");
        if (end < 0) end = w.end();
        if (w.end() != end) throw Error("module_element: operators end at different objects");
        if (c == 0) continue;
        Word cw = normalizer_->canon(w);
        e.sum_[{g, cw}] += c;
    }
    if (end < 0) throw Error("module_element: empty term list needs an endpoint");
    std::erase_if(e.sum_, [](const auto& kv) { return kv.second == 0; });
    e.object_ = end;
    return e;
}

Element FreeCrossedComplex::boundary(const Element& e) const {
    if (e.dim() < 2) throw Error("boundary: defined for dimensions >= 2 only");
    if (e.dim() == 2) {
        // delta2(g^w) = -w + delta2(g) + w, concatenated over the terms
        Word out = Word::identity(e.endpoint());
        for (const Dim2Term& t : e.terms_) {
            Word conj = compose(invert(t.op), compose(t.sign > 0 ? gen(2, t.gen).boundary.word()
                                                                 : invert(gen(2, t.gen).boundary.word()),
                                                      t.op));
            out = compose(out, conj);
        }
        return word_element(out);
    }
    if (e.dim() == 3) {
        // image lies in Ker delta2, which is central; a fixed term order
        // is a sound representative
        Element out = trivial(2, e.endpoint());
        for (const auto& [key, c] : e.sum_) {
            Element base = act(gen(3, key.first).boundary, key.second);
            Element piece = c > 0 ? base : negate(base);
            for (long long i = 0; i < (c > 0 ? c : -c); ++i) out = add(out, piece);
        }
        return out;
    }
    Element out = trivial(e.dim() - 1, e.endpoint());
    for (const auto& [key, c] : e.sum_) {
        Element base = act(gen(e.dim(), key.first).boundary, key.second);
        for (auto& [k2, c2] : base.sum_) out.sum_[k2] += c2 * c;
    }
    std::erase_if(out.sum_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Element FreeCrossedComplex::act(const Element& e, const Word& a) const {
    if (e.dim() < 2) throw Error("act: defined for dimensions >= 2 only");
    if (a.start() != e.endpoint()) throw Error("act: operator does not start at the element's endpoint");
    Element out;
    out.dim_ = e.dim();
    out.object_ = a.end();
    if (e.dim() == 2) {
        out.terms_ = e.terms_;
        for (Dim2Term& t : out.terms_) t.op = compose(t.op, a);
        return out;
    }
    for (const auto& [key, c] : e.sum_) out.sum_[{key.first, normalizer_->canon(compose(key.second, a))}] += c;
    std::erase_if(out.sum_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Element FreeCrossedComplex::add(const Element& a, const Element& b) const {
    if (a.dim() != b.dim()) throw Error("add: dimension mismatch");
    if (a.dim() == 0) throw Error("add: objects do not add");
    if (a.dim() == 1) return word_element(compose(a.word(), b.word()));
    if (a.endpoint() != b.endpoint()) throw Error("add: endpoint mismatch");
    Element out = a;
    if (a.dim() == 2) {
        out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
        return out;
    }
    for (const auto& [key, c] : b.sum_) out.sum_[key] += c;
    std::erase_if(out.sum_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Element FreeCrossedComplex::negate(const Element& e) const {
    if (e.dim() == 0) throw Error("negate: objects do not negate");
    Element out = e;
    if (e.dim() == 1) {
        out.word_ = invert(e.word());
        return out;
    }
    if (e.dim() == 2) {
        std::reverse(out.terms_.begin(), out.terms_.end());
        for (Dim2Term& t : out.terms_) t.sign = -t.sign;
        return out;
    }
    for (auto& [key, c] : out.sum_) c = -c;
    return out;
}

Element FreeCrossedComplex::scale(const Element& e, long long k) const {
    if (e.dim() < 2) throw Error("scale: defined for dimensions >= 2 only");
    if (e.dim() == 2) {
        Element out = trivial(2, e.endpoint());
        Element part = k >= 0 ? e : negate(e);
        for (long long i = 0; i < (k >= 0 ? k : -k); ++i) out = add(out, part);
        return out;
    }
    Element out = e;
    if (k == 0) {
        out.sum_.clear();
        return out;
    }
    for (auto& [key, c] : out.sum_) c *= k;
    return out;
}

ModuleSum FreeCrossedComplex::abelianize(const Element& e) const {
    if (e.dim() != 2) throw Error("abelianize: dim-2 elements only");
    ModuleSum out;
    for (const Dim2Term& t : e.terms_) out[{t.gen, normalizer_->canon(t.op)}] += t.sign;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool FreeCrossedComplex::equal(const Element& a, const Element& b) const {
    if (a.dim() != b.dim()) throw Error("equal: incomparable grades");
    switch (a.dim()) {
        case 0:
            return a.object() == b.object();
        case 1:
            return a.word() == b.word();
        case 2:
            if (a.endpoint() != b.endpoint()) return false;
            if (boundary(a).word() != boundary(b).word()) return false;
            return abelianize(a) == abelianize(b);
        default:
            return a.endpoint() == b.endpoint() && a.sum() == b.sum();
    }
}

bool FreeCrossedComplex::is_trivial(const Element& e) const {
    if (e.dim() == 0) return false;
    if (e.dim() == 1) return e.word().is_identity();
    return equal(e, trivial(e.dim(), e.endpoint()));
}

std::string FreeCrossedComplex::to_string(const Element& e) const {
    std::ostringstream os;
    switch (e.dim()) {
        case 0:
            return graph_.object_name(e.object());
        case 1:
            return xcc::to_string(graph_, e.word());
        case 2: {
            if (e.terms_.empty()) return "0_" + graph_.object_name(e.endpoint());
            bool first = true;
            for (const Dim2Term& t : e.terms_) {
                os << (t.sign > 0 ? (first ? "" : " + ") : (first ? "- " : " - "));
                os << gen(2, t.gen).name;
                if (!t.op.is_identity()) os << "^[" << xcc::to_string(graph_, t.op) << "]";
                first = false;
            }
            return os.str();
        }
        default: {
            if (e.sum_.empty()) return "0_" + graph_.object_name(e.endpoint());
            bool first = true;
            for (const auto& [key, c] : e.sum_) {
                long long m = c;
                os << (m > 0 ? (first ? "" : " + ") : (first ? "- " : " - "));
                if (m < 0) m = -m;
                if (m != 1) os << m << "*";
                os << gen(e.dim(), key.first).name;
                if (!key.second.is_identity()) os << "^[" << xcc::to_string(graph_, key.second) << "]";
                first = false;
            }
            return os.str();
        }
    }
}

std::vector<std::string> audit_cc1(const FreeCrossedComplex& c) {
    std::vector<std::string> out;
    for (int dim = 2; dim <= c.trunc_level(); ++dim) {
        for (int g = 0; g < c.generator_count(dim); ++g) {
            const Element& b = c.generator_boundary(dim, g);
            const std::string label = c.generator_name(dim, g);
            if (dim == 2) {
                const Word& w = b.word();
                if (w.start() != w.end())
                    out.push_back("sd2 != td2 at generator " + label);
                if (w.end() != c.generator_endpoint(dim, g))
                    out.push_back("t(d2 g) != t(g) at generator " + label);
            } else {
                if (b.endpoint() != c.generator_endpoint(dim, g))
                    out.push_back("t(d g) != t(g) at generator " + label);
                Element dd = c.boundary(b);
                if (!c.is_trivial(dd))
                    out.push_back("dd != 0 at generator " + label + ": " + c.to_string(dd));
            }
        }
    }
    return out;
}

} // namespace xcc
