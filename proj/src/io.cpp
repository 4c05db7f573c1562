#include "xcc/io.hpp"

#include <json.hpp>

#include <sstream>

namespace xcc {

using json = nlohmann::ordered_json;

// ------------------------------------------------------------ simplicial

std::string serialize(const SimplicialSet& K) {
    json doc;
    doc["trunc_level"] = K.trunc_level();
    json simplices = json::object();
    for (int n = 0; n <= K.trunc_level(); ++n) {
        json arr = json::array();
        for (int i = 0; i < K.count(n); ++i) arr.push_back(K.name(n, i));
        simplices[std::to_string(n)] = arr;
    }
    doc["simplices"] = simplices;
    json faces = json::object();
    json degens = json::object();
    json nondeg = json::array();
    for (int n = 0; n <= K.trunc_level(); ++n)
        for (int i = 0; i < K.count(n); ++i) {
            const std::string& nm = K.name(n, i);
            if (faces.contains(nm) || degens.contains(nm))
                throw Error("serialize: simplex name '" + nm + "' is not unique across dimensions");
            if (n >= 1) {
                json f = json::array();
                for (int k = 0; k <= n; ++k) f.push_back(K.name(n - 1, K.face(n, i, k)));
                faces[nm] = f;
            }
            if (K.has_degeneracies(n)) {
                json d = json::array();
                for (int k = 0; k <= n; ++k) d.push_back(K.name(n + 1, K.degeneracy(n, i, k)));
                degens[nm] = d;
            } else {
                degens[nm] = nullptr;
            }
            if (K.claimed_nondegenerate(n, i)) nondeg.push_back(nm);
        }
    doc["faces"] = faces;
    doc["degeneracies"] = degens;
    doc["nondegenerate"] = nondeg;
    return doc.dump(2) + "\n";
}

SimplicialSet parse_simplicial_set_doc(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("simplicial set: invalid JSON: ") + ex.what());
    }
    auto need = [&](const char* field) -> const json& {
        if (!doc.contains(field)) throw ParseError(std::string("simplicial set: missing field '") + field + "'");
        return doc[field];
    };
    int N = need("trunc_level").get<int>();
    if (N < 0) throw ParseError("simplicial set: negative trunc_level");
    SimplicialSet K(N);
    const json& simplices = need("simplices");
    struct Loc {
        int dim;
        int idx;
    };
    std::map<std::string, Loc> where;
    for (int n = 0; n <= N; ++n) {
        std::string key = std::to_string(n);
        if (!simplices.contains(key)) continue;
        for (const auto& nm : simplices[key]) {
            std::string s = nm.get<std::string>();
            if (where.count(s))
                throw ParseError("simplicial set: name '" + s + "' appears in two dimensions");
            where[s] = {n, K.add_simplex(n, s)};
        }
    }
    const json& faces = need("faces");
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i < K.count(n); ++i) {
            const std::string& nm = K.name(n, i);
            if (!faces.contains(nm))
                throw ParseError("simplicial set: simplex '" + nm + "' has no face entry");
            const json& arr = faces[nm];
            if (!arr.is_array() || static_cast<int>(arr.size()) != n + 1)
                throw ParseError("simplicial set: face array of '" + nm + "' must have " +
                                 std::to_string(n + 1) + " entries");
            for (int k = 0; k <= n; ++k) {
                std::string f = arr[k].get<std::string>();
                auto it = where.find(f);
                if (it == where.end())
                    throw ParseError("simplicial set: face " + std::to_string(k) + " of '" + nm +
                                     "' names unknown simplex '" + f + "'");
                if (it->second.dim != n - 1)
                    throw ParseError("simplicial set: face " + std::to_string(k) + " of '" + nm +
                                     "' points to dimension " + std::to_string(it->second.dim) +
                                     ", expected " + std::to_string(n - 1));
                K.set_face(n, i, k, it->second.idx);
            }
        }
    const json& degens = need("degeneracies");
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i < K.count(n); ++i) {
            const std::string& nm = K.name(n, i);
            if (!degens.contains(nm))
                throw ParseError("simplicial set: simplex '" + nm + "' has no degeneracy entry");
            const json& arr = degens[nm];
            if (!K.has_degeneracies(n)) {
                if (!arr.is_null())
                    throw ParseError("simplicial set: '" + nm + "' is above truncation; expected null");
                continue;
            }
            if (!arr.is_array() || static_cast<int>(arr.size()) != n + 1)
                throw ParseError("simplicial set: degeneracy array of '" + nm + "' must have " +
                                 std::to_string(n + 1) + " entries");
            for (int k = 0; k <= n; ++k) {
                std::string d = arr[k].get<std::string>();
                auto it = where.find(d);
                if (it == where.end())
                    throw ParseError("simplicial set: degeneracy " + std::to_string(k) + " of '" + nm +
                                     "' names unknown simplex '" + d + "'");
                if (it->second.dim != n + 1)
                    throw ParseError("simplicial set: degeneracy " + std::to_string(k) + " of '" + nm +
                                     "' points to dimension " + std::to_string(it->second.dim) +
                                     ", expected " + std::to_string(n + 1));
                K.set_degeneracy(n, i, k, it->second.idx);
            }
        }
    const json& nondeg = need("nondegenerate");
    std::vector<std::vector<bool>> claim(N + 1);
    for (int n = 0; n <= N; ++n) claim[n].assign(K.count(n), false);
    for (const auto& nm : nondeg) {
        std::string s = nm.get<std::string>();
        auto it = where.find(s);
        if (it == where.end())
            throw ParseError("simplicial set: nondegenerate list names unknown simplex '" + s + "'");
        claim[it->second.dim][it->second.idx] = true;
    }
    K.claim_nondegenerate(claim);
    return K;
}

// --------------------------------------------------------------- elements

std::string element_to_string(const FreeCrossedComplex& c, const Element& e) {
    if (e.dim() == 0) return c.graph().object_name(e.object());
    if (e.dim() == 1) return to_string(c.graph(), e.word());
    if (e.is_empty()) return "0_" + c.graph().object_name(e.endpoint());
    std::ostringstream os;
    bool first = true;
    auto put_term = [&](long long coeff, int gen, const Word& op) {
        os << (coeff > 0 ? (first ? "" : " + ") : (first ? "- " : " - "));
        long long m = coeff > 0 ? coeff : -coeff;
        if (m != 1) os << m << "*";
        os << c.generator_name(e.dim(), gen);
        if (!op.is_identity()) os << "^[" << to_string(c.graph(), op) << "]";
        first = false;
    };
    if (e.dim() == 2)
        for (const Dim2Term& t : e.terms()) put_term(t.sign, t.gen, t.op);
    else
        for (const auto& [key, coeff] : e.sum()) put_term(coeff, key.first, key.second);
    return os.str();
}

namespace {

struct Tok {
    enum Kind { Sign, Number, Star, Name, OpBegin, OpEnd, End } kind;
    std::string text;
};

std::vector<Tok> lex_element(const std::string& s) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '+' || ch == '-') {
            out.push_back({Tok::Sign, std::string(1, ch)});
            ++i;
        } else if (ch == '*') {
            out.push_back({Tok::Star, "*"});
            ++i;
        } else if (ch == '^') {
            if (i + 1 >= s.size() || s[i + 1] != '[')
                throw ParseError("element: expected '[' after '^'");
            size_t j = s.find(']', i + 2);
            if (j == std::string::npos) throw ParseError("element: unterminated operator");
            out.push_back({Tok::OpBegin, s.substr(i + 2, j - i - 2)});
            i = j + 1;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '*') {
                // a digit run is a weight only directly before '*'
                out.push_back({Tok::Number, s.substr(i, j - i)});
                i = j;
            } else if (j < s.size() && s[j] == '_') {
                // "0_<object>" trivial-element literal; object names are
                // free-form up to whitespace
                size_t k = j + 1;
                while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
                out.push_back({Tok::Name, s.substr(i, k - i)});
                i = k;
            } else {
                // otherwise part of a name (builder names may start with
                // digits)
                size_t k = i;
                while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k])) &&
                       s[k] != '^' && s[k] != '*' && s[k] != '+' && s[k] != '-')
                    ++k;
                out.push_back({Tok::Name, s.substr(i, k - i)});
                i = k;
            }
        } else {
            size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '^' &&
                   s[j] != '*' && s[j] != '+' && s[j] != '-')
                ++j;
            out.push_back({Tok::Name, s.substr(i, j - i)});
            i = j;
        }
    }
    out.push_back({Tok::End, ""});
    return out;
}

}  // namespace

Element parse_element(const FreeCrossedComplex& c, int dim, const std::string& text) {
    if (dim == 0) {
        int p = c.graph().find_object(text);
        if (p < 0) throw ParseError("element: unknown object '" + text + "'");
        return c.object_element(p);
    }
    if (dim == 1) return c.word_element(parse_word(c.graph(), text));

    auto toks = lex_element(text);
    size_t i = 0;
    // trivial literal
    if (toks[0].kind == Tok::Name && toks[0].text.rfind("0_", 0) == 0 && toks[1].kind == Tok::End) {
        std::string obj = toks[0].text.substr(2);
        int p = c.graph().find_object(obj);
        if (p < 0) throw ParseError("element: unknown object '" + obj + "'");
        return c.trivial(dim, p);
    }
    std::vector<Dim2Term> terms2;
    std::vector<std::tuple<int, Word, long long>> terms;
    int endpoint = -1;
    while (toks[i].kind != Tok::End) {
        long long sign = 1;
        if (toks[i].kind == Tok::Sign) {
            sign = toks[i].text == "-" ? -1 : 1;
            ++i;
        }
        long long mag = 1;
        if (toks[i].kind == Tok::Number) {
            mag = std::stoll(toks[i].text);
            ++i;
            if (toks[i].kind == Tok::Star) ++i;
        }
        if (toks[i].kind != Tok::Name) throw ParseError("element: expected generator name");
        int g = c.find_generator(dim, toks[i].text);
        if (g < 0) throw ParseError("element: unknown dim-" + std::to_string(dim) + " generator '" +
                                    toks[i].text + "'");
        ++i;
        Word op = Word::identity(c.generator_endpoint(dim, g));
        if (toks[i].kind == Tok::OpBegin) {
            op = parse_word(c.graph(), toks[i].text);
            ++i;
        }
        endpoint = op.end();
        if (dim == 2) {
            if (mag != 1) throw ParseError("element: dim-2 terms carry signs, not weights");
            terms2.push_back({static_cast<int>(sign), g, op});
        } else {
            terms.push_back({g, op, sign * mag});
        }
    }
    if (dim == 2) return c.dim2_element(std::move(terms2), endpoint);
    return c.module_element(dim, terms, endpoint);
}

// --------------------------------------------------------- crossed complex

std::string serialize(const FreeCrossedComplex& c) {
    json doc;
    doc["trunc_level"] = c.trunc_level();
    json objects = json::array();
    for (int p = 0; p < c.object_count(); ++p) objects.push_back(c.graph().object_name(p));
    doc["objects"] = objects;
    json edges = json::array();
    for (int e = 0; e < c.edge_count(); ++e)
        edges.push_back(json{{"name", c.graph().edge_name(e)},
                             {"src", c.graph().object_name(c.graph().src(e))},
                             {"tgt", c.graph().object_name(c.graph().tgt(e))}});
    doc["edges"] = edges;
    json basis = json::object();
    for (int dim = 2; dim <= c.trunc_level(); ++dim) {
        json arr = json::array();
        for (int g = 0; g < c.generator_count(dim); ++g)
            arr.push_back(json{{"name", c.generator_name(dim, g)},
                               {"endpoint", c.graph().object_name(c.generator_endpoint(dim, g))},
                               {"boundary", element_to_string(c, c.generator_boundary(dim, g))}});
        basis[std::to_string(dim)] = arr;
    }
    doc["basis"] = basis;
    json nrm;
    nrm["strategy"] = c.normalizer()->kind();
    if (c.normalizer()->kind() == "finite_enumeration") nrm["budget"] = c.normalizer()->budget();
    doc["normalizer"] = nrm;
    return doc.dump(2) + "\n";
}

CrsPtr parse_crossed_complex_doc(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("crossed complex: invalid JSON: ") + ex.what());
    }
    auto need = [&](const char* field) -> const json& {
        if (!doc.contains(field)) throw ParseError(std::string("crossed complex: missing field '") + field + "'");
        return doc[field];
    };
    int N = need("trunc_level").get<int>();
    auto c = std::make_shared<FreeCrossedComplex>(N);
    for (const auto& nm : need("objects")) c->add_object(nm.get<std::string>());
    for (const auto& e : need("edges")) {
        int s = c->graph().find_object(e.at("src").get<std::string>());
        int t = c->graph().find_object(e.at("tgt").get<std::string>());
        if (s < 0 || t < 0)
            throw ParseError("crossed complex: edge '" + e.at("name").get<std::string>() +
                             "' has unknown endpoint");
        c->add_edge(e.at("name").get<std::string>(), s, t);
    }
    const json& basis = need("basis");
    auto add_dim = [&](int dim) {
        std::string key = std::to_string(dim);
        if (!basis.contains(key)) return;
        for (const auto& g : basis[key]) {
            int ep = c->graph().find_object(g.at("endpoint").get<std::string>());
            if (ep < 0)
                throw ParseError("crossed complex: generator '" + g.at("name").get<std::string>() +
                                 "' has unknown endpoint");
            Element b = parse_element(*c, dim - 1, g.at("boundary").get<std::string>());
            c->add_generator(dim, g.at("name").get<std::string>(), ep, b);
        }
    };
    if (N >= 2) add_dim(2);
    // the normalizer is reconstructed before dims >= 3 so module operators
    // canonicalize the way the original complex did
    const json& nrm = need("normalizer");
    std::string strategy = nrm.at("strategy").get<std::string>();
    if (strategy == "free") {
        c->set_normalizer(make_free_normalizer());
    } else if (strategy == "simply_connected") {
        c->set_normalizer(make_simply_connected_normalizer(c->graph()));
    } else if (strategy == "finite_enumeration") {
        std::size_t budget = nrm.contains("budget") ? nrm.at("budget").get<std::size_t>()
                                                    : kDefaultEnumerationBudget;
        std::vector<Word> relators;
        for (int g = 0; g < c->generator_count(2); ++g)
            relators.push_back(c->generator_boundary(2, g).word());
        c->set_normalizer(make_finite_enumeration_normalizer(c->graph(), relators, budget));
    } else {
        throw ParseError("crossed complex: unknown normalizer strategy '" + strategy + "'");
    }
    for (int dim = 3; dim <= N; ++dim) add_dim(dim);
    return c;
}

} // namespace xcc
