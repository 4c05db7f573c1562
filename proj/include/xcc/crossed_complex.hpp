#ifndef XCC_CROSSED_COMPLEX_HPP
#define XCC_CROSSED_COMPLEX_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "xcc/groupoid.hpp"
#include "xcc/pi1_normalizer.hpp"

namespace xcc {

/// One term of a dimension-2 element: sign * gen^op, with op a word from
/// t(gen) to the element's endpoint.
struct Dim2Term {
    int sign;  // +1 or -1
    int gen;
    Word op;
    friend bool operator==(const Dim2Term&, const Dim2Term&) = default;
};

/// Key of a module term in dimensions >= 3: (generator, canonical operator).
using ModuleKey = std::pair<int, Word>;
using ModuleSum = std::map<ModuleKey, long long>;

/// Graded element of a free crossed complex.
///   dim 0: an object; dim 1: a reduced groupoid word;
///   dim 2: an ordered sequence of signed operator-decorated generators;
///   dim >= 3: an integer combination of operator-decorated generators,
///             operators kept in normalizer-canonical form.
/// Elements are built through FreeCrossedComplex, which enforces the
/// endpoint conditions.
class Element {
public:
    int dim() const { return dim_; }
    int object() const { return object_; }            // dim 0
    const Word& word() const { return word_; }        // dim 1
    const std::vector<Dim2Term>& terms() const { return terms_; }  // dim 2
    const ModuleSum& sum() const { return sum_; }     // dim >= 3

    /// Common endpoint: the object itself (dim 0), end of word (dim 1),
    /// common end of operators (dims >= 2).
    int endpoint() const;

    /// Identity / empty payload test (structural; dim-2 elements that are
    /// only semantically trivial need FreeCrossedComplex::equal).
    bool is_empty() const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    friend class FreeCrossedComplex;
    int dim_ = -1;
    int object_ = -1;   // dim 0 payload, or endpoint for dims >= 2
    Word word_;
    std::vector<Dim2Term> terms_;
    ModuleSum sum_;
};

/// Free crossed complex: objects, a generating graph in dimension 1, and
/// free generators with endpoint and boundary data in dimensions >= 2.
/// Immutable once built; builders construct and then share as
/// shared_ptr<const FreeCrossedComplex>.
class FreeCrossedComplex {
public:
    explicit FreeCrossedComplex(int trunc_level);

    int trunc_level() const { return trunc_; }
    const Graph& graph() const { return graph_; }
    NormalizerPtr normalizer() const { return normalizer_; }

    // -- construction ------------------------------------------------
    int add_object(const std::string& name) { return graph_.add_object(name); }
    int add_edge(const std::string& name, int src, int tgt) { return graph_.add_edge(name, src, tgt); }
    /// dim >= 2; boundary must be an element of dim-1 whose endpoint is
    /// `endpoint` (and a loop there when dim == 2).
    int add_generator(int dim, const std::string& name, int endpoint, const Element& boundary);
    void set_normalizer(NormalizerPtr n) { normalizer_ = std::move(n); }

    // -- basis access ------------------------------------------------
    int object_count() const { return graph_.object_count(); }
    int edge_count() const { return graph_.edge_count(); }
    int generator_count(int dim) const;
    const std::string& generator_name(int dim, int g) const;
    int generator_endpoint(int dim, int g) const;
    const Element& generator_boundary(int dim, int g) const;
    int find_generator(int dim, const std::string& name) const;  // -1 when absent

    // -- element constructors -----------------------------------------
    Element trivial(int dim, int at) const;
    Element object_element(int p) const;
    Element word_element(const Word& w) const;
    Element edge_element(int e) const { return word_element(Word::generator(graph_, e)); }
    /// single generator with unit operator
    Element generator_element(int dim, int g) const;
    Element dim2_element(std::vector<Dim2Term> terms, int endpoint_if_empty = -1) const;
    /// operators are canonicalized; zero coefficients dropped
    Element module_element(int dim, const std::vector<std::tuple<int, Word, long long>>& terms,
                           int endpoint_if_empty = -1) const;

    // -- operations ---------------------------------------------------
    /// boundary of an element of dim >= 2, extended from generator data
    Element boundary(const Element& e) const;
    /// right action e^a for dim >= 2; start(a) must be endpoint(e)
    Element act(const Element& e, const Word& a) const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& e) const;
    Element sub(const Element& a, const Element& b) const { return add(a, negate(b)); }
    /// integer multiple; dims >= 3 scale coefficients, dim 2 repeats terms
    Element scale(const Element& e, long long k) const;

    /// Decidable equality: reduced words in dims 0-1; in dim 2 the pair
    /// (boundary word, abelianization over pi1) -- faithful for free
    /// complexes since abelianization is injective on Ker delta_2; in
    /// dims >= 3 normalized-sum comparison.
    bool equal(const Element& a, const Element& b) const;
    bool is_trivial(const Element& e) const;

    /// abelianization of a dim-2 element into a module sum over pi1
    ModuleSum abelianize(const Element& e) const;

    Word canon(const Word& w) const { return normalizer_->canon(w); }

    std::string to_string(const Element& e) const;

private:
    struct Generator {
        std::string name;
        int endpoint;
        Element boundary;
    };

    int trunc_;
    Graph graph_;
    NormalizerPtr normalizer_;
    std::vector<std::vector<Generator>> gens_;  // index 0 <-> dim 2

    const Generator& gen(int dim, int g) const;
    void check_dim(int dim, int lo) const;
};

using CrsPtr = std::shared_ptr<const FreeCrossedComplex>;

/// CC1 audit: boundary endpoint conditions for every generator and
/// delta(delta(g)) trivial for every generator of dim >= 3, decided with
/// the complex's equality. Returns human-readable violations; empty means
/// the complex satisfies the axioms through its truncation.
std::vector<std::string> audit_cc1(const FreeCrossedComplex& c);

} // namespace xcc

#endif
