#ifndef XCC_GROUPOID_HPP
#define XCC_GROUPOID_HPP

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xcc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a pi1 strategy cannot decide its instance within budget.
struct CapacityError : Error {
    using Error::Error;
};

/// Directed graph: the generating data of a free groupoid.
/// Objects and edges are dense integer ids with name tables.
class Graph {
public:
    int add_object(const std::string& name);
    int add_edge(const std::string& name, int src, int tgt);

    int object_count() const { return static_cast<int>(object_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& object_name(int p) const { return object_names_.at(p); }
    const std::string& edge_name(int e) const { return edges_.at(e).name; }
    int src(int e) const { return edges_.at(e).src; }
    int tgt(int e) const { return edges_.at(e).tgt; }

    /// -1 when absent.
    int find_object(const std::string& name) const;
    int find_edge(const std::string& name) const;

private:
    struct Edge {
        std::string name;
        int src;
        int tgt;
    };
    std::vector<std::string> object_names_;
    std::vector<Edge> edges_;
};

/// A signed edge letter: +e stored as e+1, -e as -(e+1).
using Letter = int;

inline Letter pos(int edge) { return edge + 1; }
inline Letter neg(int edge) { return -(edge + 1); }
inline int edge_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline bool positive(Letter l) { return l > 0; }

/// Element of the free groupoid on a Graph, kept in reduced form
/// (no +e,-e or -e,+e adjacency). Endpoints are stored so identity
/// words at distinct objects stay distinct.
class Word {
public:
    Word() = default;

    static Word identity(int object) {
        Word w;
        w.start_ = w.end_ = object;
        return w;
    }

    /// Builds a word from letters, validating composability against g
    /// and reducing. `at` fixes the endpoints of an empty letter list.
    static Word make(const Graph& g, std::span<const Letter> letters, int at = -1);
    static Word generator(const Graph& g, int edge) {
        Letter l = pos(edge);
        return make(g, std::span<const Letter>(&l, 1));
    }

    bool is_identity() const { return letters_.empty(); }
    int start() const { return start_; }
    int end() const { return end_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

private:
    int start_ = -1;
    int end_ = -1;
    std::vector<Letter> letters_;
    friend Word compose(const Word&, const Word&);
    friend Word invert(const Word&);
    friend Word reduce(const Word&);
};

/// Endpoint of a single letter within a graph.
inline int letter_src(const Graph& g, Letter l) { return positive(l) ? g.src(edge_of(l)) : g.tgt(edge_of(l)); }
inline int letter_tgt(const Graph& g, Letter l) { return positive(l) ? g.tgt(edge_of(l)) : g.src(edge_of(l)); }

/// Free cancellation. Words constructed through this module are reduced
/// already, so this is idempotent by construction.
Word reduce(const Word& w);

/// Concatenation u then v; requires end(u) == start(v).
Word compose(const Word& u, const Word& v);

Word invert(const Word& w);

/// Word literal, e.g. "a + b - c"; identity words print as "0_p".
std::string to_string(const Graph& g, const Word& w);

/// Parses the word literal syntax. Edge names are looked up in g;
/// "0_p" denotes the identity at object p.
Word parse_word(const Graph& g, const std::string& text);

} // namespace xcc

#endif
