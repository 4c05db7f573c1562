#include "xcc/pi1_normalizer.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "xcc/coset_enumeration.hpp"

namespace xcc {

namespace {

class FreeNormalizer final : public Pi1Normalizer {
public:
    Word canon(const Word& w) const override { return w; }  // words are stored reduced
    std::string kind() const override { return "free"; }
};

// BFS spanning forest; tree_path[p] is the reduced word root(p) -> p.
struct Forest {
    std::vector<int> component;   // object -> component id
    std::vector<int> root;        // component -> root object
    std::vector<Word> tree_path;  // object -> word from root
    std::vector<bool> in_tree;    // edge -> belongs to the forest

    Forest(const Graph& g, const std::vector<bool>& edge_alive) {
        int n = g.object_count();
        component.assign(n, -1);
        tree_path.resize(n);
        in_tree.assign(g.edge_count(), false);
        // adjacency over alive edges
        std::vector<std::vector<std::pair<int, Letter>>> adj(n);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!edge_alive.empty() && !edge_alive[e]) continue;
            adj[g.src(e)].push_back({g.tgt(e), pos(e)});
            adj[g.tgt(e)].push_back({g.src(e), neg(e)});
        }
        for (int p = 0; p < n; ++p) {
            if (component[p] >= 0) continue;
            int comp = static_cast<int>(root.size());
            root.push_back(p);
            component[p] = comp;
            tree_path[p] = Word::identity(p);
            std::deque<int> q{p};
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (auto [v, l] : adj[u]) {
                    if (component[v] >= 0) continue;
                    component[v] = comp;
                    in_tree[edge_of(l)] = true;
                    Letter ls = l;
                    tree_path[v] = compose(tree_path[u], Word::make(g, std::span<const Letter>(&ls, 1)));
                    q.push_back(v);
                }
            }
        }
    }

    Word geodesic(const Graph&, int p, int q) const {
        return compose(invert(tree_path[p]), tree_path[q]);
    }
};

class SimplyConnectedNormalizer final : public Pi1Normalizer {
public:
    explicit SimplyConnectedNormalizer(const Graph& g) : graph_(g), forest_(g, {}) {}

    Word canon(const Word& w) const override {
        if (forest_.component[w.start()] != forest_.component[w.end()])
            throw Error("normalizer: word endpoints in different components");
        return forest_.geodesic(graph_, w.start(), w.end());
    }
    std::string kind() const override { return "simply_connected"; }

private:
    Graph graph_;
    Forest forest_;
};

class FiniteEnumerationNormalizer final : public Pi1Normalizer {
public:
    FiniteEnumerationNormalizer(const Graph& g, std::vector<Word> relators, std::size_t budget)
        : graph_(g), budget_(budget), dead_(g.edge_count(), false) {
        // normalize relators; they are loops by construction of presentations
        std::deque<Word> work;
        for (const Word& r : relators) {
            if (r.start() != r.end()) throw Error("normalizer: relator is not a loop");
            if (!r.is_identity()) work.push_back(r);
        }
        // repeatedly eliminate single-letter relators (each such edge is a
        // loop that dies in the quotient), rewriting the rest
        std::vector<Word> pending(work.begin(), work.end());
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Word> next;
            for (const Word& r : pending) {
                Word w = cyclic_core(strip_dead(r));
                if (w.is_identity()) continue;
                if (w.length() == 1) {
                    int e = edge_of(w.letters()[0]);
                    if (!dead_[e]) {
                        if (graph_.src(e) != graph_.tgt(e))
                            throw Error("normalizer: single-letter relator on a non-loop edge");
                        dead_[e] = true;
                        changed = true;
                    }
                    continue;
                }
                next.push_back(w);
            }
            pending = std::move(next);
        }

        std::vector<bool> alive(graph_.edge_count());
        for (int e = 0; e < graph_.edge_count(); ++e) alive[e] = !dead_[e];
        forest_ = std::make_unique<Forest>(graph_, alive);

        // rewrite surviving relators over the hat generators (non-forest
        // surviving edges); forest letters vanish under tree collapse
        hat_of_edge_.assign(graph_.edge_count(), -1);
        int ncomp = static_cast<int>(forest_->root.size());
        comp_gens_.resize(ncomp);
        for (int e = 0; e < graph_.edge_count(); ++e) {
            if (dead_[e] || forest_->in_tree[e]) continue;
            int comp = forest_->component[graph_.src(e)];
            hat_of_edge_[e] = static_cast<int>(comp_gens_[comp].size());
            comp_gens_[comp].push_back(e);
        }
        std::vector<std::vector<std::vector<Letter>>> comp_relators(ncomp);
        for (const Word& r : pending) {
            int comp = forest_->component[r.start()];
            std::vector<Letter> hat;
            for (Letter l : r.letters()) {
                int h = hat_of_edge_[edge_of(l)];
                if (h < 0) continue;
                hat.push_back(positive(l) ? pos(h) : neg(h));
            }
            // free reduction in the hat alphabet
            std::vector<Letter> red;
            for (Letter l : hat) {
                if (!red.empty() && red.back() == -l) red.pop_back();
                else red.push_back(l);
            }
            if (!red.empty()) comp_relators[comp].push_back(std::move(red));
        }

        groups_.resize(ncomp);
        for (int c = 0; c < ncomp; ++c) {
            if (comp_relators[c].empty()) continue;  // free component: reduce is exact
            groups_[c] = std::make_unique<EnumeratedGroup>(enumerate_group(
                static_cast<int>(comp_gens_[c].size()), comp_relators[c], budget_));
        }
    }

    Word canon(const Word& w) const override {
        Word s = strip_dead(w);
        int comp = forest_->component[s.start()];
        if (forest_->component[s.end()] != comp)
            throw Error("normalizer: word endpoints in different components");
        if (!groups_[comp]) return s;
        const EnumeratedGroup& grp = *groups_[comp];
        int elt = grp.identity();
        for (Letter l : s.letters()) {
            int h = hat_of_edge_[edge_of(l)];
            if (h < 0) continue;
            elt = grp.apply(elt, positive(l) ? pos(h) : neg(h));
        }
        // expand the canonical hat word back into a loop at the root
        int root = forest_->root[comp];
        Word out = Word::identity(root);
        for (Letter l : grp.rep[elt]) {
            int e = comp_gens_[comp][edge_of(l)];
            Letter le = positive(l) ? pos(e) : neg(e);
            Word lift = compose(forest_->tree_path[letter_src(graph_, le)],
                                Word::make(graph_, std::span<const Letter>(&le, 1)));
            lift = compose(lift, invert(forest_->tree_path[letter_tgt(graph_, le)]));
            out = compose(out, lift);
        }
        return compose(invert(forest_->tree_path[s.start()]), compose(out, forest_->tree_path[s.end()]));
    }

    std::string kind() const override { return "finite_enumeration"; }
    std::size_t budget() const override { return budget_; }

private:
    Word strip_dead(const Word& w) const {
        std::vector<Letter> kept;
        for (Letter l : w.letters())
            if (!dead_[edge_of(l)]) kept.push_back(l);
        if (kept.empty()) return Word::identity(w.start());
        return Word::make(graph_, kept);
    }

    // removes matching inverse letters from the two ends of a loop word
    Word cyclic_core(const Word& w) const {
        std::vector<Letter> ls = w.letters();
        size_t a = 0, b = ls.size();
        while (b > a + 1 && ls[a] == -ls[b - 1]) {
            ++a;
            --b;
        }
        std::vector<Letter> core(ls.begin() + a, ls.begin() + b);
        if (core.empty()) return Word::identity(w.start());
        return Word::make(graph_, core);
    }

    Graph graph_;
    std::size_t budget_;
    std::vector<bool> dead_;
    std::unique_ptr<Forest> forest_;
    std::vector<int> hat_of_edge_;
    std::vector<std::vector<int>> comp_gens_;
    std::vector<std::unique_ptr<EnumeratedGroup>> groups_;
};

}  // namespace

NormalizerPtr make_free_normalizer() { return std::make_shared<FreeNormalizer>(); }

NormalizerPtr make_simply_connected_normalizer(const Graph& g) {
    return std::make_shared<SimplyConnectedNormalizer>(g);
}

NormalizerPtr make_finite_enumeration_normalizer(const Graph& g, std::vector<Word> relators,
                                                 std::size_t budget) {
    return std::make_shared<FiniteEnumerationNormalizer>(g, std::move(relators), budget);
}

NormalizerPtr select_normalizer(const Graph& g, const std::vector<Word>& relators, std::size_t budget) {
    if (relators.empty()) return make_free_normalizer();
    return make_finite_enumeration_normalizer(g, relators, budget);
}

} // namespace xcc
