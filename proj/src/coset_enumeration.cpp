#include "xcc/coset_enumeration.hpp"

#include <algorithm>
#include <deque>

namespace xcc {

namespace {

// Coset table with coincidence handling. Column index: 2*g for +g, 2*g+1 for -g.
class CosetTable {
public:
    CosetTable(int ngens, std::size_t budget) : ncols_(2 * ngens), budget_(budget) {
        new_coset();  // coset 0 = the trivial subgroup = identity
    }

    int col(Letter l) const { return 2 * edge_of(l) + (positive(l) ? 0 : 1); }
    int inv_col(int c) const { return c ^ 1; }

    int get(int a, int c) const { return table_[a][c]; }
    bool alive(int a) const { return rep_[a] == a; }

    int find(int a) {
        while (rep_[a] != a) {
            rep_[a] = rep_[rep_[a]];
            a = rep_[a];
        }
        return a;
    }

    int new_coset() {
        if (table_.size() >= budget_)
            throw CapacityError("coset enumeration exceeded budget of " + std::to_string(budget_) +
                                " cosets");
        ++definitions_;
        table_.emplace_back(ncols_, -1);
        rep_.push_back(static_cast<int>(table_.size()) - 1);
        return static_cast<int>(table_.size()) - 1;
    }

    void set(int a, int c, int b) {
        table_[a][c] = b;
        table_[b][inv_col(c)] = a;
    }

    void merge(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (y < x) std::swap(x, y);
        rep_[y] = x;
        ++coincidences_;
        dead_.push_back(y);
    }

    // records a == b and transfers the dead coset's row, queueing any
    // identifications this forces
    void coincide(int a, int b) {
        merge(a, b);
        while (!dead_.empty()) {
            int y = dead_.front();
            dead_.pop_front();
            for (int c = 0; c < ncols_; ++c) {
                int d = table_[y][c];
                if (d < 0) continue;
                table_[y][c] = -1;
                if (table_[d][inv_col(c)] == y) table_[d][inv_col(c)] = -1;
                int mu = find(y);
                int nu = find(d);
                int ex = table_[mu][c];
                if (ex >= 0) {
                    merge(nu, ex);
                } else {
                    int ex2 = table_[nu][inv_col(c)];
                    if (ex2 >= 0)
                        merge(mu, ex2);
                    else
                        set(mu, c, nu);
                }
            }
        }
    }

    // scans relator w at coset a, defining cosets to fill gaps (HLT)
    void scan_and_fill(int a, const std::vector<Letter>& w) {
        if (w.empty()) return;
        int f = a, b = a;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j) {
                int t = table_[f][col(w[i])];
                if (t < 0) break;
                f = find(t);
                ++i;
            }
            if (i > j) {
                if (f != b) coincide(f, b);
                return;
            }
            while (j >= i) {
                int t = table_[b][inv_col(col(w[j]))];
                if (t < 0) break;
                b = find(t);
                --j;
            }
            if (j < i) {
                coincide(f, b);
                return;
            }
            if (j == i) {
                set(f, col(w[i]), b);
                return;
            }
            int m = new_coset();
            set(f, col(w[i]), m);
        }
    }

    int size() const { return static_cast<int>(table_.size()); }
    int ncols() const { return ncols_; }
    long long work() const { return definitions_ + coincidences_; }

private:
    int ncols_;
    std::size_t budget_;
    long long definitions_ = 0;
    long long coincidences_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> rep_;
    std::deque<int> dead_;
};

}  // namespace

EnumeratedGroup enumerate_group(int ngens, const std::vector<std::vector<Letter>>& relators,
                                std::size_t budget) {
    int cols_gens = std::max(ngens, 1);
    CosetTable tab(cols_gens, budget);

    // Sweep until stable: coincidences can re-open rows processed earlier.
    long long last_work = -1;
    while (tab.work() != last_work) {
        last_work = tab.work();
        for (int a = 0; a < tab.size(); ++a) {
            if (!tab.alive(a)) continue;
            for (const auto& r : relators) {
                if (!tab.alive(a)) break;
                tab.scan_and_fill(a, r);
            }
            if (!tab.alive(a)) continue;
            for (int c = 0; c < tab.ncols(); ++c) {
                if (!tab.alive(a)) break;
                if (tab.get(a, c) < 0) {
                    int m = tab.new_coset();
                    tab.set(a, c, m);
                }
            }
        }
    }

    // compact live cosets
    std::vector<int> index(tab.size(), -1);
    int order = 0;
    for (int a = 0; a < tab.size(); ++a)
        if (tab.alive(a)) index[a] = order++;

    EnumeratedGroup g;
    g.order = order;
    g.action.assign(order, std::vector<int>(2 * cols_gens, -1));
    for (int a = 0; a < tab.size(); ++a) {
        if (!tab.alive(a)) continue;
        for (int c = 0; c < tab.ncols(); ++c) {
            int b = tab.get(a, c);
            if (b < 0) throw Error("coset enumeration: incomplete table");
            g.action[index[a]][c] = index[tab.find(b)];
        }
    }

    // canonical words by BFS from the identity, generators in fixed order
    g.rep.assign(order, {});
    std::vector<bool> seen(order, false);
    std::deque<int> bfs;
    int id = index[tab.find(0)];
    seen[id] = true;
    bfs.push_back(id);
    while (!bfs.empty()) {
        int e = bfs.front();
        bfs.pop_front();
        for (int gi = 0; gi < cols_gens; ++gi) {
            for (int s = 0; s < 2; ++s) {
                Letter l = s == 0 ? pos(gi) : neg(gi);
                int t = g.action[e][2 * gi + s];
                if (t >= 0 && !seen[t]) {
                    seen[t] = true;
                    g.rep[t] = g.rep[e];
                    g.rep[t].push_back(l);
                    bfs.push_back(t);
                }
            }
        }
    }
    return g;
}

} // namespace xcc
