#include "xcc/simplicial_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace xcc {

SimplicialSet::SimplicialSet(int trunc_level) : trunc_(trunc_level) {
    if (trunc_level < 0) throw Error("simplicial set: negative truncation");
    names_.resize(trunc_ + 1);
    index_.resize(trunc_ + 1);
    faces_.resize(trunc_ + 1);
    degens_.resize(trunc_ + 1);
}

int SimplicialSet::count(int dim) const {
    if (dim < 0 || dim > trunc_) return 0;
    return static_cast<int>(names_[dim].size());
}

const std::string& SimplicialSet::name(int dim, int i) const { return names_.at(dim).at(i); }

int SimplicialSet::find(int dim, const std::string& name) const {
    if (dim < 0 || dim > trunc_) return -1;
    auto it = index_[dim].find(name);
    return it == index_[dim].end() ? -1 : it->second;
}

int SimplicialSet::face(int dim, int i, int k) const {
    if (dim < 1 || dim > trunc_ || k < 0 || k > dim) throw Error("face: index out of range");
    int v = faces_.at(dim).at(i).at(k);
    if (v < 0) throw Error("face: missing entry for '" + name(dim, i) + "' at index " + std::to_string(k));
    return v;
}

int SimplicialSet::face0_iter(int dim, int i, int steps) const {
    int d = dim, x = i;
    for (int s = 0; s < steps; ++s) {
        x = face(d, x, 0);
        --d;
    }
    return x;
}

int SimplicialSet::degeneracy(int dim, int i, int k) const {
    if (!has_degeneracies(dim)) throw Error("degeneracy: above truncation");
    if (k < 0 || k > dim) throw Error("degeneracy: index out of range");
    int v = degens_.at(dim).at(i).at(k);
    if (v < 0)
        throw Error("degeneracy: missing entry for '" + name(dim, i) + "' at index " + std::to_string(k));
    return v;
}

bool SimplicialSet::is_degenerate(int dim, int i) const {
    return !degeneracy_witnesses(dim, i).empty();
}

std::vector<std::pair<int, int>> SimplicialSet::degeneracy_witnesses(int dim, int x) const {
    std::vector<std::pair<int, int>> out;
    if (dim < 1) return out;
    for (int y = 0; y < count(dim - 1); ++y) {
        if (!has_degeneracies(dim - 1)) break;
        for (int k = 0; k <= dim - 1; ++k)
            if (degens_[dim - 1][y][k] == x) out.push_back({k, y});
    }
    return out;
}

bool SimplicialSet::is_eps_image(int dim, int x, int k) const {
    for (auto [kk, y] : degeneracy_witnesses(dim, x))
        if (kk == k) return true;
    return false;
}

int SimplicialSet::add_simplex(int dim, const std::string& name) {
    if (dim < 0 || dim > trunc_) throw Error("add_simplex: dimension out of range");
    if (index_[dim].count(name)) throw Error("add_simplex: duplicate name '" + name + "'");
    names_[dim].push_back(name);
    index_[dim][name] = count(dim) - 1;
    if (dim >= 1) faces_[dim].push_back(std::vector<int>(dim + 1, -1));
    if (has_degeneracies(dim)) degens_[dim].push_back(std::vector<int>(dim + 1, -1));
    return count(dim) - 1;
}

void SimplicialSet::set_face(int dim, int i, int k, int value) {
    if (dim < 1 || dim > trunc_ || k < 0 || k > dim) throw Error("set_face: out of range");
    if (value < 0 || value >= count(dim - 1)) throw Error("set_face: target out of range");
    faces_.at(dim).at(i).at(k) = value;
}

void SimplicialSet::set_degeneracy(int dim, int i, int k, int value) {
    if (!has_degeneracies(dim) || k < 0 || k > dim) throw Error("set_degeneracy: out of range");
    if (value < 0 || value >= count(dim + 1)) throw Error("set_degeneracy: target out of range");
    degens_.at(dim).at(i).at(k) = value;
}

void SimplicialSet::claim_nondegenerate(const std::vector<std::vector<bool>>& nondeg) {
    claimed_nondeg_ = nondeg;
}

bool SimplicialSet::claimed_nondegenerate(int dim, int i) const {
    if (claimed_nondeg_.empty()) return !is_degenerate(dim, i);
    return claimed_nondeg_.at(dim).at(i);
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
    if (a.trunc_ != b.trunc_ || a.names_ != b.names_ || a.faces_ != b.faces_ || a.degens_ != b.degens_)
        return false;
    for (int d = 0; d <= a.trunc_; ++d)
        for (int i = 0; i < a.count(d); ++i)
            if (a.claimed_nondegenerate(d, i) != b.claimed_nondegenerate(d, i)) return false;
    return true;
}

namespace {

std::string idx_str(std::initializer_list<int> xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

}  // namespace

ValidationReport validate(const SimplicialSet& K) {
    ValidationReport rep;
    auto issue = [&](const std::string& rule, const std::string& detail) {
        rep.issues.push_back({rule, detail});
    };
    const int N = K.trunc_level();

    // totality
    for (int n = 1; n <= N; ++n)
        for (int x = 0; x < K.count(n); ++x)
            for (int i = 0; i <= n; ++i) {
                try {
                    K.face(n, x, i);
                } catch (const Error&) {
                    issue("faces total", "missing d_" + std::to_string(i) + " of " + K.name(n, x));
                }
            }
    for (int n = 0; n + 1 <= N; ++n)
        for (int x = 0; x < K.count(n); ++x)
            for (int i = 0; i <= n; ++i) {
                try {
                    K.degeneracy(n, x, i);
                } catch (const Error&) {
                    issue("degeneracies total", "missing e_" + std::to_string(i) + " of " + K.name(n, x));
                }
            }
    if (!rep.ok()) return rep;  // identity checks need total maps

    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= N; ++n)
        for (int x = 0; x < K.count(n); ++x)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (K.face(n - 1, K.face(n, x, j), i) != K.face(n - 1, K.face(n, x, i), j - 1))
                        issue("d_i d_j = d_{j-1} d_i",
                              "(i,j)=(" + idx_str({i, j}) + ") at " + K.name(n, x));

    for (int n = 0; n + 1 <= N; ++n)
        for (int x = 0; x < K.count(n); ++x)
            for (int j = 0; j <= n; ++j) {
                int ex = K.degeneracy(n, x, j);
                // d_j e_j = d_{j+1} e_j = id
                if (K.face(n + 1, ex, j) != x)
                    issue("d_j e_j = id", "j=" + std::to_string(j) + " at " + K.name(n, x));
                if (K.face(n + 1, ex, j + 1) != x)
                    issue("d_{j+1} e_j = id", "j=" + std::to_string(j) + " at " + K.name(n, x));
                // d_i e_j = e_{j-1} d_i for i < j  (needs n >= 1)
                for (int i = 0; i < j && n >= 1; ++i)
                    if (K.face(n + 1, ex, i) != K.degeneracy(n - 1, K.face(n, x, i), j - 1))
                        issue("d_i e_j = e_{j-1} d_i",
                              "(i,j)=(" + idx_str({i, j}) + ") at " + K.name(n, x));
                // d_i e_j = e_j d_{i-1} for i > j+1  (needs n >= 1)
                for (int i = j + 2; i <= n + 1 && n >= 1; ++i)
                    if (K.face(n + 1, ex, i) != K.degeneracy(n - 1, K.face(n, x, i - 1), j))
                        issue("d_i e_j = e_j d_{i-1}",
                              "(i,j)=(" + idx_str({i, j}) + ") at " + K.name(n, x));
                // e_i e_j = e_{j+1} e_i for i <= j  (needs n+2 <= N)
                if (n + 2 <= N)
                    for (int i = 0; i <= j; ++i)
                        if (K.degeneracy(n + 1, ex, i) != K.degeneracy(n + 1, K.degeneracy(n, x, i), j + 1))
                            issue("e_i e_j = e_{j+1} e_i",
                                  "(i,j)=(" + idx_str({i, j}) + ") at " + K.name(n, x));
            }

    // claimed flags match recorded witnesses
    for (int n = 0; n <= N; ++n)
        for (int x = 0; x < K.count(n); ++x)
            if (K.claimed_nondegenerate(n, x) == K.is_degenerate(n, x))
                issue("degeneracy flag", "flag of " + K.name(n, x) + " disagrees with recorded e_i images");

    return rep;
}

// ---------------------------------------------------------------- builders

namespace {

std::string seq_name(const std::vector<int>& seq) {
    std::string s;
    for (int v : seq) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

// nondecreasing sequences of the given length over 0..n, optionally
// required to omit at least one value (for the boundary subcomplex)
void enumerate_monotone(int n, int len, bool omit_one, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(len);
    auto rec = [&](auto&& self, int pos, int min) -> void {
        if (pos == len) {
            if (omit_one) {
                std::vector<bool> hit(n + 1, false);
                for (int v : cur) hit[v] = true;
                if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return;
            }
            out.push_back(cur);
            return;
        }
        for (int v = min; v <= n; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
}

SimplicialSet build_from_sequences(int n, int N, bool omit_one) {
    SimplicialSet K(N);
    std::vector<std::map<std::vector<int>, int>> idx(N + 1);
    for (int m = 0; m <= N; ++m) {
        std::vector<std::vector<int>> seqs;
        enumerate_monotone(n, m + 1, omit_one, seqs);
        for (const auto& s : seqs) idx[m][s] = K.add_simplex(m, seq_name(s));
        for (const auto& [s, id] : idx[m]) {
            if (m >= 1)
                for (int i = 0; i <= m; ++i) {
                    std::vector<int> f = s;
                    f.erase(f.begin() + i);
                    K.set_face(m, id, i, idx[m - 1].at(f));
                }
        }
    }
    for (int m = 0; m + 1 <= N; ++m)
        for (const auto& [s, id] : idx[m])
            for (int i = 0; i <= m; ++i) {
                std::vector<int> d = s;
                d.insert(d.begin() + i, s[i]);
                K.set_degeneracy(m, id, i, idx[m + 1].at(d));
            }
    return K;
}

}  // namespace

SimplicialSet standard_simplex(int n, int N) {
    if (n < 0 || N < n) throw Error("standard_simplex: need 0 <= n <= N");
    return build_from_sequences(n, N, false);
}

SimplicialSet boundary_simplex(int n, int N) {
    if (n < 1 || N < n - 1) throw Error("boundary_simplex: need n >= 1, N >= n-1");
    return build_from_sequences(n, N, true);
}

GroupTable cyclic_group_table(int n) {
    GroupTable t;
    for (int i = 0; i < n; ++i) t.names.push_back("g" + std::to_string(i));
    t.names[0] = "1";
    t.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.mul[i][j] = (i + j) % n;
    return t;
}

GroupTable trivial_group_table() { return cyclic_group_table(1); }

namespace {

int find_identity(const GroupTable& t) {
    int k = static_cast<int>(t.names.size());
    for (int e = 0; e < k; ++e) {
        bool ok = true;
        for (int g = 0; g < k && ok; ++g) ok = t.mul[e][g] == g && t.mul[g][e] == g;
        if (ok) return e;
    }
    return -1;
}

std::string tuple_name(const GroupTable& t, const std::vector<int>& tup) {
    std::string s = "[";
    for (size_t i = 0; i < tup.size(); ++i) s += (i ? "|" : "") + t.names[tup[i]];
    return s + "]";
}

}  // namespace

SimplicialSet nerve_of_group(const GroupTable& t, int N) {
    const int k = static_cast<int>(t.names.size());
    if (k == 0 || static_cast<int>(t.mul.size()) != k)
        throw Error("nerve_of_group: malformed table");
    for (const auto& row : t.mul) {
        if (static_cast<int>(row.size()) != k) throw Error("nerve_of_group: malformed table");
        for (int v : row)
            if (v < 0 || v >= k) throw Error("nerve_of_group: table entry out of range");
    }
    int e = find_identity(t);
    if (e < 0) throw Error("nerve_of_group: no identity element");
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
                    throw Error("nerve_of_group: associativity fails at (" + t.names[a] + "," +
                                t.names[b] + "," + t.names[c] + ")");
    for (int a = 0; a < k; ++a) {
        bool has_inv = false;
        for (int b = 0; b < k && !has_inv; ++b) has_inv = t.mul[a][b] == e && t.mul[b][a] == e;
        if (!has_inv) throw Error("nerve_of_group: no inverse for " + t.names[a]);
    }

    if (N < 0) throw Error("nerve_of_group: negative truncation");
    SimplicialSet K(N);
    std::vector<std::map<std::vector<int>, int>> idx(N + 1);
    std::vector<std::vector<std::vector<int>>> tuples(N + 1);
    tuples[0].push_back({});
    idx[0][{}] = K.add_simplex(0, tuple_name(t, {}));
    for (int n = 1; n <= N; ++n) {
        std::vector<int> cur(n);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                tuples[n].push_back(cur);
                idx[n][cur] = K.add_simplex(n, tuple_name(t, cur));
                return;
            }
            for (int g = 0; g < k; ++g) {
                cur[pos] = g;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        for (const auto& tup : tuples[n]) {
            int id = idx[n].at(tup);
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                if (i == 0)
                    f.assign(tup.begin() + 1, tup.end());
                else if (i == n)
                    f.assign(tup.begin(), tup.end() - 1);
                else {
                    f = tup;
                    f[i - 1] = t.mul[tup[i - 1]][tup[i]];
                    f.erase(f.begin() + i);
                }
                K.set_face(n, id, i, idx[n - 1].at(f));
            }
        }
    }
    for (int n = 0; n + 1 <= N; ++n)
        for (const auto& tup : tuples[n]) {
            int id = idx[n].at(tup);
            for (int i = 0; i <= n; ++i) {
                std::vector<int> d = tup;
                d.insert(d.begin() + i, e);
                K.set_degeneracy(n, id, i, idx[n + 1].at(d));
            }
        }
    return K;
}

SimplicialSet truncate(const SimplicialSet& K, int level) {
    if (level > K.trunc_level()) throw Error("truncate: level exceeds the document's truncation");
    SimplicialSet out(level);
    for (int n = 0; n <= level; ++n)
        for (int i = 0; i < K.count(n); ++i) out.add_simplex(n, K.name(n, i));
    for (int n = 1; n <= level; ++n)
        for (int i = 0; i < K.count(n); ++i)
            for (int j = 0; j <= n; ++j) out.set_face(n, i, j, K.face(n, i, j));
    for (int n = 0; n + 1 <= level; ++n)
        for (int i = 0; i < K.count(n); ++i)
            for (int j = 0; j <= n; ++j) out.set_degeneracy(n, i, j, K.degeneracy(n, i, j));
    return out;
}

SimplicialSet degenerate_completion(const SimplicialSet& K) {
    const int N = K.trunc_level();
    SimplicialSet out(N + 1);
    // copy levels 0..N (indices preserved)
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i < K.count(n); ++i) out.add_simplex(n, K.name(n, i));
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i < K.count(n); ++i)
            for (int j = 0; j <= n; ++j) out.set_face(n, i, j, K.face(n, i, j));
    for (int n = 0; n + 1 <= N; ++n)
        for (int i = 0; i < K.count(n); ++i)
            for (int j = 0; j <= n; ++j) out.set_degeneracy(n, i, j, K.degeneracy(n, i, j));

    if (K.count(N) == 0) return out;

    // symbols (k, y) for eps_k(y), y in K_N, glued by eps_i eps_j = eps_{j+1} eps_i
    const int top = K.count(N);
    auto sym = [&](int k, int y) { return k * top + y; };
    std::vector<int> uf((N + 1) * top);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int a) {
        while (uf[a] != a) {
            uf[a] = uf[uf[a]];
            a = uf[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
    };
    if (N >= 1)
        for (int z = 0; z < K.count(N - 1); ++z)
            for (int j = 0; j <= N - 1; ++j)
                for (int i = 0; i <= j; ++i)
                    unite(sym(i, K.degeneracy(N - 1, z, j)), sym(j + 1, K.degeneracy(N - 1, z, i)));

    std::map<int, int> rep_to_new;
    for (int k = 0; k <= N; ++k)
        for (int y = 0; y < top; ++y) {
            int r = find(sym(k, y));
            if (rep_to_new.count(r)) continue;
            int rk = r / top, ry = r % top;
            rep_to_new[r] =
                out.add_simplex(N + 1, "e" + std::to_string(rk) + "(" + K.name(N, ry) + ")");
        }
    // faces of eps_k(y) forced by the identities; verified consistent
    // across each glued class
    std::vector<std::vector<int>> assigned(out.count(N + 1));
    for (int k = 0; k <= N; ++k)
        for (int y = 0; y < top; ++y) {
            int id = rep_to_new.at(find(sym(k, y)));
            std::vector<int> f(N + 2);
            for (int j = 0; j <= N + 1; ++j) {
                if (j == k || j == k + 1)
                    f[j] = y;
                else if (j < k)
                    f[j] = K.degeneracy(N - 1, K.face(N, y, j), k - 1);
                else
                    f[j] = K.degeneracy(N - 1, K.face(N, y, j - 1), k);
            }
            if (assigned[id].empty()) {
                assigned[id] = f;
                for (int j = 0; j <= N + 1; ++j) out.set_face(N + 1, id, j, f[j]);
            } else if (assigned[id] != f) {
                throw Error("degenerate_completion: inconsistent faces for glued symbols at " +
                            out.name(N + 1, id));
            }
        }
    for (int y = 0; y < top; ++y)
        for (int k = 0; k <= N; ++k)
            out.set_degeneracy(N, y, k, rep_to_new.at(find(sym(k, y))));
    return out;
}

} // namespace xcc
