#include "xcc/chains.hpp"

#include <algorithm>
#include <sstream>

namespace xcc {

int ChainComplexOverGroupoid::basis_size(int degree) const {
    if (degree == 0) return base->object_count();
    if (degree == 1) return base->edge_count();
    return base->generator_count(degree);
}

std::string ChainComplexOverGroupoid::basis_label(int degree, int j) const {
    if (degree == 0) return base->graph().object_name(j);
    if (degree == 1) return base->graph().edge_name(j);
    return base->generator_name(degree, j);
}

ModuleSum fox_derivative(const FreeCrossedComplex& c, const Word& w) {
    ModuleSum out;
    const auto& ls = w.letters();
    Word suffix = Word::identity(w.end());
    for (size_t i = ls.size(); i-- > 0;) {
        Letter l = ls[i];
        int e = edge_of(l);
        if (positive(l)) {
            out[{e, c.canon(suffix)}] += 1;
        } else {
            // alpha(-e) = -(e, phi(-e)); then shifted by the suffix
            out[{e, c.canon(compose(invert(Word::generator(c.graph(), e)), suffix))}] -= 1;
        }
        suffix = compose(positive(l) ? Word::generator(c.graph(), e)
                                     : invert(Word::generator(c.graph(), e)),
                         suffix);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

ChainComplexOverGroupoid nabla(const CrsPtr& c) {
    const FreeCrossedComplex& C = *c;
    ChainComplexOverGroupoid x;
    x.base = c;
    x.boundary.resize(C.trunc_level());
    // degree 1: (1_p)^{phi e} - 1_q
    for (int e = 0; e < C.edge_count(); ++e) {
        ModuleSum s;
        s[{C.graph().src(e), C.canon(Word::generator(C.graph(), e))}] += 1;
        s[{C.graph().tgt(e), C.canon(Word::identity(C.graph().tgt(e)))}] -= 1;
        std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
        x.boundary[0].push_back(std::move(s));
    }
    // degree 2: fox derivative of the boundary word
    if (C.trunc_level() >= 2)
        for (int g = 0; g < C.generator_count(2); ++g)
            x.boundary[1].push_back(fox_derivative(C, C.generator_boundary(2, g).word()));
    // degree 3: abelianized delta_3
    if (C.trunc_level() >= 3)
        for (int g = 0; g < C.generator_count(3); ++g)
            x.boundary[2].push_back(C.abelianize(C.generator_boundary(3, g)));
    // degree >= 4: delta_n as it stands
    for (int n = 4; n <= C.trunc_level(); ++n)
        for (int g = 0; g < C.generator_count(n); ++g)
            x.boundary[n - 1].push_back(C.generator_boundary(n, g).sum());
    return x;
}

namespace {

// extends the boundary over a module expression (a G-module morphism)
ModuleSum apply_boundary(const ChainComplexOverGroupoid& x, int degree, const ModuleSum& s) {
    const FreeCrossedComplex& C = *x.base;
    ModuleSum out;
    for (const auto& [key, coeff] : s) {
        const ModuleSum& b = x.boundary[degree - 1][key.first];
        for (const auto& [k2, c2] : b)
            out[{k2.first, C.canon(compose(k2.second, key.second))}] += c2 * coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

std::vector<std::string> audit_chain_complex(const ChainComplexOverGroupoid& x) {
    std::vector<std::string> out;
    for (int n = 2; n <= x.max_degree(); ++n)
        for (int j = 0; j < x.basis_size(n); ++j) {
            ModuleSum dd = apply_boundary(x, n - 1, x.boundary[n - 1][j]);
            if (!dd.empty())
                out.push_back("dd != 0 at degree-" + std::to_string(n) + " basis element " +
                              x.basis_label(n, j));
        }
    for (int j = 0; j < x.basis_size(1); ++j) {
        long long total = 0;
        for (const auto& [key, coeff] : x.boundary[0][j]) total += coeff;
        if (total != 0)
            out.push_back("augmentation does not kill boundary of " + x.basis_label(1, j));
    }
    return out;
}

IntMatrix IntMatrix::zero(int rows, int cols) {
    IntMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(rows, std::vector<BigInt>(cols));
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = BigInt(1);
    return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw Error("mat_mul: shape mismatch");
    IntMatrix m = IntMatrix::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.a[i][k].is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) m.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return m;
}

std::vector<IntMatrix> augment(const ChainComplexOverGroupoid& x) {
    std::vector<IntMatrix> out;
    for (int n = 1; n <= x.max_degree(); ++n) {
        IntMatrix m = IntMatrix::zero(x.basis_size(n - 1), x.basis_size(n));
        for (int i = 0; i < m.rows; ++i) m.row_labels.push_back(x.basis_label(n - 1, i));
        for (int j = 0; j < m.cols; ++j) m.col_labels.push_back(x.basis_label(n, j));
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [key, coeff] : x.boundary[n - 1][j]) m.a[key.first][j] += BigInt(coeff);
        out.push_back(std::move(m));
    }
    return out;
}

SNFResult smith_normal_form(const IntMatrix& m) {
    SNFResult r;
    r.d = m;
    r.u = IntMatrix::identity(m.rows);
    r.v = IntMatrix::identity(m.cols);
    auto& d = r.d.a;
    auto& u = r.u.a;
    auto& v = r.v.a;
    const int rows = m.rows, cols = m.cols;

    auto swap_rows = [&](int i, int j) {
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (int k = 0; k < rows; ++k) std::swap(d[k][i], d[k][j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    auto add_row = [&](int dst, int src, const BigInt& q) {  // row dst += q * row src
        for (int k = 0; k < cols; ++k) d[dst][k] += q * d[src][k];
        for (size_t k = 0; k < u[dst].size(); ++k) u[dst][k] += q * u[src][k];
    };
    auto add_col = [&](int dst, int src, const BigInt& q) {
        for (int k = 0; k < rows; ++k) d[k][dst] += q * d[k][src];
        for (auto& row : v) row[dst] += q * row[src];
    };
    auto negate_row = [&](int i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    };

    int t = 0;
    while (t < rows && t < cols) {
        // pivot: least |value| in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (!d[i][j].is_zero() &&
                    (pi < 0 || d[i][j].abs() < d[pi][pj].abs())) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (d[i][t].is_zero()) continue;
                BigInt q = d[i][t] / d[t][t];
                if (!q.is_zero()) add_row(i, t, -q);
                if (!d[i][t].is_zero()) {
                    swap_rows(t, i);  // strictly smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d[t][j].is_zero()) continue;
                BigInt q = d[t][j] / d[t][t];
                if (!q.is_zero()) add_col(j, t, -q);
                if (!d[t][j].is_zero()) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }
        // divisibility: pivot must divide the whole trailing block
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols && !redo; ++j)
                if (!(d[i][j] % d[t][t]).is_zero()) {
                    add_row(t, i, BigInt(1));
                    redo = true;
                }
        if (redo) continue;
        if (d[t][t].sign() < 0) negate_row(t);
        ++t;
    }
    for (int i = 0; i < std::min(rows, cols); ++i)
        if (!r.d.a[i][i].is_zero()) r.invariant_factors.push_back(r.d.a[i][i]);
    return r;
}

std::string to_string(const HomologyGroup& h) {
    std::ostringstream os;
    bool first = true;
    if (h.rank > 0) {
        os << "Z";
        if (h.rank > 1) os << "^" << h.rank;
        first = false;
    }
    for (const BigInt& t : h.torsion) {
        os << (first ? "" : " + ") << "Z/" << t.to_string();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<HomologyGroup> homology(const std::vector<IntMatrix>& boundaries, int max_degree) {
    if (max_degree > static_cast<int>(boundaries.size()) - 1)
        throw Error("homology: degree " + std::to_string(max_degree) +
                    " needs boundary matrices one degree higher");
    std::vector<SNFResult> snf;
    for (const IntMatrix& b : boundaries) snf.push_back(smith_normal_form(b));
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= max_degree; ++n) {
        HomologyGroup h;
        int dim_n = n == 0 ? boundaries[0].rows : boundaries[n - 1].cols;
        int r_n = n == 0 ? 0 : snf[n - 1].rank();
        int r_up = snf[n].rank();
        h.rank = dim_n - r_n - r_up;
        for (const BigInt& f : snf[n].invariant_factors)
            if (!f.is_one()) h.torsion.push_back(f);
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace xcc
