#ifndef XCC_SIMPLICIAL_SET_HPP
#define XCC_SIMPLICIAL_SET_HPP

#include <map>
#include <string>
#include <vector>

#include "xcc/groupoid.hpp"

namespace xcc {

/// Finite truncation of a simplicial set: simplex tables per dimension
/// with face and degeneracy maps. Degeneracies are defined only while
/// their image stays within the truncation. Immutable after construction.
class SimplicialSet {
public:
    SimplicialSet() : SimplicialSet(0) {}
    explicit SimplicialSet(int trunc_level);

    int trunc_level() const { return trunc_; }
    int count(int dim) const;
    const std::string& name(int dim, int i) const;
    int find(int dim, const std::string& name) const;  // -1 when absent

    /// faces: dim >= 1, 0 <= k <= dim
    int face(int dim, int i, int k) const;
    /// iterated first face; dim - steps >= 0
    int face0_iter(int dim, int i, int steps) const;
    bool has_degeneracies(int dim) const { return dim + 1 <= trunc_; }
    /// degeneracies: 0 <= k <= dim, defined when dim+1 <= trunc
    int degeneracy(int dim, int i, int k) const;

    /// true iff the simplex is a recorded degeneracy image
    bool is_degenerate(int dim, int i) const;
    /// all recorded (k, y) with eps_k(y) = x
    std::vector<std::pair<int, int>> degeneracy_witnesses(int dim, int x) const;
    /// exists y with eps_k(y) = x
    bool is_eps_image(int dim, int x, int k) const;

    // construction
    int add_simplex(int dim, const std::string& name);
    void set_face(int dim, int i, int k, int value);
    void set_degeneracy(int dim, int i, int k, int value);
    /// overrides the derived flag set (used by the parser; builders leave
    /// the recorded degeneracy images as the flags)
    void claim_nondegenerate(const std::vector<std::vector<bool>>& nondeg);
    /// claimed nondegeneracy (defaults to the derived flags)
    bool claimed_nondegenerate(int dim, int i) const;

    friend bool operator==(const SimplicialSet&, const SimplicialSet&);

private:
    int trunc_;
    std::vector<std::vector<std::string>> names_;
    std::vector<std::map<std::string, int>> index_;
    std::vector<std::vector<std::vector<int>>> faces_;     // [dim][simplex][k], dim >= 1
    std::vector<std::vector<std::vector<int>>> degens_;    // [dim][simplex][k], dim+1 <= trunc
    std::vector<std::vector<bool>> claimed_nondeg_;        // empty until claimed
};

struct ValidationIssue {
    std::string rule;     // e.g. "d_i e_j = id"
    std::string detail;   // indices and simplex name
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks every applicable instance of the five simplicial identity
/// families within the truncation, map totality, and consistency of the
/// degeneracy flags. Violations are report entries, never exceptions.
ValidationReport validate(const SimplicialSet& k);

/// Delta[n] truncated at N >= n; m-simplices are the nondecreasing
/// (m+1)-sequences over 0..n.
SimplicialSet standard_simplex(int n, int N);

/// Boundary of Delta[n] (sequences omitting at least one vertex value),
/// truncated at N >= n-1.
SimplicialSet boundary_simplex(int n, int N);

/// Finite group given by a multiplication table; mul[i][j] = index of
/// names[i] * names[j].
struct GroupTable {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;
};

GroupTable cyclic_group_table(int n);
GroupTable trivial_group_table();

/// Nerve: n-simplices are n-tuples of group elements; the first face
/// drops the head, the last drops the tail, inner faces multiply
/// neighbours; degeneracies insert the identity. Rejects non-groups,
/// naming the failed axiom instance.
SimplicialSet nerve_of_group(const GroupTable& table, int N);

/// Adds the forced degenerate level trunc+1: the degeneracy symbols
/// eps_k(y), y top-dimensional, identified by eps_i eps_j = eps_{j+1}
/// eps_i and given the face maps the simplicial identities dictate.
/// Levels <= trunc are untouched (indices preserved).
SimplicialSet degenerate_completion(const SimplicialSet& k);

/// Restriction to a lower truncation level (drops the higher simplices
/// and the degeneracies into the dropped levels).
SimplicialSet truncate(const SimplicialSet& k, int level);

} // namespace xcc

#endif
