#pragma once

// Simplicial topological fans and their dual data.

#include <string>
#include <utility>
#include <vector>

#include "ttk/error.hpp"
#include "ttk/linalg.hpp"
#include "ttk/ring.hpp"

namespace ttk {

// Sorted list of 1-based ray indices.
using Simplex = std::vector<int>;

std::string to_string(const Simplex& s);

class TopologicalFan {
public:
    TopologicalFan() = default;
    // Throws InputError on empty ray lists, ragged rays, bad or repeated
    // indices, simplices larger than n, or no simplex of size n.
    TopologicalFan(std::size_t n, std::vector<RVector> rays, std::vector<Simplex> maximal);

    std::size_t n() const { return n_; }
    std::size_t m() const { return rays_.size(); }
    const RVector& ray(int i) const;  // 1-based
    const std::vector<RVector>& rays() const { return rays_; }

    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
    // All of Sigma including the empty simplex, by size then lexicographically.
    const std::vector<Simplex>& simplices() const { return all_; }
    // Maximal simplices of size n, lexicographic. The first is the designated cone.
    const std::vector<Simplex>& top_simplices() const { return top_; }
    // Rays occurring in some simplex.
    std::vector<int> used_rays() const;

    bool contains(const Simplex& s) const;
    // Throws InvalidSimplexError unless s is in Sigma.
    void require(const Simplex& s) const;
    void require_top(const Simplex& s) const;

private:
    std::size_t n_ = 0;
    std::vector<RVector> rays_;
    std::vector<Simplex> maximal_;
    std::vector<Simplex> all_;
    std::vector<Simplex> top_;
};

Simplex normalize_simplex(Simplex s);
Simplex intersect(const Simplex& a, const Simplex& b);
bool is_subset(const Simplex& a, const Simplex& b);
// Position of ray i inside s, or -1.
int position(const Simplex& s, int i);

struct ValidationReport {
    bool condition1_ok = true;
    bool condition2_ok = true;
    bool complete = true;
    bool nonsingular = true;
    std::vector<std::pair<std::string, std::string>> diagnostics;
};

ValidationReport validate_fan(const TopologicalFan& fan);

// alpha_i^I for i in I, in the order of I.
std::vector<RVector> dual_basis(const TopologicalFan& fan, const Simplex& I);

// a_ik = <alpha_i^I, beta_k>; rows follow I, columns run over all m rays.
std::vector<std::vector<RingElem>> bracket_table(const TopologicalFan& fan, const Simplex& I);

// beta_I^perp = { alpha : <alpha, beta_i> = 0 for i in I }.
//
// The defining equations split: the (b, c) part of alpha is constrained by
// rational linear equations in Q^{2n} (coordinates b_1..b_n, c_1..c_n) and the
// v part by integer equations in Z^n.
struct BetaPerp {
    std::size_t n = 0;
    QSubspace complex_part;
    std::vector<std::vector<Integer>> lattice;  // Z-basis of the v part
    QSubspace lattice_span;                     // its rational span

    bool contains(const RVector& alpha) const;
    // Element with the given (b, c) coordinates and integer lattice combination.
    RVector element(const std::vector<Rational>& bc, const std::vector<Integer>& lattice_coeffs) const;
};

BetaPerp beta_perp(const TopologicalFan& fan, const Simplex& I);

// lambda_i = <alpha, beta_i>, verified by alpha = sum lambda_i alpha_i^I.
std::vector<RingElem> decompose_in_dual(const TopologicalFan& fan, const RVector& alpha, const Simplex& I);

// Lie(Ker lambda) in Q^{2m}, coordinates (x_1..x_m, y_1..y_m).
QSubspace kernel_lie_basis(const TopologicalFan& fan, const Simplex& I);

}  // namespace ttk
