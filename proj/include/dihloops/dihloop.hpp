#pragma once

#include <vector>

#include "dihloops/abelian.hpp"
#include "dihloops/loopcore.hpp"

namespace dihloops {

/// Element (i, u) of Dih(m, G, alpha) with i in [0, m).
struct DihElement {
    int i;
    GroupElement u;
    bool operator==(const DihElement&) const = default;
};

/**
 * The loop Dih(m, G, alpha) on Z_m x G with
 *
 *     (i,u)(j,v) = (i+j, ((-1)^j u + v) alpha^(ij)),
 *
 * where i, j are the representatives in {0..m-1} and the exponent ij is the
 * plain integer product of those representatives, never reduced modulo m.
 * Elements are indexed i-major, (i,u) -> i*|G| + index(u), so the identity
 * (0,0) is element 0.
 *
 * The checked constructor accepts dihedral-like parameters only (m even and
 * either m = 2 or alpha^2 = 1). raw() skips that check so the automorphic
 * classification can be probed from both sides; raw loops still validate as
 * loops but the closed-form predicates below refuse them.
 */
class DihLoop {
public:
    DihLoop(int m, AbelianGroup g, GroupMorphism alpha);
    static DihLoop raw(int m, AbelianGroup g, GroupMorphism alpha);

    int m() const { return m_; }
    const AbelianGroup& group() const { return group_; }
    const GroupMorphism& alpha() const { return alpha_; }
    bool dihedral_like() const { return dihedral_like_; }
    int size() const { return m_ * group_.order(); }

    DihElement identity_element() const { return {0, group_.zero()}; }
    int index_of(const DihElement& x) const;
    DihElement element(int index) const;

    /// The Eq-style product of two elements.
    DihElement mult(const DihElement& x, const DihElement& y) const;

    /// The validated multiplication table (built once at construction).
    const FiniteLoop& table() const { return table_; }

    /// Closed-form predicates; require dihedral-like parameters.
    bool is_group() const;
    bool is_commutative_group() const;

    /// Squaring census: how many times x is a square.
    int chi(const DihElement& x) const;

    /// Closed-form inner mappings T_a, R_{x,y}, L_{x,y}.
    Perm inner_t(const DihElement& a) const;
    Perm inner_r(const DihElement& x, const DihElement& y) const;
    Perm inner_l(const DihElement& x, const DihElement& y) const;

    /// alpha^e applied to u, for any integer exponent (negative allowed).
    GroupElement alpha_power(long long e, const GroupElement& u) const;

private:
    DihLoop(int m, AbelianGroup g, GroupMorphism alpha, bool raw);

    FiniteLoop build_table() const;

    int m_;
    AbelianGroup group_;
    GroupMorphism alpha_;
    bool dihedral_like_;
    int alpha_order_;
    std::vector<std::vector<int>> alpha_pow_;  // index map of alpha^k for k in [0, order)
    FiniteLoop table_;
};

/// The automorphic classification: m = 2, or m > 2 even with alpha^2 = 1,
/// or m odd with alpha = 1 and exp(G) <= 2.
bool is_automorphic_params(int m, const AbelianGroup& g, const GroupMorphism& alpha);

/// Generalized dicyclic group Dic(A, y) on {0,1} x A for y of order 2:
/// (e1,a)(e2,b) = (e1 xor e2, sigma(a,e2) + b + [e1 e2] y) with
/// sigma(a,e2) = a if e2 = 0 else -a. Associativity is verified exhaustively.
FiniteLoop dicyclic_construct(const AbelianGroup& a, const GroupElement& y);

}  // namespace dihloops
