#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dihloops/errors.hpp"

namespace dihloops {

/// Element of a finite abelian group: one residue per cyclic factor.
using GroupElement = std::vector<int>;

/**
 * Finite abelian group Z_{n1} x ... x Z_{nk}, factor order kept as given.
 *
 * Elements are residue tuples indexed 0..order-1 in mixed radix with the
 * last coordinate fastest. Two groups are abstractly isomorphic iff their
 * canonical_divisors() multisets agree.
 */
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<int> moduli);

    int order() const { return order_; }
    int rank() const { return static_cast<int>(moduli_.size()); }
    const std::vector<int>& moduli() const { return moduli_; }

    /// Elementary divisors: sorted multiset of prime powers.
    const std::vector<int>& canonical_divisors() const { return divisors_; }

    /// Least n >= 1 with n*u = 0 for every u (lcm of the moduli).
    int exponent() const { return exponent_; }

    GroupElement zero() const { return GroupElement(moduli_.size(), 0); }
    GroupElement element(int index) const;
    int index_of(const GroupElement& u) const;
    GroupElement generator(int k) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(long long k, const GroupElement& a) const;
    int element_order(const GroupElement& a) const;

    bool operator==(const AbelianGroup& other) const { return moduli_ == other.moduli_; }
    bool operator!=(const AbelianGroup& other) const { return moduli_ != other.moduli_; }

private:
    std::vector<int> moduli_;
    int order_;
    int exponent_;
    std::vector<int> divisors_;
};

/// make_group of the public surface: validates moduli and builds the group.
AbelianGroup make_group(const std::vector<int>& moduli);

/**
 * Homomorphism between finite abelian groups, stored as one codomain image
 * per domain cyclic factor plus the full index-level mapping table (built
 * once at construction, so sharing across threads is safe).
 *
 * Composition is read left to right throughout: f.then(g) applies f first.
 */
class GroupMorphism {
public:
    GroupMorphism(AbelianGroup domain, AbelianGroup codomain,
                  std::vector<GroupElement> generator_images);

    static GroupMorphism identity(const AbelianGroup& g);

    const AbelianGroup& domain() const { return domain_; }
    const AbelianGroup& codomain() const { return codomain_; }
    const std::vector<GroupElement>& generator_images() const { return images_; }
    const std::vector<int>& mapping() const { return mapping_; }

    GroupElement apply(const GroupElement& u) const;
    int apply_index(int index) const { return mapping_[index]; }

    /// Apply this morphism first, then g.
    GroupMorphism then(const GroupMorphism& g) const;

    bool is_bijective() const;
    bool is_identity() const;
    bool is_automorphism() const { return domain_ == codomain_ && is_bijective(); }

    /// Inverse of a bijective morphism.
    GroupMorphism inverse() const;

    /// Multiplicative order of an automorphism.
    int order() const;

    bool operator==(const GroupMorphism& other) const;
    bool operator!=(const GroupMorphism& other) const { return !(*this == other); }

private:
    AbelianGroup domain_;
    AbelianGroup codomain_;
    std::vector<GroupElement> images_;
    std::vector<int> mapping_;
};

/// The automorphism u -> -u.
GroupMorphism negation_morphism(const AbelianGroup& g);

/// All homomorphisms G -> H, in deterministic generator-image order.
std::vector<GroupMorphism> enumerate_homs(const AbelianGroup& g, const AbelianGroup& h);

/// All automorphisms of G, by backtracking over generator images with
/// order-preservation pruning and a final bijectivity check.
std::vector<GroupMorphism> enumerate_automorphisms(const AbelianGroup& g);

/// All isomorphisms G -> H (empty when the groups are not isomorphic).
std::vector<GroupMorphism> enumerate_group_isomorphisms(const AbelianGroup& g,
                                                        const AbelianGroup& h);

/// All gamma in Aut(G) with alpha.then(gamma) == gamma.then(beta),
/// i.e. gamma^-1 alpha gamma = beta.
std::vector<GroupMorphism> conjugators(const GroupMorphism& alpha, const GroupMorphism& beta);

/// First conjugator if one exists.
std::optional<GroupMorphism> are_conjugate(const GroupMorphism& alpha, const GroupMorphism& beta);

/// Centralizer of alpha in Aut(G).
std::vector<GroupMorphism> centralizer(const GroupMorphism& alpha);

/// Alpha-invariant subgroups of index at most 2, via the kernels of
/// homomorphisms h: G -> Z_2 with alpha-then-h equal to h. Each subgroup is a
/// sorted list of element indices; G itself is always included.
std::vector<std::vector<int>> invariant_index2_subgroups(const AbelianGroup& g,
                                                         const GroupMorphism& alpha);

/// G_2, 2G, G(1-alpha) and 2G + G(1-alpha), as sorted element-index lists.
struct CharacteristicImages {
    std::vector<int> order_two;              // G_2 = {u : 2u = 0}
    std::vector<int> doubled;                // 2G
    std::vector<int> one_minus_alpha;        // G(1-alpha) = {u - u.alpha}
    std::vector<int> doubled_plus_one_minus; // 2G + G(1-alpha)
};
CharacteristicImages characteristic_images(const AbelianGroup& g, const GroupMorphism& alpha);

/**
 * Holomorph Hol(G) = Aut(G) x G with (a,u)(b,v) = (ab, u.b + v).
 * Element index = aut_index * |G| + translation_index.
 */
class HolGroup {
public:
    explicit HolGroup(AbelianGroup g, std::size_t cap = 5000);

    const AbelianGroup& group() const { return group_; }
    const std::vector<GroupMorphism>& automorphisms() const { return auts_; }
    int order() const { return static_cast<int>(auts_.size()) * group_.order(); }

    int index_of(int aut_index, int translation_index) const;
    int aut_part(int element) const { return element / group_.order(); }
    int translation_part(int element) const { return element % group_.order(); }

    /// Index of a morphism within automorphisms(); throws if absent.
    int aut_index_of(const GroupMorphism& a) const;

    int identity() const;
    int mult(int e0, int e1) const;

    /// Full Cayley table (row-major, order() x order()).
    std::vector<int> cayley_table() const;

private:
    AbelianGroup group_;
    std::vector<GroupMorphism> auts_;
    std::map<std::vector<int>, int> aut_lookup_;
    int identity_aut_;
};

HolGroup holomorph(const AbelianGroup& g);

/// Euler totient.
long long euler_phi(long long n);

/// Multiset of prime powers of n (empty for n = 1).
std::vector<int> prime_power_decomposition(int n);

}  // namespace dihloops
