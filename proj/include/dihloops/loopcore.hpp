#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dihloops/errors.hpp"

namespace dihloops {

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;
inline constexpr int kDefaultTableBound = 128;
inline constexpr int kDefaultBruteBound = 64;

/**
 * Permutation on {0..n-1}. Composition reads left to right: p.then(q)
 * applies p first, matching the postfix convention used everywhere here.
 */
class Perm {
public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Perm then(const Perm& q) const;
    Perm inverse() const;
    bool is_identity() const;

    bool operator==(const Perm& other) const { return images_ == other.images_; }
    bool operator!=(const Perm& other) const { return images_ != other.images_; }
    bool operator<(const Perm& other) const { return images_ < other.images_; }

private:
    struct unchecked_tag {};
    Perm(std::vector<int> images, unchecked_tag) : images_(std::move(images)) {}
    std::vector<int> images_;
};

/// Permutation group given by generators with its closure materialized
/// (sorted, deterministic).
struct PermGroup {
    std::vector<Perm> generators;
    std::vector<Perm> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const Perm& p) const;
    /// Cayley table over the sorted element list (identity is element 0).
    std::vector<int> cayley_table() const;
};

/// Breadth-first closure of the generators under composition. Throws
/// cap_error when the element count would exceed cap.
PermGroup close(std::vector<Perm> generators, std::size_t cap = kDefaultClosureCap);

/**
 * Finite loop as a multiplication table: a Latin square with a two-sided
 * identity. Elements are dense indices 0..n-1; labels are cosmetic.
 * Left/right division tables are precomputed at validation.
 */
class FiniteLoop {
public:
    /// validate_loop: checks the Latin property row by row and column by
    /// column, then locates the two-sided identity. Throws invariant_error
    /// naming the first violated condition.
    static FiniteLoop validate(int n, std::vector<int> table,
                               std::vector<std::string> labels = {});

    int size() const { return size_; }
    int identity() const { return identity_; }
    const std::vector<std::string>& labels() const { return labels_; }

    int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * size_ + y]; }
    /// z with x*z = y.
    int left_div(int x, int y) const { return ldiv_[static_cast<std::size_t>(x) * size_ + y]; }
    /// z with z*x = y.
    int right_div(int x, int y) const { return rdiv_[static_cast<std::size_t>(x) * size_ + y]; }

    Perm left_translation(int x) const;   // y -> x*y
    Perm right_translation(int x) const;  // y -> y*x

    bool is_associative() const;
    bool is_commutative() const;

    const std::vector<int>& raw_table() const { return table_; }

private:
    FiniteLoop() = default;
    int size_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> ldiv_;
    std::vector<int> rdiv_;
    std::vector<std::string> labels_;
};

/// translations(Q, x) = (L_x, R_x).
std::pair<Perm, Perm> translations(const FiniteLoop& q, int x);

struct InnerGenerator {
    enum class Kind { T, L, R };
    Kind kind;
    int x;
    int y;  // unused for T
    Perm perm;
};

/// All |Q| + 2|Q|^2 tagged inner-mapping generators
/// T_x = R_x L_x^-1, L_{x,y} = L_x L_y L_{yx}^-1, R_{x,y} = R_x R_y R_{xy}^-1.
std::vector<InnerGenerator> inner_generators(const FiniteLoop& q);

PermGroup mult_group(const FiniteLoop& q, std::size_t cap = kDefaultClosureCap);
PermGroup inn_group(const FiniteLoop& q, std::size_t cap = kDefaultClosureCap);

/// True iff p fixes the identity and (xy)p = (xp)(yp) for all x, y.
bool is_automorphism(const FiniteLoop& q, const Perm& p);

/// True iff every inner-mapping generator is an automorphism.
bool is_automorphic_loop(const FiniteLoop& q);

/// All automorphisms by backtracking over images of a greedily chosen
/// generating set. Bound limits |Q|.
std::vector<Perm> brute_automorphisms(const FiniteLoop& q, int bound = kDefaultBruteBound);

/// All isomorphisms Q1 -> Q2 (empty if none, or if sizes differ).
std::vector<Perm> brute_isomorphisms(const FiniteLoop& q1, const FiniteLoop& q2,
                                     int bound = kDefaultBruteBound);

/// Middle nucleus {y : (xy)z = x(yz) for all x, z}, sorted; verified to be
/// closed under multiplication.
std::vector<int> middle_nucleus(const FiniteLoop& q);

struct InversesAndSquares {
    Perm inversion;            // J: x -> x^-1
    std::vector<int> squares;  // x -> x*x
};

/// Two-sided inverses and squares. Requires the loop to be power-associative;
/// each single-generated subloop is checked for associativity and the
/// operation fails loudly on a left/right inverse mismatch.
InversesAndSquares inverses_and_powers(const FiniteLoop& q);

/// Brute-force isomorphism test for associative inputs (both are checked).
bool group_isomorphic(const FiniteLoop& a, const FiniteLoop& b, int bound = kDefaultBruteBound);
bool group_isomorphic(const PermGroup& a, const PermGroup& b, int bound = kDefaultBruteBound);

/// Multiplicative closure of seed (plus the identity): always a subloop.
std::vector<int> subloop_generated(const FiniteLoop& q, const std::vector<int>& seed);

/// Elementary divisors of a subset that forms an abelian subgroup of Q
/// (closure, associativity and commutativity on the subset are verified).
std::vector<int> abelian_subgroup_divisors(const FiniteLoop& q, const std::vector<int>& subset);

/// Loop exchange format: first line n, then n rows of n 0-based indices;
/// the identity must be element 0.
FiniteLoop read_loop_table(std::istream& in);
FiniteLoop read_loop_file(const std::string& path);
void write_loop_table(std::ostream& out, const FiniteLoop& q);

}  // namespace dihloops
