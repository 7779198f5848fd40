#include "dihloops/loopcore.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace dihloops {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw invariant_error("images do not form a permutation");
        seen[v] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Perm(std::move(img), unchecked_tag{});
}

Perm Perm::then(const Perm& q) const {
    if (degree() != q.degree()) throw invariant_error("permutation degree mismatch");
    std::vector<int> img(images_.size());
    for (int i = 0; i < degree(); ++i) img[i] = q.images_[images_[i]];
    return Perm(std::move(img), unchecked_tag{});
}

Perm Perm::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
    return Perm(std::move(img), unchecked_tag{});
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

std::vector<int> PermGroup::cayley_table() const {
    int n = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Perm prod = elements[i].then(elements[j]);
            auto it = std::lower_bound(elements.begin(), elements.end(), prod);
            if (it == elements.end() || *it != prod)
                throw invariant_error("permutation group closure is inconsistent");
            table[static_cast<std::size_t>(i) * n + j] =
                static_cast<int>(it - elements.begin());
        }
    return table;
}

PermGroup close(std::vector<Perm> generators, std::size_t cap) {
    if (generators.empty()) throw invariant_error("closure needs at least one generator");
    int n = generators[0].degree();
    for (const auto& p : generators)
        if (p.degree() != n) throw invariant_error("generators act on different domains");

    PermGroup g;
    g.generators = std::move(generators);
    std::set<Perm> seen;
    std::vector<Perm> frontier;
    seen.insert(Perm::identity(n));
    frontier.push_back(Perm::identity(n));
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& gen : g.generators) {
                Perm prod = p.then(gen);
                if (seen.insert(prod).second) {
                    if (seen.size() > cap)
                        throw cap_error("permutation closure exceeds the configured cap");
                    next.push_back(std::move(prod));
                }
            }
        frontier = std::move(next);
    }
    g.elements.assign(seen.begin(), seen.end());
    return g;
}

FiniteLoop FiniteLoop::validate(int n, std::vector<int> table, std::vector<std::string> labels) {
    if (n <= 0) throw invariant_error("loop size must be positive");
    if (static_cast<int>(table.size()) != n * n)
        throw invariant_error("table is not n x n");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw invariant_error("label count does not match the table size");
    for (int v : table)
        if (v < 0 || v >= n) throw invariant_error("table entry out of range");

    std::vector<char> seen(n);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = table[static_cast<std::size_t>(r) * n + c];
            if (seen[v])
                throw invariant_error("row " + std::to_string(r) +
                                      " is not a permutation: value " + std::to_string(v) +
                                      " repeats");
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            int v = table[static_cast<std::size_t>(r) * n + c];
            if (seen[v])
                throw invariant_error("column " + std::to_string(c) +
                                      " is not a permutation: value " + std::to_string(v) +
                                      " repeats");
            seen[v] = 1;
        }
    }
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = table[static_cast<std::size_t>(e) * n + x] == x &&
                 table[static_cast<std::size_t>(x) * n + e] == x;
        if (ok) identity = e;
    }
    if (identity < 0) throw invariant_error("no two-sided identity element");

    FiniteLoop q;
    q.size_ = n;
    q.identity_ = identity;
    q.table_ = std::move(table);
    q.labels_ = std::move(labels);
    q.ldiv_.assign(static_cast<std::size_t>(n) * n, -1);
    q.rdiv_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            q.ldiv_[static_cast<std::size_t>(x) * n + q.mul(x, z)] = z;
            q.rdiv_[static_cast<std::size_t>(x) * n + q.mul(z, x)] = z;
        }
    return q;
}

Perm FiniteLoop::left_translation(int x) const {
    std::vector<int> img(size_);
    for (int y = 0; y < size_; ++y) img[y] = mul(x, y);
    return Perm(std::move(img));
}

Perm FiniteLoop::right_translation(int x) const {
    std::vector<int> img(size_);
    for (int y = 0; y < size_; ++y) img[y] = mul(y, x);
    return Perm(std::move(img));
}

bool FiniteLoop::is_associative() const {
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y) {
            int xy = mul(x, y);
            for (int z = 0; z < size_; ++z)
                if (mul(xy, z) != mul(x, mul(y, z))) return false;
        }
    return true;
}

bool FiniteLoop::is_commutative() const {
    for (int x = 0; x < size_; ++x)
        for (int y = x + 1; y < size_; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

std::pair<Perm, Perm> translations(const FiniteLoop& q, int x) {
    if (x < 0 || x >= q.size()) throw invariant_error("translation index out of range");
    return {q.left_translation(x), q.right_translation(x)};
}

std::vector<InnerGenerator> inner_generators(const FiniteLoop& q) {
    const int n = q.size();
    std::vector<InnerGenerator> gens;
    gens.reserve(static_cast<std::size_t>(n) + 2 * static_cast<std::size_t>(n) * n);
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) {
        for (int z = 0; z < n; ++z) img[z] = q.left_div(x, q.mul(z, x));  // T_x = R_x L_x^-1
        gens.push_back({InnerGenerator::Kind::T, x, -1, Perm(img)});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int yx = q.mul(y, x);
            for (int z = 0; z < n; ++z) img[z] = q.left_div(yx, q.mul(y, q.mul(x, z)));
            gens.push_back({InnerGenerator::Kind::L, x, y, Perm(img)});
            int xy = q.mul(x, y);
            for (int z = 0; z < n; ++z) img[z] = q.right_div(xy, q.mul(q.mul(z, x), y));
            gens.push_back({InnerGenerator::Kind::R, x, y, Perm(img)});
        }
    return gens;
}

PermGroup mult_group(const FiniteLoop& q, std::size_t cap) {
    std::vector<Perm> gens;
    for (int x = 0; x < q.size(); ++x) {
        gens.push_back(q.left_translation(x));
        gens.push_back(q.right_translation(x));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return close(std::move(gens), cap);
}

PermGroup inn_group(const FiniteLoop& q, std::size_t cap) {
    std::vector<Perm> gens;
    for (auto& g : inner_generators(q)) gens.push_back(std::move(g.perm));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return close(std::move(gens), cap);
}

bool is_automorphism(const FiniteLoop& q, const Perm& p) {
    if (p.degree() != q.size()) throw invariant_error("permutation degree mismatch");
    if (p.apply(q.identity()) != q.identity()) return false;
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (p.apply(q.mul(x, y)) != q.mul(p.apply(x), p.apply(y))) return false;
    return true;
}

namespace {

bool map_is_automorphism(const FiniteLoop& q, const std::vector<int>& p) {
    if (p[q.identity()] != q.identity()) return false;
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (p[q.mul(x, y)] != q.mul(p[x], p[y])) return false;
    return true;
}

}  // namespace

bool is_automorphic_loop(const FiniteLoop& q) {
    const int n = q.size();
    std::vector<int> p(n);
    for (int x = 0; x < n; ++x) {
        for (int z = 0; z < n; ++z) p[z] = q.left_div(x, q.mul(z, x));  // T_x
        if (!map_is_automorphism(q, p)) return false;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int yx = q.mul(y, x);
            for (int z = 0; z < n; ++z) p[z] = q.left_div(yx, q.mul(y, q.mul(x, z)));
            if (!map_is_automorphism(q, p)) return false;  // L_{x,y}
            int xy = q.mul(x, y);
            for (int z = 0; z < n; ++z) p[z] = q.right_div(xy, q.mul(q.mul(z, x), y));
            if (!map_is_automorphism(q, p)) return false;  // R_{x,y}
        }
    return true;
}

std::vector<int> subloop_generated(const FiniteLoop& q, const std::vector<int>& seed) {
    std::vector<char> in(q.size(), 0);
    std::vector<int> list;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            list.push_back(x);
        }
    };
    push(q.identity());
    for (int s : seed) {
        if (s < 0 || s >= q.size()) throw invariant_error("seed element out of range");
        push(s);
    }
    for (std::size_t h = 0; h < list.size(); ++h)
        for (std::size_t j = 0; j <= h; ++j) {
            push(q.mul(list[h], list[j]));
            push(q.mul(list[j], list[h]));
        }
    std::sort(list.begin(), list.end());
    return list;
}

namespace {

// Greedy generating set: repeatedly add the element whose generated subloop
// grows the most. Keeps the backtracking depth small.
std::vector<int> greedy_generating_set(const FiniteLoop& q) {
    std::vector<int> gens;
    std::vector<int> current = subloop_generated(q, {});
    while (static_cast<int>(current.size()) < q.size()) {
        std::vector<char> in(q.size(), 0);
        for (int x : current) in[x] = 1;
        int best = -1;
        std::size_t best_size = 0;
        for (int x = 0; x < q.size(); ++x) {
            if (in[x]) continue;
            std::vector<int> seed = gens;
            seed.push_back(x);
            std::size_t grown = subloop_generated(q, seed).size();
            if (grown > best_size) {
                best_size = grown;
                best = x;
            }
        }
        gens.push_back(best);
        std::vector<int> seed = gens;
        current = subloop_generated(q, seed);
    }
    return gens;
}

// First-repeat signature of the right-power sequence x, x*x, (x*x)*x, ...
// Any isomorphism maps the sequence of one element onto that of its image,
// so the signature is preserved.
std::pair<int, int> rpower_signature(const FiniteLoop& q, int x) {
    std::vector<int> pos(q.size(), -1);
    int a = x;
    int k = 1;
    while (pos[a] < 0) {
        pos[a] = k;
        a = q.mul(a, x);
        ++k;
    }
    return {pos[a], k};
}

class IsoSearch {
public:
    IsoSearch(const FiniteLoop& a, const FiniteLoop& b, bool find_first)
        : a_(a), b_(b), find_first_(find_first) {}

    std::vector<Perm> run() {
        const int n = a_.size();
        if (n != b_.size()) return {};
        fwd_.assign(n, -1);
        bwd_.assign(n, -1);
        assigned_.clear();
        gens_ = greedy_generating_set(a_);
        sig_b_.resize(n);
        for (int y = 0; y < n; ++y) sig_b_[y] = rpower_signature(b_, y);
        gen_sigs_.clear();
        for (int g : gens_) gen_sigs_.push_back(rpower_signature(a_, g));

        // An isomorphism of loops must map identity to identity.
        if (try_pair(a_.identity(), b_.identity()) && propagate_from(0)) recurse(0);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    bool try_pair(int x, int y) {
        if (fwd_[x] != -1) return fwd_[x] == y;
        if (bwd_[y] != -1) return false;
        fwd_[x] = y;
        bwd_[y] = x;
        assigned_.push_back(x);
        return true;
    }

    // Close the assigned set under products, checking consistency. Pairs
    // (x, y) are examined once the later of the two is processed.
    bool propagate_from(std::size_t head) {
        for (std::size_t h = head; h < assigned_.size(); ++h) {
            int x = assigned_[h];
            int fx = fwd_[x];
            for (std::size_t j = 0; j <= h; ++j) {
                int y = assigned_[j];
                int fy = fwd_[y];
                if (!try_pair(a_.mul(x, y), b_.mul(fx, fy))) return false;
                if (!try_pair(a_.mul(y, x), b_.mul(fy, fx))) return false;
            }
        }
        return true;
    }

    void undo(std::size_t size) {
        while (assigned_.size() > size) {
            int x = assigned_.back();
            assigned_.pop_back();
            bwd_[fwd_[x]] = -1;
            fwd_[x] = -1;
        }
    }

    void recurse(std::size_t g) {
        if (find_first_ && !found_.empty()) return;
        if (g == gens_.size()) {
            found_.emplace_back(fwd_);
            return;
        }
        int x = gens_[g];
        if (fwd_[x] != -1) {  // forced by earlier propagation
            recurse(g + 1);
            return;
        }
        for (int y = 0; y < b_.size(); ++y) {
            if (bwd_[y] != -1) continue;
            if (sig_b_[y] != gen_sigs_[g]) continue;
            std::size_t mark = assigned_.size();
            std::size_t head = assigned_.size();
            if (try_pair(x, y) && propagate_from(head)) recurse(g + 1);
            undo(mark);
            if (find_first_ && !found_.empty()) return;
        }
    }

    const FiniteLoop& a_;
    const FiniteLoop& b_;
    bool find_first_;
    std::vector<int> fwd_, bwd_;
    std::vector<int> assigned_;
    std::vector<int> gens_;
    std::vector<std::pair<int, int>> sig_b_;
    std::vector<std::pair<int, int>> gen_sigs_;
    std::vector<Perm> found_;
};

}  // namespace

std::vector<Perm> brute_isomorphisms(const FiniteLoop& q1, const FiniteLoop& q2, int bound) {
    if (q1.size() != q2.size()) return {};
    if (q1.size() > bound) throw cap_error("loop size exceeds the brute search bound");
    return IsoSearch(q1, q2, false).run();
}

std::vector<Perm> brute_automorphisms(const FiniteLoop& q, int bound) {
    return brute_isomorphisms(q, q, bound);
}

std::vector<int> middle_nucleus(const FiniteLoop& q) {
    const int n = q.size();
    std::vector<int> nucleus;
    for (int y = 0; y < n; ++y) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            int xy = q.mul(x, y);
            for (int z = 0; z < n; ++z)
                if (q.mul(xy, z) != q.mul(x, q.mul(y, z))) {
                    ok = false;
                    break;
                }
        }
        if (ok) nucleus.push_back(y);
    }
    std::vector<char> in(n, 0);
    for (int y : nucleus) in[y] = 1;
    for (int y1 : nucleus)
        for (int y2 : nucleus)
            if (!in[q.mul(y1, y2)])
                throw invariant_error("middle nucleus is not closed under multiplication");
    return nucleus;
}

InversesAndSquares inverses_and_powers(const FiniteLoop& q) {
    const int n = q.size();
    std::vector<int> inv(n), squares(n);
    for (int x = 0; x < n; ++x) {
        int li = q.right_div(x, q.identity());  // li * x = 1
        int ri = q.left_div(x, q.identity());   // x * ri = 1
        if (li != ri)
            throw invariant_error("left and right inverses differ at element " +
                                  std::to_string(x) + " (loop is not power-associative)");
        inv[x] = li;
        squares[x] = q.mul(x, x);
    }
    for (int x = 0; x < n; ++x) {
        std::vector<int> sub = subloop_generated(q, {x});
        for (int a : sub)
            for (int b : sub) {
                int ab = q.mul(a, b);
                for (int c : sub)
                    if (q.mul(ab, c) != q.mul(a, q.mul(b, c)))
                        throw invariant_error("subloop generated by element " +
                                              std::to_string(x) +
                                              " is not associative (loop is not power-associative)");
            }
    }
    return {Perm(std::move(inv)), std::move(squares)};
}

bool group_isomorphic(const FiniteLoop& a, const FiniteLoop& b, int bound) {
    if (!a.is_associative() || !b.is_associative())
        throw invariant_error("group_isomorphic requires associative inputs");
    if (a.size() != b.size()) return false;
    if (a.size() > bound) throw cap_error("group size exceeds the brute search bound");
    return !IsoSearch(a, b, true).run().empty();
}

bool group_isomorphic(const PermGroup& a, const PermGroup& b, int bound) {
    if (a.order() != b.order()) return false;
    FiniteLoop ta = FiniteLoop::validate(static_cast<int>(a.order()), a.cayley_table());
    FiniteLoop tb = FiniteLoop::validate(static_cast<int>(b.order()), b.cayley_table());
    return group_isomorphic(ta, tb, bound);
}

std::vector<int> abelian_subgroup_divisors(const FiniteLoop& q, const std::vector<int>& subset) {
    if (subset.empty()) throw invariant_error("subset is empty");
    const int n = static_cast<int>(subset.size());
    std::vector<char> in(q.size(), 0);
    for (int x : subset) {
        if (x < 0 || x >= q.size()) throw invariant_error("subset element out of range");
        in[x] = 1;
    }
    if (!in[q.identity()]) throw invariant_error("subset does not contain the identity");
    for (int a : subset)
        for (int b : subset) {
            int ab = q.mul(a, b);
            if (!in[ab]) throw invariant_error("subset is not closed under multiplication");
            if (ab != q.mul(b, a)) throw invariant_error("subset is not commutative");
            for (int c : subset)
                if (q.mul(ab, c) != q.mul(a, q.mul(b, c)))
                    throw invariant_error("subset is not associative");
        }

    std::vector<int> ord;
    ord.reserve(subset.size());
    for (int x : subset) {
        int k = 1;
        int p = x;
        while (p != q.identity()) {
            p = q.mul(p, x);
            ++k;
        }
        ord.push_back(k);
    }

    std::vector<int> divisors;
    int rest = n;
    for (long long p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest = static_cast<int>(rest / p);
        // e[k] = log_p |{x : ord(x) divides p^k}|
        std::vector<int> e{0};
        for (long long pk = p;; pk *= p) {
            int count = 0;
            for (int o : ord)
                if (pk % o == 0) ++count;
            int lg = 0;
            long long c = count;
            while (c % p == 0) {
                c /= p;
                ++lg;
            }
            if (c != 1) throw invariant_error("subset element orders are inconsistent");
            if (lg == e.back()) break;
            e.push_back(lg);
        }
        for (std::size_t k = 1; k < e.size(); ++k) {
            int dk = e[k] - e[k - 1];
            int dk1 = (k + 1 < e.size()) ? e[k + 1] - e[k] : 0;
            long long pk = 1;
            for (std::size_t i = 0; i < k; ++i) pk *= p;
            for (int i = 0; i < dk - dk1; ++i) divisors.push_back(static_cast<int>(pk));
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

FiniteLoop read_loop_table(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw parse_error("table file: cannot read the size line");
    if (n <= 0 || n > kDefaultTableBound)
        throw parse_error("table file: size out of range");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (auto& v : table)
        if (!(in >> v)) throw parse_error("table file: truncated table body");
    FiniteLoop q = FiniteLoop::validate(n, std::move(table));
    if (q.identity() != 0) throw invariant_error("table file: identity must be element 0");
    return q;
}

FiniteLoop read_loop_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open table file: " + path);
    return read_loop_table(in);
}

void write_loop_table(std::ostream& out, const FiniteLoop& q) {
    out << q.size() << "\n";
    for (int r = 0; r < q.size(); ++r) {
        for (int c = 0; c < q.size(); ++c) {
            if (c) out << ' ';
            out << q.mul(r, c);
        }
        out << "\n";
    }
}

}  // namespace dihloops
