#include "dihloops/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace dihloops {

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> factors;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

int mod_norm(long long v, int m) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    long long order = 1;
    long long exponent = 1;
    for (int n : moduli_) {
        if (n < 1) throw invariant_error("group modulus must be >= 1");
        order *= n;
        exponent = std::lcm(exponent, static_cast<long long>(n));
        if (order > 1'000'000) throw cap_error("group order exceeds supported size");
    }
    order_ = static_cast<int>(order);
    exponent_ = static_cast<int>(exponent);
    for (int n : moduli_) {
        for (const auto& [p, e] : factorize(n)) {
            long long q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            divisors_.push_back(static_cast<int>(q));
        }
    }
    std::sort(divisors_.begin(), divisors_.end());
}

AbelianGroup make_group(const std::vector<int>& moduli) { return AbelianGroup(moduli); }

GroupElement AbelianGroup::element(int index) const {
    if (index < 0 || index >= order_) throw invariant_error("element index out of range");
    GroupElement u(moduli_.size(), 0);
    for (int k = rank() - 1; k >= 0; --k) {
        u[k] = index % moduli_[k];
        index /= moduli_[k];
    }
    return u;
}

int AbelianGroup::index_of(const GroupElement& u) const {
    if (static_cast<int>(u.size()) != rank()) throw invariant_error("element rank mismatch");
    int index = 0;
    for (int k = 0; k < rank(); ++k) {
        if (u[k] < 0 || u[k] >= moduli_[k]) throw invariant_error("element coordinate out of range");
        index = index * moduli_[k] + u[k];
    }
    return index;
}

GroupElement AbelianGroup::generator(int k) const {
    GroupElement u = zero();
    if (moduli_[k] > 1) u[k] = 1;
    return u;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r(moduli_.size());
    for (int k = 0; k < rank(); ++k) r[k] = mod_norm(a[k] + static_cast<long long>(b[k]), moduli_[k]);
    return r;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    GroupElement r(moduli_.size());
    for (int k = 0; k < rank(); ++k) r[k] = mod_norm(-static_cast<long long>(a[k]), moduli_[k]);
    return r;
}

GroupElement AbelianGroup::scale(long long k, const GroupElement& a) const {
    GroupElement r(moduli_.size());
    for (int i = 0; i < rank(); ++i) r[i] = mod_norm(k * a[i], moduli_[i]);
    return r;
}

int AbelianGroup::element_order(const GroupElement& a) const {
    long long ord = 1;
    for (int k = 0; k < rank(); ++k) {
        int d = std::gcd(a[k], moduli_[k]);
        ord = std::lcm(ord, static_cast<long long>(moduli_[k] / d));
    }
    return static_cast<int>(ord);
}

GroupMorphism::GroupMorphism(AbelianGroup domain, AbelianGroup codomain,
                             std::vector<GroupElement> generator_images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(generator_images)) {
    if (static_cast<int>(images_.size()) != domain_.rank())
        throw invariant_error("morphism needs one image per domain factor");
    for (int k = 0; k < domain_.rank(); ++k) {
        // Well-definedness: the image must be annihilated by the factor order.
        if (codomain_.scale(domain_.moduli()[k], images_[k]) != codomain_.zero())
            throw invariant_error("generator image not annihilated by the factor order");
    }
    mapping_.resize(domain_.order());
    for (int idx = 0; idx < domain_.order(); ++idx) {
        GroupElement u = domain_.element(idx);
        GroupElement v = codomain_.zero();
        for (int k = 0; k < domain_.rank(); ++k)
            v = codomain_.add(v, codomain_.scale(u[k], images_[k]));
        mapping_[idx] = codomain_.index_of(v);
    }
}

GroupMorphism GroupMorphism::identity(const AbelianGroup& g) {
    std::vector<GroupElement> images;
    images.reserve(g.rank());
    for (int k = 0; k < g.rank(); ++k) images.push_back(g.generator(k));
    return GroupMorphism(g, g, std::move(images));
}

GroupElement GroupMorphism::apply(const GroupElement& u) const {
    return codomain_.element(mapping_[domain_.index_of(u)]);
}

GroupMorphism GroupMorphism::then(const GroupMorphism& g) const {
    if (codomain_ != g.domain_) throw invariant_error("morphism composition domain mismatch");
    std::vector<GroupElement> images;
    images.reserve(images_.size());
    for (const auto& img : images_) images.push_back(g.apply(img));
    return GroupMorphism(domain_, g.codomain_, std::move(images));
}

bool GroupMorphism::is_bijective() const {
    if (domain_.order() != codomain_.order()) return false;
    std::vector<char> seen(mapping_.size(), 0);
    for (int v : mapping_) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool GroupMorphism::is_identity() const {
    if (domain_ != codomain_) return false;
    for (int i = 0; i < static_cast<int>(mapping_.size()); ++i)
        if (mapping_[i] != i) return false;
    return true;
}

GroupMorphism GroupMorphism::inverse() const {
    if (!is_bijective()) throw invariant_error("cannot invert a non-bijective morphism");
    std::vector<int> inv(mapping_.size());
    for (int i = 0; i < static_cast<int>(mapping_.size()); ++i) inv[mapping_[i]] = i;
    std::vector<GroupElement> images;
    images.reserve(codomain_.rank());
    for (int k = 0; k < codomain_.rank(); ++k)
        images.push_back(domain_.element(inv[codomain_.index_of(codomain_.generator(k))]));
    return GroupMorphism(codomain_, domain_, std::move(images));
}

int GroupMorphism::order() const {
    if (!is_automorphism()) throw invariant_error("order is defined for automorphisms only");
    GroupMorphism power = *this;
    int n = 1;
    while (!power.is_identity()) {
        power = power.then(*this);
        ++n;
        if (n > domain_.order() * domain_.order())
            throw invariant_error("automorphism order runaway");
    }
    return n;
}

bool GroupMorphism::operator==(const GroupMorphism& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && mapping_ == other.mapping_;
}

GroupMorphism negation_morphism(const AbelianGroup& g) {
    std::vector<GroupElement> images;
    images.reserve(g.rank());
    for (int k = 0; k < g.rank(); ++k) images.push_back(g.negate(g.generator(k)));
    return GroupMorphism(g, g, std::move(images));
}

std::vector<GroupMorphism> enumerate_homs(const AbelianGroup& g, const AbelianGroup& h) {
    // Candidate images per factor: elements annihilated by the factor order.
    std::vector<std::vector<int>> candidates(g.rank());
    for (int k = 0; k < g.rank(); ++k)
        for (int idx = 0; idx < h.order(); ++idx)
            if (h.scale(g.moduli()[k], h.element(idx)) == h.zero()) candidates[k].push_back(idx);

    std::vector<GroupMorphism> result;
    std::vector<GroupElement> images(g.rank(), h.zero());
    auto rec = [&](auto&& self, int k) -> void {
        if (k == g.rank()) {
            result.emplace_back(g, h, images);
            return;
        }
        for (int idx : candidates[k]) {
            images[k] = h.element(idx);
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return result;
}

namespace {

std::vector<GroupMorphism> enumerate_bijective_homs(const AbelianGroup& g, const AbelianGroup& h) {
    std::vector<GroupMorphism> result;
    if (g.order() != h.order()) return result;
    // An isomorphism preserves element orders, so generator k must map to an
    // element of order exactly moduli[k].
    std::vector<std::vector<int>> candidates(g.rank());
    for (int k = 0; k < g.rank(); ++k)
        for (int idx = 0; idx < h.order(); ++idx)
            if (h.element_order(h.element(idx)) == g.moduli()[k]) candidates[k].push_back(idx);

    std::vector<GroupElement> images(g.rank(), h.zero());
    auto rec = [&](auto&& self, int k) -> void {
        if (k == g.rank()) {
            GroupMorphism f(g, h, images);
            if (f.is_bijective()) result.push_back(std::move(f));
            return;
        }
        for (int idx : candidates[k]) {
            images[k] = h.element(idx);
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return result;
}

}  // namespace

std::vector<GroupMorphism> enumerate_automorphisms(const AbelianGroup& g) {
    return enumerate_bijective_homs(g, g);
}

std::vector<GroupMorphism> enumerate_group_isomorphisms(const AbelianGroup& g,
                                                        const AbelianGroup& h) {
    return enumerate_bijective_homs(g, h);
}

std::vector<GroupMorphism> conjugators(const GroupMorphism& alpha, const GroupMorphism& beta) {
    if (!alpha.is_automorphism() || !beta.is_automorphism())
        throw invariant_error("conjugacy is defined for automorphisms");
    if (alpha.domain() != beta.domain())
        throw invariant_error("conjugacy requires automorphisms of the same group");
    std::vector<GroupMorphism> result;
    for (const auto& gamma : enumerate_automorphisms(alpha.domain()))
        if (alpha.then(gamma) == gamma.then(beta)) result.push_back(gamma);
    return result;
}

std::optional<GroupMorphism> are_conjugate(const GroupMorphism& alpha, const GroupMorphism& beta) {
    if (!alpha.is_automorphism() || !beta.is_automorphism())
        throw invariant_error("conjugacy is defined for automorphisms");
    if (alpha.domain() != beta.domain())
        throw invariant_error("conjugacy requires automorphisms of the same group");
    for (const auto& gamma : enumerate_automorphisms(alpha.domain()))
        if (alpha.then(gamma) == gamma.then(beta)) return gamma;
    return std::nullopt;
}

std::vector<GroupMorphism> centralizer(const GroupMorphism& alpha) {
    return conjugators(alpha, alpha);
}

std::vector<std::vector<int>> invariant_index2_subgroups(const AbelianGroup& g,
                                                         const GroupMorphism& alpha) {
    if (!alpha.is_automorphism() || alpha.domain() != g)
        throw invariant_error("expected an automorphism of the given group");
    AbelianGroup z2({2});
    std::vector<std::vector<int>> kernels;
    for (const auto& h : enumerate_homs(g, z2)) {
        if (alpha.then(h) != h) continue;
        std::vector<int> kernel;
        for (int idx = 0; idx < g.order(); ++idx)
            if (h.apply_index(idx) == 0) kernel.push_back(idx);
        if (std::find(kernels.begin(), kernels.end(), kernel) == kernels.end())
            kernels.push_back(std::move(kernel));
    }
    std::sort(kernels.begin(), kernels.end());
    return kernels;
}

namespace {

std::vector<int> sorted_unique_indices(const AbelianGroup& g, std::vector<int> idxs) {
    std::sort(idxs.begin(), idxs.end());
    idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
    (void)g;
    return idxs;
}

void check_subgroup(const AbelianGroup& g, const std::vector<int>& subgroup, const char* name) {
    std::vector<char> in(g.order(), 0);
    for (int idx : subgroup) in[idx] = 1;
    for (int a : subgroup) {
        if (!in[g.index_of(g.negate(g.element(a)))])
            throw invariant_error(std::string(name) + " is not closed under negation");
        for (int b : subgroup)
            if (!in[g.index_of(g.add(g.element(a), g.element(b)))])
                throw invariant_error(std::string(name) + " is not closed under addition");
    }
}

}  // namespace

CharacteristicImages characteristic_images(const AbelianGroup& g, const GroupMorphism& alpha) {
    if (!alpha.is_automorphism() || alpha.domain() != g)
        throw invariant_error("expected an automorphism of the given group");
    CharacteristicImages out;
    std::vector<int> doubled, one_minus;
    for (int idx = 0; idx < g.order(); ++idx) {
        GroupElement u = g.element(idx);
        if (g.scale(2, u) == g.zero()) out.order_two.push_back(idx);
        doubled.push_back(g.index_of(g.scale(2, u)));
        one_minus.push_back(g.index_of(g.add(u, g.negate(alpha.apply(u)))));
    }
    out.doubled = sorted_unique_indices(g, doubled);
    out.one_minus_alpha = sorted_unique_indices(g, one_minus);
    std::vector<int> sum;
    for (int a : out.doubled)
        for (int b : out.one_minus_alpha)
            sum.push_back(g.index_of(g.add(g.element(a), g.element(b))));
    out.doubled_plus_one_minus = sorted_unique_indices(g, sum);

    check_subgroup(g, out.order_two, "G_2");
    check_subgroup(g, out.doubled, "2G");
    check_subgroup(g, out.one_minus_alpha, "G(1-alpha)");
    check_subgroup(g, out.doubled_plus_one_minus, "2G + G(1-alpha)");
    return out;
}

HolGroup::HolGroup(AbelianGroup g, std::size_t cap) : group_(std::move(g)) {
    auts_ = enumerate_automorphisms(group_);
    if (auts_.size() * static_cast<std::size_t>(group_.order()) > cap)
        throw cap_error("holomorph order exceeds cap");
    identity_aut_ = -1;
    for (int i = 0; i < static_cast<int>(auts_.size()); ++i) {
        if (auts_[i].is_identity()) identity_aut_ = i;
        aut_lookup_[auts_[i].mapping()] = i;
    }
}

int HolGroup::index_of(int aut_index, int translation_index) const {
    return aut_index * group_.order() + translation_index;
}

int HolGroup::aut_index_of(const GroupMorphism& a) const {
    auto it = aut_lookup_.find(a.mapping());
    if (it == aut_lookup_.end() || auts_[it->second] != a)
        throw invariant_error("morphism is not an automorphism of the holomorph's group");
    return it->second;
}

int HolGroup::identity() const { return index_of(identity_aut_, group_.index_of(group_.zero())); }

int HolGroup::mult(int e0, int e1) const {
    // (a,u)(b,v) = (ab, u.b + v)
    int a = aut_part(e0), b = aut_part(e1);
    int u = translation_part(e0), v = translation_part(e1);
    int ab = aut_index_of(auts_[a].then(auts_[b]));
    int ub = auts_[b].apply_index(u);
    int uv = group_.index_of(group_.add(group_.element(ub), group_.element(v)));
    return index_of(ab, uv);
}

std::vector<int> HolGroup::cayley_table() const {
    int n = order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = mult(i, j);
    return table;
}

HolGroup holomorph(const AbelianGroup& g) { return HolGroup(g); }

long long euler_phi(long long n) {
    if (n < 1) throw invariant_error("euler_phi requires n >= 1");
    long long result = n;
    for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

std::vector<int> prime_power_decomposition(int n) {
    if (n < 1) throw invariant_error("prime_power_decomposition requires n >= 1");
    std::vector<int> out;
    for (const auto& [p, e] : factorize(n)) {
        long long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        out.push_back(static_cast<int>(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dihloops
