#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"

namespace elgroups {

struct ClosureOptions {
    std::size_t cap = 5'000'000;
    enum class Engine { Auto, Generic, Packed } engine = Engine::Auto;
};

namespace detail {

/// Byte-matrix arithmetic mod m with <=128-bit canonical keys; the closure
/// workhorse for Z/m rings. Semantics agree with the generic Matrix path
/// by construction (tests cross-check the two).
struct PackedCodec {
    std::uint32_t dim = 0;
    std::uint32_t m = 0;
    std::uint32_t bits = 0;

    static std::uint32_t bits_for(std::uint32_t m) {
        std::uint32_t b = 1;
        while ((1u << b) < m) ++b;
        return b;
    }

    static bool usable(const RingPtr& R, std::size_t dim) {
        auto m = R->small_modulus();
        if (!m) return false;
        return dim * dim * bits_for(*m) <= 128;
    }

    PackedCodec() = default;

    PackedCodec(const RingPtr& R, std::size_t d)
        : dim(static_cast<std::uint32_t>(d)),
          m(*R->small_modulus()),
          bits(bits_for(*R->small_modulus())) {}

    using PMat = std::vector<std::uint8_t>;
    using Key = std::array<std::uint64_t, 2>;

    PMat pack(const Matrix& M) const {
        PMat p(dim * dim);
        for (std::uint32_t i = 0; i < dim; ++i)
            for (std::uint32_t j = 0; j < dim; ++j)
                p[i * dim + j] =
                    static_cast<std::uint8_t>(M.at(i, j).scalar_value().convert_to<unsigned>());
        return p;
    }

    Matrix unpack(const std::uint8_t* p, const RingPtr& R) const {
        Matrix M(R, dim, dim);
        for (std::uint32_t i = 0; i < dim; ++i)
            for (std::uint32_t j = 0; j < dim; ++j)
                M.set(i, j, RingElement::from_int(R, p[i * dim + j]));
        return M;
    }

    void mul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* c) const {
        for (std::uint32_t i = 0; i < dim; ++i)
            for (std::uint32_t j = 0; j < dim; ++j) {
                std::uint32_t acc = 0;
                for (std::uint32_t k = 0; k < dim; ++k)
                    acc += static_cast<std::uint32_t>(a[i * dim + k]) * b[k * dim + j];
                c[i * dim + j] = static_cast<std::uint8_t>(acc % m);
            }
    }

    Key key(const std::uint8_t* p) const {
        Key k{0, 0};
        std::uint32_t pos = 0;
        for (std::uint32_t t = 0; t < dim * dim; ++t) {
            std::uint32_t word = pos >> 6, off = pos & 63;
            k[word] |= static_cast<std::uint64_t>(p[t]) << off;
            if (off + bits > 64 && word == 0)
                k[1] |= static_cast<std::uint64_t>(p[t]) >> (64 - off);
            pos += bits;
        }
        return k;
    }
};

struct PackedKeyHash {
    std::size_t operator()(const PackedCodec::Key& k) const {
        std::uint64_t h = k[0] * 0x9e3779b97f4a7c15ull;
        h ^= (k[1] + 0xbf58476d1ce4e5b9ull) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace detail

/// The element table produced by closure search: a canonical-form hash set
/// of matrices with insertion-order indices and generator provenance
/// (parent index and multiplier id for every non-seed element).
class FiniteGroupTable {
public:
    std::size_t size() const {
        return packed_ ? packed_store_.size() / (codec_.dim * codec_.dim) : elems_.size();
    }

    bool complete() const { return complete_; }
    std::size_t cap() const { return cap_; }
    const RingPtr& owner() const { return owner_; }
    std::size_t dim() const { return dim_; }
    const std::vector<GroupElement>& generators() const { return generators_; }

    bool contains(const Matrix& M) const {
        if (!owner_->same_ring(*M.owner()))
            throw OwnerMismatch("table membership query over a different ring");
        if (M.rows() != dim_ || M.cols() != dim_) return false;
        if (packed_) {
            auto p = codec_.pack(M);
            return packed_keys_.count(codec_.key(p.data())) > 0;
        }
        return generic_keys_.count(M.encode()) > 0;
    }

    Matrix element(std::size_t idx) const {
        if (idx >= size()) throw BadIndex("table element index out of range");
        if (packed_)
            return codec_.unpack(packed_store_.data() + idx * codec_.dim * codec_.dim, owner_);
        return elems_[idx];
    }

    /// (parent element index, multiplier index) or (-1, -1) for seeds.
    std::pair<std::int64_t, std::int64_t> provenance(std::size_t idx) const {
        if (idx >= size()) throw BadIndex("provenance index out of range");
        return prov_[idx];
    }

    /// True iff every element of `sub` lies in this table.
    bool is_superset_of(const FiniteGroupTable& sub) const {
        if (!owner_->same_ring(*sub.owner_) || dim_ != sub.dim_) return false;
        for (std::size_t i = 0; i < sub.size(); ++i)
            if (!contains(sub.element(i))) return false;
        return true;
    }

private:
    friend FiniteGroupTable bfs_closure(const std::vector<GroupElement>&, const ClosureOptions&);
    friend FiniteGroupTable normal_closure(const std::vector<GroupElement>&,
                                           const FiniteGroupTable&, const ClosureOptions&);

    FiniteGroupTable(RingPtr owner, std::size_t dim, bool packed, std::size_t cap)
        : owner_(std::move(owner)),
          dim_(dim),
          packed_(packed),
          cap_(cap),
          codec_(packed ? detail::PackedCodec(owner_, dim) : detail::PackedCodec{}) {}

    // returns the new element's index, or SIZE_MAX if it was already present
    std::size_t insert_packed(const std::uint8_t* p, std::int64_t parent, std::int64_t via) {
        if (!packed_keys_.insert(codec_.key(p)).second) return SIZE_MAX;
        packed_store_.insert(packed_store_.end(), p, p + codec_.dim * codec_.dim);
        prov_.push_back({parent, via});
        return packed_keys_.size() - 1;
    }

    std::size_t insert_generic(Matrix M, std::int64_t parent, std::int64_t via) {
        if (!generic_keys_.insert(M.encode()).second) return SIZE_MAX;
        elems_.push_back(std::move(M));
        prov_.push_back({parent, via});
        return elems_.size() - 1;
    }

    RingPtr owner_;
    std::size_t dim_ = 0;
    bool packed_ = false;
    bool complete_ = false;
    std::size_t cap_ = 0;
    std::vector<GroupElement> generators_;

    detail::PackedCodec codec_;
    std::vector<std::uint8_t> packed_store_;
    std::unordered_set<detail::PackedCodec::Key, detail::PackedKeyHash> packed_keys_;

    std::vector<Matrix> elems_;
    std::unordered_set<std::string> generic_keys_;

    std::vector<std::pair<std::int64_t, std::int64_t>> prov_;
};

namespace detail {

inline PackedCodec::PMat packed_of(const PackedCodec& codec, const Matrix& M) {
    return codec.pack(M);
}

}  // namespace detail

/// Deterministic worklist closure of <generators>: right-multiplication by
/// the generators in their given order, FIFO frontier. A finite closed set
/// containing I inside a group is a subgroup, so a complete table is the
/// generated subgroup; hitting the cap returns the partial table with
/// complete = false.
inline FiniteGroupTable bfs_closure(const std::vector<GroupElement>& generators,
                                    const ClosureOptions& opts = {}) {
    if (generators.empty()) throw Error("bfs_closure requires at least one generator");
    if (opts.cap == 0) throw Error("bfs_closure requires cap > 0");
    const RingPtr& R = generators.front().value().owner();
    const std::size_t dim = generators.front().dim();
    for (const auto& g : generators)
        if (g.dim() != dim || !R->same_ring(*g.value().owner()))
            throw OwnerMismatch("generators must share ring and dimension");

    const bool packed = opts.engine == ClosureOptions::Engine::Generic
                            ? false
                            : detail::PackedCodec::usable(R, dim);
    if (opts.engine == ClosureOptions::Engine::Packed && !packed)
        throw Unsupported("packed closure engine unavailable for this ring/dimension");

    FiniteGroupTable t(R, dim, packed, opts.cap);
    t.generators_ = generators;

    if (packed) {
        const auto& codec = t.codec_;
        const std::size_t nn = codec.dim * codec.dim;
        std::vector<detail::PackedCodec::PMat> gens;
        for (const auto& g : generators) gens.push_back(codec.pack(g.value()));
        detail::PackedCodec::PMat id = codec.pack(Matrix::identity(R, dim));
        t.insert_packed(id.data(), -1, -1);
        std::size_t head = 0;
        detail::PackedCodec::PMat prod(nn);
        bool capped = false;
        while (head * nn < t.packed_store_.size()) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                codec.mul(t.packed_store_.data() + head * nn, gens[gi].data(), prod.data());
                if (t.packed_keys_.size() >= opts.cap &&
                    t.packed_keys_.count(codec.key(prod.data())) == 0) {
                    capped = true;
                    break;
                }
                t.insert_packed(prod.data(), static_cast<std::int64_t>(head),
                                static_cast<std::int64_t>(gi));
            }
            if (capped) break;
            ++head;
        }
        t.complete_ = !capped;
        return t;
    }

    t.insert_generic(Matrix::identity(R, dim), -1, -1);
    std::size_t head = 0;
    bool capped = false;
    while (head < t.elems_.size()) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            Matrix prod = t.elems_[head] * generators[gi].value();
            if (t.elems_.size() >= opts.cap && t.generic_keys_.count(prod.encode()) == 0) {
                capped = true;
                break;
            }
            t.insert_generic(std::move(prod), static_cast<std::int64_t>(head),
                             static_cast<std::int64_t>(gi));
        }
        if (capped) break;
        ++head;
    }
    t.complete_ = !capped;
    return t;
}

/// The smallest subset of the ambient group containing the seeds that is
/// closed under multiplication and under conjugation by the ambient
/// generators; equivalently the normal closure of <seeds> in the ambient
/// group. Expansion rules: x -> x * seed and x -> g x g^{-1}.
inline FiniteGroupTable normal_closure(const std::vector<GroupElement>& seeds,
                                       const FiniteGroupTable& ambient,
                                       const ClosureOptions& opts = {}) {
    if (!ambient.complete())
        throw Error("normal_closure requires a complete ambient table");
    if (seeds.empty()) throw Error("normal_closure requires at least one seed");
    const RingPtr& R = ambient.owner();
    const std::size_t dim = ambient.dim();
    for (const auto& s : seeds) {
        if (s.dim() != dim || !R->same_ring(*s.value().owner()))
            throw OwnerMismatch("seeds must live in the ambient group's matrix ring");
        if (!ambient.contains(s.value()))
            throw Error("seed is not an element of the ambient table");
    }

    const bool packed = opts.engine == ClosureOptions::Engine::Generic
                            ? false
                            : detail::PackedCodec::usable(R, dim);
    FiniteGroupTable t(R, dim, packed, opts.cap);
    t.generators_ = seeds;
    const auto& amb_gens = ambient.generators();

    if (packed) {
        const auto& codec = t.codec_;
        const std::size_t nn = codec.dim * codec.dim;
        std::vector<detail::PackedCodec::PMat> mul_right;  // seed values
        for (const auto& s : seeds) mul_right.push_back(codec.pack(s.value()));
        std::vector<detail::PackedCodec::PMat> conj_l, conj_r;
        for (const auto& g : amb_gens) {
            conj_l.push_back(codec.pack(g.value()));
            conj_r.push_back(codec.pack(g.inverse()));
        }
        detail::PackedCodec::PMat id = codec.pack(Matrix::identity(R, dim));
        t.insert_packed(id.data(), -1, -1);
        std::size_t head = 0;
        detail::PackedCodec::PMat prod(nn), tmp(nn);
        bool capped = false;
        auto guarded_insert = [&](const std::uint8_t* p, std::size_t parent,
                                  std::int64_t via) {
            if (t.packed_keys_.size() >= opts.cap &&
                t.packed_keys_.count(codec.key(p)) == 0) {
                capped = true;
                return;
            }
            t.insert_packed(p, static_cast<std::int64_t>(parent), via);
        };
        detail::PackedCodec::PMat cur(nn);
        while (head * nn < t.packed_store_.size() && !capped) {
            // copy: insertions may reallocate the backing store
            std::copy_n(t.packed_store_.data() + head * nn, nn, cur.data());
            for (std::size_t si = 0; si < mul_right.size() && !capped; ++si) {
                codec.mul(cur.data(), mul_right[si].data(), prod.data());
                guarded_insert(prod.data(), head, static_cast<std::int64_t>(si));
            }
            for (std::size_t gi = 0; gi < conj_l.size() && !capped; ++gi) {
                codec.mul(conj_l[gi].data(), cur.data(), tmp.data());
                codec.mul(tmp.data(), conj_r[gi].data(), prod.data());
                guarded_insert(prod.data(), head,
                               static_cast<std::int64_t>(mul_right.size() + gi));
            }
            ++head;
        }
        t.complete_ = !capped;
        return t;
    }

    t.insert_generic(Matrix::identity(R, dim), -1, -1);
    std::size_t head = 0;
    bool capped = false;
    auto guarded_insert = [&](Matrix M, std::size_t parent, std::int64_t via) {
        if (t.elems_.size() >= opts.cap && t.generic_keys_.count(M.encode()) == 0) {
            capped = true;
            return;
        }
        t.insert_generic(std::move(M), static_cast<std::int64_t>(parent), via);
    };
    while (head < t.elems_.size() && !capped) {
        for (std::size_t si = 0; si < seeds.size() && !capped; ++si)
            guarded_insert(t.elems_[head] * seeds[si].value(), head,
                           static_cast<std::int64_t>(si));
        for (std::size_t gi = 0; gi < amb_gens.size() && !capped; ++gi)
            guarded_insert(amb_gens[gi].value() * t.elems_[head] * amb_gens[gi].inverse(),
                           head, static_cast<std::int64_t>(seeds.size() + gi));
        ++head;
    }
    t.complete_ = !capped;
    return t;
}

/// [G,G] = G, computed as the normal closure of all generator-pair
/// commutators inside the table.
inline bool verify_perfect(const FiniteGroupTable& table, const ClosureOptions& opts = {}) {
    if (!table.complete()) throw Error("verify_perfect requires a complete table");
    if (table.size() == 1) return true;  // trivial group, vacuously perfect
    const auto& gens = table.generators();
    std::vector<GroupElement> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            GroupElement c = commutator(gens[i], gens[j]);
            if (!c.is_identity()) seeds.push_back(std::move(c));
        }
    if (seeds.empty()) return false;  // abelian nontrivial group
    ClosureOptions o = opts;
    if (o.cap < table.cap()) o.cap = table.cap();
    FiniteGroupTable derived = normal_closure(seeds, table, o);
    if (!derived.complete()) throw Error("verify_perfect: derived-subgroup closure capped");
    return derived.size() == table.size();
}

}  // namespace elgroups
