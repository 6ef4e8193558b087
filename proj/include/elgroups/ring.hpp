#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace elgroups {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OwnerMismatch : Error {
    using Error::Error;
};
struct Unsupported : Error {
    using Error::Error;
};
struct UndecidableStrategy : Error {
    using Error::Error;
};
struct BadIndex : Error {
    using Error::Error;
};
struct BadDimension : Error {
    using Error::Error;
};
struct LambdaViolation : Error {
    using Error::Error;
};
struct BadInverse : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

enum class RingKind { Integers, Modular, Free, GroupRing };

/// A word over the letter alphabet of a free ring (letter ids), or a
/// singleton basis index for a group ring. The empty word is the unity
/// monomial of a free ring.
using Word = std::vector<std::uint16_t>;

using Perm = std::vector<std::uint8_t>;  // 0-based images

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// Description of a ring from the fixed catalog: the integers, integers
/// mod m, a free ring (optionally with the letter-doubling involution and
/// a declared epsilon sign), or an integral group ring of a finite
/// permutation group.
class RingSpec {
public:
    static RingPtr integers() {
        return RingPtr(new RingSpec(RingKind::Integers));
    }

    static RingPtr modular(const Int& m) {
        if (m < 2)
            throw Error("modular ring requires modulus m >= 2");
        auto s = new RingSpec(RingKind::Modular);
        s->modulus_ = m;
        return RingPtr(s);
    }

    static RingPtr free_ring(std::vector<std::string> gens,
                             bool with_involution = false,
                             int epsilon_sign = 1) {
        if (gens.empty())
            throw Error("free ring requires at least one generator");
        if (epsilon_sign != 1 && epsilon_sign != -1)
            throw Error("free ring epsilon must be +1 or -1");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].empty())
                throw Error("free ring generator names must be nonempty");
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (gens[i] == gens[j])
                    throw Error("free ring generator names must be pairwise distinct");
        }
        auto s = new RingSpec(RingKind::Free);
        s->gen_names_ = std::move(gens);
        s->involution_ = with_involution;
        s->epsilon_sign_ = epsilon_sign;
        return RingPtr(s);
    }

    /// Group ring Z[G] for G given by 1-based permutation generators;
    /// the group is enumerated by closure, capped.
    static RingPtr group_ring(const std::vector<std::vector<int>>& perm_gens,
                              std::size_t group_cap = 10000) {
        if (perm_gens.empty())
            throw Error("group ring requires at least one permutation generator");
        const std::size_t deg = perm_gens.front().size();
        if (deg == 0 || deg > 255)
            throw Error("permutation degree must be in 1..255");
        std::vector<Perm> gens;
        for (const auto& g : perm_gens) {
            if (g.size() != deg)
                throw Error("permutation generators must share degree");
            Perm p(deg);
            std::vector<bool> seen(deg, false);
            for (std::size_t i = 0; i < deg; ++i) {
                if (g[i] < 1 || static_cast<std::size_t>(g[i]) > deg)
                    throw Error("permutation image out of range");
                if (seen[g[i] - 1])
                    throw Error("permutation images must be distinct");
                seen[g[i] - 1] = true;
                p[i] = static_cast<std::uint8_t>(g[i] - 1);
            }
            gens.push_back(std::move(p));
        }
        auto s = new RingSpec(RingKind::GroupRing);
        s->perm_gens_ = gens;
        s->enumerate_group(gens, deg, group_cap);
        return RingPtr(s);
    }

    RingKind kind() const { return kind_; }

    const Int& modulus() const {
        if (kind_ != RingKind::Modular)
            throw Unsupported("modulus() on a non-modular ring");
        return modulus_;
    }

    /// 0 for Z, free rings and group rings (Z coefficients), m for Z/m.
    Int characteristic() const {
        return kind_ == RingKind::Modular ? modulus_ : Int(0);
    }

    bool is_finite() const { return kind_ == RingKind::Modular; }

    Int cardinality() const {
        if (!is_finite())
            throw Unsupported("cardinality() of an infinite ring");
        return modulus_;
    }

    std::optional<std::uint32_t> small_modulus() const {
        if (kind_ == RingKind::Modular && modulus_ <= 255)
            return static_cast<std::uint32_t>(modulus_);
        return std::nullopt;
    }

    bool has_involution() const {
        switch (kind_) {
            case RingKind::Integers:
            case RingKind::Modular:
            case RingKind::GroupRing:
                return true;
            case RingKind::Free:
                return involution_;
        }
        return false;
    }

    /// Whether the supported involution acts as the identity map.
    bool involution_is_identity() const {
        switch (kind_) {
            case RingKind::Integers:
            case RingKind::Modular:
                return true;
            case RingKind::GroupRing: {
                for (std::uint32_t g = 0; g < group_order(); ++g)
                    if (group_inverse(g) != g) return false;
                return true;
            }
            case RingKind::Free:
                return false;
        }
        return false;
    }

    // free ring surface
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    bool free_involution() const { return involution_; }
    int epsilon_sign() const { return epsilon_sign_; }

    std::size_t letter_count() const {
        return involution_ ? 2 * gen_names_.size() : gen_names_.size();
    }

    std::string letter_name(std::uint16_t l) const {
        if (kind_ != RingKind::Free || l >= letter_count())
            throw BadIndex("letter id out of range");
        if (!involution_) return gen_names_[l];
        std::string base = gen_names_[l / 2];
        return (l & 1) ? base + "*" : base;
    }

    std::uint16_t star_letter(std::uint16_t l) const {
        if (!involution_)
            throw Unsupported("free ring has no involution");
        return l ^ 1;
    }

    // group ring surface
    std::size_t group_order() const {
        if (kind_ != RingKind::GroupRing)
            throw Unsupported("group_order() on a non-group-ring");
        return group_elems_.size();
    }
    std::uint32_t group_identity() const { return 0; }
    std::uint32_t group_mul(std::uint32_t a, std::uint32_t b) const {
        const Perm& pa = group_elems_.at(a);
        const Perm& pb = group_elems_.at(b);
        Perm c(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) c[i] = pa[pb[i]];
        auto it = group_index_.find(c);
        if (it == group_index_.end())
            throw Error("group multiplication left the enumerated group");
        return it->second;
    }
    std::uint32_t group_inverse(std::uint32_t a) const { return group_inv_.at(a); }
    const Perm& group_element(std::uint32_t a) const { return group_elems_.at(a); }
    const std::vector<Perm>& group_generators() const { return perm_gens_; }

    bool same_ring(const RingSpec& o) const {
        if (this == &o) return true;
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case RingKind::Integers:
                return true;
            case RingKind::Modular:
                return modulus_ == o.modulus_;
            case RingKind::Free:
                return gen_names_ == o.gen_names_ && involution_ == o.involution_ &&
                       epsilon_sign_ == o.epsilon_sign_;
            case RingKind::GroupRing:
                return group_elems_ == o.group_elems_;
        }
        return false;
    }

    std::string describe() const {
        std::ostringstream os;
        switch (kind_) {
            case RingKind::Integers:
                os << "Z";
                break;
            case RingKind::Modular:
                os << "Z/" << modulus_;
                break;
            case RingKind::Free:
                os << "Z<";
                for (std::size_t i = 0; i < gen_names_.size(); ++i) {
                    if (i) os << ",";
                    os << gen_names_[i];
                }
                os << ">";
                if (involution_) os << "*";
                break;
            case RingKind::GroupRing:
                os << "Z[G(" << group_elems_.size() << ")]";
                break;
        }
        return os.str();
    }

private:
    explicit RingSpec(RingKind k) : kind_(k) {}

    void enumerate_group(const std::vector<Perm>& gens, std::size_t deg,
                         std::size_t cap) {
        Perm id(deg);
        for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<std::uint8_t>(i);
        group_elems_.push_back(id);
        group_index_[id] = 0;
        std::size_t head = 0;
        while (head < group_elems_.size()) {
            Perm cur = group_elems_[head++];
            for (const Perm& g : gens) {
                Perm prod(deg);
                for (std::size_t i = 0; i < deg; ++i) prod[i] = cur[g[i]];
                if (group_index_.emplace(prod, static_cast<std::uint32_t>(group_elems_.size())).second) {
                    group_elems_.push_back(prod);
                    if (group_elems_.size() > cap)
                        throw Error("group ring closure exceeded element cap");
                }
            }
        }
        group_inv_.resize(group_elems_.size());
        for (std::uint32_t a = 0; a < group_elems_.size(); ++a) {
            Perm inv(deg);
            const Perm& p = group_elems_[a];
            for (std::size_t i = 0; i < deg; ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
            group_inv_[a] = group_index_.at(inv);
        }
    }

    RingKind kind_;
    Int modulus_ = 0;
    std::vector<std::string> gen_names_;
    bool involution_ = false;
    int epsilon_sign_ = 1;
    std::vector<Perm> perm_gens_;
    std::vector<Perm> group_elems_;
    std::map<Perm, std::uint32_t> group_index_;
    std::vector<std::uint32_t> group_inv_;
};

namespace detail {

inline void encode_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void encode_int(std::string& out, const Int& v) {
    out.push_back(v < 0 ? '\1' : '\0');
    Int a = v < 0 ? Int(-v) : v;
    std::string mag;
    while (a > 0) {
        mag.push_back(static_cast<char>(static_cast<unsigned>(a & 0xff)));
        a >>= 8;
    }
    encode_u64(out, mag.size());
    out += mag;
}

inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

/// An exact element of a catalog ring. Values are immutable normal forms:
/// Z and Z/m hold a (reduced) integer, free and group rings hold a sparse
/// coefficient map with no zero coefficients.
class RingElement {
public:
    static RingElement zero(RingPtr R) { return RingElement(std::move(R)); }

    static RingElement one(RingPtr R) { return from_int(std::move(R), 1); }

    static RingElement from_int(RingPtr R, const Int& v) {
        RingElement e(std::move(R));
        switch (e.owner_->kind()) {
            case RingKind::Integers:
                e.scalar_ = v;
                break;
            case RingKind::Modular:
                e.scalar_ = reduce(v, e.owner_->modulus());
                break;
            case RingKind::Free:
                if (v != 0) e.terms_[Word{}] = v;
                break;
            case RingKind::GroupRing:
                if (v != 0) e.terms_[Word{0}] = v;
                break;
        }
        return e;
    }

    /// Free-ring letter (letter id, not generator index when the alphabet
    /// is doubled) or group-ring basis element.
    static RingElement generator(RingPtr R, std::uint16_t letter) {
        RingElement e(std::move(R));
        if (e.owner_->kind() == RingKind::Free) {
            if (letter >= e.owner_->letter_count())
                throw BadIndex("letter id out of range");
            e.terms_[Word{letter}] = 1;
            return e;
        }
        if (e.owner_->kind() == RingKind::GroupRing) {
            if (letter >= e.owner_->group_order())
                throw BadIndex("group basis index out of range");
            e.terms_[Word{letter}] = 1;
            return e;
        }
        throw Unsupported("generator() requires a free ring or group ring");
    }

    /// Free-ring generator by name; maps to the unstarred letter.
    static RingElement named_generator(const RingPtr& R, const std::string& name) {
        if (R->kind() != RingKind::Free)
            throw Unsupported("named_generator() requires a free ring");
        const auto& names = R->generator_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return generator(R, static_cast<std::uint16_t>(R->free_involution() ? 2 * i : i));
        throw BadIndex("unknown generator name: " + name);
    }

    const RingPtr& owner() const { return owner_; }

    bool is_zero() const {
        return owner_->kind() == RingKind::Integers || owner_->kind() == RingKind::Modular
                   ? scalar_ == 0
                   : terms_.empty();
    }

    bool is_one() const { return *this == one(owner_); }

    RingElement operator+(const RingElement& o) const {
        check_owner(o);
        RingElement r(owner_);
        if (scalar_kind()) {
            r.scalar_ = scalar_ + o.scalar_;
            r.normalize_scalar();
            return r;
        }
        r.terms_ = terms_;
        for (const auto& [w, c] : o.terms_) add_term(r.terms_, w, c);
        return r;
    }

    RingElement operator-() const {
        RingElement r(owner_);
        if (scalar_kind()) {
            r.scalar_ = -scalar_;
            r.normalize_scalar();
            return r;
        }
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }

    RingElement operator-(const RingElement& o) const { return *this + (-o); }

    RingElement operator*(const RingElement& o) const {
        check_owner(o);
        RingElement r(owner_);
        switch (owner_->kind()) {
            case RingKind::Integers:
                r.scalar_ = scalar_ * o.scalar_;
                break;
            case RingKind::Modular:
                r.scalar_ = reduce(scalar_ * o.scalar_, owner_->modulus());
                break;
            case RingKind::Free:
                for (const auto& [w1, c1] : terms_)
                    for (const auto& [w2, c2] : o.terms_) {
                        Word w = w1;
                        w.insert(w.end(), w2.begin(), w2.end());
                        add_term(r.terms_, w, c1 * c2);
                    }
                break;
            case RingKind::GroupRing:
                for (const auto& [w1, c1] : terms_)
                    for (const auto& [w2, c2] : o.terms_) {
                        std::uint16_t g = static_cast<std::uint16_t>(
                            owner_->group_mul(w1[0], w2[0]));
                        add_term(r.terms_, Word{g}, c1 * c2);
                    }
                break;
        }
        return r;
    }

    bool operator==(const RingElement& o) const {
        if (!owner_->same_ring(*o.owner_)) return false;
        return scalar_kind() ? scalar_ == o.scalar_ : terms_ == o.terms_;
    }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    /// The ring involution: identity on Z and Z/m, word reversal with
    /// letter starring on free involutive rings, g -> g^{-1} on group rings.
    RingElement star() const {
        switch (owner_->kind()) {
            case RingKind::Integers:
            case RingKind::Modular:
                return *this;
            case RingKind::Free: {
                if (!owner_->free_involution())
                    throw Unsupported("free ring declared without involution");
                RingElement r(owner_);
                for (const auto& [w, c] : terms_) {
                    Word s(w.rbegin(), w.rend());
                    for (auto& l : s) l = owner_->star_letter(l);
                    r.terms_[std::move(s)] = c;
                }
                return r;
            }
            case RingKind::GroupRing: {
                RingElement r(owner_);
                for (const auto& [w, c] : terms_)
                    r.terms_[Word{static_cast<std::uint16_t>(owner_->group_inverse(w[0]))}] = c;
                return r;
            }
        }
        throw Unsupported("star() on unknown ring kind");
    }

    const Int& scalar_value() const {
        if (!scalar_kind())
            throw Unsupported("scalar_value() on a polynomial element");
        return scalar_;
    }

    const std::map<Word, Int>& terms() const { return terms_; }

    /// True iff every coefficient (or the scalar, mod m) is divisible by 2,
    /// i.e. the element lies in 2R.
    bool in_two_r() const {
        switch (owner_->kind()) {
            case RingKind::Integers:
                return scalar_ % 2 == 0;
            case RingKind::Modular: {
                // x in 2R mod m  <=>  gcd(2,m) divides x
                Int g = boost::multiprecision::gcd(Int(2), owner_->modulus());
                return scalar_ % g == 0;
            }
            case RingKind::Free:
            case RingKind::GroupRing:
                for (const auto& [w, c] : terms_)
                    if (c % 2 != 0) return false;
                return true;
        }
        return false;
    }

    void encode(std::string& out) const {
        if (scalar_kind()) {
            out.push_back('s');
            detail::encode_int(out, scalar_);
            return;
        }
        out.push_back('p');
        detail::encode_u64(out, terms_.size());
        for (const auto& [w, c] : terms_) {
            detail::encode_u64(out, w.size());
            for (auto l : w) {
                out.push_back(static_cast<char>(l & 0xff));
                out.push_back(static_cast<char>((l >> 8) & 0xff));
            }
            detail::encode_int(out, c);
        }
    }

    std::uint64_t hash() const {
        std::string b;
        encode(b);
        return detail::fnv1a(b);
    }

    std::string str() const {
        std::ostringstream os;
        if (scalar_kind()) {
            os << scalar_;
            return os.str();
        }
        if (terms_.empty()) return "0";
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::string word = word_str(w);
            if (word.empty()) {
                os << a;
            } else {
                if (a != 1) os << a << "·";
                os << word;
            }
        }
        return os.str();
    }

private:
    explicit RingElement(RingPtr R) : owner_(std::move(R)) {
        if (!owner_) throw Error("ring element requires an owner");
    }

    bool scalar_kind() const {
        return owner_->kind() == RingKind::Integers || owner_->kind() == RingKind::Modular;
    }

    void check_owner(const RingElement& o) const {
        if (owner_.get() != o.owner_.get() && !owner_->same_ring(*o.owner_))
            throw OwnerMismatch("operands belong to distinct rings: " + owner_->describe() +
                                " vs " + o.owner_->describe());
    }

    void normalize_scalar() {
        if (owner_->kind() == RingKind::Modular) scalar_ = reduce(scalar_, owner_->modulus());
    }

    static Int reduce(const Int& v, const Int& m) {
        Int r = v % m;
        if (r < 0) r += m;
        return r;
    }

    static void add_term(std::map<Word, Int>& terms, const Word& w, const Int& c) {
        auto it = terms.find(w);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }

    std::string word_str(const Word& w) const {
        std::string s;
        for (auto l : w) {
            if (owner_->kind() == RingKind::Free) {
                s += owner_->letter_name(l);
            } else {
                if (l == owner_->group_identity() && w.size() == 1 && s.empty()) return "g0";
                s += "g" + std::to_string(l);
            }
        }
        return s;
    }

    RingPtr owner_;
    Int scalar_ = 0;
    std::map<Word, Int> terms_;
};

/// All elements of a finite ring, in canonical (residue) order.
inline std::vector<RingElement> ring_elements(const RingPtr& R) {
    if (!R->is_finite())
        throw Unsupported("element enumeration requires a finite ring");
    std::vector<RingElement> out;
    for (Int v = 0; v < R->modulus(); ++v) out.push_back(RingElement::from_int(R, v));
    return out;
}

/// Exhaustive unit search: u is a unit iff some v has uv = vu = 1.
inline std::vector<RingElement> units_of(const RingPtr& R) {
    if (!R->is_finite())
        throw Unsupported("units_of requires a finite ring; " + R->describe() +
                          " is infinite");
    if (R->modulus() > 1000000)
        throw Unsupported("units_of modulus too large for exhaustive pairing");
    std::vector<RingElement> elems = ring_elements(R);
    std::vector<RingElement> units;
    const RingElement one = RingElement::one(R);
    for (const auto& u : elems) {
        for (const auto& v : elems) {
            if (u * v == one && v * u == one) {
                units.push_back(u);
                break;
            }
        }
    }
    return units;
}

// ---------------------------------------------------------------------------
// element literal parsing: integers, or linear combinations like "3·xy* + 2"

namespace detail {

struct LiteralLexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_dot() {
        skip_ws();
        // UTF-8 middle dot 0xC2 0xB7
        if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xC2 &&
            static_cast<unsigned char>(s[pos + 1]) == 0xB7) {
            pos += 2;
            return true;
        }
        return false;
    }
    std::optional<Int> accept_int() {
        skip_ws();
        std::size_t p = pos;
        std::string digits;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
            digits.push_back(s[p++]);
        if (digits.empty()) return std::nullopt;
        pos = p;
        return Int(digits);
    }
};

}  // namespace detail

/// Parse an element literal over the declared alphabet of R.
inline RingElement parse_element(const RingPtr& R, const std::string& text) {
    detail::LiteralLexer lx{text};
    RingElement acc = RingElement::zero(R);

    auto parse_word = [&](bool required) -> std::optional<RingElement> {
        RingElement w = RingElement::one(R);
        bool any = false;
        for (;;) {
            lx.skip_ws();
            std::optional<std::uint16_t> letter;
            if (R->kind() == RingKind::Free) {
                const auto& names = R->generator_names();
                std::size_t best = 0, best_i = names.size();
                for (std::size_t i = 0; i < names.size(); ++i) {
                    const auto& nm = names[i];
                    if (nm.size() > best && text.compare(lx.pos, nm.size(), nm) == 0) {
                        best = nm.size();
                        best_i = i;
                    }
                }
                if (best_i < names.size()) {
                    lx.pos += best;
                    std::uint16_t l = static_cast<std::uint16_t>(
                        R->free_involution() ? 2 * best_i : best_i);
                    if (lx.pos < text.size() && text[lx.pos] == '*') {
                        if (!R->free_involution())
                            throw ParseError("'*' used but ring has no involution: " + text);
                        ++lx.pos;
                        l = R->star_letter(l);
                    }
                    letter = l;
                }
            } else if (R->kind() == RingKind::GroupRing) {
                if (lx.pos < text.size() && text[lx.pos] == 'e' &&
                    (lx.pos + 1 >= text.size() ||
                     !std::isalnum(static_cast<unsigned char>(text[lx.pos + 1])))) {
                    ++lx.pos;
                    letter = static_cast<std::uint16_t>(R->group_identity());
                } else if (lx.pos < text.size() && text[lx.pos] == 'g') {
                    std::size_t p = lx.pos + 1;
                    std::string digits;
                    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
                        digits.push_back(text[p++]);
                    if (digits.empty()) throw ParseError("expected basis index after 'g'");
                    unsigned long idx = std::stoul(digits);
                    if (idx >= R->group_order())
                        throw ParseError("group basis index out of range: g" + digits);
                    lx.pos = p;
                    letter = static_cast<std::uint16_t>(idx);
                }
            }
            if (!letter) break;
            w = w * RingElement::generator(R, *letter);
            any = true;
        }
        if (!any) {
            if (required)
                throw ParseError("expected a generator word at position " +
                                 std::to_string(lx.pos) + " in: " + text);
            return std::nullopt;
        }
        return w;
    };

    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('+')) {
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(lx.pos) +
                             " in: " + text);
        }
        first = false;
        lx.skip_ws();
        std::optional<Int> coeff = lx.accept_int();
        if (coeff) lx.accept_dot();
        std::optional<RingElement> word = parse_word(false);
        if (!coeff && !word)
            throw ParseError("expected a term at position " + std::to_string(lx.pos) +
                             " in: " + text);
        RingElement term = word ? *word : RingElement::one(R);
        Int c = coeff ? *coeff : Int(1);
        if (sign < 0) c = -c;
        acc = acc + RingElement::from_int(R, c) * term;
    }
    if (first) throw ParseError("empty element literal");
    return acc;
}

}  // namespace elgroups
