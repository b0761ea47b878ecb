#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhopf/laurent.hpp"

namespace qhopf {

/// Generator id into the global table below. The numeric value fixes the
/// lexicographic rank used by every rewrite system.
using GenId = uint8_t;

// Sphere algebra generators, barred block first with reversed index order:
// normal words sort the barred letters descending by index (xb4..xb1) and the
// unbarred ones ascending (x1..x4). This puts xb1 next to x1 at the block
// boundary, which is what lets the sphere rule xb1 x1 -> 1 - ... always fire.
inline constexpr GenId XB4 = 0, XB3 = 1, XB2 = 2, XB1 = 3;
inline constexpr GenId X1 = 4, X2 = 5, X3 = 6, X4 = 7;
// Abstract 4-sphere generators, order t < abar < a < bbar < b.
inline constexpr GenId GT = 8, GABAR = 9, GA = 10, GBBAR = 11, GB = 12;
// SU_q(2) generators, order alpha < gamma < gammab < alphab.
inline constexpr GenId ALPHA = 13, GAMMA = 14, GAMMAB = 15, ALPHAB = 16;
inline constexpr int GEN_COUNT = 17;

/// ASCII name used by the expression grammar (xb1, alphab, ...).
const char* gen_name(GenId g);
/// Inverse of gen_name; returns nullopt for unknown names.
std::optional<GenId> gen_from_name(const std::string& name);
/// Star partner: x_i <-> xb_i, a <-> abar, alpha <-> alphab, t <-> t.
GenId gen_star(GenId g);
bool gen_barred(GenId g);

/// A word in the free monoid on the generators; one byte per letter, the
/// empty word is the algebra unit.
using Word = std::string;

inline Word word_of(std::initializer_list<GenId> gs) {
    Word w;
    for (GenId g : gs) w.push_back(static_cast<char>(g));
    return w;
}

/// Graded-lexicographic comparison with unit letter weights (length first,
/// byte-lex second). Used for canonical NCPoly term order.
struct GradedLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Finite formal sum of words with Laurent-polynomial coefficients; canonical
/// form never stores a zero coefficient.
class NCPoly {
public:
    using TermMap = std::map<Word, LaurentPoly, GradedLex>;

    NCPoly() = default;
    explicit NCPoly(const LaurentPoly& c) {
        if (!c.is_zero()) terms_[Word()] = c;
    }
    static NCPoly zero() { return NCPoly(); }
    static NCPoly one() { return NCPoly(LaurentPoly::one()); }
    static NCPoly gen(GenId g, LaurentPoly c = LaurentPoly::one()) {
        return term(word_of({g}), std::move(c));
    }
    static NCPoly term(const Word& w, LaurentPoly c) {
        NCPoly p;
        if (!c.is_zero()) p.terms_[w] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Word& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(const NCPoly& a) {
        NCPoly r;
        for (const auto& [w, c] : a.terms_) r.terms_[w] = -c;
        return r;
    }
    friend NCPoly operator*(const LaurentPoly& c, const NCPoly& p) {
        NCPoly r;
        for (const auto& [w, pc] : p.terms_) r.add_term(w, c * pc);
        return r;
    }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Free product (word concatenation, no rewriting).
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
        return r;
    }

    /// Canonical text form, see the shared expression grammar.
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Anti-involution: reverses words, swaps barred/unbarred generators, fixes
/// coefficients (the ground ring is real).
NCPoly nc_star(const NCPoly& e);

/// Substitutes each generator by an NCPoly image (free extension as an algebra
/// map); coefficients are transformed by coeff_map (identity or invert_q).
NCPoly nc_substitute(const NCPoly& e, const std::map<GenId, NCPoly>& images,
                     LaurentPoly (*coeff_map)(const LaurentPoly&) = nullptr);

struct NormalizationBudgetExceeded : std::runtime_error {
    explicit NormalizationBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Oriented quadratic rewrite system. Every rule replaces a two-letter word by
/// a polynomial that is strictly smaller in the weighted graded-lex order
/// (total letter weight first, then lex by generator rank), so normalization
/// terminates; this is asserted at rule insertion.
class RewriteSystem {
public:
    RewriteSystem(std::string name, std::vector<GenId> alphabet, std::vector<int> weights = {});

    const std::string& name() const { return name_; }
    const std::vector<GenId>& alphabet() const { return alphabet_; }
    bool in_alphabet(GenId g) const { return weight_[g] > 0; }
    long iteration_budget() const { return budget_; }
    void set_iteration_budget(long b) { budget_ = b; }

    /// Adds lhs (a two-letter word) -> rhs. Throws if the rule would violate
    /// the strict-decrease invariant or collide with an existing rule.
    void add_rule(const Word& lhs, const NCPoly& rhs);

    bool has_rule(GenId a, GenId b) const { return rules_.count(key(a, b)) != 0; }
    const NCPoly& rule_rhs(GenId a, GenId b) const { return rules_.at(key(a, b)); }
    size_t rule_count() const { return rules_.size(); }

    /// All rules sorted by leading word (deterministic).
    std::vector<std::pair<Word, NCPoly>> rules_sorted() const;

    long word_weight(const Word& w) const {
        long s = 0;
        for (unsigned char g : w) s += weight_[g];
        return s;
    }
    /// Weighted graded-lex order: true iff a < b.
    bool word_less(const Word& a, const Word& b) const {
        long wa = word_weight(a), wb = word_weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    }

    /// Fixpoint of leftmost rule application; deterministic for a given system.
    NCPoly normalize(const NCPoly& e) const;

    /// normalize(a * b)
    NCPoly mul(const NCPoly& a, const NCPoly& b) const { return normalize(a * b); }
    NCPoly mul(const NCPoly& a, const NCPoly& b, const NCPoly& c) const {
        return normalize(a * b * c);
    }

    /// True iff e normalizes to zero (membership of e in the defining ideal).
    bool reduces_to_zero(const NCPoly& e) const { return normalize(e).is_zero(); }

private:
    static uint16_t key(GenId a, GenId b) { return static_cast<uint16_t>(a) << 8 | b; }
    void check_alphabet_word(const Word& w) const;

    std::string name_;
    std::vector<GenId> alphabet_;
    std::array<int, GEN_COUNT> weight_{};  // 0 marks letters outside the alphabet
    std::unordered_map<uint16_t, NCPoly> rules_;
    long budget_ = 1000000;
};

}  // namespace qhopf
