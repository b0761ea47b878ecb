#include "qhopf/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace qhopf {

namespace {

struct GenInfo {
    const char* name;
    GenId star;
    bool barred;
};

// Index order fixes the global lexicographic rank.
constexpr GenInfo kGens[GEN_COUNT] = {
    {"xb4", X4, true},      {"xb3", X3, true},      {"xb2", X2, true},
    {"xb1", X1, true},      {"x1", XB1, false},     {"x2", XB2, false},
    {"x3", XB3, false},     {"x4", XB4, false},     {"t", GT, false},
    {"ab", GA, true},       {"a", GABAR, false},    {"bb", GB, true},
    {"b", GBBAR, false},    {"alpha", ALPHAB, false}, {"gamma", GAMMAB, false},
    {"gammab", GAMMA, true},  {"alphab", ALPHA, true},
};

}  // namespace

const char* gen_name(GenId g) { return kGens[g].name; }

std::optional<GenId> gen_from_name(const std::string& name) {
    for (int i = 0; i < GEN_COUNT; ++i)
        if (name == kGens[i].name) return static_cast<GenId>(i);
    return std::nullopt;
}

GenId gen_star(GenId g) { return kGens[g].star; }

bool gen_barred(GenId g) { return kGens[g].barred; }

NCPoly nc_star(const NCPoly& e) {
    NCPoly r;
    for (const auto& [w, c] : e.terms()) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            sw.push_back(static_cast<char>(gen_star(static_cast<GenId>(*it))));
        r.add_term(sw, c);
    }
    return r;
}

NCPoly nc_substitute(const NCPoly& e, const std::map<GenId, NCPoly>& images,
                     LaurentPoly (*coeff_map)(const LaurentPoly&)) {
    NCPoly out;
    for (const auto& [w, c] : e.terms()) {
        NCPoly acc = NCPoly::one();
        for (unsigned char g : w) {
            auto it = images.find(static_cast<GenId>(g));
            if (it == images.end())
                throw std::invalid_argument(std::string("no substitution image for generator ") +
                                            gen_name(static_cast<GenId>(g)));
            acc = acc * it->second;
        }
        out += NCPoly(coeff_map ? coeff_map(c) : c) * acc;
    }
    return out;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coeff;
        bool negated = false;
        if (c.is_monomial()) {
            LaurentPoly cc = c;
            if (c.terms().begin()->second < 0) {
                negated = true;
                cc = -c;
            }
            if (!(cc.is_one() && !w.empty())) coeff = cc.to_string();
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        os << coeff;
        bool need_star = !coeff.empty();
        for (unsigned char g : w) {
            if (need_star) os << "*";
            os << gen_name(static_cast<GenId>(g));
            need_star = true;
        }
    }
    return os.str();
}

RewriteSystem::RewriteSystem(std::string name, std::vector<GenId> alphabet,
                             std::vector<int> weights)
    : name_(std::move(name)), alphabet_(std::move(alphabet)) {
    if (!weights.empty() && weights.size() != alphabet_.size())
        throw std::invalid_argument("one weight per alphabet letter expected");
    for (size_t i = 0; i < alphabet_.size(); ++i)
        weight_[alphabet_[i]] = weights.empty() ? 1 : weights[i];
}

void RewriteSystem::check_alphabet_word(const Word& w) const {
    for (unsigned char g : w)
        if (g >= GEN_COUNT || !in_alphabet(static_cast<GenId>(g)))
            throw std::invalid_argument("generator " +
                                        std::string(g < GEN_COUNT ? gen_name(static_cast<GenId>(g))
                                                                  : "?") +
                                        " not in alphabet of system " + name_);
}

void RewriteSystem::add_rule(const Word& lhs, const NCPoly& rhs) {
    if (lhs.size() != 2) throw std::invalid_argument("rule leading word must have length 2");
    check_alphabet_word(lhs);
    for (const auto& [w, c] : rhs.terms()) {
        check_alphabet_word(w);
        if (!word_less(w, lhs))
            throw std::logic_error("rule replacement word not smaller than leading word in " +
                                   name_ + ": " + lhs + " -> " + rhs.to_string());
    }
    uint16_t k = key(static_cast<GenId>(static_cast<unsigned char>(lhs[0])),
                     static_cast<GenId>(static_cast<unsigned char>(lhs[1])));
    if (rules_.count(k)) throw std::logic_error("duplicate rule for leading word in " + name_);
    rules_.emplace(k, rhs);
}

std::vector<std::pair<Word, NCPoly>> RewriteSystem::rules_sorted() const {
    std::vector<std::pair<Word, NCPoly>> out;
    out.reserve(rules_.size());
    for (const auto& [k, rhs] : rules_) {
        Word lhs;
        lhs.push_back(static_cast<char>(k >> 8));
        lhs.push_back(static_cast<char>(k & 0xff));
        out.emplace_back(lhs, rhs);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return GradedLex()(a.first, b.first); });
    return out;
}

NCPoly RewriteSystem::normalize(const NCPoly& e) const {
    for (const auto& [w, c] : e.terms()) check_alphabet_word(w);

    // Pending terms keyed by word so coefficients of equal words merge as
    // early as possible; without the merge intermediate expansions blow up.
    std::map<Word, LaurentPoly, GradedLex> pending(e.terms().begin(), e.terms().end());
    NCPoly done;
    long steps = 0;

    while (!pending.empty()) {
        auto it = std::prev(pending.end());  // largest first: each word is visited once
        Word w = it->first;
        LaurentPoly c = std::move(it->second);
        pending.erase(it);
        if (c.is_zero()) continue;

        size_t pos = 0;
        bool reduced = false;
        for (; pos + 1 < w.size(); ++pos) {
            auto rit = rules_.find(key(static_cast<GenId>(static_cast<unsigned char>(w[pos])),
                                       static_cast<GenId>(static_cast<unsigned char>(w[pos + 1]))));
            if (rit == rules_.end()) continue;
            if (++steps > budget_)
                throw NormalizationBudgetExceeded("iteration budget exceeded in " + name_ +
                                                  " while normalizing " + e.to_string());
            const Word prefix = w.substr(0, pos);
            const Word suffix = w.substr(pos + 2);
            for (const auto& [rw, rc] : rit->second.terms()) {
                Word nw = prefix + rw + suffix;
                auto [pit, inserted] = pending.try_emplace(nw, LaurentPoly::zero());
                pit->second += c * rc;
                if (pit->second.is_zero()) pending.erase(pit);
            }
            reduced = true;
            break;
        }
        if (!reduced) done.add_term(w, c);
    }
    return done;
}

}  // namespace qhopf
