#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "qhopf/spheres.hpp"

namespace qhopf {

/// Element of a two-fold tensor product, both legs words in normal form.
struct Tensor2 {
    std::map<std::pair<Word, Word>, LaurentPoly> terms;

    static Tensor2 unit() {
        Tensor2 t;
        t.terms[{Word(), Word()}] = LaurentPoly::one();
        return t;
    }
    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& a, const Word& b, const LaurentPoly& c);
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const LaurentPoly& c, const Tensor2& t);
    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.terms == b.terms; }
    std::string to_string() const;
};

/// Leg-wise product followed by leg-wise normalization.
Tensor2 tensor_mul(const Tensor2& a, const Tensor2& b, const RewriteSystem& left,
                   const RewriteSystem& right);
Tensor2 tensor_normalize(const Tensor2& t, const RewriteSystem& left, const RewriteSystem& right);
/// Leg-wise star (used for the coaction/involution compatibility check).
Tensor2 tensor_star(const Tensor2& t);

/// Three-legged analogue, for coassociativity-type identities.
struct Tensor3 {
    std::map<std::tuple<Word, Word, Word>, LaurentPoly> terms;
    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& a, const Word& b, const Word& c, const LaurentPoly& v);
    Tensor3& operator-=(const Tensor3& o);
    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.terms == b.terms; }
    std::string to_string() const;
};

/// A(SU_q(2)) with its Hopf structure. The antipode is constructed from the
/// inverse of the defining 2x2 matrix and then certified against the antipode
/// axiom; S^-1 is * after S after *.
class SUq2Algebra {
public:
    SUq2Algebra();

    const RewriteSystem& system() const { return rs_; }

    /// Algebra-map extension of the generator coproducts; legs normalized.
    Tensor2 coproduct(const NCPoly& h) const;
    /// Coproduct of a word with both legs kept as factored words (products of
    /// generator-coproduct legs, concatenated, never rewritten). The strong
    /// connection folds over these raw legs, since its product rule is defined
    /// on factorizations rather than on normal forms.
    Tensor2 coproduct_raw(const Word& w) const;
    LaurentPoly counit(const NCPoly& h) const;
    /// Anti-homomorphic extensions; results normalized.
    NCPoly antipode(const NCPoly& h) const;
    NCPoly antipode_inv(const NCPoly& h) const;

    const Tensor2& gen_coproduct(GenId g) const { return cop_.at(g); }
    const NCPoly& gen_antipode(GenId g) const { return antipode_.at(g); }
    const NCPoly& gen_antipode_inv(GenId g) const { return antipode_inv_.at(g); }

    /// PBW basis words alpha^k gamma^l gammab^m and gamma^k gammab^l alphab^m
    /// (m >= 1) of total degree <= max_degree, in deterministic order.
    std::vector<Word> pbw_words(int max_degree) const;

private:
    NCPoly map_word(const Word& w, const std::map<GenId, NCPoly>& images, bool reverse) const;

    RewriteSystem rs_;
    std::map<GenId, Tensor2> cop_;
    std::map<GenId, LaurentPoly> counit_;
    std::map<GenId, NCPoly> antipode_;
    std::map<GenId, NCPoly> antipode_inv_;
};

/// The right coaction delta_R : A(S7_q) -> A(S7_q) (x) A(SU_q(2)) and the
/// bundle-level verifications built on it.
class Coaction {
public:
    Coaction(const RewriteSystem& s7, const SUq2Algebra& h);

    /// Multiplicative extension of the generator table, legs normalized.
    Tensor2 delta_r(const NCPoly& e) const;
    const Tensor2& gen_image(GenId g) const { return table_.at(g); }

    /// chi(sum a_i (x) b_i) = sum a_i delta_R(b_i).
    Tensor2 canonical_map(const std::vector<std::pair<NCPoly, NCPoly>>& pairs) const;

    /// Induced left coaction delta_l(p) = S^-1(p_(1)) (x) p_(0), as a tensor
    /// with the H leg first.
    Tensor2 delta_left(const NCPoly& e) const;

    const RewriteSystem& s7() const { return s7_; }
    const SUq2Algebra& h() const { return h_; }

private:
    const RewriteSystem& s7_;
    const SUq2Algebra& h_;
    std::map<GenId, Tensor2> table_;
};

/// Element of P (x) P over the ground field (the codomain of ell).
using PPTensor = Tensor2;

/// The strong connection ell : A(SU_q(2)) -> P (x) P; generator values are
/// the bracket frames <<phi_i|phi_j>>, words extend by ell(gh) = h1 g1 (x) g2 h2
/// folded right to left.
class StrongConnection {
public:
    StrongConnection(const Coaction& coact, const VMatrix& v);

    PPTensor ell_word(const Word& w) const;
    PPTensor ell(const NCPoly& h) const;

    /// chi on the image, for the connection conditions.
    Tensor2 chi(const PPTensor& t) const;

    const Coaction& coaction() const { return coact_; }

private:
    const Coaction& coact_;
    std::map<GenId, PPTensor> table_;
};

// Verification suites.
void su2_hopf_checks(const SUq2Algebra& h, CheckSink sink);
void verify_coaction_well_defined(const Coaction& c, CheckSink sink);
void verify_coinvariance(const Coaction& c, const Projection& p, const S4Generators& g,
                         const VMatrix& v, CheckSink sink);
void verify_comodule_property(const Coaction& c, CheckSink sink);
void canonical_map_checks(const Coaction& c, const VMatrix& v, CheckSink sink);
void verify_strong_connection(const StrongConnection& ell, int max_degree, CheckSink sink);
void associated_module_check(const RewriteSystem& s7, const VMatrix& v, const Projection& p,
                             CheckSink sink);

}  // namespace qhopf
