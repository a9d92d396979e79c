#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "saxllab/exact_value.hpp"
#include "saxllab/group.hpp"
#include "saxllab/ordinary_chars.hpp"
#include "saxllab/partition.hpp"
#include "saxllab/sign.hpp"

namespace saxllab {

/// <f, g> = (1/|G|) sum_classes |C| f(C) conj(g(C)).
ExactValue inner_product(const ClassFunction& f, const ClassFunction& g);

/// Kronecker coefficient g(lambda, mu, nu) = <[lambda][mu], [nu]> in S_n.
mpz_class kron_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// A character written as a sum of irreducibles; only nonzero terms are kept,
/// in the order of the basis they were projected onto.
struct Decomposition {
    ContextPtr ctx;
    std::vector<CharLabel> labels;
    std::vector<mpz_class> multiplicities;

    [[nodiscard]] mpz_class multiplicity(const CharLabel& label) const;
    [[nodiscard]] ClassFunction reconstruct() const;
};

/// Projects f onto each basis character. Throws std::runtime_error if some
/// multiplicity is not a nonnegative integer (f is not a character, or the
/// basis is wrong).
Decomposition decompose(const ClassFunction& f, const std::vector<CharLabel>& basis);
Decomposition decompose(const ClassFunction& f);

/// <lambda>_e <lambda>_d on S~_n, over the ordinary characters (the product
/// is trivial on the central element).
Decomposition decompose_spin_square(const Partition& lambda, Sign e = Sign::plus, Sign d = Sign::plus);

/// [mu] <lambda>_e on S~_n, over the spin characters.
Decomposition decompose_mixed(const Partition& mu, const CharLabel& spin);

/// Smallest group carrying all factors: S_n, S~_n if a spin label occurs,
/// A_n for alternating labels, A~_n when both kinds occur.
ContextPtr product_context(const std::vector<CharLabel>& factors);

/// Decomposes the product of the given characters in product_context,
/// projecting only onto irreducibles of the matching central parity.
Decomposition decompose_product(const std::vector<CharLabel>& factors);

/// Outcome of the multiplicity test for [mu] <lambda> against the pair of
/// characters labelled by lambda: <<lambda>>+- over A~_n for lambda in D+,
/// <lambda>+- over S~_n for lambda in D-.
struct SpinMainCheck {
    Partition lambda;
    Partition mu;
    CharValue value;       // [mu](lambda)
    mpz_class m_plus;
    mpz_class m_minus;
    mpz_class total;       // <[mu]<lambda>, <lambda>> over S~_n
    bool hypothesis = false;     // value != 0
    bool difference_ok = false;  // m_plus - m_minus == value
    bool bound_ok = false;       // max(m_plus, m_minus) >= |value|
    bool parity_ok = true;       // D+: total == value mod 2
    [[nodiscard]] bool ok() const { return difference_ok && (!hypothesis || bound_ok) && parity_ok; }
};

SpinMainCheck spin_main_check(const Partition& lambda, const Partition& mu);

/// Multiplicity test on a pair of classes: with psi(x) = psi(y) != 0 and
/// chi_1, chi_2 the only characters separating x and y (with opposite
/// jumps), psi(x) = <psi chi_1, chi_1> - <psi chi_1, chi_2>.
struct DetectCheck {
    ExactValue psi_x;
    ExactValue psi_y;
    mpz_class m1;
    mpz_class m2;
    bool precondition = false;  // psi(x) == psi(y) != 0
    bool difference_ok = false; // psi(x) == m1 - m2
    bool bound_ok = false;      // max(m1, m2)^2 >= |psi(x)|^2
};

DetectCheck lemma_detect_check(const ClassFunction& psi, std::size_t x, std::size_t y, const ClassFunction& chi1,
                               const ClassFunction& chi2);

} // namespace saxllab
