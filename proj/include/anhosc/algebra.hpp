#pragma once

#include "anhosc/correction.hpp"
#include "anhosc/rational.hpp"

#include <map>
#include <string>

namespace anhosc {

// Exact linear combination of ordered integrals, keyed by word.
class IntegralCombination {
public:
    IntegralCombination() = default;
    IntegralCombination(const IndexWord& word, Rational coefficient);

    void add(const IndexWord& word, Rational coefficient);
    IntegralCombination& operator+=(const IntegralCombination& other);
    IntegralCombination& operator-=(const IntegralCombination& other);
    IntegralCombination& operator*=(Rational s);

    Rational coefficient(const IndexWord& word) const;
    const std::map<IndexWord, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool operator==(const IntegralCombination& other) const { return terms_ == other.terms_; }

private:
    std::map<IndexWord, Rational> terms_;  // sorted words, no zero coefficients
};

IntegralCombination operator+(IntegralCombination lhs, const IntegralCombination& rhs);
IntegralCombination operator-(IntegralCombination lhs, const IntegralCombination& rhs);
IntegralCombination operator*(Rational s, IntegralCombination c);

std::string word_to_string(const IndexWord& word);

// I_letter * I_word as the sum of all insertions of the letter into the word.
IntegralCombination shuffle_pair(int letter, const IndexWord& word);

// I_{first,second} * I_word: both letters inserted with their relative order kept.
IntegralCombination insert_ordered_pair(int first, int second, const IndexWord& word);

// Left-hand factors I_pattern * I_{a..a} whose products are rewritten with
// integer placement weights.
enum class ZeroPattern {
    alpha_a,          // I_{alpha,a}
    alpha_a_a,        // I_{alpha,a,a}
    alpha_a_beta,     // I_{alpha,a,beta}
    alpha_beta_a,     // I_{alpha,beta,a}
    alpha_a_gamma_a,  // I_{alpha,a,gamma,a}
    alpha_beta_a_a,   // I_{alpha,beta,a,a}
};

ZeroPattern parse_zero_pattern(const std::string& name);
std::string pattern_name(ZeroPattern pattern);
int pattern_length(ZeroPattern pattern);
// The pattern's own word, e.g. {alpha, a, beta}. The second Greek letter is `beta`.
IndexWord pattern_word(ZeroPattern pattern, int alpha, int beta, int a);

// Right-hand side of I_pattern * I_{a..a} for total word length n. Positions are
// 1-based; every position not named carries the letter a.
IntegralCombination reduce_against_zeros(ZeroPattern pattern, int n, int alpha, int beta, int a);

// Single word a^n; its value equals I_a^n / n!.
IntegralCombination repeated_word(int a, int n);
Rational repeated_word_factor(int n);

double evaluate_combination(const IntegralCombination& comb, double tau, const NestedIntegrator& integ);
double evaluate_combination(const IntegralCombination& comb, double tau, const ModelParams& params,
                            const TruncationPolicy& policy);

}  // namespace anhosc
