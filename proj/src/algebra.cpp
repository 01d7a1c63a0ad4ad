#include "anhosc/algebra.hpp"

#include "anhosc/errors.hpp"

#include <algorithm>

namespace anhosc {

namespace {

void check_letter(int l) {
    if (l < 0 || l > 4) throw DomainError("word letters must lie in 0..4");
}

void check_word(const IndexWord& w) {
    for (int l : w) check_letter(l);
}

// word of length n filled with `a`, with given letters at 1-based positions
IndexWord placed(int n, int a, std::initializer_list<std::pair<int, int>> at) {
    IndexWord w(n, a);
    for (auto [pos, letter] : at) w[pos - 1] = letter;
    return w;
}

}  // namespace

IntegralCombination::IntegralCombination(const IndexWord& word, Rational coefficient) {
    add(word, coefficient);
}

void IntegralCombination::add(const IndexWord& word, Rational coefficient) {
    if (coefficient == Rational(0)) return;
    auto [it, inserted] = terms_.emplace(word, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == Rational(0)) terms_.erase(it);
    }
}

IntegralCombination& IntegralCombination::operator+=(const IntegralCombination& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

IntegralCombination& IntegralCombination::operator-=(const IntegralCombination& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

IntegralCombination& IntegralCombination::operator*=(Rational s) {
    if (s == Rational(0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

Rational IntegralCombination::coefficient(const IndexWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

IntegralCombination operator+(IntegralCombination lhs, const IntegralCombination& rhs) { return lhs += rhs; }
IntegralCombination operator-(IntegralCombination lhs, const IntegralCombination& rhs) { return lhs -= rhs; }
IntegralCombination operator*(Rational s, IntegralCombination c) { return c *= s; }

std::string word_to_string(const IndexWord& word) {
    std::string s = "I_{";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(word[i]);
    }
    return s + "}";
}

IntegralCombination shuffle_pair(int letter, const IndexWord& word) {
    check_letter(letter);
    check_word(word);
    IntegralCombination out;
    for (std::size_t pos = 0; pos <= word.size(); ++pos) {
        IndexWord w(word);
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), letter);
        out.add(w, Rational(1));
    }
    return out;
}

IntegralCombination insert_ordered_pair(int first, int second, const IndexWord& word) {
    check_letter(first);
    check_letter(second);
    check_word(word);
    const int n = static_cast<int>(word.size()) + 2;
    IntegralCombination out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            IndexWord w;
            int src = 0;
            for (int k = 0; k < n; ++k) {
                if (k == i) w.push_back(first);
                else if (k == j) w.push_back(second);
                else w.push_back(word[src++]);
            }
            out.add(w, Rational(1));
        }
    }
    return out;
}

ZeroPattern parse_zero_pattern(const std::string& name) {
    static const std::map<std::string, ZeroPattern> names = {
        {"alpha_a", ZeroPattern::alpha_a},
        {"alpha_a_a", ZeroPattern::alpha_a_a},
        {"alpha_a_beta", ZeroPattern::alpha_a_beta},
        {"alpha_beta_a", ZeroPattern::alpha_beta_a},
        {"alpha_a_gamma_a", ZeroPattern::alpha_a_gamma_a},
        {"alpha_beta_a_a", ZeroPattern::alpha_beta_a_a},
    };
    auto it = names.find(name);
    if (it == names.end()) throw DomainError("unknown zero pattern: " + name);
    return it->second;
}

std::string pattern_name(ZeroPattern pattern) {
    switch (pattern) {
        case ZeroPattern::alpha_a: return "alpha_a";
        case ZeroPattern::alpha_a_a: return "alpha_a_a";
        case ZeroPattern::alpha_a_beta: return "alpha_a_beta";
        case ZeroPattern::alpha_beta_a: return "alpha_beta_a";
        case ZeroPattern::alpha_a_gamma_a: return "alpha_a_gamma_a";
        case ZeroPattern::alpha_beta_a_a: return "alpha_beta_a_a";
    }
    throw DomainError("unknown zero pattern");
}

int pattern_length(ZeroPattern pattern) {
    switch (pattern) {
        case ZeroPattern::alpha_a: return 2;
        case ZeroPattern::alpha_a_a:
        case ZeroPattern::alpha_a_beta:
        case ZeroPattern::alpha_beta_a: return 3;
        case ZeroPattern::alpha_a_gamma_a:
        case ZeroPattern::alpha_beta_a_a: return 4;
    }
    throw DomainError("unknown zero pattern");
}

IndexWord pattern_word(ZeroPattern pattern, int alpha, int beta, int a) {
    switch (pattern) {
        case ZeroPattern::alpha_a: return {alpha, a};
        case ZeroPattern::alpha_a_a: return {alpha, a, a};
        case ZeroPattern::alpha_a_beta: return {alpha, a, beta};
        case ZeroPattern::alpha_beta_a: return {alpha, beta, a};
        case ZeroPattern::alpha_a_gamma_a: return {alpha, a, beta, a};
        case ZeroPattern::alpha_beta_a_a: return {alpha, beta, a, a};
    }
    throw DomainError("unknown zero pattern");
}

IntegralCombination reduce_against_zeros(ZeroPattern pattern, int n, int alpha, int beta, int a) {
    check_letter(alpha);
    check_letter(beta);
    check_letter(a);
    if (n < pattern_length(pattern)) throw DomainError("total word length shorter than the pattern");
    IntegralCombination out;
    auto single = [&](auto weight) {
        for (int j = 1; j <= n; ++j) out.add(placed(n, a, {{j, alpha}}), Rational(weight(j)));
    };
    auto pair = [&](auto weight) {
        for (int j = 1; j <= n - 1; ++j)
            for (int k = j + 1; k <= n; ++k)
                out.add(placed(n, a, {{j, alpha}, {k, beta}}), Rational(weight(j, k)));
    };
    switch (pattern) {
        case ZeroPattern::alpha_a:
            single([&](int j) { return std::int64_t(n - j); });
            break;
        case ZeroPattern::alpha_a_a:
            single([&](int i) { return binomial(n - i, 2); });
            break;
        case ZeroPattern::alpha_a_beta:
            pair([&](int j, int l) { return std::int64_t(l - 1 - j); });
            break;
        case ZeroPattern::alpha_beta_a:
            pair([&](int, int k) { return std::int64_t(n - k); });
            break;
        case ZeroPattern::alpha_a_gamma_a:
            pair([&](int i, int k) {
                return std::int64_t(n - k) * (n - i - 2) - std::int64_t(n - k) * (n - k - 1);
            });
            break;
        case ZeroPattern::alpha_beta_a_a:
            pair([&](int, int j) { return binomial(n - j, 2); });
            break;
    }
    return out;
}

IntegralCombination repeated_word(int a, int n) {
    check_letter(a);
    if (n < 0) throw DomainError("word length must be nonnegative");
    return IntegralCombination(IndexWord(n, a), Rational(1));
}

Rational repeated_word_factor(int n) {
    if (n < 0) throw DomainError("word length must be nonnegative");
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return Rational(1, f);
}

double evaluate_combination(const IntegralCombination& comb, double tau, const NestedIntegrator& integ) {
    double s = 0.0;
    for (const auto& [w, c] : comb.terms()) s += to_double(c) * integ.integral(w, tau);
    return s;
}

double evaluate_combination(const IntegralCombination& comb, double tau, const ModelParams& params,
                            const TruncationPolicy& policy) {
    if (comb.empty()) return 0.0;
    return evaluate_combination(comb, tau, NestedIntegrator(params, policy));
}

}  // namespace anhosc
