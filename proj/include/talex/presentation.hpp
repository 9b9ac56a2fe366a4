#ifndef TALEX_PRESENTATION_HPP
#define TALEX_PRESENTATION_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace talex {

/// One letter of a free-group word: generator index and sign.
struct Letter {
    size_t generator;
    int sign;  // +1 or -1

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word in a free group. The empty word is the
/// identity. Construction reduces, so no adjacent x x^-1 pairs survive.
class Word {
   public:
    Word() = default;
    /// Reduces the letter sequence.
    explicit Word(std::vector<Letter> letters);

    static Word generator(size_t index, int sign = 1) { return Word({Letter{index, sign}}); }
    static Word identity() { return Word(); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    Word operator*(const Word& other) const;
    Word inverse() const;
    Word pow(long exponent) const;

    /// Largest generator index used, or 0 for the identity; callers
    /// pair this with is_identity when sizing tables.
    size_t max_generator() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    /// Renders with the given generator names, e.g. "x0 x1^-1".
    std::string to_string(const std::vector<std::string>& names) const;

   private:
    std::vector<Letter> letters_;
};

/// An element of the integral group ring Z[F]: finite map from words
/// to nonzero integer coefficients. This is where Fox derivatives live.
class FreeRingElement {
   public:
    FreeRingElement() = default;

    static FreeRingElement zero() { return FreeRingElement(); }
    static FreeRingElement from_word(const Word& w, long coefficient = 1);

    const std::map<Word, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreeRingElement operator+(const FreeRingElement& other) const;
    FreeRingElement operator-(const FreeRingElement& other) const;
    FreeRingElement scaled(long factor) const;
    /// Left multiplication by a word: w * (sum c_i u_i).
    FreeRingElement left_multiplied(const Word& w) const;

    bool operator==(const FreeRingElement&) const = default;

    std::string to_string(const std::vector<std::string>& names) const;

   private:
    void add_term(const Word& w, long coefficient);

    std::map<Word, long> terms_;
};

/// Fox free differential calculus: the unique derivation on Z[F] with
/// d(x_i)/d(x_j) = delta_ij extended by d(uv) = du + u dv. Computed in
/// one left-to-right pass over the word.
FreeRingElement fox_derivative(const Word& w, size_t generator, size_t generator_count);

/// A finite group presentation: named generators and freely reduced
/// relator words over them.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    size_t generator_count() const { return generator_names.size(); }
    size_t relator_count() const { return relators.size(); }

    bool operator==(const Presentation&) const = default;

    /// Renders in the job grammar ("gens:" line plus "rel:" lines).
    std::string render() const;
};

/// The d-component Hopf link group Z x F_{d-1}:
/// < x0 ... x_{d-1} | [x0, xi], i = 1..d-1 >. Requires d >= 2.
Presentation hopf_link(size_t d);

/// Link group of the A_{2n-1} singularity x^2 = y^{2n}, presented on
/// generators a0..a_{2n-1}, beta with relators a1 a0 beta^-1 and
/// beta a_{i+2} beta^-1 a_i^-1 (indices mod 2n). The last conjugation
/// relator (i = 2n-1) is a consequence of the others, and keeping it
/// would inflate the 2-complex (its Euler characteristic becomes 1
/// instead of the link complement's 0, which leaks a spurious free
/// summand into degree-2 homology); by default it is dropped so the
/// complex models the link complement in all degrees. Requires n >= 1.
Presentation a_singularity_link(size_t n, bool include_redundant_relator = false);

/// Free group of rank g: g generators, no relators.
Presentation free_group(size_t g);

/// Parses the line grammar: '#' comments, one "gens:" line of
/// whitespace-separated names, then "rel:" lines of name or name^k
/// tokens. Throws SyntaxError / UnknownGenerator / DuplicateGenerator.
Presentation parse_presentation(const std::string& text);

}  // namespace talex

#endif
