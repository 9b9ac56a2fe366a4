#include "talex/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "talex/errors.hpp"

namespace talex {

Word::Word(std::vector<Letter> letters) {
    for (const Letter& l : letters) {
        if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
        if (!letters_.empty() && letters_.back().generator == l.generator &&
            letters_.back().sign == -l.sign) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

Word Word::operator*(const Word& other) const {
    std::vector<Letter> combined = letters_;
    combined.insert(combined.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(combined));
}

Word Word::inverse() const {
    std::vector<Letter> flipped;
    flipped.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        flipped.push_back(Letter{it->generator, -it->sign});
    }
    Word w;
    w.letters_ = std::move(flipped);  // reversal of a reduced word is reduced
    return w;
}

Word Word::pow(long exponent) const {
    const Word base = exponent < 0 ? inverse() : *this;
    Word result;
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) result = result * base;
    return result;
}

size_t Word::max_generator() const {
    size_t top = 0;
    for (const Letter& l : letters_) top = std::max(top, l.generator);
    return top;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
    if (is_identity()) return "1";
    std::ostringstream out;
    // Run-length collapse: x x x -> x^3.
    size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        const long run = static_cast<long>(j - i) * letters_[i].sign;
        if (!first) out << " ";
        first = false;
        out << names.at(letters_[i].generator);
        if (run != 1) out << "^" << run;
        i = j;
    }
    return out.str();
}

FreeRingElement FreeRingElement::from_word(const Word& w, long coefficient) {
    FreeRingElement e;
    e.add_term(w, coefficient);
    return e;
}

void FreeRingElement::add_term(const Word& w, long coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

FreeRingElement FreeRingElement::operator+(const FreeRingElement& other) const {
    FreeRingElement out(*this);
    for (const auto& [w, c] : other.terms_) out.add_term(w, c);
    return out;
}

FreeRingElement FreeRingElement::operator-(const FreeRingElement& other) const {
    FreeRingElement out(*this);
    for (const auto& [w, c] : other.terms_) out.add_term(w, -c);
    return out;
}

FreeRingElement FreeRingElement::scaled(long factor) const {
    FreeRingElement out;
    if (factor == 0) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * factor);
    return out;
}

FreeRingElement FreeRingElement::left_multiplied(const Word& w) const {
    FreeRingElement out;
    for (const auto& [u, c] : terms_) out.add_term(w * u, c);
    return out;
}

std::string FreeRingElement::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        long coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
            first = false;
        } else if (coeff < 0) {
            out << " - ";
            coeff = -coeff;
        } else {
            out << " + ";
        }
        if (coeff != 1) out << coeff << "*";
        out << "(" << w.to_string(names) << ")";
    }
    return out.str();
}

FreeRingElement fox_derivative(const Word& w, size_t generator, size_t generator_count) {
    if (generator >= generator_count) {
        throw IndexOutOfRange("fox derivative with respect to generator " + std::to_string(generator) +
                              " of " + std::to_string(generator_count));
    }
    // d(l1...ln)/dx = sum over positions: prefix * dl_k/dx, with
    // dx/dx = 1 and d(x^-1)/dx = -x^-1.
    FreeRingElement result;
    Word prefix;
    for (const Letter& l : w.letters()) {
        if (l.generator == generator) {
            if (l.sign > 0) {
                result = result + FreeRingElement::from_word(prefix);
            } else {
                result = result - FreeRingElement::from_word(prefix * Word::generator(l.generator, -1));
            }
        }
        prefix = prefix * Word::generator(l.generator, l.sign);
    }
    return result;
}

std::string Presentation::render() const {
    std::ostringstream out;
    out << "gens:";
    for (const auto& name : generator_names) out << " " << name;
    out << "\n";
    for (const Word& r : relators) {
        out << "rel: " << r.to_string(generator_names) << "\n";
    }
    return out.str();
}

Presentation hopf_link(size_t d) {
    if (d < 2) throw DTooSmall("hopf link needs at least 2 components");
    Presentation p;
    for (size_t i = 0; i < d; ++i) p.generator_names.push_back("x" + std::to_string(i));
    const Word x0 = Word::generator(0);
    for (size_t i = 1; i < d; ++i) {
        const Word xi = Word::generator(i);
        p.relators.push_back(x0 * xi * x0.inverse() * xi.inverse());
    }
    return p;
}

Presentation a_singularity_link(size_t n, bool include_redundant_relator) {
    if (n < 1) throw NTooSmall("A-singularity link needs n >= 1");
    Presentation p;
    const size_t count = 2 * n;
    for (size_t i = 0; i < count; ++i) p.generator_names.push_back("a" + std::to_string(i));
    p.generator_names.push_back("beta");
    const size_t beta = count;

    const Word b = Word::generator(beta);
    p.relators.push_back(Word::generator(1) * Word::generator(0) * b.inverse());
    const size_t last = include_redundant_relator ? count : count - 1;
    for (size_t i = 0; i < last; ++i) {
        const Word ai = Word::generator(i);
        const Word anext = Word::generator((i + 2) % count);
        p.relators.push_back(b * anext * b.inverse() * ai.inverse());
    }
    return p;
}

Presentation free_group(size_t g) {
    Presentation p;
    for (size_t i = 0; i < g; ++i) p.generator_names.push_back("x" + std::to_string(i));
    return p;
}

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        tokens.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return tokens;
}

long parse_exponent(const std::string& text, int line_no, int column) {
    if (text.empty()) throw SyntaxError("missing exponent after '^'", line_no, column);
    size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw SyntaxError("missing exponent digits", line_no, column);
    for (size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw SyntaxError("malformed exponent '" + text + "'", line_no, column);
        }
    }
    const long value = std::stol(text);
    if (value == 0) throw SyntaxError("exponent must be nonzero", line_no, column);
    return value;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::map<std::string, size_t> index;
    bool seen_gens = false;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0].text == "gens:") {
            if (seen_gens) throw SyntaxError("second 'gens:' line", line_no, tokens[0].column);
            seen_gens = true;
            if (tokens.size() == 1) throw SyntaxError("'gens:' line names no generators", line_no, tokens[0].column);
            for (size_t i = 1; i < tokens.size(); ++i) {
                const std::string& name = tokens[i].text;
                if (!valid_identifier(name)) {
                    throw SyntaxError("invalid generator name '" + name + "'", line_no, tokens[i].column);
                }
                if (index.count(name)) throw DuplicateGenerator(name);
                index.emplace(name, p.generator_names.size());
                p.generator_names.push_back(name);
            }
            continue;
        }

        if (tokens[0].text == "rel:") {
            if (!seen_gens) throw SyntaxError("'rel:' before 'gens:'", line_no, tokens[0].column);
            std::vector<Letter> letters;
            for (size_t i = 1; i < tokens.size(); ++i) {
                const std::string& tok = tokens[i].text;
                const size_t caret = tok.find('^');
                const std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
                long exponent = 1;
                if (caret != std::string::npos) {
                    exponent = parse_exponent(tok.substr(caret + 1), line_no,
                                              tokens[i].column + static_cast<int>(caret) + 1);
                }
                if (!valid_identifier(name)) {
                    throw SyntaxError("malformed word token '" + tok + "'", line_no, tokens[i].column);
                }
                auto it = index.find(name);
                if (it == index.end()) throw UnknownGenerator(name);
                const int sign = exponent < 0 ? -1 : 1;
                const long count = exponent < 0 ? -exponent : exponent;
                for (long k = 0; k < count; ++k) letters.push_back(Letter{it->second, sign});
            }
            p.relators.emplace_back(std::move(letters));
            continue;
        }

        throw SyntaxError("expected 'gens:' or 'rel:', found '" + tokens[0].text + "'", line_no,
                          tokens[0].column);
    }

    if (!seen_gens) {
        throw SyntaxError("presentation has no 'gens:' line", line_no > 0 ? line_no : 1, 1);
    }
    return p;
}

}  // namespace talex
