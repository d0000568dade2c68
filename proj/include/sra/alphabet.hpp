#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sra {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Interned symbol table. Automata share one alphabet via AlphabetRef; symbol
/// ids index into it. Declaration order is significant: it fixes the
/// lexicographic order used by enumeration and counterexample search.
///
/// Tokens are arbitrary non-empty strings without whitespace, so multi-letter
/// patterns ("if", "endif") and generated names ("e_{u,v}", "d7", "$") are all
/// representable. The single-character convenience constructor covers the
/// common a/b-style alphabets.
class Alphabet {
public:
    Alphabet() = default;

    /// Adds a token if new, returns its id either way. Throws Error on a
    /// malformed token (empty, whitespace, '#' or ':' which the text format
    /// reserves).
    Symbol intern(std::string_view token);

    std::optional<Symbol> find(std::string_view token) const;
    const std::string& text(Symbol s) const;
    std::size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Symbol> index_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(const std::vector<std::string>& tokens);
/// One symbol per character: make_char_alphabet("ab") -> {a, b}.
AlphabetRef make_char_alphabet(std::string_view letters);

// Word predicates. The empty word is a prefix and a suffix of every word.
bool is_prefix(const Word& u, const Word& w);
bool is_proper_prefix(const Word& u, const Word& w);
bool is_suffix(const Word& u, const Word& w);
bool is_proper_suffix(const Word& u, const Word& w);

/// Order by length first, then by symbol ids (i.e. alphabet declaration
/// order). This is the canonical word order everywhere in the toolkit.
bool length_lex_less(const Word& u, const Word& w);

struct LengthLexLess {
    bool operator()(const Word& u, const Word& w) const { return length_lex_less(u, w); }
};

/// Dot-joined token spelling, e.g. {a,a,b} -> "a.a.b"; empty word -> "".
std::string format_word(const Alphabet& alphabet, const Word& w);
/// Same, but prints the empty word visibly.
std::string display_word(const Alphabet& alphabet, const Word& w);

/// Parses "a.a.b" against an alphabet. Throws Error on unknown tokens.
Word parse_word(const Alphabet& alphabet, std::string_view dotted);
/// Parses "aab" one character per symbol. Throws Error on unknown letters.
Word parse_char_word(const Alphabet& alphabet, std::string_view letters);

}  // namespace sra
