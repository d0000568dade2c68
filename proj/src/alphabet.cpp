#include "sra/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "sra/errors.hpp"

namespace sra {

Symbol Alphabet::intern(std::string_view token) {
    if (token.empty())
        throw Error("alphabet token must be non-empty");
    for (char c : token)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ':')
            throw Error("alphabet token '" + std::string(token) + "' contains a reserved character");
    auto it = index_.find(std::string(token));
    if (it != index_.end())
        return it->second;
    Symbol id = static_cast<Symbol>(tokens_.size());
    tokens_.emplace_back(token);
    index_.emplace(tokens_.back(), id);
    return id;
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const std::string& Alphabet::text(Symbol s) const {
    if (s >= tokens_.size())
        throw Error("symbol id " + std::to_string(s) + " out of range");
    return tokens_[s];
}

AlphabetRef make_alphabet(const std::vector<std::string>& tokens) {
    auto alphabet = std::make_shared<Alphabet>();
    for (const auto& tok : tokens) {
        std::size_t before = alphabet->size();
        alphabet->intern(tok);
        if (alphabet->size() == before)
            throw Error("duplicate alphabet token '" + tok + "'");
    }
    return alphabet;
}

AlphabetRef make_char_alphabet(std::string_view letters) {
    std::vector<std::string> tokens;
    tokens.reserve(letters.size());
    for (char c : letters)
        tokens.emplace_back(1, c);
    return make_alphabet(tokens);
}

bool is_prefix(const Word& u, const Word& w) {
    return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
}

bool is_proper_prefix(const Word& u, const Word& w) {
    return u.size() < w.size() && is_prefix(u, w);
}

bool is_suffix(const Word& u, const Word& w) {
    return u.size() <= w.size() && std::equal(u.rbegin(), u.rend(), w.rbegin());
}

bool is_proper_suffix(const Word& u, const Word& w) {
    return u.size() < w.size() && is_suffix(u, w);
}

bool length_lex_less(const Word& u, const Word& w) {
    if (u.size() != w.size())
        return u.size() < w.size();
    return std::lexicographical_compare(u.begin(), u.end(), w.begin(), w.end());
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            out += '.';
        out += alphabet.text(w[i]);
    }
    return out;
}

std::string display_word(const Alphabet& alphabet, const Word& w) {
    if (w.empty())
        return "(empty)";
    return format_word(alphabet, w);
}

Word parse_word(const Alphabet& alphabet, std::string_view dotted) {
    Word w;
    if (dotted.empty())
        return w;
    std::size_t start = 0;
    while (start <= dotted.size()) {
        std::size_t dot = dotted.find('.', start);
        std::string_view tok = dotted.substr(start, dot == std::string_view::npos ? dotted.size() - start
                                                                                  : dot - start);
        auto sym = alphabet.find(tok);
        if (!sym)
            throw Error("unknown symbol '" + std::string(tok) + "'");
        w.push_back(*sym);
        if (dot == std::string_view::npos)
            break;
        start = dot + 1;
    }
    return w;
}

Word parse_char_word(const Alphabet& alphabet, std::string_view letters) {
    Word w;
    w.reserve(letters.size());
    for (char c : letters) {
        auto sym = alphabet.find(std::string_view(&c, 1));
        if (!sym)
            throw Error(std::string("unknown symbol '") + c + "'");
        w.push_back(*sym);
    }
    return w;
}

}  // namespace sra
