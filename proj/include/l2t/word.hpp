#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace l2t {

/// One syllable of a free-group word: generator index and a nonzero exponent.
struct Letter {
    int gen = 0;
    long long exp = 0;

    auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word in a free group. Adjacent syllables never share a
/// generator index and no exponent is zero; the empty word is the identity.
class Word {
public:
    Word() = default;

    /// Builds a word from a raw syllable sequence, merging and cancelling.
    static Word reduce(const std::vector<Letter>& raw) {
        Word w;
        for (const Letter& l : raw) w.push(l.gen, l.exp);
        return w;
    }

    static Word generator(int gen, long long exp = 1) {
        Word w;
        w.push(gen, exp);
        return w;
    }

    bool is_identity() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t syllables() const { return letters_.size(); }

    /// Total letter length (sum of |exponent|).
    long long length() const {
        long long n = 0;
        for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
        return n;
    }

    Word inverse() const {
        Word w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back({it->gen, -it->exp});
        return w;
    }

    Word operator*(const Word& o) const {
        Word w = *this;
        for (const Letter& l : o.letters_) w.push(l.gen, l.exp);
        return w;
    }

    auto operator<=>(const Word&) const = default;

    /// Renders using the given generator names, uppercase first letter for
    /// inverses ("a b A B" style). Exponents are expanded.
    std::string str(const std::vector<std::string>& names) const {
        std::string out;
        for (const Letter& l : letters_) {
            std::string name = names.at(static_cast<std::size_t>(l.gen));
            std::string invname = flip_case(name);
            long long n = l.exp < 0 ? -l.exp : l.exp;
            for (long long i = 0; i < n; ++i) {
                if (!out.empty()) out += ' ';
                out += l.exp > 0 ? name : invname;
            }
        }
        return out.empty() ? "1" : out;
    }

    /// Parses a whitespace-separated token list; a token with the first
    /// character's case flipped denotes the inverse generator.
    static Word parse(const std::string& text, const std::vector<std::string>& names) {
        Word w;
        std::string tok;
        auto flush = [&]() {
            if (tok.empty()) return;
            if (tok == "1") { tok.clear(); return; }
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (tok == names[i]) { w.push(static_cast<int>(i), 1); tok.clear(); return; }
                if (tok == flip_case(names[i])) { w.push(static_cast<int>(i), -1); tok.clear(); return; }
            }
            throw std::invalid_argument("unknown generator token '" + tok + "'");
        };
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '\n') flush();
            else tok += c;
        }
        flush();
        return w;
    }

private:
    static std::string flip_case(std::string s) {
        if (!s.empty()) {
            char& c = s[0];
            if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
            else if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        }
        return s;
    }

    void push(int gen, long long exp) {
        if (exp == 0) return;
        if (!letters_.empty() && letters_.back().gen == gen) {
            letters_.back().exp += exp;
            if (letters_.back().exp == 0) letters_.pop_back();
            return;
        }
        letters_.push_back({gen, exp});
    }

    std::vector<Letter> letters_;
};

}  // namespace l2t
