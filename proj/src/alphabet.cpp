#include "hairpin/alphabet.hpp"

#include <algorithm>
#include <sstream>

namespace hairpin {

InvolutiveAlphabet::InvolutiveAlphabet(std::vector<std::string> tokens, std::vector<Letter> bar)
    : tokens_(std::move(tokens)), bar_(std::move(bar)) {
    if (tokens_.size() < 2) throw Error("alphabet needs at least two letters");
    if (tokens_.size() > max_letters) throw Error("alphabet has more than 64 letters");
    if (bar_.size() != tokens_.size()) throw Error("bar map size differs from letter count");
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        const auto& t = tokens_[i];
        if (t.empty()) throw Error("empty letter token");
        for (char c : t) {
            if (c <= ' ' || c > '~') throw Error("letter token '" + t + "' is not printable ASCII");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (tokens_[j] == t) throw Error("duplicate letter '" + t + "'");
        }
        if (bar_[i] >= tokens_.size()) throw Error("bar of '" + t + "' is out of range");
        if (bar_[bar_[i]] != i) throw Error("bar is not an involution at '" + t + "'");
        if (t.size() > 1) spaced_ = true;
    }
}

InvolutiveAlphabet InvolutiveAlphabet::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::string> tokens;
    auto index_of = [&](const std::string& t) -> std::optional<std::size_t> {
        auto it = std::find(tokens.begin(), tokens.end(), t);
        if (it == tokens.end()) return std::nullopt;
        return static_cast<std::size_t>(it - tokens.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (const auto& [x, y] : pairs) {
        auto ix = index_of(x);
        if (!ix) { tokens.push_back(x); ix = tokens.size() - 1; }
        auto iy = index_of(y);
        if (!iy) { tokens.push_back(y); iy = tokens.size() - 1; }
        links.emplace_back(*ix, *iy);
    }
    if (tokens.size() > max_letters) throw Error("alphabet has more than 64 letters");
    std::vector<int> partner(tokens.size(), -1);
    for (auto [i, j] : links) {
        for (auto [u, w] : {std::pair{i, j}, std::pair{j, i}}) {
            if (partner[u] != -1 && partner[u] != static_cast<int>(w)) {
                throw Error("involution conflict: '" + tokens[u] + "' paired with both '" +
                            tokens[partner[u]] + "' and '" + tokens[w] + "'");
            }
            partner[u] = static_cast<int>(w);
        }
    }
    std::vector<Letter> bar(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) bar[i] = static_cast<Letter>(partner[i]);
    return InvolutiveAlphabet(std::move(tokens), std::move(bar));
}

std::optional<Letter> InvolutiveAlphabet::find(std::string_view token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i] == token) return static_cast<Letter>(i);
    }
    return std::nullopt;
}

std::string InvolutiveAlphabet::format(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (spaced_ && i > 0) out += ' ';
        out += tokens_.at(w[i]);
    }
    return out;
}

Word InvolutiveAlphabet::parse(std::string_view text) const {
    Word w;
    if (spaced_) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            auto a = find(tok);
            if (!a) throw Error("unknown letter '" + tok + "'");
            w.push_back(*a);
        }
        return w;
    }
    for (char c : text) {
        if (c == ' ') continue;
        auto a = find(std::string_view(&c, 1));
        if (!a) throw Error(std::string("unknown letter '") + c + "'");
        w.push_back(*a);
    }
    return w;
}

std::vector<std::pair<std::string, std::string>> InvolutiveAlphabet::pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (bar_[i] >= i) out.emplace_back(tokens_[i], tokens_[bar_[i]]);
    }
    return out;
}

Word bar_word(const InvolutiveAlphabet& sigma, const Word& w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = sigma.bar(w[i]);
    return out;
}

bool shortlex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

void normalize_word_set(std::vector<Word>& words) {
    std::sort(words.begin(), words.end(), ShortlexLess{});
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

Word concat(std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

Word periodic_slice(const Word& w, std::size_t from, std::size_t length) {
    Word out(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = w[(from + i) % w.size()];
    return out;
}

}  // namespace hairpin
