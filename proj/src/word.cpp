#include "bhverify/word.hpp"

#include <cctype>
#include <stdexcept>

namespace bhv {

void GroupWord::append(char gen, long exp) {
    if (gen != 'a' && gen != 'b')
        throw std::invalid_argument(std::string("unknown generator '") + gen + "'");
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({gen, exp});
}

GroupWord GroupWord::operator*(const GroupWord& other) const {
    GroupWord out = *this;
    for (const auto& l : other.letters_) out.append(l.gen, l.exp);
    return out;
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.append(it->gen, -it->exp);
    return out;
}

GroupWord GroupWord::pow(long n) const {
    GroupWord base = n < 0 ? inverse() : *this;
    long count = n < 0 ? -n : n;
    GroupWord out;
    for (long i = 0; i < count; ++i) out = out * base;
    return out;
}

long GroupWord::length() const {
    long total = 0;
    for (const auto& l : letters_) total += l.exp < 0 ? -l.exp : l.exp;
    return total;
}

std::string GroupWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += l.gen;
        if (l.exp != 1) out += '^' + std::to_string(l.exp);
    }
    return out;
}

GroupWord GroupWord::parse(std::string_view text) {
    GroupWord out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size())
            throw std::invalid_argument("word parse error: trailing input after '1'");
        return out;
    }
    while (pos < text.size()) {
        char c = text[pos];
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower != 'a' && lower != 'b')
            throw std::invalid_argument("word parse error: unexpected character '" +
                                        std::string(1, c) + "' in '" + std::string(text) + "'");
        ++pos;
        long exp = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool neg = false;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                neg = text[pos] == '-';
                ++pos;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos)
                throw std::invalid_argument("word parse error: missing exponent in '" +
                                            std::string(text) + "'");
            long mag = std::stol(std::string(text.substr(start, pos - start)));
            exp *= neg ? -mag : mag;
        }
        out.append(lower, exp);
        skip_ws();
    }
    return out;
}

GroupWord GroupWord::from_letters(std::string_view run) {
    GroupWord out;
    for (char c : run) {
        switch (c) {
            case 'a': out.append('a', 1); break;
            case 'b': out.append('b', 1); break;
            case 'A': out.append('a', -1); break;
            case 'B': out.append('b', -1); break;
            default:
                throw std::invalid_argument(std::string("from_letters: bad letter '") + c + "'");
        }
    }
    return out;
}

}  // namespace bhv
