#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bhv {

/// Freely reduced word in the rank-2 free group on generators a, b. Adjacent
/// letters always have distinct generators and nonzero exponents.
class GroupWord {
  public:
    struct Letter {
        char gen;       // 'a' or 'b'
        long exp;       // nonzero

        bool operator==(const Letter&) const = default;
    };

    GroupWord() = default;

    /// Appends gen^exp and reduces freely.
    void append(char gen, long exp);

    GroupWord operator*(const GroupWord& other) const;
    GroupWord inverse() const;
    GroupWord pow(long n) const;
    bool operator==(const GroupWord&) const = default;

    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    /// Total letter count with multiplicity, e.g. |a^3 b^-2| = 5.
    long length() const;

    /// Text form `a b^-1 a^3 b^2`; the empty word prints as `1`.
    std::string to_string() const;

    /// Parses the text form; also accepts compact runs like `abA` where an
    /// uppercase letter is the inverse generator.
    static GroupWord parse(std::string_view text);

    /// Builds from a compact run of letters: 'a', 'b' generators, 'A', 'B'
    /// their inverses.
    static GroupWord from_letters(std::string_view run);

  private:
    std::vector<Letter> letters_;
};

}  // namespace bhv
