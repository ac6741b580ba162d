#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ydc {

/// Arithmetic progression in the paper's sense: the empty set, a singleton,
/// or a full residue class mod d >= 2. Never all of Z.
class Progression {
public:
    enum class Kind { Empty, Singleton, Residue };

    Progression() = default;

    static Progression empty() { return Progression{}; }
    static Progression singleton(int m) {
        Progression p;
        p.kind_ = Kind::Singleton;
        p.rep_ = m;
        return p;
    }
    /// Residue class {n : n = rep mod d}; rep is stored reduced.
    /// Throws WouldBeAllIntegers for d == 1, DomainError for d < 1.
    static Progression residue(int rep, int modulus);

    /// The smallest progression containing both x and y: a singleton when
    /// x == y, the residue class mod |x - y| otherwise.
    /// Throws WouldBeAllIntegers when |x - y| == 1.
    static Progression generated_by(int x, int y);

    bool contains(int n) const {
        switch (kind_) {
            case Kind::Empty: return false;
            case Kind::Singleton: return n == rep_;
            case Kind::Residue: return mod(n, modulus_) == rep_;
        }
        return false;
    }

    Progression negated() const;
    Progression shifted(int t) const;
    Progression reflected(int c) const;

    Kind kind() const { return kind_; }
    int rep() const { return rep_; }
    int modulus() const { return modulus_; }

    /// Textual forms: "empty", "{m}", "m mod d".
    std::string str() const;
    static Progression parse(std::string_view text);

    bool operator==(const Progression&) const = default;

private:
    static int mod(int n, int d) {
        int r = n % d;
        return r < 0 ? r + d : r;
    }

    Kind kind_ = Kind::Empty;
    int rep_ = 0;
    int modulus_ = 0;
};

/// A representative progression together with its trace on a window.
struct TracedProgression {
    Progression rep;
    std::vector<int> trace;  // sorted ascending
};

/// One representative per distinct trace on `window`: the empty trace, every
/// singleton, and every residue class with modulus 2 <= d <= max - min.
/// When traces collide the representative with the smallest modulus wins
/// (singletons count as modulus infinity; the empty trace is always
/// represented by the empty progression). Window must be nonempty and hold
/// at most 256 values.
std::vector<TracedProgression> relevant_progressions(std::span<const int> window);

}  // namespace ydc
