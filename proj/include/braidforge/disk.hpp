#ifndef BRAIDFORGE_DISK_HPP
#define BRAIDFORGE_DISK_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

/// Puncture label: a base index, optionally primed (the partner created by
/// doubling a line into a conic).
struct Label {
    int base = 0;
    bool primed = false;

    bool operator==(const Label& o) const { return base == o.base && primed == o.primed; }
    bool operator!=(const Label& o) const { return !(*this == o); }
    std::string str() const { return std::to_string(base) + (primed ? "'" : ""); }
};

inline Label lab(int base, bool primed = false) { return Label{base, primed}; }

enum class Side { below, above };

inline Side opposite(Side s) { return s == Side::below ? Side::above : Side::below; }

/// The model (D, K): punctures on the real axis, in axis order.
class PunctureSet {
public:
    PunctureSet() = default;
    /// Base set with labels 1..n.
    static PunctureSet base(int n);
    /// Doubled set 1,1',2,2',...,n,n' (label i at axis position 2i-1).
    static PunctureSet doubled(int n);

    explicit PunctureSet(std::vector<Label> labels);

    int count() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    bool is_doubled() const { return doubled_; }
    int base_count() const;

    /// 1-based axis position of a label; throws if absent.
    int position(const Label& l) const;
    bool contains(const Label& l) const;
    const Label& label_at(int position) const { return labels_.at(position - 1); }

private:
    std::vector<Label> labels_;
    bool doubled_ = false;
};

/// One detour annotation: between punctures lo..hi (inclusive) the path
/// runs on `side` instead of the base side.
struct Detour {
    Label lo, hi;
    Side side = Side::above;
};

/// Combinatorial encoding of a simple path between two punctures, running
/// along the axis on base_side with detour intervals.
struct PathSpec {
    Label from, to;
    Side base_side = Side::below;
    std::vector<Detour> detours;

    bool operator==(const PathSpec& o) const;
    std::string str() const;
};

struct HalfTwist {
    PathSpec path;
    BraidWord word;
};

/// Compiles a path into its half-twist braid word. For the path from a to b
/// below the axis with no detours the word is
/// (s_{b-1} ... s_{a+1}) s_a (s_{a+1}^-1 ... s_{b-1}^-1) in position indices;
/// above-side passages flip the sign of the corresponding conjugating letter.
HalfTwist compile_path(const PathSpec& p, const PunctureSet& K);

/// Per-puncture side schedule of a path (positions strictly between the
/// endpoints), with detours resolved innermost-first.
std::vector<std::pair<int, Side>> side_schedule(const PathSpec& p, const PunctureSet& K);

PunctureSet double_set(const PunctureSet& K);
PathSpec lift_path(const PathSpec& p);

}  // namespace braidforge

#endif
