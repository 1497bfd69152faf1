#pragma once

#include <array>
#include <string>

namespace bellpp {

/// Detection site. Site A observes spatial mode 1, site B spatial mode 2.
enum class Site : int { A = 0, B = 1 };

/// Polarization channel of a site (the +/- detector outputs).
enum class Polarization : int { plus = 0, minus = 1 };

/// One of the four optical modes. The flat ordering (A,+), (A,-), (B,+),
/// (B,-) is fixed and used by every length-4 array and serialized row in
/// this project.
struct ModeIndex {
    Site site;
    Polarization pol;

    constexpr int flat() const {
        return static_cast<int>(site) * 2 + static_cast<int>(pol);
    }

    friend constexpr bool operator==(ModeIndex a, ModeIndex b) {
        return a.site == b.site && a.pol == b.pol;
    }
};

constexpr std::array<ModeIndex, 4> all_modes() {
    return {ModeIndex{Site::A, Polarization::plus}, ModeIndex{Site::A, Polarization::minus},
            ModeIndex{Site::B, Polarization::plus}, ModeIndex{Site::B, Polarization::minus}};
}

/// First flat index of a site's (+,-) mode pair.
constexpr int site_offset(Site s) { return static_cast<int>(s) * 2; }

inline std::string to_string(Site s) { return s == Site::A ? "A" : "B"; }

/// Human-readable label, e.g. "A+".
inline std::string to_string(ModeIndex m) {
    return to_string(m.site) + (m.pol == Polarization::plus ? "+" : "-");
}

/// Identifier-safe label, e.g. "Ap", used for CSV column names.
inline std::string tag(ModeIndex m) {
    return to_string(m.site) + (m.pol == Polarization::plus ? "p" : "m");
}

}  // namespace bellpp
