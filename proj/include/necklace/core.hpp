#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace necklace {

// Bead colors, encoded Black=0 / White=1 so that lexicographic comparison
// of bead sequences coincides with comparison of the binary encoding used
// for canonical forms.
enum class BeadColor : std::uint8_t { Black = 0, White = 1 };

// A cyclic sequence of two-colored beads. Plain value type: any sequence is
// representable; membership in the class generated by the insertion process
// is the job of is_valid(). Positions are 0..n-1 and gap i sits between
// bead i and bead (i+1) mod n, so a necklace of size n has n gaps.
class Necklace {
 public:
  Necklace() = default;
  explicit Necklace(std::vector<BeadColor> beads) : beads_(std::move(beads)) {}

  int size() const { return static_cast<int>(beads_.size()); }
  BeadColor bead(int i) const { return beads_[static_cast<std::size_t>(i)]; }
  const std::vector<BeadColor>& beads() const { return beads_; }

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace&, const Necklace&) = default;

 private:
  std::vector<BeadColor> beads_;
};

// The size-2 seed of the insertion process: [White, Black].
Necklace start_necklace();

// Color an insertion into gap `gap` would take: White iff both neighboring
// beads are Black. Throws UsageError for an out-of-range gap.
BeadColor gap_color(const Necklace& nk, int gap);

// New necklace with a bead of gap_color(nk, gap) placed in gap `gap`.
// The input is left untouched.
Necklace insert_at(const Necklace& nk, int gap);

int white_count(const Necklace& nk);

// True iff the necklace belongs to the class the process generates:
// size >= 2, at least one bead of each color, and no two cyclically
// adjacent whites.
bool is_valid(const Necklace& nk);

// Rotation-class representative: the lexicographically minimal rotation
// under the Black=0 / White=1 encoding. Idempotent; two necklaces are the
// same cyclic object iff their canonical forms compare equal. Reflections
// are deliberately not identified.
Necklace canonical_form(const Necklace& nk);

// Text encoding: one 'W' or 'B' per bead, one full turn from index 0.
std::string to_string(const Necklace& nk);
Necklace parse_necklace(std::string_view text);

}  // namespace necklace
