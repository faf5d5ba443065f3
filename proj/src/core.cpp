#include "necklace/core.hpp"

#include <algorithm>

#include "necklace/errors.hpp"

namespace necklace {

namespace {

void check_gap(const Necklace& nk, int gap) {
  if (gap < 0 || gap >= nk.size()) {
    throw UsageError("gap index " + std::to_string(gap) + " out of range for necklace of size " +
                     std::to_string(nk.size()));
  }
}

}  // namespace

Necklace start_necklace() { return Necklace({BeadColor::White, BeadColor::Black}); }

BeadColor gap_color(const Necklace& nk, int gap) {
  check_gap(nk, gap);
  const bool both_black = nk.bead(gap) == BeadColor::Black &&
                          nk.bead((gap + 1) % nk.size()) == BeadColor::Black;
  return both_black ? BeadColor::White : BeadColor::Black;
}

Necklace insert_at(const Necklace& nk, int gap) {
  const BeadColor color = gap_color(nk, gap);  // validates gap
  std::vector<BeadColor> beads = nk.beads();
  beads.insert(beads.begin() + gap + 1, color);
  return Necklace(std::move(beads));
}

int white_count(const Necklace& nk) {
  return static_cast<int>(std::count(nk.beads().begin(), nk.beads().end(), BeadColor::White));
}

bool is_valid(const Necklace& nk) {
  const int n = nk.size();
  if (n < 2) return false;
  const int whites = white_count(nk);
  if (whites == 0 || whites == n) return false;
  for (int i = 0; i < n; ++i) {
    if (nk.bead(i) == BeadColor::White && nk.bead((i + 1) % n) == BeadColor::White) return false;
  }
  return true;
}

Necklace canonical_form(const Necklace& nk) {
  const auto& b = nk.beads();
  const int n = nk.size();
  if (n <= 1) return nk;
  // Naive minimal-rotation scan; sizes here never exceed the enumeration
  // guards, so O(n^2) is plenty.
  int best = 0;
  for (int start = 1; start < n; ++start) {
    for (int i = 0; i < n; ++i) {
      const BeadColor lhs = b[(start + i) % n];
      const BeadColor rhs = b[(best + i) % n];
      if (lhs != rhs) {
        if (lhs < rhs) best = start;
        break;
      }
    }
  }
  std::vector<BeadColor> rotated(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rotated[static_cast<std::size_t>(i)] = b[(best + i) % n];
  return Necklace(std::move(rotated));
}

std::string to_string(const Necklace& nk) {
  std::string s;
  s.reserve(static_cast<std::size_t>(nk.size()));
  for (const BeadColor c : nk.beads()) s += (c == BeadColor::White) ? 'W' : 'B';
  return s;
}

Necklace parse_necklace(std::string_view text) {
  std::vector<BeadColor> beads;
  beads.reserve(text.size());
  for (const char c : text) {
    if (c == 'W') {
      beads.push_back(BeadColor::White);
    } else if (c == 'B') {
      beads.push_back(BeadColor::Black);
    } else {
      throw UsageError(std::string("invalid bead character '") + c + "' (expected W or B)");
    }
  }
  return Necklace(std::move(beads));
}

}  // namespace necklace
