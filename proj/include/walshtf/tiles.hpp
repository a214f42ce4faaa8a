#ifndef WALSHTF_TILES_HPP
#define WALSHTF_TILES_HPP

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "walshtf/dyadic.hpp"

namespace walshtf {

/// Dyadic time-frequency rectangle of area one.
struct Tile {
  DyadicInterval time;  // I_P, scale i
  DyadicInterval freq;  // omega_P, scale -i

  Tile(DyadicInterval t, DyadicInterval f) : time(t), freq(f) {
    if (t.scale + f.scale != 0) throw std::invalid_argument("tile area must be one");
  }
  bool operator==(const Tile& o) const = default;
  auto operator<=>(const Tile& o) const = default;
};

/// Dyadic time-frequency rectangle of area two; splits into a lower and an
/// upper tile along the frequency midline.
struct Bitile {
  DyadicInterval time;  // I_P, scale i
  DyadicInterval freq;  // omega_P, scale -i+1

  Bitile(DyadicInterval t, DyadicInterval f) : time(t), freq(f) {
    if (t.scale + f.scale != 1) throw std::invalid_argument("bitile area must be two");
  }
  Tile lowerTile() const { return Tile(time, freq.leftChild()); }   // P_1
  Tile upperTile() const { return Tile(time, freq.rightChild()); }  // P_2
  DyadicInterval lowerFreq() const { return freq.leftChild(); }     // omega_{P,1}
  DyadicInterval upperFreq() const { return freq.rightChild(); }    // omega_{P,2}

  bool operator==(const Bitile& o) const = default;
  auto operator<=>(const Bitile& o) const = default;
};

enum class TreeKind { General, OneTree, TwoTree };

/// A top (I_T, xi_T) together with the bitiles that point at it:
/// I_P inside I_T and xi_T inside omega_P (inside omega_{P,i} for an i-tree).
struct Tree {
  DyadicInterval top;   // I_T
  DyadicPoint topFreq;  // xi_T, a grid frequency point
  std::vector<Bitile> bitiles;
  TreeKind kind = TreeKind::General;
};

struct Forest {
  std::vector<Tree> trees;
};

// P <= Q iff I_P inside I_Q and omega_Q inside omega_P
template <class A, class B>
bool tileLe(const A& p, const B& q) {
  return q.time.contains(p.time) && p.freq.contains(q.freq);
}

// does P satisfy the membership condition for a tree of the given kind?
bool treeAccepts(const Tree& t, const Bitile& p);
// throws std::invalid_argument when some bitile violates tree membership
void validateTree(const Tree& t);

/// Walsh wave packet w_P = 2^(-i/2) W_l(2^-i x - n) as a grid step function;
/// equivalently |I_P|^(-1/2) 1_{I_P}(x) e(x (x) leftEndpoint(omega_P)).
StepFunction wavePacket(const Tile& p, const Grid& grid);

// <f, w_{P_1}> for the lower tile of each bitile
double lowerPacketCoefficient(const StepFunction& f, const Bitile& p);

// number of trees, with multiplicity, whose top time interval contains x
int countingFunction(const Forest& forest, const DyadicPoint& x);
// the same per grid cell, as an integer-valued step function
StepFunction countingFunctionField(const Forest& forest, const Grid& grid);

struct IdentityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Verifies e(xi (x) x) w_{P_1}(x) = eps h_{I_P}(x) on the grid for
/// xi in omega_{P,2} and returns the sign eps. The identity failing means
/// an implementation bug, never expected input.
int modulatedHaarCheck(const Bitile& p, const DyadicPoint& xi, const Grid& grid);

// all bitiles that fit the grid: time scales 1-k .. j, freq inside [0, 2^k)
std::vector<Bitile> allGridBitiles(const Grid& grid);
bool bitileFits(const Bitile& p, const Grid& grid);

// line-oriented text format: one bitile per line, "i_time m_time i_freq m_freq"
void writeBitiles(std::ostream& os, const std::vector<Bitile>& tiles);
std::vector<Bitile> readBitiles(std::istream& is);

// forest text format: per tree a header "top: i m xi_num xi_den kind"
// followed by that tree's bitile lines
void writeForest(std::ostream& os, const Forest& forest);
Forest readForest(std::istream& is);

}  // namespace walshtf

#endif
