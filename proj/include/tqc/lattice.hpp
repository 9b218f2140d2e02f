#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace tqc {

enum class Axis : int { W = 0, H = 1, T = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::W, Axis::H, Axis::T};

// Signed lattice direction, one of {+w, -w, +h, -h, +t, -t}.
struct Direction {
    Axis axis = Axis::W;
    int sign = 1;

    Direction operator-() const { return {axis, -sign}; }
    bool operator==(const Direction&) const = default;
    std::string str() const;
};

// Integer position on the raw lattice grid. Cell centers are 2 units apart;
// the positions in between hold the physical qubits.
struct Coord {
    int w = 0;
    int h = 0;
    int t = 0;

    int operator[](Axis a) const {
        switch (a) {
            case Axis::W: return w;
            case Axis::H: return h;
            default: return t;
        }
    }
    int& operator[](Axis a) {
        switch (a) {
            case Axis::W: return w;
            case Axis::H: return h;
            default: return t;
        }
    }

    Coord operator+(const Coord& o) const { return {w + o.w, h + o.h, t + o.t}; }
    Coord operator-(const Coord& o) const { return {w - o.w, h - o.h, t - o.t}; }
    auto operator<=>(const Coord&) const = default;

    std::string str() const;
};

using CoordSet = std::set<Coord>;

Coord offset(Coord c, Direction d, int steps = 1);
int manhattan(Coord a, Coord b);

// Ordering used for emitted artifacts: sort by (t, h, w).
bool out_less(const Coord& a, const Coord& b);

// Parity classification of a position. Counting even components:
// 0 -> primal cell center, 1 -> primal face qubit (= dual side),
// 2 -> dual face qubit (= primal side), 3 -> dual cell center.
enum class PositionClass { PrimalCenter, PrimalFace, DualFace, DualCenter };

enum class Layer { Primal, Dual };

PositionClass parity_class(Coord c);
bool is_qubit_class(PositionClass c);
bool is_center_class(PositionClass c);

PositionClass center_class(Layer l);
PositionClass face_class(Layer l);
PositionClass side_class(Layer l);

const char* to_string(PositionClass c);
const char* to_string(Layer l);
Layer opposite(Layer l);

// Unit-cell counts along each axis.
struct LatticeSpec {
    int mc_w = 0;
    int mc_h = 0;
    int mc_t = 0;

    bool operator==(const LatticeSpec&) const = default;
    bool valid() const { return mc_w > 0 && mc_h > 0 && mc_t > 0; }
};

// Number of positions in the grid: neighboring cells share a side, so each
// axis contributes 2*mc + 2 positions.
std::int64_t total_positions(const LatticeSpec& spec);

class Lattice {
public:
    explicit Lattice(LatticeSpec spec);

    const LatticeSpec& spec() const { return spec_; }
    int size(Axis a) const { return size_[static_cast<int>(a)]; }
    bool contains(Coord c) const;

    // Throws if out of bounds.
    PositionClass classify(Coord c) const;
    bool is_qubit(Coord c) const { return is_qubit_class(classify(c)); }

    // A cell is interior when all 18 of its qubits are in bounds.
    bool cell_interior(Coord cc) const;

    // The 6 face qubits of a cell: cc +- 1 along each single axis.
    CoordSet face_qubits(Coord cc) const;
    // The 12 side qubits: cc +- 1 along two distinct axes.
    CoordSet side_qubits(Coord cc) const;
    // The two face qubits of cc along a given axis.
    std::array<Coord, 2> axis_face_pair(Coord cc, Axis a) const;

    // In-bounds qubit positions at Manhattan distance 1 (boundary clips).
    CoordSet entangled_neighbors(Coord q) const;

    // Enumerate all qubit positions, sorted by out_less.
    std::vector<Coord> all_qubits() const;

private:
    LatticeSpec spec_;
    std::array<int, 3> size_;
};

// Cell centers [b, b+2d, ..., e] inclusive. Throws on class mismatch,
// non-axis-aligned or zero-length spans.
std::vector<Coord> cells_on_segment(Coord b, Coord e);

// Signed axis of e - b; throws if b == e or the pair is not axis-aligned.
Direction segment_direction(Coord b, Coord e);

CoordSet set_xor(const CoordSet& a, const CoordSet& b);

}  // namespace tqc
