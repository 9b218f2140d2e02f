#include "tqc/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqc {

namespace {

const char* axis_name(Axis a) {
    switch (a) {
        case Axis::W: return "w";
        case Axis::H: return "h";
        default: return "t";
    }
}

}  // namespace

std::string Direction::str() const {
    std::string s = sign >= 0 ? "+" : "-";
    s += axis_name(axis);
    return s;
}

std::string Coord::str() const {
    return std::to_string(w) + "," + std::to_string(h) + "," + std::to_string(t);
}

Coord offset(Coord c, Direction d, int steps) {
    c[d.axis] += d.sign * steps;
    return c;
}

int manhattan(Coord a, Coord b) {
    return std::abs(a.w - b.w) + std::abs(a.h - b.h) + std::abs(a.t - b.t);
}

bool out_less(const Coord& a, const Coord& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.h != b.h) return a.h < b.h;
    return a.w < b.w;
}

PositionClass parity_class(Coord c) {
    int evens = (c.w % 2 == 0) + (c.h % 2 == 0) + (c.t % 2 == 0);
    switch (evens) {
        case 0: return PositionClass::PrimalCenter;
        case 1: return PositionClass::PrimalFace;
        case 2: return PositionClass::DualFace;
        default: return PositionClass::DualCenter;
    }
}

bool is_qubit_class(PositionClass c) {
    return c == PositionClass::PrimalFace || c == PositionClass::DualFace;
}

bool is_center_class(PositionClass c) {
    return c == PositionClass::PrimalCenter || c == PositionClass::DualCenter;
}

PositionClass center_class(Layer l) {
    return l == Layer::Primal ? PositionClass::PrimalCenter : PositionClass::DualCenter;
}

PositionClass face_class(Layer l) {
    return l == Layer::Primal ? PositionClass::PrimalFace : PositionClass::DualFace;
}

PositionClass side_class(Layer l) {
    // Side qubits of one layer are face qubits of the other.
    return face_class(opposite(l));
}

const char* to_string(PositionClass c) {
    switch (c) {
        case PositionClass::PrimalCenter: return "primal-center";
        case PositionClass::PrimalFace: return "primal-face";
        case PositionClass::DualFace: return "dual-face";
        default: return "dual-center";
    }
}

const char* to_string(Layer l) {
    return l == Layer::Primal ? "primal" : "dual";
}

Layer opposite(Layer l) {
    return l == Layer::Primal ? Layer::Dual : Layer::Primal;
}

std::int64_t total_positions(const LatticeSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("lattice spec must have positive cell counts");
    return std::int64_t(2 * spec.mc_w + 2) * (2 * spec.mc_h + 2) * (2 * spec.mc_t + 2);
}

Lattice::Lattice(LatticeSpec spec) : spec_(spec) {
    if (!spec_.valid()) throw std::invalid_argument("lattice spec must have positive cell counts");
    size_ = {2 * spec_.mc_w + 2, 2 * spec_.mc_h + 2, 2 * spec_.mc_t + 2};
}

bool Lattice::contains(Coord c) const {
    for (Axis a : kAxes) {
        if (c[a] < 0 || c[a] >= size(a)) return false;
    }
    return true;
}

PositionClass Lattice::classify(Coord c) const {
    if (!contains(c)) throw std::out_of_range("coordinate " + c.str() + " outside lattice");
    return parity_class(c);
}

bool Lattice::cell_interior(Coord cc) const {
    for (Axis a : kAxes) {
        if (cc[a] < 1 || cc[a] > size(a) - 2) return false;
    }
    return true;
}

CoordSet Lattice::face_qubits(Coord cc) const {
    if (!is_center_class(classify(cc)))
        throw std::invalid_argument("face_qubits: " + cc.str() + " is not a cell center");
    CoordSet out;
    for (Axis a : kAxes) {
        for (int s : {-1, 1}) {
            Coord q = offset(cc, {a, s});
            if (!contains(q))
                throw std::out_of_range("face qubit " + q.str() + " outside lattice");
            out.insert(q);
        }
    }
    return out;
}

CoordSet Lattice::side_qubits(Coord cc) const {
    if (!is_center_class(classify(cc)))
        throw std::invalid_argument("side_qubits: " + cc.str() + " is not a cell center");
    CoordSet out;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int si : {-1, 1}) {
                for (int sj : {-1, 1}) {
                    Coord q = cc;
                    q[kAxes[i]] += si;
                    q[kAxes[j]] += sj;
                    if (!contains(q))
                        throw std::out_of_range("side qubit " + q.str() + " outside lattice");
                    out.insert(q);
                }
            }
        }
    }
    return out;
}

std::array<Coord, 2> Lattice::axis_face_pair(Coord cc, Axis a) const {
    if (!is_center_class(classify(cc)))
        throw std::invalid_argument("axis_face_pair: " + cc.str() + " is not a cell center");
    Coord lo = offset(cc, {a, -1});
    Coord hi = offset(cc, {a, 1});
    if (!contains(lo) || !contains(hi))
        throw std::out_of_range("face pair of " + cc.str() + " outside lattice");
    return {lo, hi};
}

CoordSet Lattice::entangled_neighbors(Coord q) const {
    if (!is_qubit(q))
        throw std::invalid_argument("entangled_neighbors: " + q.str() + " is not a qubit position");
    CoordSet out;
    for (Axis a : kAxes) {
        for (int s : {-1, 1}) {
            Coord n = offset(q, {a, s});
            if (contains(n) && is_qubit_class(parity_class(n))) out.insert(n);
        }
    }
    return out;
}

std::vector<Coord> Lattice::all_qubits() const {
    std::vector<Coord> out;
    for (int t = 0; t < size(Axis::T); ++t) {
        for (int h = 0; h < size(Axis::H); ++h) {
            for (int w = 0; w < size(Axis::W); ++w) {
                Coord c{w, h, t};
                if (is_qubit_class(parity_class(c))) out.push_back(c);
            }
        }
    }
    return out;
}

std::vector<Coord> cells_on_segment(Coord b, Coord e) {
    if (b == e) throw std::invalid_argument("zero-length segment at " + b.str());
    PositionClass cb = parity_class(b);
    PositionClass ce = parity_class(e);
    if (!is_center_class(cb) || cb != ce)
        throw std::invalid_argument("segment " + b.str() + " -> " + e.str() +
                                    " endpoints must be cell centers of one class");
    Direction d = segment_direction(b, e);
    std::vector<Coord> cells;
    for (Coord c = b;; c = offset(c, d, 2)) {
        cells.push_back(c);
        if (c == e) break;
    }
    return cells;
}

Direction segment_direction(Coord b, Coord e) {
    Coord diff = e - b;
    int nonzero = (diff.w != 0) + (diff.h != 0) + (diff.t != 0);
    if (nonzero == 0) throw std::invalid_argument("degenerate segment at " + b.str());
    if (nonzero != 1)
        throw std::invalid_argument("segment " + b.str() + " -> " + e.str() + " is not axis-aligned");
    for (Axis a : kAxes) {
        if (diff[a] != 0) return {a, diff[a] > 0 ? 1 : -1};
    }
    throw std::logic_error("unreachable");
}

CoordSet set_xor(const CoordSet& a, const CoordSet& b) {
    CoordSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.end()));
    return out;
}

}  // namespace tqc
