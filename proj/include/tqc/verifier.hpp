#pragma once

#include <string>
#include <vector>

#include "tqc/lattice.hpp"
#include "tqc/tube_mapper.hpp"

namespace tqc {

// Pauli operator tracked at support level; signs are not needed to check
// which qubits carry a correlation surface.
struct PauliOperator {
    CoordSet x_support;
    CoordSet z_support;

    bool identity() const { return x_support.empty() && z_support.empty(); }
    bool operator==(const PauliOperator&) const = default;
};

// X on q, Z on every lattice neighbor q is entangled with.
PauliOperator cluster_stabilizer(const Lattice& lattice, Coord q);

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
PauliOperator multiply(const std::vector<PauliOperator>& ops);

enum class SurfaceKind { Sheet, Tube };

const char* to_string(SurfaceKind k);

struct SurfaceReport {
    bool pass = false;
    std::string qubit_id;
    SurfaceKind kind = SurfaceKind::Sheet;
    std::vector<Coord> violations;
    PauliOperator residual;

    std::string line() const;
};

// Multiplies cluster stabilizers generating the surface and checks that the
// leftover support is explainable by the qubit's own defect and I/O sets.
//  - Sheet: generators are the sheet qubits themselves; the product's Z
//    residue must sit inside D, I and O, and the X part is the sheet.
//  - Tube: generators are all face qubits of the defect cells (whole-cell
//    products are pure X), so the product must equal the tube up to defect
//    and I/O qubits.
SurfaceReport verify_surface(const Lattice& lattice, const CoordSet& surface,
                             const QubitTuple& q, SurfaceKind kind);

struct TupleReport {
    bool pass = false;
    std::string qubit_id;
    std::vector<std::string> violations;

    std::string line() const;
};

// Structural checks: set membership classes, D disjoint from the side-qubit
// class, injection centers on the qubit's own layer.
TupleReport verify_tuple(const Lattice& lattice, const QubitTuple& q);

}  // namespace tqc
