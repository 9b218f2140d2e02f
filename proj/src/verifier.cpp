#include "tqc/verifier.hpp"

#include <algorithm>
#include <sstream>

namespace tqc {

PauliOperator cluster_stabilizer(const Lattice& lattice, Coord q) {
    PauliOperator op;
    op.x_support.insert(q);
    op.z_support = lattice.entangled_neighbors(q);
    return op;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    return {set_xor(a.x_support, b.x_support), set_xor(a.z_support, b.z_support)};
}

PauliOperator multiply(const std::vector<PauliOperator>& ops) {
    PauliOperator acc;
    for (const PauliOperator& op : ops) acc = multiply(acc, op);
    return acc;
}

const char* to_string(SurfaceKind k) {
    return k == SurfaceKind::Sheet ? "sheet" : "tube";
}

std::string SurfaceReport::line() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << " " << qubit_id << " " << to_string(kind);
    if (!pass) {
        for (const Coord& c : violations) out << " " << c.str();
    }
    return out.str();
}

namespace {

void collect_violations(const CoordSet& set, const CoordSet& allowed, std::vector<Coord>& out) {
    for (const Coord& c : set) {
        if (!allowed.count(c)) out.push_back(c);
    }
}

}  // namespace

SurfaceReport verify_surface(const Lattice& lattice, const CoordSet& surface, const QubitTuple& q,
                             SurfaceKind kind) {
    SurfaceReport rep;
    rep.qubit_id = q.id;
    rep.kind = kind;

    CoordSet allowed = q.defect;
    allowed.insert(q.inputs.begin(), q.inputs.end());
    allowed.insert(q.outputs.begin(), q.outputs.end());

    PauliOperator product;
    if (kind == SurfaceKind::Sheet) {
        for (Coord s : surface) product = multiply(product, cluster_stabilizer(lattice, s));
        rep.residual = product;
        // X part of the product stays on the sheet; Z must land on the
        // qubit's defect or I/O chains.
        collect_violations(product.x_support, surface, rep.violations);
        collect_violations(product.z_support, allowed, rep.violations);
    } else {
        for (Coord cc : q.defect_cells) {
            for (Coord f : lattice.face_qubits(cc))
                product = multiply(product, cluster_stabilizer(lattice, f));
        }
        rep.residual = product;
        // Whole-cell products are pure X; the shell they trace must match the
        // tube except on defect-internal and I/O qubits.
        collect_violations(product.z_support, allowed, rep.violations);
        collect_violations(set_xor(product.x_support, surface), allowed, rep.violations);
    }

    std::sort(rep.violations.begin(), rep.violations.end());
    rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                         rep.violations.end());
    rep.pass = rep.violations.empty();
    return rep;
}

std::string TupleReport::line() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << " " << qubit_id << " tuple";
    for (const std::string& v : violations) out << " " << v;
    return out.str();
}

TupleReport verify_tuple(const Lattice& lattice, const QubitTuple& q) {
    TupleReport rep;
    rep.qubit_id = q.id;

    PositionClass faces = face_class(q.layer);
    PositionClass sides = side_class(q.layer);
    PositionClass centers = center_class(q.layer);

    auto check_class = [&](const CoordSet& set, PositionClass want, const std::string& name) {
        for (Coord c : set) {
            if (!lattice.contains(c)) {
                rep.violations.push_back(name + " " + c.str() + " out of bounds");
            } else if (parity_class(c) != want) {
                rep.violations.push_back(name + " " + c.str() + " is " +
                                         to_string(parity_class(c)) + ", expected " +
                                         to_string(want));
            }
        }
    };

    check_class(q.defect, faces, "D");
    check_class(q.inputs, faces, "I");
    check_class(q.outputs, faces, "O");
    check_class(q.tube(), faces, "tube");
    check_class(q.sheet(), sides, "sheet");
    check_class(q.inject, centers, "J");
    check_class(q.defect_cells, centers, "cell");

    for (Coord c : q.defect) {
        if (lattice.contains(c) && parity_class(c) == sides) {
            rep.violations.push_back("D-side-overlap " + c.str());
        }
    }

    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace tqc
