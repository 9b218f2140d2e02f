#include "tqc/emitter.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tqc {

namespace {

std::vector<Coord> out_sorted(const CoordSet& set) {
    std::vector<Coord> v(set.begin(), set.end());
    std::sort(v.begin(), v.end(), out_less);
    return v;
}

std::vector<const QubitTuple*> by_id(const std::vector<QubitTuple>& qubits) {
    std::vector<const QubitTuple*> out;
    for (const QubitTuple& q : qubits) out.push_back(&q);
    std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
    return out;
}

}  // namespace

std::string emit_instructions(const Lattice& lattice, const std::vector<QubitTuple>& qubits) {
    CoordSet all_defect;
    for (const QubitTuple& q : qubits) {
        for (Coord c : q.defect) {
            if (!all_defect.insert(c).second) {
                // Find the owners for the message.
                std::string owners;
                for (const QubitTuple& o : qubits) {
                    if (o.defect.count(c)) owners += (owners.empty() ? "" : ", ") + o.id;
                }
                throw std::invalid_argument("defect sets collide at " + c.str() + " (" + owners +
                                            ")");
            }
        }
    }

    std::map<Coord, std::string> rotated;
    for (const QubitTuple* q : by_id(qubits)) {
        std::vector<InjectionPoint> pts = q->injections;
        std::sort(pts.begin(), pts.end(),
                  [](const InjectionPoint& a, const InjectionPoint& b) {
                      return out_less(a.center, b.center);
                  });
        int idx = 0;
        for (const InjectionPoint& p : pts) {
            rotated[p.designated_qubit()] = q->id + "_j" + std::to_string(idx++);
        }
    }

    std::ostringstream out;
    for (Coord c : lattice.all_qubits()) {
        out << c.w << " " << c.h << " " << c.t << " ";
        auto rz = rotated.find(c);
        if (rz != rotated.end()) {
            out << "RZ:" << rz->second;
        } else if (all_defect.count(c)) {
            out << "Z";
        } else {
            out << "X";
        }
        out << "\n";
    }
    return out.str();
}

std::string emit_tracking(const std::vector<QubitTuple>& qubits) {
    std::ostringstream out;
    for (const QubitTuple* q : by_id(qubits)) {
        out << "qubit " << q->id << " " << to_string(q->layer) << "\n";
        auto emit_set = [&](const char* name, const CoordSet& set) {
            out << name << ":";
            for (Coord c : out_sorted(set)) out << " " << c.str();
            out << "\n";
        };
        emit_set("D", q->defect);
        emit_set("I", q->inputs);
        emit_set("O", q->outputs);
        emit_set("J", q->inject);
        emit_set("X", q->x);
        emit_set("Z", q->z);
    }
    return out.str();
}

std::vector<QubitTuple> parse_tracking(const std::string& text) {
    std::vector<QubitTuple> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "qubit") {
            QubitTuple q;
            std::string layer;
            if (!(ls >> q.id >> layer) || (layer != "primal" && layer != "dual"))
                throw std::runtime_error("tracking line " + std::to_string(lineno) +
                                         ": bad qubit header");
            q.layer = layer == "primal" ? Layer::Primal : Layer::Dual;
            out.push_back(std::move(q));
            continue;
        }
        if (out.empty() || head.size() < 2 || head.back() != ':')
            throw std::runtime_error("tracking line " + std::to_string(lineno) +
                                     ": unexpected content '" + head + "'");
        std::string name = head.substr(0, head.size() - 1);
        CoordSet* target = nullptr;
        QubitTuple& q = out.back();
        if (name == "D") target = &q.defect;
        else if (name == "I") target = &q.inputs;
        else if (name == "O") target = &q.outputs;
        else if (name == "J") target = &q.inject;
        else if (name == "X") target = &q.x;
        else if (name == "Z") target = &q.z;
        else
            throw std::runtime_error("tracking line " + std::to_string(lineno) +
                                     ": unknown set '" + name + "'");
        std::string triple;
        while (ls >> triple) {
            Coord c;
            if (std::sscanf(triple.c_str(), "%d,%d,%d", &c.w, &c.h, &c.t) != 3)
                throw std::runtime_error("tracking line " + std::to_string(lineno) +
                                         ": bad coordinate '" + triple + "'");
            target->insert(c);
        }
    }
    return out;
}

std::string emit_geometry_mesh(const std::vector<QubitTuple>& qubits,
                               const std::vector<std::vector<SubSheet>>& subsheets) {
    if (qubits.size() != subsheets.size())
        throw std::invalid_argument("emit_geometry_mesh: size mismatch");
    std::ostringstream out;
    std::vector<std::size_t> idx(qubits.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return qubits[a].id < qubits[b].id; });
    for (std::size_t i : idx) {
        const QubitTuple& q = qubits[i];
        for (const SubSheet& ss : subsheets[i]) {
            SubSheet n = ss.normalized();
            out << "rect " << q.id << " " << n.ss1.str() << " " << n.ss2.str() << "\n";
        }
        auto points = [&](const char* name, const CoordSet& set) {
            for (Coord c : out_sorted(set)) out << "point " << q.id << " " << name << " "
                                                << c.str() << "\n";
        };
        points("D", q.defect);
        points("I", q.inputs);
        points("O", q.outputs);
        points("J", q.inject);
        points("X", q.x);
        points("Z", q.z);
    }
    return out.str();
}

}  // namespace tqc
