#include "tqc/geometry.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace tqc {

const char* to_string(SegmentType t) {
    switch (t) {
        case SegmentType::Init: return "init";
        case SegmentType::Measure: return "measure";
        case SegmentType::Inject: return "inject";
        default: return "defect";
    }
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based start column
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_int(const Token& tok, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok.text, &pos);
        if (pos != tok.text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, tok.column, "expected integer, got '" + tok.text + "'");
    }
}

Coord parse_coord(const Token& tok, int line) {
    Coord c;
    int parts = 0;
    std::string cur;
    std::string text = tok.text + ",";
    for (char ch : text) {
        if (ch == ',') {
            if (cur.empty() || parts >= 3)
                throw ParseError(line, tok.column, "expected coordinate 'w,h,t', got '" + tok.text + "'");
            try {
                std::size_t pos = 0;
                int v = std::stoi(cur, &pos);
                if (pos != cur.size()) throw std::invalid_argument("");
                c[kAxes[parts]] = v;
            } catch (...) {
                throw ParseError(line, tok.column, "bad coordinate component '" + cur + "'");
            }
            ++parts;
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (parts != 3)
        throw ParseError(line, tok.column, "expected coordinate 'w,h,t', got '" + tok.text + "'");
    return c;
}

SegmentType parse_type(const Token& tok, int line) {
    if (tok.text == "defect") return SegmentType::Defect;
    if (tok.text == "init") return SegmentType::Init;
    if (tok.text == "measure") return SegmentType::Measure;
    if (tok.text == "inject") return SegmentType::Inject;
    throw ParseError(line, tok.column, "unknown segment type '" + tok.text + "'");
}

// Line number each qubit was declared on, for diagnostics.
struct QubitLines {
    int declared = 0;
    std::vector<int> segment_lines;
};

void validate_qubit(const Lattice& lattice, const LogicalQubitGeometry& q,
                    const QubitLines* lines) {
    auto fail = [&](int idx, const std::string& msg) -> void {
        int line = 0;
        if (lines != nullptr) {
            line = idx < 0 ? lines->declared
                           : lines->segment_lines[static_cast<std::size_t>(idx)];
        }
        if (line > 0) throw ParseError(line, 1, "qubit '" + q.id + "': " + msg);
        throw std::invalid_argument("qubit '" + q.id + "': " + msg);
    };

    if (q.segments.empty()) fail(-1, "has no segments");
    PositionClass centers = center_class(q.layer);

    for (std::size_t i = 0; i < q.segments.size(); ++i) {
        const Segment& s = q.segments[i];
        int idx = static_cast<int>(i);
        for (Coord c : {s.begin, s.end}) {
            if (!lattice.contains(c)) fail(idx, "coordinate " + c.str() + " out of bounds");
            if (parity_class(c) != centers)
                fail(idx, "coordinate " + c.str() + " is not a " +
                              std::string(to_string(q.layer)) + " cell center");
        }
        if (s.begin == s.end) fail(idx, "zero-length segment at " + s.begin.str());
        Coord diff = s.end - s.begin;
        int nonzero = (diff.w != 0) + (diff.h != 0) + (diff.t != 0);
        if (nonzero != 1)
            fail(idx, "segment " + s.begin.str() + " -> " + s.end.str() + " is not axis-aligned");
        if (s.type == SegmentType::Inject) {
            Direction d = s.type == SegmentType::Inject ? segment_direction(s.begin, s.end)
                                                        : Direction{};
            (void)d;
            int len = manhattan(s.begin, s.end);
            if (len % 4 != 0)
                fail(idx, "inject segment length " + std::to_string(len) +
                              " must be a multiple of 4 so the midpoint is a center");
        }
        // Every cell touched by the segment must have its full qubit
        // neighborhood inside the lattice.
        for (Coord cc : cells_on_segment(s.begin, s.end)) {
            if (!lattice.cell_interior(cc))
                fail(idx, "cell " + cc.str() + " too close to the lattice boundary");
        }
    }

    for (std::size_t i = 0; i < q.segments.size(); ++i) {
        const Segment& s = q.segments[i];
        const Segment& n = q.segments[(i + 1) % q.segments.size()];
        if (s.end != n.begin)
            fail(static_cast<int>(i),
                 "open cycle: segment ends at " + s.end.str() + " but next begins at " +
                     n.begin.str());
        if (offset(s.end, segment_direction(n.begin, n.end), manhattan(n.begin, n.end)) ==
                n.end &&
            segment_direction(s.begin, s.end) == -segment_direction(n.begin, n.end))
            fail(static_cast<int>(i), "segment at " + s.end.str() + " reverses onto itself");
    }

    // Distinct pivot coordinates, even pivot count.
    std::vector<Coord> pivots;
    std::vector<Direction> dirs;
    for (const Segment& s : q.segments) dirs.push_back(s.direction());
    for (std::size_t i = 0; i < q.segments.size(); ++i) {
        std::size_t prev = (i + q.segments.size() - 1) % q.segments.size();
        if (dirs[prev].axis != dirs[i].axis) pivots.push_back(q.segments[i].begin);
    }
    if (pivots.size() < 4) fail(-1, "cycle must have at least 4 pivots");
    if (pivots.size() % 2 != 0)
        fail(-1, "cycle has odd pivot count " + std::to_string(pivots.size()));
    std::vector<Coord> sorted = pivots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(-1, "cycle revisits a pivot coordinate");
}

}  // namespace

void validate_geometry(const GeometryDoc& doc) {
    Lattice lattice(doc.lattice);
    std::set<std::string> ids;
    for (const LogicalQubitGeometry& q : doc.qubits) {
        if (!ids.insert(q.id).second)
            throw std::invalid_argument("duplicate qubit id '" + q.id + "'");
        validate_qubit(lattice, q, nullptr);
    }
}

GeometryDoc parse_geometry(const std::string& text) {
    GeometryDoc doc;
    bool have_lattice = false;
    std::map<std::string, std::size_t> index;
    std::map<std::string, QubitLines> lines;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (kw == "lattice") {
            if (have_lattice) throw ParseError(lineno, toks[0].column, "duplicate lattice line");
            if (toks.size() != 4)
                throw ParseError(lineno, toks[0].column, "expected: lattice <mc_w> <mc_h> <mc_t>");
            doc.lattice = {parse_int(toks[1], lineno), parse_int(toks[2], lineno),
                           parse_int(toks[3], lineno)};
            if (!doc.lattice.valid())
                throw ParseError(lineno, toks[1].column, "lattice cell counts must be positive");
            have_lattice = true;
        } else if (kw == "logical") {
            if (!have_lattice) throw ParseError(lineno, toks[0].column, "lattice line must come first");
            if (toks.size() != 3)
                throw ParseError(lineno, toks[0].column, "expected: logical <id> <primal|dual>");
            const std::string& id = toks[1].text;
            if (index.count(id))
                throw ParseError(lineno, toks[1].column, "duplicate qubit id '" + id + "'");
            Layer layer;
            if (toks[2].text == "primal") {
                layer = Layer::Primal;
            } else if (toks[2].text == "dual") {
                layer = Layer::Dual;
            } else {
                throw ParseError(lineno, toks[2].column,
                                 "layer must be 'primal' or 'dual', got '" + toks[2].text + "'");
            }
            index[id] = doc.qubits.size();
            doc.qubits.push_back({id, layer, {}});
            lines[id].declared = lineno;
        } else if (kw == "segment") {
            if (toks.size() != 5)
                throw ParseError(lineno, toks[0].column,
                                 "expected: segment <id> <type> <w,h,t> <w,h,t>");
            auto it = index.find(toks[1].text);
            if (it == index.end())
                throw ParseError(lineno, toks[1].column,
                                 "segment for undeclared qubit '" + toks[1].text + "'");
            Segment seg;
            seg.type = parse_type(toks[2], lineno);
            seg.begin = parse_coord(toks[3], lineno);
            seg.end = parse_coord(toks[4], lineno);
            doc.qubits[it->second].segments.push_back(seg);
            lines[toks[1].text].segment_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, toks[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!have_lattice) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing lattice line");

    // Keep qubits in deterministic id order; remember diagnostics order.
    std::vector<LogicalQubitGeometry> sorted = doc.qubits;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    doc.qubits = std::move(sorted);

    Lattice lattice(doc.lattice);
    for (const LogicalQubitGeometry& q : doc.qubits) {
        validate_qubit(lattice, q, &lines.at(q.id));
    }
    return doc;
}

std::string serialize_geometry(const GeometryDoc& doc) {
    std::ostringstream out;
    out << "lattice " << doc.lattice.mc_w << " " << doc.lattice.mc_h << " " << doc.lattice.mc_t
        << "\n";
    std::vector<const LogicalQubitGeometry*> qubits;
    for (const auto& q : doc.qubits) qubits.push_back(&q);
    std::sort(qubits.begin(), qubits.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });
    for (const auto* q : qubits) {
        out << "logical " << q->id << " " << to_string(q->layer) << "\n";
        for (const Segment& s : q->segments) {
            out << "segment " << q->id << " " << to_string(s.type) << " " << s.begin.str() << " "
                << s.end.str() << "\n";
        }
    }
    return out.str();
}

int pivot_count(const LogicalQubitGeometry& q) {
    int count = 0;
    std::size_t n = q.segments.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t prev = (i + n - 1) % n;
        if (q.segments[prev].direction().axis != q.segments[i].direction().axis) ++count;
    }
    return count;
}

}  // namespace tqc
