#include "capdual/io.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

namespace capdual {

std::vector<std::vector<long>> parse_complex_lines(std::istream& in) {
    std::vector<std::vector<long>> tops;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<long> tuple;
        long v;
        while (ls >> v) {
            require(v >= 0, ErrorCode::ParseError,
                    "negative vertex index on line " + std::to_string(lineno));
            tuple.push_back(v);
        }
        std::string rest;
        ls.clear();
        if (ls >> rest)
            fail(ErrorCode::ParseError, "unexpected token on line " + std::to_string(lineno));
        if (!tuple.empty()) tops.push_back(std::move(tuple));
    }
    return tops;
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::FileMissing, "cannot open complex file " + path);
    auto tops = parse_complex_lines(in);
    require(!tops.empty(), ErrorCode::ParseError, "no simplices in " + path);
    return build_complex(tops);
}

Cochain load_cocycle_file(const SimplicialComplex& k, const std::string& path, Ring ring) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::FileMissing, "cannot open cocycle file " + path);
    require(k.dim >= 1, ErrorCode::DegreeMismatch, "cocycle on a complex without edges");

    std::map<long, int> dense;
    for (size_t i = 0; i < k.vertex_labels.size(); ++i)
        dense[k.vertex_labels[i]] = static_cast<int>(i);

    Cochain phi;
    phi.degree = 1;
    phi.ring = ring;
    phi.values = VecZ::Zero(k.count(1));

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long u, v;
        std::string value;
        require(static_cast<bool>(ls >> u >> v >> value), ErrorCode::ParseError,
                "expected 'u v value' on line " + std::to_string(lineno));
        auto iu = dense.find(u), iv = dense.find(v);
        require(iu != dense.end() && iv != dense.end(), ErrorCode::ParseError,
                "unknown vertex on line " + std::to_string(lineno));
        require(iu->second != iv->second, ErrorCode::ParseError,
                "degenerate edge on line " + std::to_string(lineno));
        Simplex e = {std::min(iu->second, iv->second), std::max(iu->second, iv->second)};
        Index ei = k.index_of(1, e);
        require(ei >= 0, ErrorCode::ParseError,
                "edge not in complex on line " + std::to_string(lineno));
        Int val;
        try {
            val = Int(value);
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::ParseError, "bad integer on line " + std::to_string(lineno));
        }
        // value is oriented from u to v; canonical orientation is min->max
        if (iu->second > iv->second) val = -val;
        if (ring == Ring::Mod2) val = Int(mpz_odd_p(val.get_mpz_t()) ? 1 : 0);
        phi.values(ei) = val;
    }
    require(is_cocycle(k, phi), ErrorCode::NotACocycle, "cochain in " + path + " is not a cocycle");
    return phi;
}

Rat parse_rational(const std::string& text) {
    require(!text.empty(), ErrorCode::ParseError, "empty rational");
    require(text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
                text.find('E') == std::string::npos,
            ErrorCode::ParseError, "floating-point input rejected, use p/q");
    try {
        size_t slash = text.find('/');
        if (slash == std::string::npos) {
            Int p(text);
            return Rat(p);
        }
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        require(q != 0, ErrorCode::ParseError, "zero denominator");
        Rat r(p, q);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
}

std::string rational_string(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::FileMissing, "cannot open " + path);
    uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace capdual

// ---------------------------------------------------------------------------
// report rendering
// ---------------------------------------------------------------------------

namespace capdual {

namespace {

std::string torsion_string(const std::vector<Int>& torsion) {
    if (torsion.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (i) os << ",";
        os << torsion[i];
    }
    return os.str();
}

nlohmann::ordered_json torsion_json(const std::vector<Int>& torsion) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& t : torsion) arr.push_back(t.get_str());
    return arr;
}

}  // namespace

void render_homology_text(std::ostream& out, const HomologyTable& table) {
    const char* what = table.cohomology ? "cohomology" : "homology";
    out << what << " of " << table.complex_name << " over " << ring_name(table.ring) << "\n";
    for (const HomologyGroup& g : table.groups)
        out << "degree " << g.degree << " ring " << ring_name(g.ring) << " betti " << g.betti
            << " torsion " << torsion_string(g.torsion) << "\n";
}

std::string render_homology_json(const HomologyTable& table) {
    nlohmann::ordered_json doc;
    doc["complex"] = table.complex_name;
    doc["kind"] = table.cohomology ? "cohomology" : "homology";
    doc["ring"] = ring_name(table.ring);
    auto rows = nlohmann::ordered_json::array();
    for (const HomologyGroup& g : table.groups) {
        nlohmann::ordered_json row;
        row["degree"] = g.degree;
        row["ring"] = ring_name(g.ring);
        row["betti"] = g.betti;
        row["torsion"] = torsion_json(g.torsion);
        rows.push_back(row);
    }
    doc["groups"] = rows;
    return doc.dump(2) + "\n";
}

void render_certificate_text(std::ostream& out, const SimplicialComplex& k,
                             const ManifoldCertificate& cert) {
    out << "dimension " << k.dim << " f-vector";
    for (Index c : k.f_vector()) out << " " << c;
    out << "\n";
    out << "closed_pseudomanifold " << (cert.is_closed_pseudomanifold ? "yes" : "no") << "\n";
    out << "connected " << (cert.is_connected ? "yes" : "no") << "\n";
    out << "orientable " << (cert.orientable ? "yes" : "no") << "\n";
    for (const Diagnostic& d : cert.failures)
        out << "failure dim " << d.dim << " index " << d.index << ": " << d.reason << "\n";
}

std::string render_certificate_json(const SimplicialComplex& k, const ManifoldCertificate& cert) {
    nlohmann::ordered_json doc;
    doc["dimension"] = k.dim;
    doc["f_vector"] = k.f_vector();
    doc["closed_pseudomanifold"] = cert.is_closed_pseudomanifold;
    doc["connected"] = cert.is_connected;
    doc["orientable"] = cert.orientable;
    auto failures = nlohmann::ordered_json::array();
    for (const Diagnostic& d : cert.failures) {
        nlohmann::ordered_json f;
        f["dim"] = d.dim;
        f["index"] = d.index;
        f["reason"] = d.reason;
        failures.push_back(f);
    }
    doc["failures"] = failures;
    return doc.dump(2) + "\n";
}

void render_duality_text(std::ostream& out, const DualityReport& report) {
    out << "duality over " << ring_name(report.ring) << " via " << report.route << "\n";
    for (const auto& row : report.rows) {
        out << "degree " << row.degree << ": betti " << row.source_betti << " torsion "
            << torsion_string(row.source_torsion) << " -> betti " << row.target_betti
            << " torsion " << torsion_string(row.target_torsion);
        if (report.ring == Ring::Integers)
            out << " factors " << torsion_string(row.invariant_factors);
        out << " iso " << (row.iso ? "yes" : "no") << "\n";
    }
    out << "overall " << (report.pass ? "PASS" : "FAIL") << "\n";
}

std::string render_duality_json(const DualityReport& report) {
    nlohmann::ordered_json doc;
    doc["ring"] = ring_name(report.ring);
    doc["route"] = report.route;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["k"] = row.degree;
        r["ring"] = ring_name(report.ring);
        r["source_betti"] = row.source_betti;
        r["source_torsion"] = torsion_json(row.source_torsion);
        r["target_betti"] = row.target_betti;
        r["target_torsion"] = torsion_json(row.target_torsion);
        r["invariant_factors"] = torsion_json(row.invariant_factors);
        r["verdict"] = row.iso;
        rows.push_back(r);
    }
    doc["degrees"] = rows;
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

void render_dual_complex_text(std::ostream& out, const DualComplex& dual,
                              const DualCorrespondence& corr) {
    out << "dual cellulation over " << ring_name(dual.ring) << "\n";
    for (int kk = 0; kk <= dual.n; ++kk)
        out << "degree " << kk << " cells " << dual.cell_count(kk) << "\n";
    out << "epsilon";
    for (int e : corr.epsilon) out << " " << (e > 0 ? "+1" : "-1");
    out << "\n";
    for (int kk = 1; kk <= dual.n; ++kk) {
        out << "incidence " << kk << " (" << dual.incidence[static_cast<size_t>(kk)].rows << "x"
            << dual.incidence[static_cast<size_t>(kk)].cols << ")\n";
        MatZ m = dual.incidence[static_cast<size_t>(kk)].dense();
        for (Index r = 0; r < m.rows(); ++r) {
            for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
            out << "\n";
        }
    }
}

std::string render_dual_complex_json(const DualComplex& dual, const DualCorrespondence& corr) {
    nlohmann::ordered_json doc;
    doc["ring"] = ring_name(dual.ring);
    auto counts = nlohmann::ordered_json::array();
    for (int kk = 0; kk <= dual.n; ++kk) counts.push_back(dual.cell_count(kk));
    doc["cell_counts"] = counts;
    doc["epsilon"] = corr.epsilon;
    auto incidences = nlohmann::ordered_json::array();
    for (int kk = 1; kk <= dual.n; ++kk) {
        MatZ m = dual.incidence[static_cast<size_t>(kk)].dense();
        auto rows = nlohmann::ordered_json::array();
        for (Index r = 0; r < m.rows(); ++r) {
            auto row = nlohmann::ordered_json::array();
            for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
            rows.push_back(row);
        }
        nlohmann::ordered_json entry;
        entry["degree"] = kk;
        entry["matrix"] = rows;
        incidences.push_back(entry);
    }
    doc["incidence"] = incidences;
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// geometry export
// ---------------------------------------------------------------------------

namespace {

/// Exact position of a crossing along its edge, measured from the smaller
/// endpoint: the affine circle map on the edge hits the level at
/// (t + m_e) / w, with m_e recovered from the slot.
Rat crossing_position(Ring ring, const Rat& t, const Int& signed_weight, long slot) {
    if (ring == Ring::Mod2) return t;
    Int m_e = signed_weight > 0 ? Int(slot) : Int(-1 - slot);
    Rat pos = (t + Rat(m_e)) / Rat(signed_weight);
    pos.canonicalize();
    return pos;
}

long vertex_label(const SimplicialComplex& k, int v) { return k.vertex_labels[static_cast<size_t>(v)]; }

}  // namespace

void export_curve(std::ostream& out, const SimplicialComplex& k, const NormalCurve& curve) {
    out << "# level-curve ring " << ring_name(curve.ring) << " t " << rational_string(curve.t)
        << "\n";
    out << "# point <id> edge <u> <v> pos <p/q> sign <s>\n";
    for (Index e = 0; e < k.count(1); ++e) {
        const Simplex& s = k.simplex(1, e);
        long w = curve.edge_weights(e).get_si();
        Int signed_w = curve.edge_weights(e) * curve.crossing_signs[static_cast<size_t>(e)];
        for (long slot = 0; slot < w; ++slot)
            out << "point " << curve.crossing_offset[static_cast<size_t>(e)] + slot << " edge "
                << vertex_label(k, s[0]) << " " << vertex_label(k, s[1]) << " pos "
                << rational_string(crossing_position(curve.ring, curve.t, signed_w, slot))
                << " sign " << (curve.crossing_signs[static_cast<size_t>(e)] >= 0 ? "+" : "-")
                << "\n";
    }
    out << "# arc triangle <a> <b> <c> sheet <m> points <p> <q>\n";
    for (const auto& arc : curve.arcs) {
        const Simplex& tri = k.simplex(2, arc.triangle);
        out << "arc triangle " << vertex_label(k, tri[0]) << " " << vertex_label(k, tri[1]) << " "
            << vertex_label(k, tri[2]) << " sheet " << arc.sheet << " points "
            << curve.crossing_offset[static_cast<size_t>(arc.edge_a)] + arc.slot_a << " "
            << curve.crossing_offset[static_cast<size_t>(arc.edge_b)] + arc.slot_b << "\n";
    }
    std::vector<Index> sizes(static_cast<size_t>(curve.components), 0);
    for (Index comp : curve.arc_component) ++sizes[static_cast<size_t>(comp)];
    for (Index c = 0; c < curve.components; ++c)
        out << "component " << c << " arcs " << sizes[static_cast<size_t>(c)] << "\n";
}

void export_surface(std::ostream& out, const SimplicialComplex& k, const NormalSurface& surface) {
    out << "# level-surface ring " << ring_name(surface.ring) << " t "
        << rational_string(surface.t) << "\n";
    out << "# point <id> edge <u> <v> pos <p/q> sign <s>\n";
    for (Index e = 0; e < k.count(1); ++e) {
        const Simplex& s = k.simplex(1, e);
        long w = surface.edge_weights(e).get_si();
        Int signed_w = surface.edge_weights(e) * surface.crossing_signs[static_cast<size_t>(e)];
        for (long slot = 0; slot < w; ++slot)
            out << "point " << surface.crossing_offset[static_cast<size_t>(e)] + slot << " edge "
                << vertex_label(k, s[0]) << " " << vertex_label(k, s[1]) << " pos "
                << rational_string(crossing_position(surface.ring, surface.t, signed_w, slot))
                << " sign " << (surface.crossing_signs[static_cast<size_t>(e)] >= 0 ? "+" : "-")
                << "\n";
    }
    out << "# patch tet <a> <b> <c> <d> sheet <m> kind tri|quad points ...\n";
    for (const auto& patch : surface.patches) {
        const Simplex& tet = k.simplex(3, patch.tet);
        out << "patch tet";
        for (int v : tet) out << " " << vertex_label(k, v);
        out << " sheet " << patch.sheet << " kind "
            << (patch.kind == NormalSurface::PatchKind::Triangle ? "tri" : "quad") << " points";
        for (const auto& [e, slot] : patch.corners)
            out << " " << surface.crossing_offset[static_cast<size_t>(e)] + slot;
        out << "\n";
    }
}

}  // namespace capdual
