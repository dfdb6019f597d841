#include "avb/io.hpp"

#include "avb/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace avb::io {

namespace {

std::string mat_fields(const RatMat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (!out.empty()) out += ' ';
            out += format_rat(m(i, j));
        }
    return out;
}

std::string vec_fields(const RatVec& v) {
    std::string out;
    for (const auto& x : v) {
        if (!out.empty()) out += ' ';
        out += format_rat(x);
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

RatMat mat_from_fields(const std::vector<std::string>& f, std::size_t n,
                       const char* what) {
    if (f.size() != n * n)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(n * n) + " entries, got " +
                                    std::to_string(f.size()));
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_rat(f[i * n + j]);
    return m;
}

std::string format_p(double p) {
    if (std::isinf(p)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

}  // namespace

std::string to_text(const bundles::AdelicBundle& b) {
    std::string out = "rank: " + std::to_string(b.n) + "\n";
    out += "finite.matrix: " + mat_fields(b.finite.A) + "\n";
    if (b.hermitian()) {
        out += "arch.kind: gram\n";
        out += "arch.gram: " + mat_fields(b.arch.G) + "\n";
        return out;
    }
    const auto& c = *b.arch.body;
    using convex::RepKind;
    switch (c.kind) {
        case RepKind::LpBall:
            out += "arch.kind: lp\n";
            out += "arch.p: " + format_p(c.p) + "\n";
            break;
        case RepKind::HPoly:
            out += "arch.kind: hpoly\n";
            for (const auto& f : c.facets)
                out += "arch.facet: " + format_rat(f.offset) + " " + vec_fields(f.normal) +
                       "\n";
            break;
        case RepKind::VPoly:
            out += "arch.kind: vpoly\n";
            for (const auto& v : c.vertices) out += "arch.vertex: " + vec_fields(v) + "\n";
            break;
        case RepKind::Ellipsoid:
            out += "arch.kind: ellipsoid\n";
            out += "arch.gram: " + mat_fields(c.Q) + "\n";
            break;
    }
    return out;
}

bundles::AdelicBundle parse_bundle(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t n = 0;
    bool have_rank = false, have_a = false;
    RatMat a;
    std::string kind;
    RatMat gram;
    bool have_gram = false;
    double p = 0.0;
    bool have_p = false;
    std::vector<convex::Facet> facets;
    std::vector<RatVec> vertices;

    while (std::getline(is, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (!split_fields(line).empty())
                throw std::invalid_argument("bundle parse: malformed line: " + line);
            continue;
        }
        std::string key = line.substr(0, colon);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        auto fields = split_fields(line.substr(colon + 1));
        if (key == "rank") {
            if (fields.size() != 1) throw std::invalid_argument("bundle parse: rank");
            n = std::stoul(fields[0]);
            if (n == 0) throw std::invalid_argument("bundle parse: rank must be >= 1");
            have_rank = true;
        } else if (key == "finite.matrix") {
            if (!have_rank) throw std::invalid_argument("bundle parse: rank must come first");
            a = mat_from_fields(fields, n, "finite.matrix");
            have_a = true;
        } else if (key == "arch.kind") {
            if (fields.size() != 1) throw std::invalid_argument("bundle parse: arch.kind");
            kind = fields[0];
        } else if (key == "arch.gram") {
            if (!have_rank) throw std::invalid_argument("bundle parse: rank must come first");
            gram = mat_from_fields(fields, n, "arch.gram");
            have_gram = true;
        } else if (key == "arch.p") {
            if (fields.size() != 1) throw std::invalid_argument("bundle parse: arch.p");
            p = fields[0] == "inf" ? convex::inf_p : std::stod(fields[0]);
            have_p = true;
        } else if (key == "arch.facet") {
            if (!have_rank || fields.size() != n + 1)
                throw std::invalid_argument("bundle parse: arch.facet");
            convex::Facet f;
            f.offset = parse_rat(fields[0]);
            for (std::size_t i = 0; i < n; ++i) f.normal.push_back(parse_rat(fields[i + 1]));
            facets.push_back(std::move(f));
        } else if (key == "arch.vertex") {
            if (!have_rank || fields.size() != n)
                throw std::invalid_argument("bundle parse: arch.vertex");
            RatVec v;
            for (const auto& s : fields) v.push_back(parse_rat(s));
            vertices.push_back(std::move(v));
        } else {
            throw std::invalid_argument("bundle parse: unknown key: " + key);
        }
    }
    if (!have_rank || !have_a || kind.empty())
        throw std::invalid_argument("bundle parse: rank, finite.matrix and arch.kind required");

    using bundles::AdelicBundle;
    if (kind == "gram") {
        if (!have_gram) throw std::invalid_argument("bundle parse: arch.gram required");
        return AdelicBundle::with_gram(std::move(a), std::move(gram));
    }
    if (kind == "lp") {
        if (!have_p) throw std::invalid_argument("bundle parse: arch.p required");
        return AdelicBundle::with_body(std::move(a), convex::ConvexBody::lp_ball(n, p));
    }
    if (kind == "hpoly") {
        if (facets.empty()) throw std::invalid_argument("bundle parse: arch.facet required");
        return AdelicBundle::with_body(std::move(a),
                                       convex::ConvexBody::hpoly(n, std::move(facets)));
    }
    if (kind == "vpoly") {
        if (vertices.empty()) throw std::invalid_argument("bundle parse: arch.vertex required");
        return AdelicBundle::with_body(std::move(a),
                                       convex::ConvexBody::vpoly(n, std::move(vertices)));
    }
    if (kind == "ellipsoid") {
        if (!have_gram) throw std::invalid_argument("bundle parse: arch.gram required");
        return AdelicBundle::with_body(std::move(a),
                                       convex::ConvexBody::ellipsoid(std::move(gram)));
    }
    throw std::invalid_argument("bundle parse: unknown arch.kind: " + kind);
}

bundles::AdelicBundle load_bundle(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open bundle file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_bundle(ss.str());
}

std::string polygon_csv(const slopes::CanonicalPolygon& pg) {
    std::string out = "rank,value\n";
    for (std::size_t r = 0; r <= pg.n; ++r)
        out += std::to_string(r) + "," + fmt12(pg.vertices[r]) + "\n";
    return out;
}

std::string polygon_svg(const slopes::CanonicalPolygon& pg) {
    const double w = 480, h = 320, ml = 60, mr = 20, mt = 20, mb = 50;
    double lo = 0, hi = 0;
    for (double v : pg.vertices) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi - lo < 1e-12) hi = lo + 1.0;
    auto px = [&](double r) { return ml + r / double(pg.n) * (w - ml - mr); };
    auto py = [&](double v) { return h - mb - (v - lo) / (hi - lo) * (h - mt - mb); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    s << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
      << h - mb << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
      << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << (w - mr) / 2 << "\" y=\"" << h - 12
      << "\" text-anchor=\"middle\" font-size=\"14\">rank</text>\n";
    s << "<text x=\"16\" y=\"" << (h - mb + mt) / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
      << (h - mb + mt) / 2 << ")\">P(rank)</text>\n";
    // polygon path
    s << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t r = 0; r <= pg.n; ++r)
        s << px(double(r)) << "," << py(pg.vertices[r]) << " ";
    s << "\"/>\n";
    for (std::size_t r = 0; r <= pg.n; ++r) {
        s << "<circle cx=\"" << px(double(r)) << "\" cy=\"" << py(pg.vertices[r])
          << "\" r=\"3\" fill=\"steelblue\"/>\n";
        s << "<text x=\"" << px(double(r)) << "\" y=\"" << h - mb + 18
          << "\" text-anchor=\"middle\" font-size=\"12\">" << r << "</text>\n";
    }
    s << "<text x=\"" << ml - 6 << "\" y=\"" << py(lo) + 4
      << "\" text-anchor=\"end\" font-size=\"12\">" << fmt12(lo) << "</text>\n";
    s << "<text x=\"" << ml - 6 << "\" y=\"" << py(hi) + 4
      << "\" text-anchor=\"end\" font-size=\"12\">" << fmt12(hi) << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace avb::io
