#include "chainfill/chain_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "chainfill/errors.hpp"

namespace chainfill {

namespace {

struct LineReader {
    std::istream& is;
    int lineno = 0;

    // next non-empty, non-comment line split into tokens
    std::vector<std::string> next(const char* what) {
        std::string line;
        while (std::getline(is, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string tok;
            while (ls >> tok) toks.push_back(tok);
            if (!toks.empty()) return toks;
        }
        throw InputError(std::string("unexpected end of file while reading ") + what);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("line " + std::to_string(lineno) + ": " + msg);
    }
};

long long to_int(LineReader& rd, const std::string& s) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) rd.fail("bad integer: " + s);
        return v;
    } catch (const InputError&) {
        throw;
    } catch (...) {
        rd.fail("bad integer: " + s);
    }
}

Rational to_rat(LineReader& rd, const std::string& s) {
    try {
        return parse_rational(s);
    } catch (...) {
        rd.fail("bad rational: " + s);
    }
}

}  // namespace

Chain parse_chain(std::istream& is, std::vector<std::string>* warnings) {
    LineReader rd{is};
    auto header = rd.next("header");
    if (header.size() != 2 || header[0] != "polychain" || header[1] != "1")
        rd.fail("expected header 'polychain 1'");
    auto amb = rd.next("ambient dimension");
    if (amb.size() != 2 || amb[0] != "ambient") rd.fail("expected 'ambient <n>'");
    const int n = (int)to_int(rd, amb[1]);
    if (n < 1 || n > 4) rd.fail("ambient dimension out of range");
    auto dim = rd.next("chain dimension");
    if (dim.size() != 2 || dim[0] != "dim") rd.fail("expected 'dim <k>'");
    const int k = (int)to_int(rd, dim[1]);
    if (k < 0 || k > 3) rd.fail("chain dimension out of range");
    auto norm = rd.next("norm");
    if (norm.empty() || norm[0] != "norm") rd.fail("expected 'norm ...'");
    NormSpec space = NormSpec::euclidean(n);
    if (norm.size() == 2 && norm[1] == "euclidean") {
        space = NormSpec::euclidean(n);
    } else if (norm.size() == 3 && norm[1] == "lp") {
        space = NormSpec::lp(n, to_rat(rd, norm[2]));
    } else if (norm.size() == 3 && norm[1] == "polytope") {
        const int count = (int)to_int(rd, norm[2]);
        if (count < 2) rd.fail("polytope needs at least 2 vertices");
        std::vector<Point> verts;
        for (int i = 0; i < count; ++i) {
            auto toks = rd.next("polytope vertex");
            if ((int)toks.size() != n) rd.fail("polytope vertex arity mismatch");
            Point p(n);
            for (int j = 0; j < n; ++j) p[j] = to_rat(rd, toks[j]);
            verts.push_back(std::move(p));
        }
        try {
            space = NormSpec::polytope(n, std::move(verts));
        } catch (const std::exception& e) {
            rd.fail(e.what());
        }
    } else {
        rd.fail("unknown norm specification");
    }

    auto vh = rd.next("vertex table");
    if (vh.size() != 2 || vh[0] != "vertices") rd.fail("expected 'vertices <count>'");
    const long long nverts = to_int(rd, vh[1]);
    std::vector<Point> table;
    for (long long i = 0; i < nverts; ++i) {
        auto toks = rd.next("vertex");
        if ((int)toks.size() != n) rd.fail("vertex arity mismatch");
        Point p(n);
        for (int j = 0; j < n; ++j) p[j] = to_rat(rd, toks[j]);
        table.push_back(std::move(p));
    }
    auto sh = rd.next("simplex list");
    if (sh.size() != 2 || sh[0] != "simplices") rd.fail("expected 'simplices <count>'");
    const long long nsimp = to_int(rd, sh[1]);
    Chain out(k, space);
    for (long long i = 0; i < nsimp; ++i) {
        auto toks = rd.next("simplex");
        if ((int)toks.size() != k + 2) rd.fail("simplex arity mismatch (want weight + k+1 indices)");
        const long long w = to_int(rd, toks[0]);
        if (w == 0) rd.fail("zero weight");
        std::vector<Point> verts;
        for (int j = 1; j < (int)toks.size(); ++j) {
            const long long idx = to_int(rd, toks[j]);
            if (idx < 0 || idx >= nverts) rd.fail("vertex index out of range");
            verts.push_back(table[idx]);
        }
        auto canon = make_simplex(verts);
        if (!canon) rd.fail("degenerate simplex");
        const size_t before = out.size();
        const auto prev = out.terms().find(canon->first);
        const bool existed = prev != out.terms().end();
        out.add(verts, w);
        if (warnings && existed && out.size() <= before)
            warnings->push_back("line " + std::to_string(rd.lineno) +
                                ": repeated simplex cancelled during reduction");
        else if (warnings && existed)
            warnings->push_back("line " + std::to_string(rd.lineno) +
                                ": repeated simplex merged during reduction");
    }
    return out;
}

Chain parse_chain_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream is(path);
    if (!is) throw InputError("cannot open " + path);
    return parse_chain(is, warnings);
}

void serialize_chain(const Chain& t, std::ostream& os) {
    os << "polychain 1\n";
    os << "ambient " << t.space().dim() << "\n";
    os << "dim " << t.dim() << "\n";
    switch (t.space().kind()) {
        case NormSpec::Kind::Euclidean:
            os << "norm euclidean\n";
            break;
        case NormSpec::Kind::Lp:
            os << "norm lp " << rational_to_string(t.space().lp_exponent()) << "\n";
            break;
        case NormSpec::Kind::Polytope: {
            const auto& vs = t.space().polytope_vertices();
            os << "norm polytope " << vs.size() << "\n";
            for (const auto& v : vs) {
                for (size_t j = 0; j < v.size(); ++j)
                    os << (j ? " " : "") << rational_to_string(v[j]);
                os << "\n";
            }
            break;
        }
    }
    const auto verts = support_vertices(t);
    std::map<Point, size_t> index;
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    os << "vertices " << verts.size() << "\n";
    for (const auto& v : verts) {
        for (size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << rational_to_string(v[j]);
        os << "\n";
    }
    os << "simplices " << t.size() << "\n";
    for (const auto& [s, w] : t.terms()) {
        os << w;
        for (const auto& v : s.verts) os << " " << index.at(v);
        os << "\n";
    }
}

void serialize_chain_file(const Chain& t, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw InputError("cannot write " + path);
    serialize_chain(t, os);
}

void export_obj(const Chain& t, std::ostream& os) {
    if (t.dim() != 1 && t.dim() != 2) throw InputError("obj export supports dimensions 1 and 2");
    if (t.space().dim() > 3) throw InputError("obj export supports ambient dimension <= 3");
    os << "# polyhedral chain export\n";
    const auto verts = support_vertices(t);
    std::map<Point, size_t> index;
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i + 1;  // 1-based
    for (const auto& v : verts) {
        os << "v";
        for (size_t j = 0; j < 3; ++j)
            os << " " << (j < v.size() ? to_double(v[j]) : 0.0);
        os << "\n";
    }
    for (const auto& [s, w] : t.terms()) {
        std::vector<size_t> idx;
        for (const auto& v : s.verts) idx.push_back(index.at(v));
        if (w < 0 && idx.size() >= 2) std::swap(idx[0], idx[1]);
        const long long copies = w < 0 ? -w : w;
        if (copies > 1) os << "# weight " << copies << "\n";
        for (long long c = 0; c < copies; ++c) {
            os << (t.dim() == 1 ? "l" : "f");
            for (size_t i : idx) os << " " << i;
            os << "\n";
        }
    }
}

void export_obj_file(const Chain& t, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw InputError("cannot write " + path);
    export_obj(t, os);
}

}  // namespace chainfill
