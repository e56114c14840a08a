#include "corings/io.hpp"

#include <fstream>
#include <sstream>

namespace corings {

ParseError::ParseError(std::size_t line_no, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

void put_scalar(std::ostream& os, const Rat& v) { os << v; }

void put_vector_line(std::ostream& os, const std::vector<Rat>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        put_scalar(os, v[i]);
    }
    os << '\n';
}

void put_matrix(std::ostream& os, const std::string& label, const Matrix& m) {
    os << "matrix " << label << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) put_vector_line(os, m.row(r));
}

void put_vector(std::ostream& os, const std::string& label, const std::vector<Rat>& v) {
    os << "vector " << label << ' ' << v.size() << '\n';
    put_vector_line(os, v);
}

void put_algebra(std::ostream& os, const std::string& label, const Algebra& a) {
    os << "algebra " << label << ' ' << a.dim << '\n';
    Matrix mult(a.dim * a.dim, a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) mult.at(i * a.dim + j, k) = a.c(i, j, k);
    put_matrix(os, "mult", mult);
    put_vector(os, "unit", a.unit);
}

void put_actions(std::ostream& os, const Bimodule& m) {
    Matrix la(m.left_alg.dim * m.dim, m.dim, m.field());
    for (std::size_t b = 0; b < m.left_alg.dim; ++b)
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) la.at(b * m.dim + i, j) = m.l(b, i, j);
    put_matrix(os, "left_action", la);
    Matrix ra(m.dim * m.right_alg.dim, m.dim, m.field());
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t a = 0; a < m.right_alg.dim; ++a)
            for (std::size_t j = 0; j < m.dim; ++j) ra.at(i * m.right_alg.dim + a, j) = m.r(i, a, j);
    put_matrix(os, "right_action", ra);
}

void put_bimodule(std::ostream& os, const std::string& label, const Bimodule& m) {
    os << "bimodule " << label << ' ' << m.dim << '\n';
    put_algebra(os, "left", m.left_alg);
    put_algebra(os, "right", m.right_alg);
    put_actions(os, m);
}

void put_coring(std::ostream& os, const std::string& label, const Coring& c) {
    os << "coring " << label << '\n';
    put_algebra(os, "base", c.base);
    os << "carrier " << c.carrier.dim << '\n';
    put_actions(os, c.carrier);
    put_matrix(os, "comult", c.comult);
    put_matrix(os, "counit", c.counit);
}

struct Reader {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    Field field;

    explicit Reader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }

    std::size_t line_no() const { return pos; }  // 1-based number of the line just read

    std::vector<std::string> next_tokens() {
        if (pos >= lines.size()) throw ParseError(lines.size() + 1, "unexpected end of document");
        std::istringstream in(lines[pos++]);
        std::vector<std::string> toks;
        std::string t;
        while (in >> t) toks.push_back(t);
        return toks;
    }

    Rat scalar(const std::string& tok) {
        try {
            Rat v(tok);
            return field.normalize(v);
        } catch (const std::exception&) {
            throw ParseError(line_no(), "bad scalar '" + tok + "'");
        }
    }

    std::vector<Rat> vector_line(std::size_t n) {
        std::vector<std::string> toks = next_tokens();
        if (toks.size() != n)
            throw ParseError(line_no(), "expected " + std::to_string(n) + " scalars, got " +
                                            std::to_string(toks.size()));
        std::vector<Rat> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = scalar(toks[i]);
        return v;
    }

    std::size_t count(const std::string& tok) {
        try {
            long long n = std::stoll(tok);
            if (n < 0) throw std::out_of_range("negative");
            return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
            throw ParseError(line_no(), "bad count '" + tok + "'");
        }
    }

    std::vector<std::string> expect(const std::string& keyword, const std::string& label,
                                    std::size_t extra) {
        std::vector<std::string> toks = next_tokens();
        std::string want = keyword + (label.empty() ? "" : " " + label);
        if (toks.size() != 1 + (label.empty() ? 0 : 1) + extra || toks[0] != keyword ||
            (!label.empty() && toks[1] != label))
            throw ParseError(line_no(), "expected '" + want + "' header");
        return toks;
    }

    Matrix matrix(const std::string& label) {
        std::vector<std::string> toks = expect("matrix", label, 2);
        std::size_t rows = count(toks[2]), cols = count(toks[3]);
        Matrix m(rows, cols, field);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Rat> row = vector_line(cols);
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
        }
        return m;
    }

    Matrix matrix_sized(const std::string& label, std::size_t rows, std::size_t cols) {
        Matrix m = matrix(label);
        if (m.rows() != rows || m.cols() != cols)
            throw ParseError(line_no(), "matrix " + label + " has shape " +
                                            std::to_string(m.rows()) + "x" +
                                            std::to_string(m.cols()) + ", expected " +
                                            std::to_string(rows) + "x" + std::to_string(cols));
        return m;
    }

    std::vector<Rat> vector(const std::string& label) {
        std::vector<std::string> toks = expect("vector", label, 1);
        return vector_line(count(toks[2]));
    }

    Algebra algebra(const std::string& label) {
        std::vector<std::string> toks = expect("algebra", label, 1);
        Algebra a;
        a.dim = count(toks[2]);
        a.field = field;
        Matrix mult = matrix_sized("mult", a.dim * a.dim, a.dim);
        a.mult.assign(a.dim * a.dim * a.dim, Rat(0));
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                for (std::size_t k = 0; k < a.dim; ++k) a.c(i, j, k) = mult.at(i * a.dim + j, k);
        a.unit = vector("unit");
        if (a.unit.size() != a.dim) throw ParseError(line_no(), "unit length mismatch");
        return a;
    }

    void actions(Bimodule& m) {
        Matrix la = matrix_sized("left_action", m.left_alg.dim * m.dim, m.dim);
        Matrix ra = matrix_sized("right_action", m.dim * m.right_alg.dim, m.dim);
        m.allocate();
        for (std::size_t b = 0; b < m.left_alg.dim; ++b)
            for (std::size_t i = 0; i < m.dim; ++i)
                for (std::size_t j = 0; j < m.dim; ++j) m.l(b, i, j) = la.at(b * m.dim + i, j);
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t a = 0; a < m.right_alg.dim; ++a)
                for (std::size_t j = 0; j < m.dim; ++j)
                    m.r(i, a, j) = ra.at(i * m.right_alg.dim + a, j);
    }

    Bimodule bimodule(const std::string& label) {
        std::vector<std::string> toks = expect("bimodule", label, 1);
        Bimodule m;
        m.dim = count(toks[2]);
        m.left_alg = algebra("left");
        m.right_alg = algebra("right");
        actions(m);
        return m;
    }

    Coring coring(const std::string& label) {
        expect("coring", label, 0);
        Algebra base = algebra("base");
        std::vector<std::string> toks = expect("carrier", "", 1);
        Bimodule carrier;
        carrier.dim = count(toks[1]);
        carrier.left_alg = base;
        carrier.right_alg = base;
        actions(carrier);
        Matrix comult = matrix_sized("comult", carrier.dim * carrier.dim, carrier.dim);
        Matrix counit = matrix_sized("counit", base.dim, carrier.dim);
        return make_coring(base, carrier, comult, counit);
    }

    void end() {
        expect("end", "", 0);
        if (pos != lines.size()) throw ParseError(pos + 1, "trailing content after 'end'");
    }
};

}  // namespace

std::string serialize_document(const Document& doc) {
    std::ostringstream os;
    os << "corings-doc 1\n";
    os << "kind " << doc.kind << '\n';
    if (doc.field.is_rational())
        os << "field Q\n";
    else
        os << "field Fp " << doc.field.characteristic() << '\n';

    if (doc.kind == "algebra") {
        put_algebra(os, "a", *doc.algebra);
    } else if (doc.kind == "algebra_map") {
        put_algebra(os, "source", doc.algebra_map->source);
        put_algebra(os, "target", doc.algebra_map->target);
        put_matrix(os, "map", doc.algebra_map->matrix);
    } else if (doc.kind == "bimodule") {
        put_bimodule(os, "m", *doc.bimodule);
    } else if (doc.kind == "coring") {
        put_coring(os, "c", *doc.coring);
    } else if (doc.kind == "comodule") {
        put_coring(os, "c", doc.comodule->coring);
        put_bimodule(os, "carrier", doc.comodule->mod);
        put_matrix(os, "coaction", doc.comodule->coaction);
    } else if (doc.kind == "module_morphism") {
        put_coring(os, "d", doc.module_morphism->ext.d);
        put_bimodule(os, "sigma", doc.module_morphism->ext.sigma);
        put_coring(os, "target", doc.module_morphism->sigma.target);
        put_matrix(os, "map",
                   doc.module_morphism->sigma.matrix * doc.module_morphism->ext.chain.q.project);
    } else if (doc.kind == "descent_datum") {
        const DescentDatum& d = *doc.descent_datum;
        put_algebra(os, "source", d.morphism.alpha.source);
        put_algebra(os, "target", d.morphism.alpha.target);
        put_matrix(os, "alpha", d.morphism.alpha.matrix);
        put_coring(os, "d", d.morphism.source);
        put_coring(os, "c", d.morphism.target);
        put_matrix(os, "gamma", d.morphism.gamma);
        put_bimodule(os, "x", d.x);
        put_matrix(os, "rho", d.rho);
    } else if (doc.kind == "one_cell") {
        put_coring(os, "c", doc.one_cell->c);
        put_coring(os, "d", doc.one_cell->d);
        put_bimodule(os, "sigma", doc.one_cell->sigma);
        put_matrix(os, "cell", doc.one_cell->cell_ambient());
    } else if (doc.kind == "two_cell") {
        put_coring(os, "c", doc.two_cell->source.c);
        put_coring(os, "d", doc.two_cell->source.d);
        put_bimodule(os, "source_sigma", doc.two_cell->source.sigma);
        put_matrix(os, "source_cell", doc.two_cell->source.cell_ambient());
        put_bimodule(os, "target_sigma", doc.two_cell->target.sigma);
        put_matrix(os, "target_cell", doc.two_cell->target.cell_ambient());
        put_matrix(os, "map", doc.two_cell->map_ambient());
    } else {
        throw std::invalid_argument("unknown document kind '" + doc.kind + "'");
    }
    os << "end\n";
    return os.str();
}

Document parse_document(const std::string& text) {
    Reader r(text);
    std::vector<std::string> toks = r.next_tokens();
    if (toks.size() != 2 || toks[0] != "corings-doc")
        throw ParseError(r.line_no(), "expected 'corings-doc <version>' header");
    if (toks[1] != "1") throw ParseError(r.line_no(), "unsupported schema version " + toks[1]);

    Document doc;
    toks = r.next_tokens();
    if (toks.size() != 2 || toks[0] != "kind") throw ParseError(r.line_no(), "expected 'kind'");
    doc.kind = toks[1];

    toks = r.next_tokens();
    if (toks.empty() || toks[0] != "field") throw ParseError(r.line_no(), "expected 'field'");
    if (toks.size() == 2 && toks[1] == "Q") {
        doc.field = Field::rationals();
    } else if (toks.size() == 3 && toks[1] == "Fp") {
        try {
            doc.field = Field::prime(std::stol(toks[2]));
        } catch (const std::exception&) {
            throw ParseError(r.line_no(), "bad prime '" + toks[2] + "'");
        }
    } else {
        throw ParseError(r.line_no(), "field must be 'Q' or 'Fp <p>'");
    }
    r.field = doc.field;

    if (doc.kind == "algebra") {
        doc.algebra = r.algebra("a");
    } else if (doc.kind == "algebra_map") {
        Algebra src = r.algebra("source");
        Algebra tgt = r.algebra("target");
        Matrix m = r.matrix_sized("map", tgt.dim, src.dim);
        doc.algebra_map = AlgebraMap{src, tgt, m};
    } else if (doc.kind == "bimodule") {
        doc.bimodule = r.bimodule("m");
    } else if (doc.kind == "coring") {
        doc.coring = r.coring("c");
    } else if (doc.kind == "comodule") {
        Coring c = r.coring("c");
        Bimodule mod = r.bimodule("carrier");
        Matrix co = r.matrix_sized("coaction", mod.dim * c.dim(), mod.dim);
        doc.comodule = make_comodule(c, mod, co);
    } else if (doc.kind == "module_morphism") {
        Coring d = r.coring("d");
        Bimodule sigma = r.bimodule("sigma");
        Coring target = r.coring("target");
        BaseExtension ext = base_ext_by_module(d, sigma);
        Matrix m = r.matrix_sized("map", target.dim(), ext.chain.ambient_dim);
        doc.module_morphism =
            ModuleMorphism{ext, CoringMorphism{ext.coring, target, m * ext.chain.q.lift}};
    } else if (doc.kind == "descent_datum") {
        Algebra src = r.algebra("source");
        Algebra tgt = r.algebra("target");
        Matrix am = r.matrix_sized("alpha", tgt.dim, src.dim);
        Coring d = r.coring("d");
        Coring c = r.coring("c");
        Matrix gamma = r.matrix_sized("gamma", c.dim(), d.dim());
        Bimodule x = r.bimodule("x");
        Matrix rho = r.matrix_sized("rho", x.dim * d.dim() * tgt.dim, x.dim);
        GeneralCoringMorphism g{d, c, AlgebraMap{src, tgt, am}, gamma};
        doc.descent_datum = make_descent_datum(g, x, rho);
    } else if (doc.kind == "one_cell") {
        Coring c = r.coring("c");
        Coring d = r.coring("d");
        Bimodule sigma = r.bimodule("sigma");
        Matrix cell = r.matrix_sized("cell", sigma.dim * c.dim(), d.dim() * sigma.dim);
        doc.one_cell = make_one_cell_right(c, d, sigma, cell);
    } else if (doc.kind == "two_cell") {
        Coring c = r.coring("c");
        Coring d = r.coring("d");
        Bimodule ssig = r.bimodule("source_sigma");
        Matrix scell = r.matrix_sized("source_cell", ssig.dim * c.dim(), d.dim() * ssig.dim);
        Bimodule tsig = r.bimodule("target_sigma");
        Matrix tcell = r.matrix_sized("target_cell", tsig.dim * c.dim(), d.dim() * tsig.dim);
        Matrix map = r.matrix_sized("map", tsig.dim, d.dim() * ssig.dim);
        OneCellRight src = make_one_cell_right(c, d, ssig, scell);
        OneCellRight tgt = make_one_cell_right(c, d, tsig, tcell);
        doc.two_cell = TwoCell{src, tgt, map * src.ds.q.lift};
    } else {
        throw ParseError(r.line_no(), "unknown document kind '" + doc.kind + "'");
    }
    r.end();
    return doc;
}

Document document_of(const Algebra& a) {
    Document d;
    d.kind = "algebra";
    d.field = a.field;
    d.algebra = a;
    return d;
}

Document document_of(const AlgebraMap& f) {
    Document d;
    d.kind = "algebra_map";
    d.field = f.source.field;
    d.algebra_map = f;
    return d;
}

Document document_of(const Bimodule& m) {
    Document d;
    d.kind = "bimodule";
    d.field = m.field();
    d.bimodule = m;
    return d;
}

Document document_of(const Coring& c) {
    Document d;
    d.kind = "coring";
    d.field = c.base.field;
    d.coring = c;
    return d;
}

Document document_of(const Comodule& m) {
    Document d;
    d.kind = "comodule";
    d.field = m.coring.base.field;
    d.comodule = m;
    return d;
}

Document document_of(const ModuleMorphism& m) {
    Document d;
    d.kind = "module_morphism";
    d.field = m.ext.coring.base.field;
    d.module_morphism = m;
    return d;
}

Document document_of(const DescentDatum& dd) {
    Document d;
    d.kind = "descent_datum";
    d.field = dd.morphism.alpha.source.field;
    d.descent_datum = dd;
    return d;
}

Document document_of(const OneCellRight& s) {
    Document d;
    d.kind = "one_cell";
    d.field = s.c.base.field;
    d.one_cell = s;
    return d;
}

Document document_of(const TwoCell& t) {
    Document d;
    d.kind = "two_cell";
    d.field = t.source.c.base.field;
    d.two_cell = t;
    return d;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace corings
