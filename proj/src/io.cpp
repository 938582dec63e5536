#include "qp/io.hpp"

#include <cctype>

namespace qp {

namespace {

struct Span {
    std::size_t begin;
    std::size_t end;
};

bool blank(std::string_view s, Span span) {
    for (std::size_t i = span.begin; i < span.end; ++i)
        if (!std::isspace(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Span trim(std::string_view s, Span span) {
    while (span.begin < span.end && std::isspace(static_cast<unsigned char>(s[span.begin]))) ++span.begin;
    while (span.end > span.begin && std::isspace(static_cast<unsigned char>(s[span.end - 1]))) --span.end;
    return span;
}

std::vector<Span> split(std::string_view s, Span span, char sep) {
    std::vector<Span> out;
    std::size_t start = span.begin;
    for (std::size_t i = span.begin; i < span.end; ++i) {
        if (s[i] == sep) {
            out.push_back({start, i});
            start = i + 1;
        }
    }
    out.push_back({start, span.end});
    return out;
}

RingElement parse_entry(const LocalRing& ring, std::string_view literal, Span span) {
    span = trim(literal, span);
    if (span.begin == span.end) throw ParseError(span.begin, "empty matrix entry");
    try {
        return ring.parse_element(literal.substr(span.begin, span.end - span.begin));
    } catch (const ParseError& e) {
        throw ParseError(span.begin + e.position(), e.message());
    }
}

}  // namespace

ShapedMatrix parse_matrix(const LocalRing& ring, Shape shape, std::string_view literal) {
    Span body = trim(literal, {0, literal.size()});
    if (body.begin < body.end && literal[body.begin] == '[') {
        if (literal[body.end - 1] != ']') throw ParseError(body.end, "expected ']' at end of matrix");
        body = {body.begin + 1, body.end - 1};
    }
    for (std::size_t i = body.begin; i < body.end; ++i) {
        if (literal[i] == '[' || literal[i] == ']') throw ParseError(i, "unexpected bracket inside matrix");
    }
    if (blank(literal, body)) throw ParseError(body.begin, "empty matrix");
    const std::vector<Span> rows = split(literal, body, ';');
    if (rows.size() != shape.dim()) {
        throw ParseError(body.begin, "expected " + std::to_string(shape.dim()) + " rows for " + shape.name() + ", got " +
                                         std::to_string(rows.size()));
    }
    std::vector<std::vector<RingElement>> entries;
    for (const Span& row : rows) {
        const std::vector<Span> cells = split(literal, row, ',');
        if (cells.size() != shape.dim()) {
            throw ParseError(trim(literal, row).begin, "expected " + std::to_string(shape.dim()) + " entries per row, got " +
                                                           std::to_string(cells.size()));
        }
        std::vector<RingElement> out_row;
        for (const Span& cell : cells) out_row.push_back(parse_entry(ring, literal, cell));
        entries.push_back(std::move(out_row));
    }
    return ShapedMatrix::from_rows(ring, shape, entries);
}

Json to_json(const ShapedMatrix& a) {
    Json rows = Json::array();
    for (unsigned i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < a.dim(); ++j) row.push_back(a(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"shape", a.shape().name()}, {"ring", a.ring().spec()}, {"rows", std::move(rows)}};
}

ShapedMatrix matrix_from_json(const Json& j) {
    const LocalRing ring = LocalRing::parse(j.at("ring").get<std::string>());
    const Shape shape = Shape::parse(j.at("shape").get<std::string>());
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != shape.dim()) {
        throw Error(ErrorCode::ShapeMismatch, "rows do not match shape " + shape.name());
    }
    std::vector<std::vector<RingElement>> entries;
    for (const Json& row : rows) {
        if (!row.is_array() || row.size() != shape.dim()) {
            throw Error(ErrorCode::ShapeMismatch, "row length does not match shape " + shape.name());
        }
        std::vector<RingElement> out_row;
        for (const Json& cell : row) out_row.push_back(ring.parse_element(cell.get<std::string>()));
        entries.push_back(std::move(out_row));
    }
    return ShapedMatrix::from_rows(ring, shape, entries);
}

Comm2Evidence comm2_evidence_from_string(std::string_view name) {
    for (Comm2Evidence e :
         {Comm2Evidence::FiniteExhaustive, Comm2Evidence::CaseTableConstruction, Comm2Evidence::PolynomialInA}) {
        if (to_string(e) == name) return e;
    }
    throw ParseError(0, "unknown comm2 evidence '" + std::string(name) + "'");
}

Json to_json(const QuasipolarWitness& w) {
    return Json{{"p", to_json(w.p)},
                {"u", to_json(w.u)},
                {"q", to_json(w.q)},
                {"comm2_evidence", std::string(to_string(w.comm2_evidence))}};
}

QuasipolarWitness quasipolar_witness_from_json(const Json& j) {
    return QuasipolarWitness{matrix_from_json(j.at("p")), matrix_from_json(j.at("u")), matrix_from_json(j.at("q")),
                             comm2_evidence_from_string(j.at("comm2_evidence").get<std::string>())};
}

Json to_json(const RadCleanWitness& w) {
    return Json{{"e", to_json(w.e)}, {"v", to_json(w.v)}, {"corner_j", to_json(w.corner_j)}};
}

RadCleanWitness rad_clean_witness_from_json(const Json& j) {
    return RadCleanWitness{matrix_from_json(j.at("e")), matrix_from_json(j.at("v")), matrix_from_json(j.at("corner_j"))};
}

Json to_json(const CheckList& checks) {
    Json out = Json::array();
    for (const Check& c : checks.checks()) {
        Json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace qp
