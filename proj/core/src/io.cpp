#include "bjorth/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bjorth/linalg.hpp"

namespace bjorth {

using nlohmann::json;

AlgebraElement parse_algebra(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("algebra file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("shape") || !doc.contains("blocks"))
        throw ParseError("algebra file: expected object with 'shape' and 'blocks'");

    AlgebraElement A;
    try {
        A.shape.block_sizes = doc.at("shape").get<std::vector<std::size_t>>();
        const json& blocks = doc.at("blocks");
        if (!blocks.is_array() || blocks.size() != A.shape.block_count())
            throw ParseError("algebra file: block count does not match shape");
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const std::size_t n = A.shape.block_sizes[k];
            if (n == 0) throw ParseError("algebra file: zero block size");
            const json& entries = blocks[k];
            if (!entries.is_array() || entries.size() != n * n)
                throw ParseError("algebra file: block entry count does not match shape");
            ComplexMatrix M(n, n);
            for (std::size_t e = 0; e < entries.size(); ++e) {
                const json& pair = entries[e];
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                    !pair[1].is_number())
                    throw ParseError("algebra file: entry is not a [re, im] pair");
                const double re = pair[0].get<double>();
                const double im = pair[1].get<double>();
                if (!std::isfinite(re) || !std::isfinite(im))
                    throw ParseError("algebra file: non-finite entry");
                M.data()[e] = cx{re, im};
            }
            A.blocks.push_back(std::move(M));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("algebra file: ") + e.what());
    }
    A.validate();
    return A;
}

std::string serialize_algebra(const AlgebraElement& A) {
    A.validate();
    json doc;
    doc["shape"] = A.shape.block_sizes;
    json blocks = json::array();
    for (const ComplexMatrix& M : A.blocks) {
        json entries = json::array();
        for (const cx& z : M.data()) entries.push_back(json::array({z.real(), z.imag()}));
        blocks.push_back(std::move(entries));
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump();
}

AlgebraElement load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

void save_algebra(const std::string& path, const AlgebraElement& A) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << serialize_algebra(A) << '\n';
}

void write_numrange_csv(std::ostream& out, const ComplexMatrix& M, std::size_t samples) {
    if (!M.square()) throw NonSquare("numrange csv: matrix not square");
    char line[160];
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = two_pi * static_cast<double>(k) / static_cast<double>(samples);
        Vector x;
        numrange_support(M, theta, &x);
        cx p{};
        for (std::size_t i = 0; i < x.size(); ++i) {
            cx row{};
            for (std::size_t j = 0; j < x.size(); ++j) row += M(i, j) * x[j];
            p += std::conj(x[i]) * row;
        }
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", theta, p.real(), p.imag());
        out << line;
    }
}

} // namespace bjorth
