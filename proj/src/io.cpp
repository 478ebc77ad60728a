#include "smatrix/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace smatrix {

namespace {

std::string format_entry(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Splits a line into tokens, recording the 1-based column of each token start.
struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long parse_dimension(const Token& tok, int line_no) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(tok.text.c_str(), &end, 10);
    if (errno != 0 || end == tok.text.c_str() || *end != '\0' || v <= 0) {
        throw ParseError("expected a positive integer dimension, got '" +
                             tok.text + "'",
                         line_no, tok.column);
    }
    return v;
}

double parse_entry(const Token& tok, int line_no) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.text.c_str(), &end);
    if (errno == ERANGE || end == tok.text.c_str() || *end != '\0' ||
        !std::isfinite(v)) {
        throw ParseError("expected a finite number, got '" + tok.text + "'",
                         line_no, tok.column);
    }
    return v;
}

}  // namespace

std::string matrix_to_text(const Matrix& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ' ';
            out += format_entry(a(i, j));
        }
        out += '\n';
    }
    return out;
}

Matrix matrix_from_text(std::istream& in) {
    std::string line;
    int line_no = 0;

    // Header line: skip leading blank lines, then "rows cols".
    std::vector<Token> header;
    while (std::getline(in, line)) {
        ++line_no;
        header = tokenize(line);
        if (!header.empty()) break;
    }
    if (header.empty()) throw ParseError("empty input", line_no ? line_no : 1, 1);
    if (header.size() != 2) {
        throw ParseError("header must be 'rows cols'", line_no,
                         header.size() > 2 ? header[2].column : header[0].column);
    }
    const long rows = parse_dimension(header[0], line_no);
    const long cols = parse_dimension(header[1], line_no);

    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    long row = 0;
    while (row < rows) {
        if (!std::getline(in, line)) {
            throw ParseError("expected " + std::to_string(rows) +
                                 " rows, got " + std::to_string(row),
                             line_no + 1, 1);
        }
        ++line_no;
        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;  // permit blank separator lines
        if (static_cast<long>(toks.size()) != cols) {
            throw ParseError("expected " + std::to_string(cols) +
                                 " entries in row " + std::to_string(row + 1) +
                                 ", got " + std::to_string(toks.size()),
                             line_no,
                             toks.back().column);
        }
        for (const Token& t : toks) entries.push_back(parse_entry(t, line_no));
        ++row;
    }
    // Anything but whitespace after the last row is an error.
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<Token> toks = tokenize(line);
        if (!toks.empty()) {
            throw ParseError("unexpected trailing content", line_no,
                             toks[0].column);
        }
    }
    return Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                  std::move(entries));
}

Matrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    return matrix_from_text(in);
}

void write_matrix_file(const Matrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << matrix_to_text(a);
    if (!out.flush()) throw Error("write to '" + path + "' failed");
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return matrix_from_text(in);
}

std::string matrix_to_integer_csv(const Matrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double v = a(i, j);
            if (v != std::nearbyint(v)) {
                throw DomainError("matrix has non-integer entries");
            }
            if (j) out += ',';
            out += std::to_string(static_cast<long long>(v));
        }
        out += '\n';
    }
    return out;
}

}  // namespace smatrix
