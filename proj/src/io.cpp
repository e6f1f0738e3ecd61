#include "trapezoid/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "trapezoid/errors.hpp"

namespace trapezoid::io {

namespace {

struct Token {
    std::string text;
    int line;
};

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t pos = 0;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t\r", pos);
            if (pos == std::string::npos) break;
            const std::size_t end = std::min(line.find_first_of(" \t\r", pos), line.size());
            tokens.push_back(Token{line.substr(pos, end - pos), number});
            pos = end;
        }
    }
    return tokens;
}

std::int64_t to_integer(const Token& token) {
    std::int64_t value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ValidationError({"line " + std::to_string(token.line) + ": expected an integer, got '" + token.text + "'"});
    }
    return value;
}

}  // namespace

TrapezoidDiagram parse_diagram(std::istream& in, bool normalize) {
    const auto tokens = tokenize(in);
    if (tokens.empty()) throw ValidationError({"empty diagram file"});
    const std::int64_t n = to_integer(tokens[0]);
    if (n < 1) throw ValidationError({"line " + std::to_string(tokens[0].line) + ": n must be at least 1"});
    const auto expected = static_cast<std::size_t>(1 + 4 * n);
    if (tokens.size() != expected) {
        throw ValidationError({"expected " + std::to_string(4 * n) + " coordinates for n = " + std::to_string(n) +
                               ", found " + std::to_string(tokens.size() - 1)});
    }

    if (normalize) {
        std::vector<RawTrapezoid> raw(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const auto at = [&](std::size_t k) { return static_cast<double>(to_integer(tokens[1 + 4 * i + k])); };
            raw[i] = RawTrapezoid{at(0), at(1), at(2), at(3)};
        }
        return trapezoid::normalize(raw);
    }

    std::vector<Trapezoid> ts(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto at = [&](std::size_t k) {
            const Token& token = tokens[1 + 4 * i + k];
            const std::int64_t v = to_integer(token);
            if (v < 1 || v > 2 * n) {
                throw ValidationError({"line " + std::to_string(token.line) + ": label " + token.text +
                                       " outside 1.." + std::to_string(2 * n)});
            }
            return static_cast<Coord>(v);
        };
        ts[i] = Trapezoid{at(0), at(1), at(2), at(3)};
    }
    return TrapezoidDiagram(std::move(ts));
}

TrapezoidDiagram read_diagram_file(const std::filesystem::path& path, bool normalize) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"cannot open " + path.string()});
    return parse_diagram(in, normalize);
}

void write_diagram(std::ostream& out, const TrapezoidDiagram& diagram, std::string_view comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << diagram.size() << '\n';
    for (const Trapezoid& t : diagram.trapezoids()) {
        out << t.a << ' ' << t.b << ' ' << t.c << ' ' << t.d << '\n';
    }
}

void write_edgelist(std::ostream& out, const IntersectionGraph& graph) {
    out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const IntersectionGraph& graph) {
    out << "graph trapezoid {\n";
    for (Vertex v = 1; v <= graph.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

std::string join(std::span<const Vertex> vertices, std::string_view separator) {
    std::string out;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (k > 0) out += separator;
        out += std::to_string(vertices[k]);
    }
    return out;
}

ResultRecord& ResultRecord::add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

ResultRecord& ResultRecord::add(std::string key, std::int64_t value) { return add(std::move(key), std::to_string(value)); }

std::string ResultRecord::str() const {
    std::string out;
    for (const auto& [key, value] : fields_) {
        if (!out.empty()) out += ' ';
        out += key + '=' + (value.empty() ? "-" : value);
    }
    return out;
}

}  // namespace trapezoid::io
