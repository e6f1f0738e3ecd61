#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trapezoid/diagram.hpp"

namespace trapezoid::io {

/**
 * Diagram file: the count n, then n lines "a b c d" (1-based trapezoid i on
 * line i + 1 of the data). Whitespace separated; '#' starts a comment that
 * runs to end of line. Without `normalize` the labels must already be a
 * valid diagram; with it, any distinct integers per line are rank-mapped.
 *
 * Throws ValidationError on malformed text or an invalid diagram.
 */
TrapezoidDiagram parse_diagram(std::istream& in, bool normalize = false);
TrapezoidDiagram read_diagram_file(const std::filesystem::path& path, bool normalize = false);

void write_diagram(std::ostream& out, const TrapezoidDiagram& diagram, std::string_view comment = {});

// "n m" then "i j" per edge, i < j, sorted.
void write_edgelist(std::ostream& out, const IntersectionGraph& graph);
void write_dot(std::ostream& out, const IntersectionGraph& graph);

std::string join(std::span<const Vertex> vertices, std::string_view separator = ",");

// One line of space-separated key=value pairs, in insertion order.
class ResultRecord {
public:
    ResultRecord& add(std::string key, std::string value);
    ResultRecord& add(std::string key, std::int64_t value);

    const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace trapezoid::io
