#pragma once

// Instance/result JSON documents and the separator SVG diagram.

#include "hypertsp/separator.hpp"
#include "hypertsp/solvers.hpp"
#include "hypertsp/tour.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypertsp {

/// Malformed or invalid input document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that reads back to exactly `v`.
std::string format_exact(double v);
/// Decimal string with 15 significant digits.
std::string format_length(double v);
/// Strict decimal to double conversion; throws ParseError.
double parse_decimal(const std::string& s);

std::string instance_to_json(const Instance& inst);
/// Throws ParseError for syntax errors, bad fields, points outside the
/// disk and spacing violations.
Instance instance_from_json(const std::string& text);

struct ResultDocument {
    double length = 0.0;
    std::string length_text;
    std::vector<long long> tour;
    std::string algorithm;
};

std::string result_to_json(const SolveResult& r);
ResultDocument result_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Poincare-disk drawing of the points, the separating line, the empty cone
/// and the region R, plus an optional tour.
std::string separator_svg(const Instance& inst, const SeparatorRegion& region,
                          const std::optional<Tour>& tour = std::nullopt);

} // namespace hypertsp
