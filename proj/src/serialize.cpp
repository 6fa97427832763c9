#include "flair/serialize.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace flair {

namespace {

constexpr std::string_view kHeaderPrefix = "# flair-model 1 ";
constexpr double kInf = std::numeric_limits<double>::infinity();

// Parses one whitespace-delimited field starting at `pos`, advancing `pos`
// past it. "inf"/"-inf" tokens are accepted when allow_inf is set.
double parse_field(const std::string& line, std::size_t line_no, std::size_t& pos,
                   bool allow_inf = false) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) throw ParseError(line_no, pos, "missing field");
    std::size_t end = line.find(' ', pos);
    if (end == std::string::npos) end = line.size();
    const std::string_view field(line.data() + pos, end - pos);

    if (allow_inf) {
        if (field == "inf") {
            pos = end;
            return kInf;
        }
        if (field == "-inf") {
            pos = end;
            return -kInf;
        }
    }

    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw ParseError(line_no, pos, "malformed number '" + std::string(field) + "'");
    if (!std::isfinite(value)) throw ParseError(line_no, pos, "non-finite number");
    pos = end;
    return value;
}

void expect_end(const std::string& line, std::size_t line_no, std::size_t pos) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos != line.size()) throw ParseError(line_no, pos, "trailing characters");
}

std::string slope_token(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return format_double(v);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void serialize(const FlairModel& model, std::ostream& out) {
    out << kHeaderPrefix << format_double(model.epsilon().value()) << '\n';
    if (!model.last()) return;
    for (const Sample& s : model.history())
        out << format_double(s.t) << ' ' << format_double(s.x) << '\n';
    out << "## " << slope_token(model.slope_current()) << ' ' << slope_token(model.slope_min())
        << ' ' << slope_token(model.slope_max()) << ' ' << format_double(model.last()->t) << ' '
        << format_double(model.last()->x) << '\n';
}

std::string serialize(const FlairModel& model) {
    std::ostringstream os;
    serialize(model, os);
    return os.str();
}

namespace {

struct ParsedFile {
    double header_epsilon = 0.0;
    std::vector<Sample> history;
    bool has_trailer = false;
    double slope_current = 0.0;
    double slope_min = 0.0;
    double slope_max = 0.0;
    Sample last;
};

ParsedFile parse(std::istream& in) {
    ParsedFile file;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError(1, 0, "empty input");
    ++line_no;
    if (line.rfind(kHeaderPrefix, 0) != 0)
        throw ParseError(line_no, 0, "missing 'flair-model 1' header");
    {
        std::size_t pos = kHeaderPrefix.size();
        file.header_epsilon = parse_field(line, line_no, pos);
        expect_end(line, line_no, pos);
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) throw ParseError(line_no, 0, "blank line");
        if (file.has_trailer) throw ParseError(line_no, 0, "content after trailer");
        if (line.rfind("## ", 0) == 0) {
            std::size_t pos = 3;
            file.slope_current = parse_field(line, line_no, pos, true);
            file.slope_min = parse_field(line, line_no, pos, true);
            file.slope_max = parse_field(line, line_no, pos, true);
            file.last.t = parse_field(line, line_no, pos);
            file.last.x = parse_field(line, line_no, pos);
            expect_end(line, line_no, pos);
            file.has_trailer = true;
        } else {
            std::size_t pos = 0;
            Sample s;
            s.t = parse_field(line, line_no, pos);
            s.x = parse_field(line, line_no, pos);
            expect_end(line, line_no, pos);
            file.history.push_back(s);
        }
    }

    if (!file.history.empty() && !file.has_trailer)
        throw ParseError(line_no + 1, 0, "truncated file: missing trailer");
    return file;
}

FlairModel build(const ParsedFile& file, Epsilon epsilon) {
    if (!file.has_trailer) return FlairModel(epsilon);
    if (file.history.empty()) throw ParseError(2, 0, "trailer without history records");
    try {
        return FlairModel::restore(epsilon, file.history, file.slope_current, file.slope_min,
                                   file.slope_max, file.last);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(2, 0, std::string("inconsistent model state: ") + e.what());
    }
}

}  // namespace

FlairModel deserialize(std::istream& in, Epsilon epsilon) { return build(parse(in), epsilon); }

FlairModel deserialize(const std::string& text, Epsilon epsilon) {
    std::istringstream is(text);
    return deserialize(is, epsilon);
}

FlairModel deserialize_with_header_epsilon(std::istream& in) {
    const ParsedFile file = parse(in);
    if (!std::isfinite(file.header_epsilon) || file.header_epsilon <= 0.0)
        throw ParseError(1, kHeaderPrefix.size(), "header epsilon must be > 0");
    return build(file, Epsilon(file.header_epsilon));
}

}  // namespace flair
