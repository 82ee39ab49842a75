#include "trisect/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace trisect {

namespace {

constexpr std::size_t kMaxGenus = 4096;

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Non-blank lines after comment stripping, with 1-based line numbers.
std::vector<Line> tokenize(std::string_view text, std::size_t& total_lines)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream is{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; is >> tok;) line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    total_lines = number;
    return out;
}

bool is_integer_token(std::string_view s)
{
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(const std::string& tok, std::size_t line)
{
    if (!is_integer_token(tok)) throw ParseError(line, "expected an integer, found '" + tok + "'");
    return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

class Cursor {
public:
    Cursor(std::vector<Line> lines, std::size_t total) : lines_(std::move(lines)), total_(total) {}

    const Line& next(const std::string& expecting)
    {
        if (pos_ == lines_.size()) throw ParseError(total_, "unexpected end of input, expected " + expecting);
        return lines_[pos_++];
    }
    bool done() const { return pos_ == lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }

private:
    std::vector<Line> lines_;
    std::size_t total_;
    std::size_t pos_ = 0;
};

IntMatrix read_rows(Cursor& cur, std::size_t count, std::size_t width, std::string_view section)
{
    IntMatrix m(count, width);
    for (std::size_t i = 0; i < count; ++i) {
        const Line& line = cur.next(std::to_string(count) + " rows in section '" + std::string(section) + "'");
        if (line.tokens.size() == 1 && parse_label(line.tokens[0]))
            throw ParseError(line.number, "section '" + std::string(section) + "' has " + std::to_string(i) +
                                              " rows, expected " + std::to_string(count));
        if (line.tokens.size() != width)
            throw ParseError(line.number, "row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                                              std::to_string(width));
        for (std::size_t j = 0; j < width; ++j) m(i, j) = parse_integer(line.tokens[j], line.number);
    }
    return m;
}

} // namespace

TrisectionDiagram parse_diagram(std::string_view text)
{
    std::size_t total = 0;
    auto lines = tokenize(text, total);
    Cursor cur(std::move(lines), total);

    const Line& header = cur.next("header 'tris v1'");
    if (header.tokens.empty() || header.tokens[0] != "tris")
        throw ParseError(header.number, "expected header 'tris v1'");
    if (header.tokens.size() != 2 || header.tokens[1] != "v1")
        throw ParseError(header.number, "unsupported format version '" +
                                            (header.tokens.size() > 1 ? header.tokens[1] : std::string()) +
                                            "', expected v1");

    const Line& gl = cur.next("'genus <g>'");
    if (gl.tokens.size() != 2 || gl.tokens[0] != "genus") throw ParseError(gl.number, "expected 'genus <g>'");
    const std::string& gtok = gl.tokens[1];
    if (!is_integer_token(gtok) || gtok[0] == '-')
        throw ParseError(gl.number, "genus must be a nonnegative integer, found '" + gtok + "'");
    const Integer gval = parse_integer(gtok, gl.number);
    if (gval > kMaxGenus) throw ParseError(gl.number, "genus " + gtok + " exceeds the supported maximum");
    const auto g = static_cast<std::size_t>(gval);

    std::array<IntMatrix, 3> systems;
    for (Label l : {Label::alpha, Label::beta, Label::gamma}) {
        const std::string name(to_string(l));
        const Line& sl = cur.next("section '" + name + "'");
        if (sl.tokens.size() != 1 || sl.tokens[0] != name)
            throw ParseError(sl.number, "expected section '" + name + "'");
        systems[static_cast<std::size_t>(l)] = read_rows(cur, g, 2 * g, name);
    }
    if (!cur.done()) throw ParseError(cur.peek().number, "unexpected content after section 'gamma'");

    return TrisectionDiagram(g, std::move(systems[0]), std::move(systems[1]), std::move(systems[2]));
}

std::string serialize_diagram(const TrisectionDiagram& d)
{
    std::ostringstream os;
    os << "tris v1\ngenus " << d.genus() << '\n';
    for (const auto& s : d.systems()) {
        os << to_string(s.label) << '\n';
        for (std::size_t i = 0; i < s.classes.rows(); ++i) {
            for (std::size_t j = 0; j < s.classes.cols(); ++j) os << (j ? " " : "") << s.classes(i, j);
            os << '\n';
        }
    }
    return os.str();
}

IntMatrix parse_matrix(std::string_view text)
{
    std::size_t total = 0;
    const auto lines = tokenize(text, total);
    if (lines.empty()) return {};
    const std::size_t width = lines.front().tokens.size();
    IntMatrix m(lines.size(), width);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != width)
            throw ParseError(line.number, "row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                                              std::to_string(width));
        for (std::size_t j = 0; j < width; ++j) m(i, j) = parse_integer(line.tokens[j], line.number);
    }
    return m;
}

} // namespace trisect
