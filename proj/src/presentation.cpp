#include "cdga/presentation.hpp"

#include <cctype>
#include <sstream>

namespace cdga {

namespace {

struct Token {
    enum Kind { Number, Name, Star, Caret, Plus, Minus, Slash, End } kind;
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& src, int line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Number, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Name, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '*': k = Token::Star; break;
            case '^': k = Token::Caret; break;
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '/': k = Token::Slash; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({k, std::string(1, c), col});
        ++i;
    }
    out.push_back({Token::End, "", static_cast<int>(src.size()) + 1});
    return out;
}

class ExpressionParser {
  public:
    ExpressionParser(const TablePtr& table, const std::string& src, int line)
        : table_(table), line_(line), tokens_(tokenize(src, line)) {}

    Element parse() {
        Element sum = Element::zero(table_);
        bool negative = false;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus)
            negative = next().kind == Token::Minus;
        sum += parse_term(negative);
        while (peek().kind != Token::End) {
            const Token& op = next();
            if (op.kind != Token::Plus && op.kind != Token::Minus)
                throw ParseError("expected '+' or '-', got '" + op.text + "'", line_,
                                 op.column);
            sum += parse_term(op.kind == Token::Minus);
        }
        return sum;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    Element parse_factor() {
        const Token& t = next();
        if (t.kind == Token::Number) {
            Rational q(t.text);
            if (peek().kind == Token::Slash) {
                next();
                const Token& d = next();
                if (d.kind != Token::Number)
                    throw ParseError("expected a number after '/'", line_, d.column);
                if (Rational(d.text) == 0)
                    throw ParseError("division by zero", line_, d.column);
                q /= Rational(d.text);
            }
            return Element::term(table_, unit_monomial(*table_), q);
        }
        if (t.kind == Token::Name) {
            auto idx = table_->find(t.text);
            if (!idx)
                throw ParseError("unknown generator '" + t.text + "'", line_, t.column);
            int power = 1;
            if (peek().kind == Token::Caret) {
                next();
                const Token& e = next();
                if (e.kind != Token::Number)
                    throw ParseError("expected a number after '^'", line_, e.column);
                try {
                    power = std::stoi(e.text);
                } catch (const std::exception&) {
                    throw ParseError("power out of range", line_, e.column);
                }
                if (power < 1)
                    throw ParseError("power must be positive", line_, e.column);
            }
            return pow(Element::generator(table_, *idx), power);
        }
        throw ParseError("expected a number or generator, got '" + t.text + "'", line_,
                         t.column);
    }

    Element parse_term(bool negative) {
        Element prod = parse_factor();
        while (peek().kind == Token::Star) {
            next();
            prod = prod * parse_factor();
        }
        return negative ? -prod : prod;
    }

    TablePtr table_;
    int line_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Element parse_expression(const TablePtr& table, const std::string& src, int line) {
    if (strip(src).empty()) throw ParseError("empty expression", line, 1);
    return ExpressionParser(table, src, line).parse();
}

Presentation parse_presentation(const std::string& text) {
    std::vector<std::pair<std::string, int>> gens;
    bool have_generators = false;
    std::vector<std::pair<int, std::string>> diff_lines;
    std::vector<std::pair<int, std::string>> rel_lines;

    enum Section { None, Differential, Relations } section = None;
    bool seen_differential = false, seen_relations = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (blank_or_comment(raw)) continue;
        const bool indented = std::isspace(static_cast<unsigned char>(raw[0])) != 0;
        const std::string line = strip(raw);
        if (!indented) {
            if (line.rfind("generators:", 0) == 0) {
                if (have_generators)
                    throw ParseError("duplicate generators line", lineno, 1);
                have_generators = true;
                section = None;
                std::istringstream fields(line.substr(11));
                std::string field;
                while (fields >> field) {
                    const std::size_t colon = field.find(':');
                    if (colon == std::string::npos || colon == 0 ||
                        colon + 1 == field.size())
                        throw ParseError("expected name:degree, got '" + field + "'",
                                         lineno, 1);
                    const std::string deg = field.substr(colon + 1);
                    int value = 0;
                    try {
                        std::size_t used = 0;
                        value = std::stoi(deg, &used);
                        if (used != deg.size()) throw std::invalid_argument(deg);
                    } catch (const std::exception&) {
                        throw ParseError("bad degree '" + deg + "'", lineno, 1);
                    }
                    gens.emplace_back(field.substr(0, colon), value);
                }
                continue;
            }
            if (line == "differential:") {
                if (seen_differential)
                    throw ParseError("duplicate differential section", lineno, 1);
                seen_differential = true;
                section = Differential;
                continue;
            }
            if (line == "relations:") {
                if (seen_relations)
                    throw ParseError("duplicate relations section", lineno, 1);
                seen_relations = true;
                section = Relations;
                continue;
            }
            throw ParseError("unrecognized line '" + line + "'", lineno, 1);
        }
        if (section == Differential)
            diff_lines.emplace_back(lineno, line);
        else if (section == Relations)
            rel_lines.emplace_back(lineno, line);
        else
            throw ParseError("indented line outside a section", lineno, 1);
    }
    if (!have_generators) throw ParseError("missing generators line", lineno, 1);

    Presentation p;
    p.table = GeneratorTable::make(gens);
    for (const auto& [ln, src] : diff_lines) {
        const std::size_t eq = src.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'name = expression'", ln, 1);
        const std::string name = strip(src.substr(0, eq));
        if (!p.table->find(name))
            throw ParseError("unknown generator '" + name + "'", ln, 1);
        if (p.differentials.count(name))
            throw ParseError("duplicate differential for '" + name + "'", ln, 1);
        Element img = parse_expression(p.table, src.substr(eq + 1), ln);
        if (!img.is_zero()) p.differentials[name] = std::move(img);
    }
    for (const auto& [ln, src] : rel_lines)
        p.relations.push_back(parse_expression(p.table, src, ln));
    return p;
}

std::string render_presentation(const Presentation& p) {
    std::string out = "generators:";
    for (std::size_t i = 0; i < p.table->size(); ++i)
        out += " " + p.table->names[i] + ":" + std::to_string(p.table->degrees[i]);
    out += "\n";
    bool any = false;
    for (std::size_t i = 0; i < p.table->size(); ++i)
        if (p.differentials.count(p.table->names[i])) any = true;
    if (any) {
        out += "differential:\n";
        for (std::size_t i = 0; i < p.table->size(); ++i) {
            auto it = p.differentials.find(p.table->names[i]);
            if (it == p.differentials.end() || it->second.is_zero()) continue;
            out += "  " + p.table->names[i] + " = " + it->second.to_string() + "\n";
        }
    }
    if (!p.relations.empty()) {
        out += "relations:\n";
        for (const Element& r : p.relations) out += "  " + r.to_string() + "\n";
    }
    return out;
}

}  // namespace cdga
