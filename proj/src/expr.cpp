#include "wp/expr.hpp"

#include <cctype>
#include <charconv>

#include "wp/construct.hpp"

namespace wp {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return g;
    }

private:
    Graph expr() {
        skip_space();
        const size_t start = pos_;
        std::string name = identifier();
        if (name == "k1") return complete(1);
        expect('(');
        Graph result;
        if (name == "complete" || name == "cycle" || name == "path" || name == "star" ||
            name == "fig2") {
            long v = integer();
            if (name == "complete") result = complete(int(v));
            else if (name == "cycle") result = cycle(int(v));
            else if (name == "path") result = path(int(v));
            else if (name == "star") result = star(int(v));
            else result = figure2_graph(int(v));
        } else if (name == "fig1") {
            result = figure1_graph();
        } else if (name == "kmp") {
            std::vector<int> parts{int(integer())};
            while (peek() == ',') {
                ++pos_;
                parts.push_back(int(integer()));
            }
            result = complete_multipartite(parts);
        } else if (name == "union" || name == "join" || name == "lex") {
            Graph a = expr();
            expect(',');
            Graph b = expr();
            if (name == "union") result = disjoint_union(a, b);
            else if (name == "join") result = join(a, b);
            else result = lexicographic(a, b);
        } else if (name == "corona") {
            Graph a = expr();
            expect(',');
            result = clique_corona(a, int(integer()));
        } else {
            fail_at("unknown construction '" + name + "'", start);
        }
        expect(')');
        return result;
    }

    std::string identifier() {
        skip_space();
        const size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a construction name");
        return std::string(text_.substr(start, pos_ - start));
    }

    long integer() {
        skip_space();
        long value = 0;
        auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc()) fail("expected an integer");
        pos_ = size_t(p - text_.data());
        return value;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) { fail_at(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, size_t at) {
        throw ParseError(message + " at offset " + std::to_string(at), at);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

Graph parse_construction(std::string_view text) { return Parser(text).parse(); }

}  // namespace wp
