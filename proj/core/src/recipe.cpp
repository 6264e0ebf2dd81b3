#include "zerosum/builders.hpp"

#include "zerosum/error.hpp"

#include <cctype>
#include <charconv>

namespace zerosum {

namespace {

std::string bracketed(const std::vector<Value>& values) { return "[" + format_terms(values) + "]"; }

class RecipeParser {
public:
    explicit RecipeParser(std::string_view text) : text_(text) {}

    BuildRecipe parse() {
        BuildRecipe r = node();
        skip_space();
        require(pos_ == text_.size(), "trailing text in recipe at offset " + std::to_string(pos_));
        return r;
    }

private:
    BuildRecipe node() {
        expect('(');
        BuildRecipe r;
        const auto kind = word();
        r.family = parse_family(std::string(word()));
        r.n = number();
        if (kind == "leaf") {
            r.leaf_terms = list();
        } else if (kind == "split") {
            r.prime = number();
            require(r.prime != 0, "split prime must be nonzero");
            r.connectors = list();
            while (peek() == '(') r.children.push_back(node());
            require(!r.children.empty(), "split recipe without children");
        } else {
            fail(ErrorKind::InvalidArgument, "expected 'leaf' or 'split' in recipe, got '" + std::string(kind) + "'");
        }
        expect(')');
        return r;
    }

    std::vector<Value> list() {
        expect('[');
        std::vector<Value> out;
        if (peek() == ']') {
            ++pos_;
            return out;
        }
        for (;;) {
            out.push_back(number());
            const char c = peek();
            ++pos_;
            if (c == ']') return out;
            require(c == ',', "expected ',' or ']' in recipe list");
        }
    }

    std::string_view word() {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '[')
            ++pos_;
        require(pos_ > start, "expected a word in recipe at offset " + std::to_string(start));
        return text_.substr(start, pos_ - start);
    }

    Value number() {
        skip_space();
        Value v = 0;
        const auto* first = text_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
        require(ec == std::errc{} && ptr != first, "expected a number in recipe at offset " + std::to_string(pos_));
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    void expect(char c) {
        require(peek() == c, std::string("expected '") + c + "' in recipe at offset " + std::to_string(pos_));
        ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const BuildRecipe& recipe) {
    const std::string head = to_string(recipe.family) + " " + std::to_string(recipe.n);
    if (recipe.is_leaf()) return "(leaf " + head + " " + bracketed(recipe.leaf_terms) + ")";
    std::string out = "(split " + head + " " + std::to_string(recipe.prime) + " " + bracketed(recipe.connectors);
    for (const auto& child : recipe.children) out += " " + to_string(child);
    return out + ")";
}

BuildRecipe parse_recipe(std::string_view text) { return RecipeParser(text).parse(); }

} // namespace zerosum
